#include "chroma/rotrep.hpp"

#include <stdexcept>

namespace chroma {

std::string to_string(RepKind kind) {
  switch (kind) {
    case RepKind::TwoD:
      return "2d";
    case RepKind::CompanionPrimePower:
      return "companion-prime-power";
    case RepKind::KroneckerComposite:
      return "kronecker-composite";
  }
  return "unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Factorization factorize(std::uint64_t k) {
  if (k < 1) throw std::invalid_argument("factorize: k must be >= 1");
  Factorization f;
  std::uint64_t rest = k;
  for (std::uint64_t p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
    if (rest % p != 0) continue;
    unsigned r = 0;
    while (rest % p == 0) {
      rest /= p;
      ++r;
    }
    f.factors.push_back({p, r});
  }
  if (rest > 1) f.factors.push_back({rest, 1});
  return f;
}

std::uint64_t totient(std::uint64_t k) {
  std::uint64_t phi = 1;
  for (const PrimePower& pp : factorize(k).factors) {
    std::uint64_t q = 1;
    for (unsigned e = 1; e < pp.exponent; ++e) q *= pp.prime;
    phi *= q * (pp.prime - 1);
  }
  return phi;
}

RotationRep rep_2d(std::uint64_t k) {
  IntMatrix m(2);
  switch (k) {
    case 1:
      m = IntMatrix::identity(2);
      break;
    case 2:
      m = IntMatrix::from_rows({{-1, 0}, {0, -1}});
      break;
    case 3:
      m = IntMatrix::from_rows({{0, -1}, {1, -1}});
      break;
    case 4:
      m = IntMatrix::from_rows({{0, -1}, {1, 0}});
      break;
    case 6:
      m = IntMatrix::from_rows({{0, -1}, {1, 1}});
      break;
    default:
      throw restriction_error(
          "rep_2d: no 2D lattice admits a rotation of order " +
          std::to_string(k));
  }
  return RotationRep{k, 2, std::move(m), RepKind::TwoD, factorize(k)};
}

RotationRep companion_prime_power(std::uint64_t p, unsigned r) {
  if (!is_prime(p))
    throw std::invalid_argument("companion_prime_power: " + std::to_string(p) +
                                " is not prime");
  if (r < 1)
    throw std::invalid_argument("companion_prime_power: exponent must be >= 1");

  std::uint64_t block = 1;  // p^(r-1)
  for (unsigned e = 1; e < r; ++e) block *= p;
  const std::uint64_t dim = block * (p - 1);
  std::uint64_t k = block * p;

  IntMatrix m(static_cast<std::size_t>(dim));
  for (std::uint64_t i = 1; i < dim; ++i) m(i, i - 1) = 1;
  for (std::uint64_t s = 0; s + 1 < p; ++s) m(s * block, dim - 1) = -1;

  return RotationRep{k, static_cast<std::size_t>(dim), std::move(m),
                     RepKind::CompanionPrimePower, factorize(k)};
}

int prime_power_entry_closed_form(std::uint64_t p, std::uint64_t t,
                                  std::uint64_t i, std::uint64_t j) {
  if (!is_prime(p))
    throw std::invalid_argument("closed form: p must be prime");
  if (t < 1 || t > p - 1 || i < 1 || i > p - 1 || j < 1 || j > p - 1)
    throw std::out_of_range("closed form: t, i, j must lie in 1..p-1");
  if (j == p - t) return -1;
  if (i <= t - 1 && j == p + i - t) return 1;
  if (i >= t + 1 && j + t == i) return 1;
  return 0;
}

RotationRep rep(std::uint64_t k) {
  if (k < 1) throw std::invalid_argument("rep: k must be >= 1");
  if (k == 1)
    return RotationRep{1, 1, IntMatrix::identity(1),
                       RepKind::KroneckerComposite, Factorization{}};

  Factorization f = factorize(k);
  if (f.factors.size() == 1)
    return companion_prime_power(f.factors[0].prime, f.factors[0].exponent);

  IntMatrix m =
      companion_prime_power(f.factors[0].prime, f.factors[0].exponent).matrix;
  for (std::size_t i = 1; i < f.factors.size(); ++i)
    m = kron(m, companion_prime_power(f.factors[i].prime, f.factors[i].exponent)
                    .matrix);

  return RotationRep{k, m.dim(), std::move(m), RepKind::KroneckerComposite,
                     std::move(f)};
}

std::vector<IntVector> basis_images(const RotationRep& r, std::uint64_t t) {
  if (t >= r.k)
    throw std::out_of_range("basis_images: t must lie in 0..k-1");
  const IntMatrix power = mat_pow(r.matrix, t);
  std::vector<IntVector> images;
  images.reserve(power.dim());
  for (std::size_t j = 0; j < power.dim(); ++j) {
    IntVector column(power.dim());
    for (std::size_t i = 0; i < power.dim(); ++i) column[i] = power(i, j);
    images.push_back(std::move(column));
  }
  return images;
}

bool hermann_allowed(std::uint64_t d, std::uint64_t k) {
  if (d < 1 || k < 1)
    throw std::invalid_argument("hermann_allowed: d and k must be >= 1");
  return d >= totient(k);
}

}  // namespace chroma
