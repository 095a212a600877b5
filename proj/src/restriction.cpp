#include "chroma/restriction.hpp"

#include <algorithm>
#include <stdexcept>

#include "chroma/errors.hpp"

namespace chroma {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

Int content_gcd(const IntVector& v) {
  Int g = 0;
  for (std::size_t i = 0; i < v.dim(); ++i)
    g = boost::multiprecision::gcd(g, abs_int(v[i]));
  return g;
}

bool is_zero(const IntVector& v) {
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (v[i] != 0) return false;
  return true;
}

// One additive term, e.g. "m3", "-m3", "3*m3", " + m3", " - 3*m3".
std::string term(const Int& coeff, std::size_t index_1based, bool first) {
  std::string s;
  if (first) {
    if (coeff < 0) s += "-";
  } else {
    s += coeff < 0 ? " - " : " + ";
  }
  Int a = abs_int(coeff);
  if (a != 1) {
    s += a.str();
    s += "*";
  }
  s += "m";
  s += std::to_string(index_1based);
  return s;
}

std::string linear_combination(const IntVector& v) {
  std::string s;
  bool first = true;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (v[i] == 0) continue;
    s += term(v[i], i + 1, first);
    first = false;
  }
  if (first) s = "0";
  return s;
}

std::size_t nonzero_count(const IntVector& v) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (v[i] != 0) ++c;
  return c;
}

}  // namespace

ModularSystem derive_system(const RotationRep& r) {
  ModularSystem sys;
  sys.k = r.k;
  sys.dim = r.dim;
  sys.functionals.reserve(static_cast<std::size_t>(r.k));
  // The coordinate-sum functional of R^t m is the row vector 1^T R^t, built
  // incrementally so deriving the whole system costs k vector-matrix
  // products instead of k matrix powers.
  IntVector c = IntVector::ones(r.dim);
  sys.functionals.push_back(c);
  for (std::uint64_t t = 1; t < r.k; ++t) {
    c = row_apply(c, r.matrix);
    sys.functionals.push_back(c);
  }
  sys.differences.reserve(static_cast<std::size_t>(r.k) - 1);
  for (std::uint64_t t = 1; t < r.k; ++t)
    sys.differences.push_back(sys.functionals[static_cast<std::size_t>(t)] -
                              sys.functionals[0]);
  return sys;
}

RestrictionResult restriction_number(const RotationRep& r) {
  ModularSystem sys = derive_system(r);
  RestrictionResult out;
  out.k = r.k;
  out.dim = r.dim;
  Int g = 0;
  for (const IntVector& d : sys.differences) {
    for (std::size_t i = 0; i < d.dim(); ++i) {
      if (d[i] == 0) continue;
      out.gcd_witness.push_back(d[i]);
      g = boost::multiprecision::gcd(g, abs_int(d[i]));
    }
  }
  if (g == 0) return out;  // every difference vanishes: any modulus works
  out.n_max = g;
  // Difference entries are bounded by twice the dimension, so the gcd always
  // fits a machine word; enumerate its divisors in ascending order.
  std::uint64_t n = g.convert_to<std::uint64_t>();
  std::vector<std::uint64_t> divisors;
  for (std::uint64_t i = 1; i * i <= n; ++i) {
    if (n % i != 0) continue;
    divisors.push_back(i);
    if (i != n / i) divisors.push_back(n / i);
  }
  std::sort(divisors.begin(), divisors.end());
  out.valid_moduli.reserve(divisors.size());
  for (std::uint64_t d : divisors) out.valid_moduli.emplace_back(d);
  return out;
}

std::optional<std::uint64_t> closed_form_N(std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("closed_form_N: k must be >= 1");
  if (k == 1) return std::nullopt;
  Factorization f = factorize(k);
  if (f.factors.size() == 1) return f.factors[0].prime;
  return 1;
}

std::pair<std::uint64_t, std::uint64_t> min_dimension(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("min_dimension: need n >= 2");
  std::uint64_t k = n;
  while (!is_prime(k)) ++k;
  return {k, k - 1};
}

std::string render_equations(const RotationRep& r, bool reduce) {
  ModularSystem sys = derive_system(r);
  std::string out;
  for (std::size_t i = 0; i < sys.dim; ++i) {
    if (i != 0) out += " + ";
    out += "m";
    out += std::to_string(i + 1);
  }
  out += " == q (mod n)\n";

  if (!reduce) {
    for (const IntVector& d : sys.differences)
      out += linear_combination(d) + " == 0 (mod n)\n";
    return out;
  }

  // Reduced listing: drop vanished differences, normalise each survivor so
  // its first nonzero coefficient is positive, keep the earliest occurrence
  // of each normalised vector, and display with the content gcd factored out.
  std::vector<IntVector> kept;
  for (const IntVector& d : sys.differences) {
    if (is_zero(d)) continue;
    IntVector v = d;
    for (std::size_t i = 0; i < v.dim(); ++i) {
      if (v[i] == 0) continue;
      if (v[i] < 0)
        for (std::size_t j = 0; j < v.dim(); ++j) v[j] = -v[j];
      break;
    }
    if (std::find(kept.begin(), kept.end(), v) == kept.end())
      kept.push_back(v);
  }
  for (const IntVector& v : kept) {
    Int g = content_gcd(v);
    IntVector primitive = v;
    for (std::size_t i = 0; i < primitive.dim(); ++i) primitive[i] /= g;
    std::string body = linear_combination(primitive);
    std::string line;
    if (g == 1)
      line = body;
    else if (nonzero_count(primitive) == 1)
      line = g.str() + "*" + body;
    else
      line = g.str() + "*(" + body + ")";
    out += line + " == 0 (mod n)\n";
  }
  return out;
}

std::vector<TableRow> restriction_table(std::uint64_t k_max) {
  if (k_max == 0)
    throw std::invalid_argument("restriction_table: k_max must be >= 1");
  std::vector<TableRow> rows;
  rows.reserve(static_cast<std::size_t>(k_max));
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    RestrictionResult res = restriction_number(rep(k));
    TableRow row;
    row.k = k;
    row.totient = totient(k);
    if (res.n_max)
      row.n_max = res.n_max->convert_to<std::uint64_t>();
    std::optional<std::uint64_t> predicted = closed_form_N(k);
    if (row.n_max != predicted)
      throw regression_error(
          "restriction_table: matrix-derived colour bound for k=" +
          std::to_string(k) + " disagrees with the closed form");
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace chroma
