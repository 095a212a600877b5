#include <doctest.h>

#include <array>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "chroma/errors.hpp"
#include "chroma/exactmat.hpp"
#include "chroma/rotrep.hpp"

#include "test_support.hpp"

using chroma::Int;
using chroma::IntMatrix;
using chroma::IntVector;
using chroma::RotationRep;

namespace {

// Group-theoretic order check: the order of m divides k iff m^k = I, and it
// equals k iff additionally no maximal proper divisor k/q reaches I.
bool has_exact_order(const IntMatrix& m, std::uint64_t k) {
  if (!chroma::mat_pow(m, k).is_identity()) return false;
  for (const chroma::PrimePower& f : chroma::factorize(k).factors)
    if (chroma::mat_pow(m, k / f.prime).is_identity()) return false;
  return true;
}

}  // namespace

TEST_CASE("number theory: primality, factorization, totient") {
  CHECK_FALSE(chroma::is_prime(1));
  CHECK(chroma::is_prime(2));
  CHECK(chroma::is_prime(3));
  CHECK_FALSE(chroma::is_prime(4));
  CHECK(chroma::is_prime(97));
  CHECK_FALSE(chroma::is_prime(91));  // 7 * 13

  CHECK(chroma::factorize(1).factors.empty());
  {
    const chroma::Factorization f = chroma::factorize(15);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].prime == 3);
    CHECK(f.factors[0].exponent == 1);
    CHECK(f.factors[1].prime == 5);
    CHECK(f.factors[1].exponent == 1);
  }
  {
    const chroma::Factorization f = chroma::factorize(12);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].prime == 2);
    CHECK(f.factors[0].exponent == 2);
    CHECK(f.factors[1].prime == 3);
    CHECK(f.factors[1].exponent == 1);
  }

  CHECK(chroma::totient(1) == 1);
  CHECK(chroma::totient(9) == 6);
  CHECK(chroma::totient(15) == 8);
  const std::vector<std::uint64_t> phi = {1, 1, 2, 2, 4,  2, 6, 4, 6, 4,
                                          10, 4, 12, 6, 8, 8, 16, 6, 18, 8};
  for (std::uint64_t k = 1; k <= 20; ++k) CHECK(chroma::totient(k) == phi[k - 1]);
}

TEST_CASE("2D lattice rotations: the five admissible orders, no others") {
  CHECK(chroma::rep_2d(1).matrix == IntMatrix::identity(2));
  CHECK(chroma::rep_2d(2).matrix ==
        IntMatrix::from_rows({{-1, 0}, {0, -1}}));
  CHECK(chroma::rep_2d(3).matrix == IntMatrix::from_rows({{0, -1}, {1, -1}}));
  CHECK(chroma::rep_2d(4).matrix == IntMatrix::from_rows({{0, -1}, {1, 0}}));
  CHECK(chroma::rep_2d(6).matrix == IntMatrix::from_rows({{0, -1}, {1, 1}}));
  for (std::uint64_t k : {5ull, 7ull, 8ull, 12ull})
    CHECK_THROWS_AS(chroma::rep_2d(k), chroma::restriction_error);
  CHECK_THROWS_AS(chroma::rep_2d(0), chroma::restriction_error);

  for (std::uint64_t k : {1ull, 2ull, 3ull, 4ull, 6ull}) {
    const RotationRep r = chroma::rep_2d(k);
    CHECK(r.dim == 2);
    CHECK(r.k == k);
    CHECK(chroma::matrix_order(r.matrix, k) == k);
  }
}

TEST_CASE("prime companions: frozen matrices") {
  CHECK(chroma::companion_prime_power(5, 1).matrix ==
        IntMatrix::from_rows({{0, 0, 0, -1},
                              {1, 0, 0, -1},
                              {0, 1, 0, -1},
                              {0, 0, 1, -1}}));
  CHECK(chroma::companion_prime_power(2, 1).matrix ==
        IntMatrix::from_rows({{-1}}));
  CHECK(chroma::companion_prime_power(3, 2).matrix ==
        IntMatrix::from_rows({{0, 0, 0, 0, 0, -1},
                              {1, 0, 0, 0, 0, 0},
                              {0, 1, 0, 0, 0, 0},
                              {0, 0, 1, 0, 0, -1},
                              {0, 0, 0, 1, 0, 0},
                              {0, 0, 0, 0, 1, 0}}));
  CHECK(chroma::companion_prime_power(2, 2).matrix ==
        IntMatrix::from_rows({{0, -1}, {1, 0}}));
  CHECK_THROWS_AS(chroma::companion_prime_power(6, 1), std::invalid_argument);
  CHECK_THROWS_AS(chroma::companion_prime_power(5, 0), std::invalid_argument);
}

TEST_CASE("composite constructions: frozen matrices and kinds") {
  CHECK(chroma::rep(1).matrix == IntMatrix::identity(1));
  CHECK(chroma::rep(1).kind == chroma::RepKind::KroneckerComposite);
  CHECK(chroma::rep(2).matrix == IntMatrix::from_rows({{-1}}));
  CHECK(chroma::rep(6).matrix == IntMatrix::from_rows({{0, 1}, {-1, 1}}));
  CHECK(chroma::rep(15).matrix ==
        IntMatrix::from_rows({{0, 0, 0, 0, 0, 0, 0, 1},
                              {0, 0, 0, 0, -1, 0, 0, 1},
                              {0, 0, 0, 0, 0, -1, 0, 1},
                              {0, 0, 0, 0, 0, 0, -1, 1},
                              {0, 0, 0, -1, 0, 0, 0, 1},
                              {1, 0, 0, -1, -1, 0, 0, 1},
                              {0, 1, 0, -1, 0, -1, 0, 1},
                              {0, 0, 1, -1, 0, 0, -1, 1}}));
  CHECK(chroma::rep(15).matrix ==
        chroma::kron(chroma::rep(3).matrix, chroma::rep(5).matrix));
  CHECK(chroma::rep(9).kind == chroma::RepKind::CompanionPrimePower);
  CHECK(chroma::rep(15).kind == chroma::RepKind::KroneckerComposite);
  CHECK_THROWS_AS(chroma::rep(0), std::invalid_argument);
}

TEST_CASE("rep matches the 2D rotation exactly for k in {3,4}") {
  CHECK(chroma::rep(3).matrix == chroma::rep_2d(3).matrix);
  CHECK(chroma::rep(4).matrix == chroma::rep_2d(4).matrix);
  // k=6: the Kronecker construction gives the transpose of the classical
  // lattice rotation (equivalently, minus the order-3 lattice rotation).
  const IntMatrix six = chroma::rep(6).matrix;
  const IntMatrix six_2d = chroma::rep_2d(6).matrix;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      CHECK(six(i, j) == six_2d(j, i));
      CHECK(six(i, j) == -chroma::rep_2d(3).matrix(i, j));
    }
  CHECK(chroma::matrix_order(six, 6) == 6);
}

TEST_CASE("dimension is the totient for every order up to 210") {
  for (std::uint64_t k = 1; k <= 210; ++k) {
    const RotationRep r = chroma::rep(k);
    CHECK(r.dim == chroma::totient(k));
    CHECK(r.matrix.dim() == r.dim);
    CHECK(r.k == k);
  }
}

TEST_CASE("order is exactly k for every order up to 210") {
  for (std::uint64_t k = 2; k <= 210; ++k)
    CHECK(has_exact_order(chroma::rep(k).matrix, k));
}

TEST_CASE("matrix_order confirms the exact order directly for small k") {
  for (std::uint64_t k = 1; k <= 60; ++k)
    CHECK(chroma::matrix_order(chroma::rep(k).matrix, k) == k);
}

TEST_CASE("determinant is 1 for dimension >= 2, -1 only for the 1x1 k=2") {
  CHECK(chroma::det(chroma::rep(1).matrix) == 1);
  CHECK(chroma::det(chroma::rep(2).matrix) == -1);
  for (std::uint64_t k = 3; k <= 210; ++k)
    CHECK(chroma::det(chroma::rep(k).matrix) == 1);
}

TEST_CASE("every power of every representation stays over {-1,0,1}") {
  for (std::uint64_t k = 1; k <= 60; ++k) {
    const IntMatrix base = chroma::rep(k).matrix;
    IntMatrix power = base;
    for (std::uint64_t t = 1; t < k; ++t) {
      for (std::size_t i = 0; i < power.dim(); ++i)
        for (std::size_t j = 0; j < power.dim(); ++j) {
          const Int& e = power(i, j);
          CHECK((e == -1 || e == 0 || e == 1));
        }
      power = chroma::mat_mul(power, base);
    }
  }
}

TEST_CASE("closed-form entries reproduce every prime companion power") {
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull}) {
    const IntMatrix base = chroma::companion_prime_power(p, 1).matrix;
    IntMatrix power = base;
    for (std::uint64_t t = 1; t <= p - 1; ++t) {
      for (std::uint64_t i = 1; i <= p - 1; ++i)
        for (std::uint64_t j = 1; j <= p - 1; ++j)
          CHECK(power(i - 1, j - 1) ==
                chroma::prime_power_entry_closed_form(p, t, i, j));
      power = chroma::mat_mul(power, base);
    }
  }
}

TEST_CASE("closed-form entry oracle: pinned samples and range errors") {
  CHECK(chroma::prime_power_entry_closed_form(5, 2, 3, 1) == 1);
  CHECK(chroma::prime_power_entry_closed_form(5, 2, 2, 3) == -1);
  CHECK(chroma::prime_power_entry_closed_form(5, 4, 1, 2) == 1);
  CHECK_THROWS_AS(chroma::prime_power_entry_closed_form(5, 0, 1, 1),
                  std::out_of_range);
  CHECK_THROWS_AS(chroma::prime_power_entry_closed_form(5, 5, 1, 1),
                  std::out_of_range);
  CHECK_THROWS_AS(chroma::prime_power_entry_closed_form(5, 1, 0, 1),
                  std::out_of_range);
  CHECK_THROWS_AS(chroma::prime_power_entry_closed_form(5, 1, 1, 5),
                  std::out_of_range);
  CHECK_THROWS_AS(chroma::prime_power_entry_closed_form(6, 1, 1, 1),
                  std::invalid_argument);
}

TEST_CASE("prime-power companions collapse under p^b-th powers") {
  // (R_{p^a})^(p^b) equals R_{p^(a-b)} with each scalar replaced by
  // (+/-) identity blocks of size p^b.
  const std::vector<std::array<std::uint64_t, 3>> triples = {
      {2, 2, 1}, {3, 2, 1}, {2, 3, 1}, {2, 3, 2}, {5, 2, 1}};
  for (const auto& [p, a, b] : triples) {
    std::uint64_t pb = 1;
    for (std::uint64_t i = 0; i < b; ++i) pb *= p;
    const IntMatrix lhs =
        chroma::mat_pow(chroma::companion_prime_power(p, a).matrix, pb);
    const IntMatrix rhs =
        chroma::kron(chroma::companion_prime_power(p, a - b).matrix,
                     IntMatrix::identity(static_cast<std::size_t>(pb)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("semiprime powers are block-diagonal prime powers") {
  // With R2 outermost, (R2 (x) R1)^(p2*t2) = I (x) R1^(p2*t2 mod p1): a
  // block-diagonal stack of one prime-companion power. As t2 sweeps 1..p1,
  // those powers run through the full set {R1^s : 0 <= s < p1}.
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs = {
      {3, 5}, {2, 3}, {2, 5}, {3, 7}};
  for (const auto& [p1, p2] : pairs) {
    const IntMatrix r1 = chroma::companion_prime_power(p1, 1).matrix;
    const IntMatrix r2 = chroma::companion_prime_power(p2, 1).matrix;
    const IntMatrix forward = chroma::kron(r1, r2);
    const IntMatrix reversed = chroma::kron(r2, r1);

    std::set<std::string> seen;
    std::set<std::string> expected;
    for (std::uint64_t t2 = 1; t2 <= p1; ++t2) {
      const IntMatrix lhs = chroma::mat_pow(reversed, p2 * t2);
      const IntMatrix block = chroma::mat_pow(r1, (p2 * t2) % p1);
      CHECK(lhs == testsupport::block_diag(block, p2 - 1));
      // The same power of the forward product scales identity blocks
      // instead of stacking them.
      CHECK(chroma::mat_pow(forward, p2 * t2) ==
            chroma::kron(block, IntMatrix::identity(p2 - 1)));
      seen.insert(chroma::grid_string(lhs));
      expected.insert(chroma::grid_string(testsupport::block_diag(
          chroma::mat_pow(r1, t2 % p1), p2 - 1)));
    }
    CHECK(seen == expected);  // the two families coincide as sets
  }
}

TEST_CASE("basis images are the power's columns") {
  const RotationRep five = chroma::rep(5);
  const std::vector<IntVector> images = chroma::basis_images(five, 1);
  REQUIRE(images.size() == 4);
  CHECK(images[3] == IntVector{-1, -1, -1, -1});  // image of e4
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t i = 0; i < 4; ++i)
      CHECK(images[j][i] == five.matrix(i, j));

  const std::vector<IntVector> nine = chroma::basis_images(chroma::rep(9), 1);
  CHECK(nine[5] == IntVector{-1, 0, 0, -1, 0, 0});  // image of e6

  const std::vector<IntVector> still = chroma::basis_images(five, 0);
  for (std::size_t j = 0; j < 4; ++j) {
    IntVector e(4);
    e[j] = 1;
    CHECK(still[j] == e);
  }
  CHECK_THROWS_AS(chroma::basis_images(five, 5), std::out_of_range);
}

TEST_CASE("dimension admissibility follows the totient threshold") {
  CHECK(chroma::hermann_allowed(2, 6));
  CHECK_FALSE(chroma::hermann_allowed(2, 5));
  CHECK_FALSE(chroma::hermann_allowed(4, 15));
  CHECK(chroma::hermann_allowed(8, 15));
  CHECK(chroma::hermann_allowed(1, 1));
  CHECK(chroma::hermann_allowed(1, 2));
  CHECK_THROWS_AS(chroma::hermann_allowed(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(chroma::hermann_allowed(3, 0), std::invalid_argument);
}

TEST_CASE("representation kinds serialize to stable names") {
  CHECK(chroma::to_string(chroma::RepKind::TwoD) == "2d");
  CHECK(chroma::to_string(chroma::RepKind::CompanionPrimePower) ==
        "companion-prime-power");
  CHECK(chroma::to_string(chroma::RepKind::KroneckerComposite) ==
        "kronecker-composite");
}
