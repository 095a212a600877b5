#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chroma/exactmat.hpp"
#include "chroma/rotrep.hpp"

namespace chroma {

// The congruence system forced by rotation invariance of the modular
// colouring. functionals[t] is the coefficient vector of the coordinate sum
// of R^t * m (equivalently the column sums of R^t); a modulus n keeps every
// colour class invariant iff n divides every entry of every difference
// functionals[t] - functionals[0].
struct ModularSystem {
  std::uint64_t k = 1;
  std::size_t dim = 1;
  std::vector<IntVector> functionals;  // t = 0..k-1; functionals[0] is all ones
  std::vector<IntVector> differences;  // t = 1..k-1
};

ModularSystem derive_system(const RotationRep& r);

// The maximal admissible colour count. n_max is empty when every modulus
// works (the identity rotation); otherwise it is the gcd of all difference
// entries and valid moduli are exactly its divisors.
struct RestrictionResult {
  std::uint64_t k = 1;
  std::size_t dim = 1;
  std::optional<Int> n_max;
  std::vector<Int> gcd_witness;    // the nonzero difference entries
  std::vector<Int> valid_moduli;   // ascending divisors of n_max; empty when unbounded
};

RestrictionResult restriction_number(const RotationRep& r);

// The closed form: unbounded for k = 1, p for k = p^r, 1 for k with at
// least two distinct prime factors. Pure number theory, no matrices.
std::optional<std::uint64_t> closed_form_N(std::uint64_t k);

// Minimal dimension of a colour lattice with n modular sublattices carrying
// some C_k with k >= n: k = n for prime n, else the least prime above n;
// d = k - 1. Requires n >= 2.
std::pair<std::uint64_t, std::uint64_t> min_dimension(std::uint64_t n);

// Human-readable congruence listing: the defining congruence followed by one
// difference congruence per power. With reduce, duplicate differences are
// merged and the content gcd of each is factored out.
std::string render_equations(const RotationRep& r, bool reduce);

struct TableRow {
  std::uint64_t k = 1;
  std::uint64_t totient = 1;
  std::optional<std::uint64_t> n_max;  // empty = unbounded
};

// One row per k in 1..=k_max. Every row is cross-checked against
// closed_form_N; a mismatch throws regression_error.
std::vector<TableRow> restriction_table(std::uint64_t k_max);

}  // namespace chroma
