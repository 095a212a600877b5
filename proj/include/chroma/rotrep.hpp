#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chroma/exactmat.hpp"

namespace chroma {

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Ascending prime factorization; empty for k = 1.
struct Factorization {
  std::vector<PrimePower> factors;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

enum class RepKind { TwoD, CompanionPrimePower, KroneckerComposite };

std::string to_string(RepKind kind);

// A rotation order k together with an exact integer matrix of that order.
// For the totient-dimensional representations det = 1 whenever dim >= 2;
// the 1x1 cases k = 1, 2 carry (1) and (-1).
struct RotationRep {
  std::uint64_t k = 1;
  std::size_t dim = 1;
  IntMatrix matrix = IntMatrix::identity(1);
  RepKind kind = RepKind::KroneckerComposite;
  Factorization factorization;
};

bool is_prime(std::uint64_t n);
Factorization factorize(std::uint64_t k);

// Euler totient, the minimal lattice dimension supporting C_k.
std::uint64_t totient(std::uint64_t k);

// The classical 2x2 integer rotations. Only k in {1,2,3,4,6} exist;
// anything else throws restriction_error.
RotationRep rep_2d(std::uint64_t k);

// Companion matrix of the cyclotomic polynomial of x^(p^r): dimension
// p^(r-1)(p-1), ones on the subdiagonal, -1 in the last column at rows
// 1 + s*p^(r-1) for s = 0..p-2 (1-based).
RotationRep companion_prime_power(std::uint64_t p, unsigned r);

// Closed-form entry of the t-th power of the prime companion matrix,
// all arguments 1-based with 1 <= t,i,j <= p-1. Independent of mat_pow.
int prime_power_entry_closed_form(std::uint64_t p, std::uint64_t t,
                                  std::uint64_t i, std::uint64_t j);

// Representation of C_k for any k >= 1: companion matrix for prime powers,
// Kronecker product of prime-power companions (ascending primes, first
// factor outermost) otherwise.
RotationRep rep(std::uint64_t k);

// Images of the basis vectors under the t-th power, i.e. the columns of
// matrix^t. Requires 0 <= t < k.
std::vector<IntVector> basis_images(const RotationRep& r, std::uint64_t t);

// Hermann's criterion: C_k fits a d-dimensional lattice iff d >= totient(k).
bool hermann_allowed(std::uint64_t d, std::uint64_t k);

}  // namespace chroma
