#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "chroma/errors.hpp"

namespace chroma {

// Arbitrary-precision signed integer. Every matrix entry in this library is
// exact; there is no floating point and no silent wraparound anywhere.
using Int = boost::multiprecision::cpp_int;

class IntVector {
 public:
  explicit IntVector(std::size_t dim) : entries_(check_dim(dim)) {}
  IntVector(std::initializer_list<long long> values);

  static IntVector ones(std::size_t dim);

  std::size_t dim() const { return entries_.size(); }
  Int& operator[](std::size_t i) { return entries_[i]; }
  const Int& operator[](std::size_t i) const { return entries_[i]; }

  friend bool operator==(const IntVector&, const IntVector&) = default;

 private:
  static std::size_t check_dim(std::size_t dim);
  std::vector<Int> entries_;
};

IntVector operator-(const IntVector& a, const IntVector& b);

// Dense square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  explicit IntMatrix(std::size_t dim)
      : dim_(check_dim(dim)), entries_(dim * dim) {}

  static IntMatrix identity(std::size_t dim);
  // Row-by-row construction from machine integers; rows must form a square.
  static IntMatrix from_rows(
      std::initializer_list<std::initializer_list<long long>> rows);

  std::size_t dim() const { return dim_; }
  Int& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * dim_ + j];
  }

  bool is_identity() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  static std::size_t check_dim(std::size_t dim);
  std::size_t dim_;
  std::vector<Int> entries_;
};

// Exact product. Throws dimension_error on mismatched operands.
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

// a^t with a^0 = identity. Binary exponentiation; result equals naive
// iteration exactly.
IntMatrix mat_pow(const IntMatrix& a, std::uint64_t t);

// Kronecker product: block (i,j) of the result is a(i,j) * b.
IntMatrix kron(const IntMatrix& a, const IntMatrix& b);

// Exact determinant by fraction-free (Bareiss) elimination.
Int det(const IntMatrix& a);

// Entry j of the result is the sum of column j of a.
IntVector col_sums(const IntMatrix& a);

// Matrix times column vector.
IntVector mat_apply(const IntMatrix& a, const IntVector& v);

// Row vector times matrix. Transports linear functionals: the coordinate-sum
// functional of a*m is row_apply(col_sums-of-identity, a).
IntVector row_apply(const IntVector& v, const IntMatrix& a);

// Smallest t in 1..=bound with a^t = identity, or nullopt.
std::optional<std::uint64_t> matrix_order(const IntMatrix& a,
                                          std::uint64_t bound);

// Right-aligned plain-text grid, one matrix row per line.
std::string grid_string(const IntMatrix& a);

}  // namespace chroma
