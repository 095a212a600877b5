#include "chroma/exactmat.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <utility>

namespace chroma {

namespace {

// Entries below this bound go through an int64 kernel; anything larger takes
// the generic cpp_int path. With |a|,|b| < 2^20 and dim < 2^21 every dot
// product stays below 2^61.
constexpr std::int64_t kFastEntryBound = std::int64_t{1} << 20;
constexpr std::size_t kFastDimBound = std::size_t{1} << 21;

bool fits_fast(const IntMatrix& m) {
  if (m.dim() >= kFastDimBound) return false;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const Int& e = m(i, j);
      if (e >= kFastEntryBound || e <= -kFastEntryBound) return false;
    }
  return true;
}

bool fits_fast(const IntVector& v) {
  if (v.dim() >= kFastDimBound) return false;
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (v[i] >= kFastEntryBound || v[i] <= -kFastEntryBound) return false;
  return true;
}

std::vector<std::int64_t> narrow(const IntMatrix& m) {
  std::vector<std::int64_t> out(m.dim() * m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      out[i * m.dim() + j] = m(i, j).convert_to<std::int64_t>();
  return out;
}

}  // namespace

IntVector::IntVector(std::initializer_list<long long> values)
    : entries_(check_dim(values.size())) {
  std::size_t i = 0;
  for (long long v : values) entries_[i++] = v;
}

IntVector IntVector::ones(std::size_t dim) {
  IntVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = 1;
  return v;
}

std::size_t IntVector::check_dim(std::size_t dim) {
  if (dim == 0) throw dimension_error("IntVector: dim must be >= 1");
  return dim;
}

IntVector operator-(const IntVector& a, const IntVector& b) {
  if (a.dim() != b.dim())
    throw dimension_error("vector subtraction: dimension mismatch");
  IntVector out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] - b[i];
  return out;
}

std::size_t IntMatrix::check_dim(std::size_t dim) {
  if (dim == 0) throw dimension_error("IntMatrix: dim must be >= 1");
  return dim;
}

IntMatrix IntMatrix::identity(std::size_t dim) {
  IntMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(
    std::initializer_list<std::initializer_list<long long>> rows) {
  IntMatrix m(rows.size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != m.dim())
      throw dimension_error("from_rows: matrix must be square");
    std::size_t j = 0;
    for (long long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

bool IntMatrix::is_identity() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if (entries_[i * dim_ + j] != (i == j ? 1 : 0)) return false;
  return true;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim() != b.dim())
    throw dimension_error("mat_mul: dimension mismatch");
  const std::size_t n = a.dim();
  IntMatrix c(n);

  if (fits_fast(a) && fits_fast(b)) {
    const auto fa = narrow(a);
    const auto fb = narrow(b);
    std::vector<std::int64_t> fc(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        const std::int64_t ail = fa[i * n + l];
        if (ail == 0) continue;
        const std::int64_t* brow = &fb[l * n];
        std::int64_t* crow = &fc[i * n];
        for (std::size_t j = 0; j < n; ++j) crow[j] += ail * brow[j];
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) c(i, j) = fc[i * n + j];
    return c;
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      const Int& ail = a(i, l);
      if (ail == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += ail * b(l, j);
    }
  return c;
}

IntMatrix mat_pow(const IntMatrix& a, std::uint64_t t) {
  IntMatrix result = IntMatrix::identity(a.dim());
  IntMatrix base = a;
  while (t > 0) {
    if (t & 1) result = mat_mul(result, base);
    t >>= 1;
    if (t > 0) base = mat_mul(base, base);
  }
  return result;
}

IntMatrix kron(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  IntMatrix c(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const Int& aij = a(i, j);
      if (aij == 0) continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l)
          c(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return c;
}

Int det(const IntMatrix& a) {
  const std::size_t n = a.dim();
  IntMatrix m = a;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Bareiss update; the division is exact.
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  Int result = m(n - 1, n - 1);
  if (sign < 0) result = -result;
  return result;
}

IntVector col_sums(const IntMatrix& a) {
  IntVector sums(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) sums[j] += a(i, j);
  return sums;
}

IntVector mat_apply(const IntMatrix& a, const IntVector& v) {
  if (a.dim() != v.dim())
    throw dimension_error("mat_apply: dimension mismatch");
  IntVector out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

IntVector row_apply(const IntVector& v, const IntMatrix& a) {
  if (a.dim() != v.dim())
    throw dimension_error("row_apply: dimension mismatch");
  const std::size_t n = a.dim();
  IntVector out(n);

  if (fits_fast(a) && fits_fast(v)) {
    std::vector<std::int64_t> fv(n), fo(n, 0);
    for (std::size_t i = 0; i < n; ++i) fv[i] = v[i].convert_to<std::int64_t>();
    const auto fa = narrow(a);
    for (std::size_t i = 0; i < n; ++i) {
      const std::int64_t vi = fv[i];
      if (vi == 0) continue;
      const std::int64_t* arow = &fa[i * n];
      for (std::size_t j = 0; j < n; ++j) fo[j] += vi * arow[j];
    }
    for (std::size_t j = 0; j < n; ++j) out[j] = fo[j];
    return out;
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) out[j] += v[i] * a(i, j);
  }
  return out;
}

std::optional<std::uint64_t> matrix_order(const IntMatrix& a,
                                          std::uint64_t bound) {
  if (bound < 1) throw std::invalid_argument("matrix_order: bound must be >= 1");
  IntMatrix power = a;
  for (std::uint64_t t = 1; t <= bound; ++t) {
    if (power.is_identity()) return t;
    if (t < bound) power = mat_mul(power, a);
  }
  return std::nullopt;
}

std::string grid_string(const IntMatrix& a) {
  std::size_t width = 1;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      width = std::max(width, a(i, j).str().size());
  std::ostringstream out;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      std::string s = a(i, j).str();
      out << (j == 0 ? "" : " ");
      out << std::string(width - s.size(), ' ') << s;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace chroma
