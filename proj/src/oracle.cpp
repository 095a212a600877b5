#include "chroma/oracle.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

#include "chroma/errors.hpp"
#include "chroma/exactmat.hpp"
#include "chroma/restriction.hpp"

namespace chroma {

namespace {

// (2*half_width + 1)^dim when it is <= cap, nullopt otherwise (no overflow).
std::optional<std::uint64_t> box_point_count(const BoxSpec& box,
                                             std::uint64_t cap) {
  const std::uint64_t side =
      2ull * static_cast<std::uint64_t>(box.half_width) + 1ull;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < box.dim; ++i) {
    if (total > cap / side) return std::nullopt;
    total *= side;
  }
  if (total > cap) return std::nullopt;
  return total;
}

std::uint64_t reduce_mod(std::int64_t value, std::int64_t n) {
  std::int64_t r = value % n;
  if (r < 0) r += n;
  return static_cast<std::uint64_t>(r);
}

// Machine-integer copy of a matrix power, plus the largest entry magnitude.
struct NarrowMatrix {
  std::vector<std::int64_t> entries;  // row-major, dim x dim
  std::int64_t max_abs = 0;
};

NarrowMatrix narrow(const IntMatrix& m) {
  NarrowMatrix out;
  out.entries.reserve(m.dim() * m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const Int& e = m(i, j);
      if (e > std::numeric_limits<std::int64_t>::max() ||
          e < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error(
            "brute-force scan: matrix power entry exceeds machine range");
      const std::int64_t v = e.convert_to<std::int64_t>();
      out.entries.push_back(v);
      const std::int64_t a = v < 0 ? -v : v;
      if (a > out.max_abs) out.max_abs = a;
    }
  }
  return out;
}

bool advance(std::vector<std::int64_t>& point, std::int64_t half_width) {
  std::size_t i = point.size();
  while (i > 0) {
    --i;
    if (point[i] < half_width) {
      ++point[i];
      return true;
    }
    point[i] = -half_width;
  }
  return false;  // wrapped past the last point
}

struct ScanOutcome {
  std::vector<bool> failed;                          // parallel to moduli
  std::vector<std::optional<Counterexample>> witness;  // first per modulus
};

// The core scan: for every point of the patch and every power t in 1..k-1,
// apply the power to the point, recolour, and compare against the point's own
// colour for each still-undecided modulus. Stops early only once every
// modulus has a witness.
ScanOutcome scan_box(const RotationRep& r,
                     const std::vector<std::uint64_t>& moduli,
                     const BoxSpec& box, std::uint64_t budget) {
  if (box.dim != r.dim)
    throw dimension_error("brute-force scan: patch dimension " +
                          std::to_string(box.dim) +
                          " does not match rotation dimension " +
                          std::to_string(r.dim));
  if (box.half_width < 0)
    throw std::invalid_argument("brute-force scan: half_width must be >= 0");
  for (std::uint64_t n : moduli)
    if (n == 0)
      throw std::invalid_argument("brute-force scan: modulus must be >= 1");
  if (!box_point_count(box, budget))
    throw budget_error("brute-force scan: patch of width " +
                       std::to_string(2 * box.half_width + 1) + "^" +
                       std::to_string(box.dim) +
                       " points exceeds the point budget " +
                       std::to_string(budget));

  const std::size_t d = r.dim;
  const std::int64_t M = box.half_width;

  std::vector<NarrowMatrix> powers;  // R^1 .. R^(k-1)
  powers.reserve(static_cast<std::size_t>(r.k > 0 ? r.k - 1 : 0));
  {
    IntMatrix p = r.matrix;
    for (std::uint64_t t = 1; t < r.k; ++t) {
      powers.push_back(narrow(p));
      if (t + 1 < r.k) p = mat_mul(p, r.matrix);
    }
  }
  for (const NarrowMatrix& p : powers) {
    // |image coordinate| <= max_abs * d * M, so keep well inside int64.
    if (p.max_abs > (std::int64_t{1} << 61) /
                        (static_cast<std::int64_t>(d) * (M > 0 ? M : 1)))
      throw std::overflow_error(
          "brute-force scan: image coordinates exceed machine range");
  }

  ScanOutcome out;
  out.failed.assign(moduli.size(), false);
  out.witness.assign(moduli.size(), std::nullopt);
  std::size_t undecided = moduli.size();

  std::vector<std::int64_t> point(d, -M);
  std::vector<std::int64_t> image(d);
  bool exhausted = false;
  while (!exhausted && undecided > 0) {
    std::int64_t base_sum = 0;
    for (std::size_t i = 0; i < d; ++i) base_sum += point[i];
    for (std::size_t ti = 0; ti < powers.size() && undecided > 0; ++ti) {
      const std::vector<std::int64_t>& p = powers[ti].entries;
      std::int64_t image_sum = 0;
      for (std::size_t i = 0; i < d; ++i) {
        std::int64_t acc = 0;
        const std::int64_t* row = p.data() + i * d;
        for (std::size_t j = 0; j < d; ++j) acc += row[j] * point[j];
        image[i] = acc;
        image_sum += acc;
      }
      const std::int64_t diff = image_sum - base_sum;
      for (std::size_t ni = 0; ni < moduli.size(); ++ni) {
        if (out.failed[ni]) continue;
        const std::int64_t n = static_cast<std::int64_t>(moduli[ni]);
        if (diff % n == 0) continue;
        out.failed[ni] = true;
        Counterexample ce;
        ce.point = point;
        ce.t = static_cast<std::uint64_t>(ti) + 1;
        ce.colour_base = reduce_mod(base_sum, n);
        ce.colour_image = reduce_mod(image_sum, n);
        out.witness[ni] = std::move(ce);
        --undecided;
      }
    }
    if (!advance(point, M)) exhausted = true;
  }
  return out;
}

}  // namespace

std::uint64_t default_point_budget() {
  const char* env = std::getenv("CHROMA_POINT_BUDGET");
  if (env == nullptr) return 10'000'000ull;
  const std::string text(env);
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument(
        "CHROMA_POINT_BUDGET must be a base-10 positive integer, got \"" +
        text + "\"");
  errno = 0;
  const unsigned long long value = std::strtoull(text.c_str(), nullptr, 10);
  if (errno == ERANGE)
    throw std::invalid_argument("CHROMA_POINT_BUDGET is too large");
  if (value == 0)
    throw std::invalid_argument("CHROMA_POINT_BUDGET must be positive");
  return static_cast<std::uint64_t>(value);
}

bool check_invariance(const RotationRep& r, std::uint64_t n, const BoxSpec& box,
                      std::uint64_t budget) {
  ScanOutcome sc = scan_box(r, {n}, box, budget);
  return !sc.failed[0];
}

std::optional<Counterexample> find_violation(const RotationRep& r,
                                             std::uint64_t n,
                                             const BoxSpec& box,
                                             std::uint64_t budget) {
  ScanOutcome sc = scan_box(r, {n}, box, budget);
  return sc.witness[0];
}

std::vector<std::uint64_t> valid_moduli_bruteforce(const RotationRep& r,
                                                   std::uint64_t n_scan,
                                                   const BoxSpec& box,
                                                   std::uint64_t budget) {
  if (n_scan == 0)
    throw std::invalid_argument("brute-force scan: n_scan must be >= 1");
  std::vector<std::uint64_t> moduli;
  moduli.reserve(static_cast<std::size_t>(n_scan));
  for (std::uint64_t n = 1; n <= n_scan; ++n) moduli.push_back(n);
  ScanOutcome sc = scan_box(r, moduli, box, budget);
  std::vector<std::uint64_t> ok;
  for (std::size_t i = 0; i < moduli.size(); ++i)
    if (!sc.failed[i]) ok.push_back(moduli[i]);
  return ok;
}

AgreementRow agreement_row(std::uint64_t k, std::uint64_t n_scan,
                           std::int64_t half_width, std::uint64_t budget) {
  if (k == 0) throw std::invalid_argument("agreement_row: k must be >= 1");
  if (n_scan == 0)
    throw std::invalid_argument("agreement_row: n_scan must be >= 1");
  const RotationRep r = rep(k);
  AgreementRow row;
  row.k = k;
  row.dim = r.dim;

  const RestrictionResult res = restriction_number(r);
  if (!res.n_max) {
    row.unbounded = true;
    for (std::uint64_t n = 1; n <= n_scan; ++n) row.symbolic.push_back(n);
  } else {
    for (const Int& d : res.valid_moduli) {
      const std::uint64_t dv = d.convert_to<std::uint64_t>();
      if (dv <= n_scan) row.symbolic.push_back(dv);
    }
  }

  const BoxSpec box{r.dim, half_width};
  if (!box_point_count(box, budget)) {
    row.skipped = true;
    return row;
  }
  std::vector<std::uint64_t> moduli;
  moduli.reserve(static_cast<std::size_t>(n_scan));
  for (std::uint64_t n = 1; n <= n_scan; ++n) moduli.push_back(n);
  const ScanOutcome sc = scan_box(r, moduli, box, budget);
  for (std::size_t ni = 0; ni < moduli.size(); ++ni)
    if (!sc.failed[ni]) row.bruteforce.push_back(moduli[ni]);
  row.agree = (row.symbolic == row.bruteforce);
  if (!row.agree) {
    // Witness for the smallest modulus the symbolic side admits but the
    // scan rejects, when one exists.
    for (std::size_t ni = 0; ni < moduli.size(); ++ni) {
      const bool symbolic_ok =
          std::find(row.symbolic.begin(), row.symbolic.end(), moduli[ni]) !=
          row.symbolic.end();
      if (sc.failed[ni] && symbolic_ok) {
        row.first_violation = sc.witness[ni];
        break;
      }
    }
  }
  return row;
}

std::vector<AgreementRow> agreement_report(std::uint64_t k_max,
                                           std::uint64_t n_scan,
                                           std::int64_t half_width,
                                           std::uint64_t budget) {
  if (k_max == 0)
    throw std::invalid_argument("agreement_report: k_max must be >= 1");
  std::vector<AgreementRow> rows;
  rows.reserve(static_cast<std::size_t>(k_max));
  for (std::uint64_t k = 1; k <= k_max; ++k)
    rows.push_back(agreement_row(k, n_scan, half_width, budget));
  return rows;
}

}  // namespace chroma
