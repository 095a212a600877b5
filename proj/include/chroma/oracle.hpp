#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chroma/rotrep.hpp"

namespace chroma {

// Axis-aligned lattice patch: all integer points of [-half_width, half_width]^dim.
struct BoxSpec {
  std::size_t dim = 1;
  std::int64_t half_width = 1;
};

// Point budget for brute-force scans. Reads CHROMA_POINT_BUDGET (a base-10
// positive integer) from the environment; defaults to 10^7 when unset.
// Throws std::invalid_argument when the variable is set but malformed.
std::uint64_t default_point_budget();

// A lattice point whose colour class is not preserved: applying the rotation
// t times moves it from colour colour_base to colour colour_image (mod n).
struct Counterexample {
  std::vector<std::int64_t> point;
  std::uint64_t t = 0;
  std::uint64_t colour_base = 0;
  std::uint64_t colour_image = 0;
};

// Brute-force invariance check, fully independent of the symbolic
// derivation: apply every power of the rotation to every point of the patch
// and compare colours directly. Throws budget_error when the patch holds
// more than `budget` points, dimension_error on a patch/rotation mismatch.
bool check_invariance(const RotationRep& r, std::uint64_t n, const BoxSpec& box,
                      std::uint64_t budget = default_point_budget());

// First violation in scan order (points lexicographically ascending from the
// low corner, powers ascending), or nullopt when the patch shows none.
std::optional<Counterexample> find_violation(
    const RotationRep& r, std::uint64_t n, const BoxSpec& box,
    std::uint64_t budget = default_point_budget());

// Every modulus in 1..=n_scan that the patch certifies as invariant.
std::vector<std::uint64_t> valid_moduli_bruteforce(
    const RotationRep& r, std::uint64_t n_scan, const BoxSpec& box,
    std::uint64_t budget = default_point_budget());

// Symbolic-versus-bruteforce comparison for a single rotation order.
struct AgreementRow {
  std::uint64_t k = 1;
  std::size_t dim = 1;
  bool skipped = false;    // patch exceeds the point budget; nothing scanned
  bool unbounded = false;  // symbolic side admits every modulus
  std::vector<std::uint64_t> symbolic;    // admissible moduli <= n_scan
  std::vector<std::uint64_t> bruteforce;  // moduli the scan certifies
  bool agree = false;                     // always false when skipped
  std::optional<Counterexample> first_violation;  // witness on disagreement
};

// The comparison for one k, scanning the patch
// [-half_width, half_width]^dim(k). A patch exceeding the budget marks the
// row skipped instead of throwing.
AgreementRow agreement_row(std::uint64_t k, std::uint64_t n_scan,
                           std::int64_t half_width,
                           std::uint64_t budget = default_point_budget());

// One row per k in 1..=k_max.
std::vector<AgreementRow> agreement_report(
    std::uint64_t k_max, std::uint64_t n_scan, std::int64_t half_width,
    std::uint64_t budget = default_point_budget());

}  // namespace chroma
