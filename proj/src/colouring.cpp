#include "chroma/colouring.hpp"

#include <stdexcept>

namespace chroma {

namespace {

void check(const ColourLattice& lat) {
  if (lat.dim < 1 || lat.modulus < 1)
    throw std::invalid_argument("ColourLattice: dim and modulus must be >= 1");
}

}  // namespace

std::uint64_t colour_of(const ColourLattice& lat, const IntVector& m) {
  check(lat);
  if (m.dim() != lat.dim)
    throw dimension_error("colour_of: point dimension mismatch");
  Int sum = 0;
  for (std::size_t i = 0; i < m.dim(); ++i) sum += m[i];
  Int r = sum % lat.modulus;
  if (r < 0) r += lat.modulus;
  return r.convert_to<std::uint64_t>();
}

bool in_sublattice(const ColourLattice& lat, std::uint64_t q,
                   const IntVector& m) {
  check(lat);
  if (q >= lat.modulus)
    throw std::invalid_argument("in_sublattice: residue out of range");
  return colour_of(lat, m) == q;
}

std::vector<std::uint64_t> orbit_colours(const ColourLattice& lat,
                                         const RotationRep& rep,
                                         const IntVector& m) {
  check(lat);
  if (rep.dim != lat.dim)
    throw dimension_error("orbit_colours: representation dimension mismatch");
  std::vector<std::uint64_t> colours;
  colours.reserve(rep.k);
  IntVector image = m;
  for (std::uint64_t t = 0; t < rep.k; ++t) {
    colours.push_back(colour_of(lat, image));
    if (t + 1 < rep.k) image = mat_apply(rep.matrix, image);
  }
  return colours;
}

}  // namespace chroma
