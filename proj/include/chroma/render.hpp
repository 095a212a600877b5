#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace chroma {

// Plane embedding of the 2D colour lattice.
enum class Basis {
  Auto,       // Oblique for k in {3, 6}, Cartesian for k in {2, 4}
  Cartesian,  // e1 = (1,0), e2 = (0,1)
  Oblique,    // e1 = (1,0), e2 = (cos 2*pi/k, sin 2*pi/k)
};

std::string to_string(Basis basis);

// A render of the patch -extent..extent squared of a 2D colour lattice with
// n modular sublattices, one filled circle per lattice point.
struct RenderSpec {
  std::uint64_t k = 3;      // plane rotation order; must be 2, 3, 4 or 6
  std::uint64_t n = 1;      // colour count (modulus); palette must cover it
  std::int64_t extent = 2;  // lattice coordinates range over -extent..extent; >= 1
  Basis basis = Basis::Auto;
  std::vector<std::string> palette;  // empty = default_palette()
  double radius = 6.0;               // circle radius in pixels
  double size = 480.0;               // square canvas edge in pixels
};

// Twelve visually distinct hex fills, enough for every admissible modulus.
const std::vector<std::string>& default_palette();

// Deterministic SVG document: same spec, byte-identical output. Points are
// emitted row-major (m1 outer, m2 inner, both ascending); each circle's fill
// is palette[(m1 + m2) mod n]. Throws restriction_error for a rotation order
// with no 2D lattice rotation and std::invalid_argument for a palette
// shorter than n or non-positive radius/size.
std::string render_svg(const RenderSpec& spec);

}  // namespace chroma
