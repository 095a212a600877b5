#include "chroma/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "chroma/colouring.hpp"
#include "chroma/errors.hpp"
#include "chroma/rotrep.hpp"

namespace chroma {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

std::string to_string(Basis basis) {
  switch (basis) {
    case Basis::Auto:
      return "auto";
    case Basis::Cartesian:
      return "cartesian";
    case Basis::Oblique:
      return "oblique";
  }
  throw std::invalid_argument("to_string: unknown basis");
}

const std::vector<std::string>& default_palette() {
  static const std::vector<std::string> palette = {
      "#4477aa", "#ee6677", "#228833", "#ccbb44", "#66ccee", "#aa3377",
      "#e69f00", "#56b4e9", "#009e73", "#f0e442", "#d55e00", "#bbbbbb",
  };
  return palette;
}

std::string render_svg(const RenderSpec& spec) {
  if (spec.k == 1)
    throw restriction_error("render_svg: k must be one of 2, 3, 4, 6");
  rep_2d(spec.k);  // validates the rotation order (throws restriction_error)
  if (spec.n == 0)
    throw std::invalid_argument("render_svg: colour count must be >= 1");
  if (spec.extent < 1)
    throw std::invalid_argument("render_svg: extent must be >= 1");
  if (!(spec.radius > 0) || !(spec.size > 0))
    throw std::invalid_argument("render_svg: radius and size must be positive");
  const std::vector<std::string>& palette =
      spec.palette.empty() ? default_palette() : spec.palette;
  if (palette.size() < spec.n)
    throw std::invalid_argument(
        "render_svg: palette has " + std::to_string(palette.size()) +
        " fills but " + std::to_string(spec.n) + " colours are needed");

  Basis basis = spec.basis;
  if (basis == Basis::Auto)
    basis = (spec.k == 3 || spec.k == 6) ? Basis::Oblique : Basis::Cartesian;
  double e2x = 0.0;
  double e2y = 1.0;
  if (basis == Basis::Oblique) {
    const double psi = 2.0 * kPi / static_cast<double>(spec.k);
    e2x = std::cos(psi);
    e2y = std::sin(psi);
  }

  // Plane positions of all patch points, row-major, plus their bounds.
  const std::int64_t M = spec.extent;
  std::vector<double> xs;
  std::vector<double> ys;
  const std::size_t side = static_cast<std::size_t>(2 * M + 1);
  xs.reserve(side * side);
  ys.reserve(side * side);
  double min_x = 0.0, max_x = 0.0, min_y = 0.0, max_y = 0.0;
  bool first = true;
  for (std::int64_t m1 = -M; m1 <= M; ++m1) {
    for (std::int64_t m2 = -M; m2 <= M; ++m2) {
      const double x = static_cast<double>(m1) + static_cast<double>(m2) * e2x;
      const double y = static_cast<double>(m2) * e2y;
      xs.push_back(x);
      ys.push_back(y);
      if (first || x < min_x) min_x = x;
      if (first || x > max_x) max_x = x;
      if (first || y < min_y) min_y = y;
      if (first || y > max_y) max_y = y;
      first = false;
    }
  }

  // Fit the bounding box into the canvas, preserving aspect ratio and
  // leaving room for the circles; the vertical axis points up.
  const double pad = spec.radius + 2.0;
  const double span = std::max(max_x - min_x, max_y - min_y);
  const double scale = span > 0 ? (spec.size - 2.0 * pad) / span : 0.0;
  const double offset_x = (spec.size - (max_x - min_x) * scale) / 2.0;
  const double offset_y = (spec.size - (max_y - min_y) * scale) / 2.0;

  const ColourLattice lattice{2, spec.n};
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         fmt2(spec.size) + "\" height=\"" + fmt2(spec.size) +
         "\" viewBox=\"0 0 " + fmt2(spec.size) + " " + fmt2(spec.size) +
         "\">\n";
  out += "<rect width=\"" + fmt2(spec.size) + "\" height=\"" +
         fmt2(spec.size) + "\" fill=\"#ffffff\"/>\n";
  std::size_t index = 0;
  for (std::int64_t m1 = -M; m1 <= M; ++m1) {
    for (std::int64_t m2 = -M; m2 <= M; ++m2, ++index) {
      IntVector m(2);
      m[0] = m1;
      m[1] = m2;
      const std::uint64_t colour = colour_of(lattice, m);
      const double px = offset_x + (xs[index] - min_x) * scale;
      const double py = spec.size - (offset_y + (ys[index] - min_y) * scale);
      out += "<circle cx=\"" + fmt2(px) + "\" cy=\"" + fmt2(py) + "\" r=\"" +
             fmt2(spec.radius) + "\" fill=\"" +
             palette[static_cast<std::size_t>(colour)] + "\"/>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace chroma
