#pragma once

#include <cstdint>
#include <vector>

#include "chroma/exactmat.hpp"
#include "chroma/rotrep.hpp"

namespace chroma {

// The d-dimensional lattice split into n modular sublattices: point m gets
// colour (sum of coordinates) mod n. The colour classes are translates of
// one another along any basis direction and partition the lattice into
// equal fractions.
struct ColourLattice {
  std::size_t dim = 1;
  std::uint64_t modulus = 1;
};

// Residue of the coordinate sum, normalized to 0..n-1 for all integers,
// negative coordinates included.
std::uint64_t colour_of(const ColourLattice& lat, const IntVector& m);

bool in_sublattice(const ColourLattice& lat, std::uint64_t q,
                   const IntVector& m);

// Colour of R^t * m for t = 0..k-1. The colouring is rotation-invariant at m
// iff all entries coincide.
std::vector<std::uint64_t> orbit_colours(const ColourLattice& lat,
                                         const RotationRep& rep,
                                         const IntVector& m);

}  // namespace chroma
