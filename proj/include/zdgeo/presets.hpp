#pragma once

#include <string>
#include <vector>

#include "zdgeo/lattice.hpp"

namespace zdgeo {

// Built-in generating sets:
//   std-d2       +-e1, +-e2
//   std-d3       +-e1, +-e2, +-e3
//   chess-knight (+-2,+-1), (+-1,+-2)
//   cube-d3      the eight corners (+-1,+-1,+-1) together with +-e1,+-e2,+-e3;
//                the corners alone generate an index-4 sublattice, and the
//                added basis vectors lie on the cube's facets, so the hull,
//                cone measure, and sprawl are unchanged while the set
//                generates all of Z^3.
//   six-one-d2   +-(6,0), +-(1,0), +-(0,6), +-(0,1)
GeneratorSet preset_generators(const std::string& name);

std::vector<std::string> preset_names();

}  // namespace zdgeo
