#include "zdgeo/presets.hpp"

namespace zdgeo {

GeneratorSet preset_generators(const std::string& name) {
  if (name == "std-d2") {
    return GeneratorSet::create(2, {{1, 0}, {0, 1}}, true);
  }
  if (name == "std-d3") {
    return GeneratorSet::create(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, true);
  }
  if (name == "chess-knight") {
    return GeneratorSet::create(2, {{2, 1}, {2, -1}, {1, 2}, {1, -2}}, true);
  }
  if (name == "cube-d3") {
    return GeneratorSet::create(3,
                                {{1, 1, 1},
                                 {1, 1, -1},
                                 {1, -1, 1},
                                 {1, -1, -1},
                                 {1, 0, 0},
                                 {0, 1, 0},
                                 {0, 0, 1}},
                                true);
  }
  if (name == "six-one-d2") {
    return GeneratorSet::create(2, {{6, 0}, {1, 0}, {0, 6}, {0, 1}}, true);
  }
  throw ConfigError("unknown preset: " + name);
}

std::vector<std::string> preset_names() {
  return {"std-d2", "std-d3", "chess-knight", "cube-d3", "six-one-d2"};
}

}  // namespace zdgeo
