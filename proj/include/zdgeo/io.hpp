#pragma once

#include <string>

#include "zdgeo/averages.hpp"
#include "zdgeo/hull.hpp"
#include "zdgeo/lattice.hpp"
#include "zdgeo/sprawl.hpp"

namespace zdgeo {

// {"dim": d, "generators": [[..], ..], "symmetrize": bool}
GeneratorSet load_generators_json(const std::string& text);
GeneratorSet load_generators_file(const std::string& path);

// Hull + measure export; rationals serialized bit-exactly as "p/q" strings.
std::string hull_report_json(const GeneratorSet& gens, const LimitShape& shape,
                             const ConeMeasure& measure, bool with_pick);

std::string sprawl_report_json(const SprawlComparison& cmp,
                               const SprawlConfig& config,
                               const std::string& source);

}  // namespace zdgeo
