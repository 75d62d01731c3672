#include "zdgeo/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "zdgeo/counting.hpp"

namespace zdgeo {

using ordered_json = nlohmann::ordered_json;

GeneratorSet load_generators_json(const std::string& text) {
  try {
    const ordered_json doc = ordered_json::parse(text);
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("generators")) {
      throw ConfigError("generator JSON needs {\"dim\", \"generators\"}");
    }
    if (!doc["dim"].is_number_integer()) {
      throw ConfigError("generator JSON: dim must be an integer");
    }
    const int dim = doc["dim"].get<int>();
    std::vector<Vec> vectors;
    for (const auto& row : doc["generators"]) {
      if (!row.is_array()) {
        throw ConfigError("generator JSON: generators must be integer arrays");
      }
      Vec v;
      for (const auto& c : row) {
        if (!c.is_number_integer()) {
          throw ConfigError("generator JSON: coordinates must be integers");
        }
        v.push_back(c.get<std::int64_t>());
      }
      vectors.push_back(std::move(v));
    }
    const bool symmetrize = doc.value("symmetrize", false);
    return GeneratorSet::create(dim, std::move(vectors), symmetrize);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("generator JSON parse error: ") + e.what());
  }
}

GeneratorSet load_generators_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open generator file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return load_generators_json(buf.str());
}

std::string hull_report_json(const GeneratorSet& gens, const LimitShape& shape,
                             const ConeMeasure& measure, bool with_pick) {
  ordered_json doc;
  doc["dim"] = shape.dim;
  doc["generators"] = ordered_json::array();
  for (const Vec& g : gens.vectors()) doc["generators"].push_back(g);
  doc["vertices"] = ordered_json::array();
  for (const Vec& v : shape.vertices) doc["vertices"].push_back(v);
  doc["facets"] = ordered_json::array();
  for (const Facet& f : shape.facets) {
    ordered_json jf;
    jf["vertices"] = f.vertex_indices;
    jf["normal"] = f.normal;
    jf["support"] = f.support;
    jf["simplices"] = f.simplices;
    doc["facets"].push_back(std::move(jf));
  }
  doc["boundary_generators"] = ordered_json::array();
  for (const Vec& v : shape.boundary_generators) {
    doc["boundary_generators"].push_back(v);
  }
  doc["volume"] = rational_to_string(shape.volume);
  ordered_json jm;
  jm["triangulation"] = measure.triangulation;
  jm["simplex_weights"] = ordered_json::array();
  for (const Rational& w : measure.weights) {
    jm["simplex_weights"].push_back(rational_to_string(w));
  }
  jm["facet_weights"] = ordered_json::array();
  for (const Rational& w : measure.facet_weights) {
    jm["facet_weights"].push_back(rational_to_string(w));
  }
  doc["cone_measure"] = std::move(jm);
  if (with_pick && shape.dim == 2) {
    const PickReport pick = picks_identity(shape);
    ordered_json jp;
    jp["interior"] = pick.interior;
    jp["boundary"] = pick.boundary;
    jp["area"] = rational_to_string(pick.area);
    jp["holds"] = pick.holds;
    doc["pick"] = std::move(jp);
  }
  return doc.dump(2) + "\n";
}

std::string sprawl_report_json(const SprawlComparison& cmp,
                               const SprawlConfig& config,
                               const std::string& source) {
  ordered_json doc;
  doc["source"] = source;
  auto encode = [](const SprawlEstimate& e) {
    ordered_json j;
    j["value"] = e.value;
    j["stderr"] = e.standard_error;
    j["method"] = e.method_name();
    j["count"] = e.count;
    j["norm_fallback"] = e.used_norm_fallback;
    return j;
  };
  doc["empirical"] = encode(cmp.empirical);
  doc["monte_carlo"] = encode(cmp.monte_carlo);
  doc["difference"] = cmp.difference;
  doc["combined_sigma"] = cmp.combined_sigma;
  doc["below_two_margin"] = cmp.margin;
  doc["below_two"] = cmp.below_two;
  ordered_json jc;
  jc["radius"] = config.radius;
  jc["pair_budget"] = config.pair_budget;
  jc["samples"] = config.samples;
  jc["seed"] = config.seed;
  jc["threads"] = config.threads;
  jc["batch_size"] = config.batch_size;
  doc["config"] = std::move(jc);
  return doc.dump(2) + "\n";
}

}  // namespace zdgeo
