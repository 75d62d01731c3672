#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zdgeo/lattice.hpp"
#include "zdgeo/numeric.hpp"

namespace zdgeo {

// Codimension-1 face of the limit shape. The outward normal is primitive and
// <normal, v> = support > 0 for every vertex v of the facet, with strict
// inequality < support for all other hull vertices.
struct Facet {
  std::vector<int> vertex_indices;  // d=3: cyclic boundary order; else ascending
  Vec normal;
  std::int64_t support = 0;
  std::vector<std::vector<int>> simplices;  // d global vertex indices each
};

// Boundary polytope L of Q = conv(S) together with its exact volume and a
// deterministic triangulation of every facet (pulled from the lowest-index
// facet vertex; for polygons this is the ordinary fan).
struct LimitShape {
  int dim = 0;
  std::vector<Vec> vertices;  // extreme points of Q, lexicographically sorted
  std::vector<Facet> facets;  // sorted by (normal, support)
  Rational volume;

  // Generators that lie on L without being extreme points. They never enter
  // the triangulation but matter for geodesic bookkeeping.
  std::vector<Vec> boundary_generators;

  // Flattened triangulation: facets in order, fan simplices within a facet in
  // fan order. sector_of and ConeMeasure index into this table.
  std::vector<std::pair<int, int>> simplex_table;  // (facet, local simplex)

  int simplex_count() const { return static_cast<int>(simplex_table.size()); }
  const std::vector<int>& simplex(int g) const {
    const auto& [f, s] = simplex_table[g];
    return facets[f].simplices[s];
  }
  int facet_of_simplex(int g) const { return simplex_table[g].first; }

  // max |coordinate| over vertices; bounding box radius of nQ is n * this.
  std::int64_t coord_radius() const;
};

// Probability weights of the cone measure, one per facet simplex in the
// global simplex order of the shape. Exact; weights sum to 1.
struct ConeMeasure {
  std::vector<Rational> weights;
  std::vector<Rational> facet_weights;
  std::string triangulation = "lowest-index-vertex-fan";
};

// Exact convex hull of the generating set. Incremental insertion with
// fraction-free integer orientation predicates; no floating point anywhere.
LimitShape build_hull(const GeneratorSet& gens);

// Gauge of the polytope: the unique lambda >= 0 with x in lambda * L,
// evaluated as max over facets of <normal, x> / support.
Rational minkowski_norm(const LimitShape& shape, const Vec& x);

// Same value as an unreduced fraction (num, den) with den > 0. Hot-path form
// for counting loops; valid while |coordinate| stays below norm_coord_limit.
std::pair<std::int64_t, std::int64_t> minkowski_norm_fraction(
    const LimitShape& shape, const Vec& x);

// Largest |coordinate| for which the int64 norm fast path cannot overflow.
std::int64_t norm_coord_limit(const LimitShape& shape);

// True iff x lies in the dilate n*Q, by pure integer half-space tests.
bool in_dilate(const LimitShape& shape, const Vec& x, std::int64_t n);

ConeMeasure cone_measure(const LimitShape& shape);

// Index (into the global simplex table) of the facet simplex whose closed
// cone from the origin contains x; lowest index wins on shared boundaries.
// If tied is non-null it reports whether more than one closed cone matched.
int sector_of(const LimitShape& shape, const Vec& x, bool* tied = nullptr);

}  // namespace zdgeo
