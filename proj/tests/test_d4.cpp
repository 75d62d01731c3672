#include "doctest.h"

#include <cmath>

#include "zdgeo/counting.hpp"
#include "zdgeo/growth.hpp"
#include "zdgeo/metric.hpp"
#include "zdgeo/sampling.hpp"

// Nothing in the library is pinned to d <= 3; the 4-dimensional cube and
// cross-polytope have known exact data and exercise the recursive facet
// triangulation and the big-integer sector predicates.

using namespace zdgeo;

namespace {

GeneratorSet cube4() {
  std::vector<Vec> corners;
  for (int mask = 0; mask < 16; ++mask) {
    Vec v(4);
    for (int j = 0; j < 4; ++j) v[j] = (mask >> j) & 1 ? 1 : -1;
    corners.push_back(std::move(v));
  }
  return GeneratorSet::create(4, std::move(corners));
}

GeneratorSet cross4() {
  return GeneratorSet::create(
      4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, true);
}

}  // namespace

TEST_CASE("4-cube hull") {
  const LimitShape shape = build_hull(cube4());
  CHECK(shape.vertices.size() == 16);
  CHECK(shape.facets.size() == 8);
  CHECK(shape.volume == Rational(16));
  // pulling a 3-cube facet from a vertex yields 6 tetrahedra
  for (const Facet& f : shape.facets) {
    CHECK(f.vertex_indices.size() == 8);
    CHECK(f.simplices.size() == 6);
  }
  CHECK(minkowski_norm(shape, {3, 1, -2, 0}) == Rational(3));

  const ConeMeasure measure = cone_measure(shape);
  Rational total = 0;
  for (const Rational& w : measure.weights) total += w;
  CHECK(total == Rational(1));
  for (const Rational& w : measure.facet_weights) CHECK(w == Rational(1, 8));
}

TEST_CASE("4-dimensional cross-polytope hull") {
  const LimitShape shape = build_hull(cross4());
  CHECK(shape.vertices.size() == 8);
  CHECK(shape.facets.size() == 16);
  CHECK(shape.simplex_count() == 16);
  CHECK(shape.volume == Rational(2, 3));  // 2^d / d!
  CHECK(minkowski_norm(shape, {3, 1, -2, 0}) == Rational(6));
}

TEST_CASE("4-dimensional counting and Ehrhart") {
  const LimitShape cube = build_hull(cube4());
  CHECK(count_lattice_points(cube, 2) == 625);  // (2n+1)^4
  const EhrhartPolynomial pc = ehrhart_fit(cube, 5);
  CHECK(pc.coeffs == std::vector<Rational>{1, 8, 24, 32, 16});

  const LimitShape cross = build_hull(cross4());
  CHECK(count_lattice_points(cross, 1) == 9);
  const EhrhartPolynomial px = ehrhart_fit(cross, 5);
  CHECK(px.coeffs[4] == Rational(2, 3));
}

TEST_CASE("a mixed 4-dimensional hull stays internally consistent") {
  // cross-polytope plus the long diagonal: irregular facets, still exact
  const GeneratorSet gens = GeneratorSet::create(4,
                                                 {{1, 0, 0, 0},
                                                  {0, 1, 0, 0},
                                                  {0, 0, 1, 0},
                                                  {0, 0, 0, 1},
                                                  {1, 1, 1, 1}},
                                                 true);
  const LimitShape shape = build_hull(gens);
  CHECK(shape.vertices.size() == 10);
  const ConeMeasure measure = cone_measure(shape);
  Rational total = 0;
  for (const Rational& w : measure.weights) total += w;
  CHECK(total == Rational(1));
  // interpolation doubles as an independent volume check
  const EhrhartPolynomial p = ehrhart_fit(shape, 5);
  CHECK(p.coeffs[4] == shape.volume);

  // hull idempotence through the recursive triangulation path
  const LimitShape again =
      build_hull(GeneratorSet::create(4, shape.vertices, true));
  CHECK(again.vertices == shape.vertices);
  CHECK(again.volume == shape.volume);

  Rng rng(4444);
  ConeSampler sampler(shape, measure);
  std::vector<double> x;
  for (int i = 0; i < 500; ++i) {
    sampler.sample(rng, x);
    CHECK(std::abs(minkowski_norm_real(shape, x) - 1.0) <= 1e-12);
  }
}

TEST_CASE("4-dimensional metric table against the oracle") {
  const GeneratorSet gens = cross4();
  const MetricTable t = bfs_ball(gens, 3);
  CHECK(t.sphere_size(1) == 8);
  CHECK(t.sphere_size(2) == 32);
  CHECK(t.sphere_size(3) == 88);
  for (int n = 0; n <= 3; ++n) {
    t.for_each_sphere_point(n, [&](const Vec& x) {
      CHECK(word_length_oracle(gens, x, 3) == n);
    });
  }

  const LimitShape shape = build_hull(gens);
  CHECK(verify_norm_bounds(t, shape, compute_K(gens, shape)).violations.empty());
  const SectorHistogram h = sector_histogram(t, shape, 3);
  CHECK(h.total == 88);
}
