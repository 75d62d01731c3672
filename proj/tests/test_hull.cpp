#include "doctest.h"

#include <algorithm>
#include <set>

#include "zdgeo/hull.hpp"
#include "zdgeo/presets.hpp"

using namespace zdgeo;

namespace {

const Facet& facet_with_normal(const LimitShape& shape, const Vec& n) {
  for (const Facet& f : shape.facets) {
    if (f.normal == n) return f;
  }
  REQUIRE(false);
  return shape.facets[0];
}

std::set<Vec> facet_vertex_set(const LimitShape& shape, const Facet& f) {
  std::set<Vec> out;
  for (int vi : f.vertex_indices) out.insert(shape.vertices[vi]);
  return out;
}

}  // namespace

TEST_CASE("chess-knight octagon") {
  const LimitShape shape = build_hull(preset_generators("chess-knight"));
  CHECK(shape.dim == 2);
  CHECK(shape.vertices.size() == 8);
  CHECK(shape.facets.size() == 8);
  CHECK(shape.volume == Rational(14));
  CHECK(shape.boundary_generators.empty());
  // vertices come out in lexicographic order
  const std::vector<Vec> expected = {{-2, -1}, {-2, 1}, {-1, -2}, {-1, 2},
                                     {1, -2},  {1, 2},  {2, -1},  {2, 1}};
  CHECK(shape.vertices == expected);
  // axis-type facet
  const Facet& right = facet_with_normal(shape, {1, 0});
  CHECK(right.support == 2);
  CHECK(facet_vertex_set(shape, right) == std::set<Vec>{{2, -1}, {2, 1}});
}

TEST_CASE("standard square") {
  const LimitShape shape = build_hull(preset_generators("std-d2"));
  CHECK(shape.vertices == std::vector<Vec>{{-1, 0}, {0, -1}, {0, 1}, {1, 0}});
  CHECK(shape.facets.size() == 4);
  CHECK(shape.volume == Rational(2));
  for (const Facet& f : shape.facets) CHECK(f.support == 1);
}

TEST_CASE("interior generators are not significant") {
  const LimitShape shape = build_hull(preset_generators("six-one-d2"));
  CHECK(shape.vertices == std::vector<Vec>{{-6, 0}, {0, -6}, {0, 6}, {6, 0}});
  CHECK(shape.facets.size() == 4);
  CHECK(shape.volume == Rational(72));
  // (1,0) and (0,1) are interior to Q, not on L
  CHECK(shape.boundary_generators.empty());
}

TEST_CASE("octahedron and cube in d=3") {
  const LimitShape octa = build_hull(preset_generators("std-d3"));
  CHECK(octa.vertices.size() == 6);
  CHECK(octa.facets.size() == 8);
  CHECK(octa.simplex_count() == 8);
  CHECK(octa.volume == Rational(4, 3));

  const LimitShape cube = build_hull(preset_generators("cube-d3"));
  CHECK(cube.vertices.size() == 8);
  CHECK(cube.facets.size() == 6);
  CHECK(cube.simplex_count() == 12);  // two fan triangles per square
  CHECK(cube.volume == Rational(8));
  // the added basis vectors sit on facets of the cube
  CHECK(cube.boundary_generators.size() == 6);
  for (const Facet& f : cube.facets) {
    CHECK(f.vertex_indices.size() == 4);
    CHECK(f.simplices.size() == 2);
    // fan simplices share the lowest-index facet vertex
    const int apex =
        *std::min_element(f.vertex_indices.begin(), f.vertex_indices.end());
    for (const auto& s : f.simplices) {
      CHECK(std::find(s.begin(), s.end(), apex) != s.end());
    }
  }
}

TEST_CASE("one dimensional hull") {
  const GeneratorSet gens = GeneratorSet::create(1, {{1}, {3}}, true);
  const LimitShape shape = build_hull(gens);
  CHECK(shape.vertices == std::vector<Vec>{{-3}, {3}});
  CHECK(shape.facets.size() == 2);
  CHECK(shape.volume == Rational(6));
  const ConeMeasure m = cone_measure(shape);
  CHECK(m.weights == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
}

TEST_CASE("hull idempotence") {
  for (const auto& name : preset_names()) {
    const LimitShape first = build_hull(preset_generators(name));
    const GeneratorSet vertex_set =
        GeneratorSet::create(first.dim, first.vertices, true);
    const LimitShape second = build_hull(vertex_set);
    CHECK(second.vertices == first.vertices);
    CHECK(second.volume == first.volume);
    REQUIRE(second.facets.size() == first.facets.size());
    for (std::size_t i = 0; i < first.facets.size(); ++i) {
      CHECK(second.facets[i].normal == first.facets[i].normal);
      CHECK(second.facets[i].support == first.facets[i].support);
      CHECK(second.facets[i].simplices == first.facets[i].simplices);
    }
  }
}

TEST_CASE("facets come in antipodal pairs") {
  for (const auto& name : preset_names()) {
    const LimitShape shape = build_hull(preset_generators(name));
    for (const Facet& f : shape.facets) {
      bool found = false;
      for (const Facet& g : shape.facets) {
        if (g.normal == negate(f.normal) && g.support == f.support) {
          found = true;
          break;
        }
      }
      CHECK(found);
    }
  }
}

TEST_CASE("minkowski norm values") {
  const LimitShape knight = build_hull(preset_generators("chess-knight"));
  CHECK(minkowski_norm(knight, {2, 2}) == Rational(4, 3));
  CHECK(minkowski_norm(knight, {0, 0}) == Rational(0));

  const LimitShape square = build_hull(preset_generators("std-d2"));
  CHECK(minkowski_norm(square, {3, 4}) == Rational(7));

  for (const auto& name : preset_names()) {
    const LimitShape shape = build_hull(preset_generators(name));
    for (const Vec& v : shape.vertices) {
      CHECK(minkowski_norm(shape, v) == Rational(1));
    }
  }
  CHECK_THROWS_AS(minkowski_norm(square, {1, 2, 3}), DimensionMismatchError);
}

TEST_CASE("norm axioms on a grid") {
  for (const char* name : {"chess-knight", "six-one-d2"}) {
    const LimitShape shape = build_hull(preset_generators(name));
    for (std::int64_t x0 = -3; x0 <= 3; ++x0) {
      for (std::int64_t y0 = -3; y0 <= 3; ++y0) {
        const Vec x{x0, y0};
        CHECK(minkowski_norm(shape, negate(x)) == minkowski_norm(shape, x));
        for (std::int64_t k = 0; k <= 4; ++k) {
          CHECK(minkowski_norm(shape, Vec{k * x0, k * y0}) ==
                k * minkowski_norm(shape, x));
        }
        for (std::int64_t x1 = -3; x1 <= 3; ++x1) {
          for (std::int64_t y1 = -3; y1 <= 3; ++y1) {
            const Vec y{x1, y1};
            CHECK(minkowski_norm(shape, add(x, y)) <=
                  minkowski_norm(shape, x) + minkowski_norm(shape, y));
          }
        }
      }
    }
  }
}

TEST_CASE("cone measure weights") {
  const LimitShape square = build_hull(preset_generators("std-d2"));
  const ConeMeasure ms = cone_measure(square);
  for (const Rational& w : ms.weights) CHECK(w == Rational(1, 4));

  const LimitShape knight = build_hull(preset_generators("chess-knight"));
  const ConeMeasure mk = cone_measure(knight);
  Rational total = 0;
  for (std::size_t i = 0; i < mk.weights.size(); ++i) {
    const Vec& n = knight.facets[knight.facet_of_simplex(i)].normal;
    const bool axis = n[0] == 0 || n[1] == 0;
    CHECK(mk.weights[i] == (axis ? Rational(1, 7) : Rational(3, 28)));
    total += mk.weights[i];
  }
  CHECK(total == Rational(1));
  // ratio of the two side types is 4:3
  CHECK(Rational(1, 7) / Rational(3, 28) == Rational(4, 3));
}

TEST_CASE("sector lookup") {
  const LimitShape knight = build_hull(preset_generators("chess-knight"));

  bool tied = false;
  const int right = sector_of(knight, {5, 0}, &tied);
  CHECK(knight.facets[knight.facet_of_simplex(right)].normal == Vec{1, 0});
  CHECK_FALSE(tied);

  const int diag = sector_of(knight, {2, 2}, &tied);
  CHECK(knight.facets[knight.facet_of_simplex(diag)].normal == Vec{1, 1});
  CHECK_FALSE(tied);

  // (4,2) rides the vertex ray through (2,1): shared boundary, lowest index
  const int on_ray = sector_of(knight, {4, 2}, &tied);
  CHECK(tied);
  CHECK(knight.facets[knight.facet_of_simplex(on_ray)].normal == Vec{1, 0});
  const int other = sector_of(knight, {2, 1});
  CHECK(on_ray == other);

  CHECK_THROWS_AS(sector_of(knight, {0, 0}), ZeroVectorError);

  // every simplex owns its own interior direction: recover by scaled centroid
  for (const auto& name : preset_names()) {
    const LimitShape shape = build_hull(preset_generators(name));
    for (int g = 0; g < shape.simplex_count(); ++g) {
      Vec centroid(shape.dim, 0);
      for (int vi : shape.simplex(g)) centroid = add(centroid, shape.vertices[vi]);
      CHECK(sector_of(shape, centroid) == g);
    }
  }
}

TEST_CASE("hull rejects degenerate input") {
  CHECK_THROWS_AS(build_hull(GeneratorSet::create(3, {{1, 0, 0}, {0, 1, 0}}, true)),
                  NotFullRankError);
}
