#include "doctest.h"

#include "zdgeo/counting.hpp"
#include "zdgeo/presets.hpp"

using namespace zdgeo;

namespace {

// Independent route for the lattice count: half-space tests over the box.
std::int64_t half_space_count(const LimitShape& shape, std::int64_t n) {
  const int d = shape.dim;
  const std::int64_t R = n * shape.coord_radius();
  std::int64_t count = 0;
  Vec x(d, -R);
  while (true) {
    if (in_dilate(shape, x, n)) ++count;
    int j = d - 1;
    while (j >= 0 && x[j] == R) x[j--] = -R;
    if (j < 0) break;
    ++x[j];
  }
  return count;
}

}  // namespace

TEST_CASE("lattice point counts") {
  const LimitShape square = build_hull(preset_generators("std-d2"));
  CHECK(count_lattice_points(square, 3) == 25);  // 2n^2 + 2n + 1
  CHECK(count_lattice_points(square, 0) == 1);

  const LimitShape knight = build_hull(preset_generators("chess-knight"));
  CHECK(count_lattice_points(knight, 1) == 21);
  CHECK(count_lattice_points(knight, 0) == 1);
}

TEST_CASE("count agrees with the half-space route") {
  for (const auto& name : preset_names()) {
    const LimitShape shape = build_hull(preset_generators(name));
    const int top = shape.dim == 2 ? 6 : 4;
    for (std::int64_t n = 0; n <= top; ++n) {
      CHECK(count_lattice_points(shape, n) == half_space_count(shape, n));
    }
  }
}

TEST_CASE("ehrhart interpolation") {
  const LimitShape square = build_hull(preset_generators("std-d2"));
  const EhrhartPolynomial ps = ehrhart_fit(square, 8);
  CHECK(ps.coeffs == std::vector<Rational>{1, 2, 2});

  const LimitShape octa = build_hull(preset_generators("std-d3"));
  const EhrhartPolynomial po = ehrhart_fit(octa, 6);
  CHECK(po.coeffs[3] == Rational(4, 3));  // cross-polytope volume 2^d/d!

  const LimitShape knight = build_hull(preset_generators("chess-knight"));
  const EhrhartPolynomial pk = ehrhart_fit(knight, 8);
  CHECK(pk.coeffs[2] == Rational(14));
  CHECK(pk.coeffs == std::vector<Rational>{1, 6, 14});

  CHECK_THROWS_AS(ehrhart_fit(square, 1), ConfigError);
}

TEST_CASE("ehrhart leading coefficient equals the exact volume") {
  for (const auto& name : preset_names()) {
    const LimitShape shape = build_hull(preset_generators(name));
    const int top = shape.dim == 2 ? 8 : 5;
    const EhrhartPolynomial p = ehrhart_fit(shape, top);
    CHECK(p.coeffs[shape.dim] == shape.volume);
    CHECK(p.verified_up_to == top);
  }
}

TEST_CASE("a corrupted volume trips the fit check") {
  LimitShape shape = build_hull(preset_generators("std-d2"));
  shape.volume += 1;
  CHECK_THROWS_AS(ehrhart_fit(shape, 4), FitMismatchError);
}

TEST_CASE("pick identity") {
  const LimitShape knight = build_hull(preset_generators("chess-knight"));
  const PickReport pk = picks_identity(knight);
  CHECK(pk.interior == 9);
  CHECK(pk.boundary == 12);
  CHECK(pk.area == Rational(14));
  CHECK(pk.holds);

  const LimitShape square = build_hull(preset_generators("std-d2"));
  const PickReport ps = picks_identity(square);
  CHECK(ps.interior == 1);
  CHECK(ps.boundary == 4);
  CHECK(ps.area == Rational(2));
  CHECK(ps.holds);

  const LimitShape six = build_hull(preset_generators("six-one-d2"));
  const PickReport p6 = picks_identity(six);
  CHECK(p6.interior == 61);
  CHECK(p6.boundary == 24);
  CHECK(p6.area == Rational(72));
  CHECK(p6.holds);

  const LimitShape octa = build_hull(preset_generators("std-d3"));
  CHECK_THROWS_AS(picks_identity(octa), DimensionUnsupportedError);
}

TEST_CASE("d=1 counts are linear") {
  const GeneratorSet gens = GeneratorSet::create(1, {{3}, {1}}, true);
  const LimitShape shape = build_hull(gens);
  CHECK(count_lattice_points(shape, 5) == 31);  // 2*3*5 + 1
  const EhrhartPolynomial p = ehrhart_fit(shape, 6);
  CHECK(p.coeffs == std::vector<Rational>{1, 6});
}
