#include "doctest.h"

#include "zdgeo/lattice.hpp"
#include "zdgeo/numeric.hpp"
#include "zdgeo/presets.hpp"

using namespace zdgeo;

TEST_CASE("rational string round trip") {
  CHECK(rational_to_string(Rational(3, 6)) == "1/2");
  CHECK(rational_to_string(Rational(-14)) == "-14");
  CHECK(rational_from_string("4/28") == Rational(1, 7));
  CHECK(rational_from_string("-3") == Rational(-3));
  CHECK_THROWS_AS(rational_from_string("1/0/2"), Error);
  CHECK_THROWS_AS(rational_from_string("x"), Error);
}

TEST_CASE("generator set validation") {
  CHECK_THROWS_AS(GeneratorSet::create(2, {{0, 0}, {1, 0}}, true),
                  ZeroGeneratorError);
  CHECK_THROWS_AS(GeneratorSet::create(2, {{1, 0}, {2, 0}}, true),
                  NotFullRankError);
  CHECK_THROWS_AS(GeneratorSet::create(2, {{1, 0}, {0, 1}}, false), ConfigError);
  CHECK_THROWS_AS(GeneratorSet::create(2, {{1, 0, 0}}, true),
                  DimensionMismatchError);

  const GeneratorSet std2 = GeneratorSet::create(2, {{1, 0}, {0, 1}}, true);
  CHECK(std2.vectors().size() == 4);
  CHECK(std2.pair_representatives().size() == 2);
  CHECK(std2.generates_full_lattice());

  // duplicate input collapses
  const GeneratorSet dup =
      GeneratorSet::create(2, {{1, 0}, {1, 0}, {0, 1}}, true);
  CHECK(dup.vectors().size() == 4);
}

TEST_CASE("full lattice detection") {
  // 2Z^2 is full rank but index 4
  const GeneratorSet doubled = GeneratorSet::create(2, {{2, 0}, {0, 2}}, true);
  CHECK_FALSE(doubled.generates_full_lattice());
  // the knight set reaches everything
  CHECK(preset_generators("chess-knight").generates_full_lattice());
  // cube corners alone hit only the parity sublattice
  const GeneratorSet corners = GeneratorSet::create(
      3, {{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {1, -1, -1}}, true);
  CHECK_FALSE(corners.generates_full_lattice());
  // every preset generates all of Z^d
  for (const auto& name : preset_names()) {
    CHECK(preset_generators(name).generates_full_lattice());
  }
}

TEST_CASE("content hash distinguishes sets and ignores input order") {
  const GeneratorSet a = GeneratorSet::create(2, {{1, 0}, {0, 1}}, true);
  const GeneratorSet b = GeneratorSet::create(2, {{0, 1}, {1, 0}}, true);
  const GeneratorSet c = preset_generators("chess-knight");
  CHECK(a.content_hash() == b.content_hash());
  CHECK(a.content_hash() != c.content_hash());
}

TEST_CASE("exact determinant and solver") {
  CHECK(det_big({{BigInt(2), BigInt(1)}, {BigInt(1), BigInt(2)}}) == 3);
  CHECK(det_big({{BigInt(1), BigInt(2)}, {BigInt(2), BigInt(4)}}) == 0);
  auto sol = solve_linear({{Rational(2), Rational(1)}, {Rational(1), Rational(2)}},
                          {Rational(4), Rational(5)});
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == Rational(1));
  CHECK((*sol)[1] == Rational(2));
  CHECK_FALSE(solve_linear({{Rational(1), Rational(1)}, {Rational(1), Rational(1)}},
                           {Rational(0), Rational(1)})
                  .has_value());
}
