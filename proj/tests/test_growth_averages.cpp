#include "doctest.h"

#include <cmath>
#include <numeric>

#include "zdgeo/averages.hpp"
#include "zdgeo/growth.hpp"
#include "zdgeo/presets.hpp"

using namespace zdgeo;

TEST_CASE("growth series for the standard square") {
  const MetricTable t = bfs_ball(preset_generators("std-d2"), 30);
  const GrowthSeries g = growth_series(t);
  for (int n = 1; n <= 30; ++n) {
    CHECK(g.sphere[n] == 4 * n);
    CHECK(g.ball[n] == 2 * n * n + 2 * n + 1);
    CHECK(g.sphere[n] == g.ball[n] - g.ball[n - 1]);
  }
  CHECK(g.ball[0] == 1);
}

TEST_CASE("growth series on the line") {
  const MetricTable t = bfs_ball(GeneratorSet::create(1, {{1}}, true), 40);
  const GrowthSeries g = growth_series(t);
  for (int n = 1; n <= 40; ++n) {
    CHECK(g.sphere[n] == 2);
    CHECK(g.ball[n] == 2 * n + 1);
  }
}

TEST_CASE("leading coefficient extraction") {
  std::vector<std::int64_t> linear(41);
  for (int n = 0; n <= 40; ++n) linear[n] = 4 * n;
  const LeadingCoefficient lin = leading_coefficient(linear, 1, 10, 40);
  CHECK(lin.estimate == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(lin.max_residual <= 1e-12);

  std::vector<std::int64_t> quad(61);
  for (int n = 0; n <= 60; ++n) quad[n] = 2 * n * n + 2 * n + 1;
  const LeadingCoefficient q = leading_coefficient(quad, 2, 20, 60);
  CHECK(std::abs(q.estimate - 2.0) < 0.01);

  CHECK_THROWS_AS(leading_coefficient(linear, 1, 10, 14), DegenerateWindowError);
}

TEST_CASE("measured growth matches the volume asymptotics") {
  const GeneratorSet knight = preset_generators("chess-knight");
  const MetricTable t = bfs_ball(knight, 120);
  const GrowthSeries g = growth_series(t);
  const LeadingCoefficient vb = leading_coefficient(g.ball, 2, 60, 120);
  const LeadingCoefficient vs = leading_coefficient(g.sphere, 1, 60, 120);
  CHECK(std::abs(vb.estimate - 14.0) <= 0.02 * 14.0);
  CHECK(std::abs(vs.estimate - 28.0) <= 0.02 * 28.0);
}

TEST_CASE("sector histogram for the standard square") {
  const GeneratorSet gens = preset_generators("std-d2");
  const MetricTable t = bfs_ball(gens, 12);
  const LimitShape shape = build_hull(gens);
  const SectorHistogram h = sector_histogram(t, shape, 10);
  CHECK(h.total == 40);
  CHECK(std::accumulate(h.counts.begin(), h.counts.end(), std::int64_t{0}) ==
        h.total);
  for (std::size_t f = 0; f < shape.facets.size(); ++f) {
    CHECK(std::abs(h.facet_counts[f] - 10) <= 2);
  }
}

TEST_CASE("sector histogram on the line splits evenly") {
  const GeneratorSet gens = GeneratorSet::create(1, {{1}, {2}}, true);
  const MetricTable t = bfs_ball(gens, 20);
  const LimitShape shape = build_hull(gens);
  for (int n = 2; n <= 10; ++n) {
    const SectorHistogram h = sector_histogram(t, shape, n);
    CHECK(h.counts[0] == h.counts[1]);
    CHECK(h.counts[0] + h.counts[1] == t.sphere_size(n));
  }
}

TEST_CASE("antipodal facets balance up to tie-broken points") {
  const GeneratorSet knight = preset_generators("chess-knight");
  const MetricTable t = bfs_ball(knight, 31);
  const LimitShape shape = build_hull(knight);
  for (int n : {30, 31}) {
    const SectorHistogram h = sector_histogram(t, shape, n);
    for (std::size_t f = 0; f < shape.facets.size(); ++f) {
      for (std::size_t g = 0; g < shape.facets.size(); ++g) {
        if (shape.facets[g].normal != negate(shape.facets[f].normal)) continue;
        CHECK(std::abs(h.facet_counts[f] - h.facet_counts[g]) <=
              h.facet_boundary[f] + h.facet_boundary[g]);
      }
    }
  }
}

TEST_CASE("measure convergence for the standard square") {
  const GeneratorSet gens = preset_generators("std-d2");
  const MetricTable t = bfs_ball(gens, 40);
  const LimitShape shape = build_hull(gens);
  const ConeMeasure measure = cone_measure(shape);
  std::vector<int> radii;
  for (int n = 4; n <= 40; n += 4) radii.push_back(n);
  const ConvergenceReport r = measure_convergence_report(t, shape, measure, radii);
  for (std::size_t i = 0; i < r.radii.size(); ++i) {
    // boundary tie-breaks move at most 2 points per side
    CHECK(r.facet_deviation[i] <= 2.0 / (4.0 * r.radii[i]) + 1e-12);
  }
  CHECK(r.trend_ok);
}

TEST_CASE("measure convergence is exact on the line") {
  const GeneratorSet gens = GeneratorSet::create(1, {{1}}, true);
  const MetricTable t = bfs_ball(gens, 20);
  const LimitShape shape = build_hull(gens);
  const ConeMeasure measure = cone_measure(shape);
  const ConvergenceReport r =
      measure_convergence_report(t, shape, measure, {2, 4, 6, 8, 10, 12});
  for (double dev : r.simplex_deviation) CHECK(dev == 0.0);
}

TEST_CASE("ball average of word length matches the closed form") {
  const MetricTable t = bfs_ball(preset_generators("std-d2"), 30);
  const Functional f = Functional::word_length_power(1);
  for (int n = 1; n <= 30; ++n) {
    const AverageValue v = ball_average(t, f, n);
    REQUIRE(v.exact);
    const Rational expected =
        Rational(4 * BigInt(n) * n * n + 6 * BigInt(n) * n + 2 * n,
                 6 * BigInt(n) * n + 6 * n + 3);
    CHECK(v.exact_value == expected);
  }
  // sphere average of word length is n on the nose
  for (int n = 1; n <= 30; ++n) {
    CHECK(sphere_average(t, f, n).exact_value == Rational(n));
  }
}

TEST_CASE("normalized gauge averages sit within K/n of 1") {
  const GeneratorSet knight = preset_generators("chess-knight");
  const MetricTable t = bfs_ball(knight, 40);
  const Functional f = Functional::l_norm_power(1);
  const AverageValue v = sphere_average(t, f, 40);
  REQUIRE(v.exact);
  CHECK(v.exact_value <= Rational(40));
  CHECK(v.exact_value > Rational(40 - 3));  // K = 3
}

TEST_CASE("coprime indicator over the unit sphere") {
  const MetricTable t = bfs_ball(preset_generators("std-d2"), 2);
  const AverageValue v =
      sphere_average(t, Functional::coprime_indicator(), 1);
  REQUIRE(v.exact);
  CHECK(v.exact_value == Rational(1));
}

TEST_CASE("limit integrals") {
  const LimitShape square = build_hull(preset_generators("std-d2"));
  const ConeMeasure measure = cone_measure(square);
  Rng rng(31337);

  const LimitIntegral norm_p =
      limit_integral(Functional::l_norm_power(3), square, measure, rng, 10);
  CHECK(norm_p.exact);
  CHECK(norm_p.exact_value == Rational(1));
  const LimitIntegral one =
      limit_integral(Functional::constant_one(), square, measure, rng, 10);
  CHECK(one.exact_value == Rational(1));
  const LimitIntegral word =
      limit_integral(Functional::word_length_power(2), square, measure, rng, 10);
  CHECK(word.exact_value == Rational(1));

  CHECK_THROWS_AS(limit_integral(Functional::coprime_indicator(), square,
                                 measure, rng, 10),
                  NotHomogeneousError);

  // Euclidean-norm integral against a quadrature oracle for one side of the
  // square: 4 * int_0^1 sqrt(t^2 + (1-t)^2) / 4 dt (sides are congruent).
  const int steps = 1 << 16;
  double oracle = 0.0;
  for (int i = 0; i < steps; ++i) {
    auto f = [](double t) { return std::sqrt(2 * t * t - 2 * t + 1); };
    const double a = static_cast<double>(i) / steps;
    const double b = static_cast<double>(i + 1) / steps;
    oracle += (f(a) + 4 * f(0.5 * (a + b)) + f(b)) * (b - a) / 6.0;
  }
  CHECK(oracle == doctest::Approx(0.8116).epsilon(1e-3));
  const LimitIntegral euclid = limit_integral(Functional::euclidean_power(1),
                                              square, measure, rng, 200000);
  CHECK(std::abs(euclid.value - oracle) <= 4 * euclid.standard_error);
}

TEST_CASE("sphere/ball factor") {
  const GeneratorSet gens = preset_generators("std-d2");
  const MetricTable t = bfs_ball(gens, 200);
  const LimitShape shape = build_hull(gens);

  const FactorCheck p1 =
      sphere_ball_factor_check(t, Functional::word_length_power(1), shape, 200);
  CHECK(p1.target == doctest::Approx(2.0 / 3.0));
  CHECK(std::abs(p1.ratio - p1.target) <= 0.01 * p1.target);

  const FactorCheck p2 =
      sphere_ball_factor_check(t, Functional::word_length_power(2), shape, 200);
  CHECK(p2.target == doctest::Approx(0.5));
  CHECK(std::abs(p2.ratio - p2.target) <= 0.01 * p2.target);

  const FactorCheck k0 =
      sphere_ball_factor_check(t, Functional::constant_one(), shape, 200);
  CHECK(k0.ratio == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(k0.target == 1.0);
}

namespace {

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n, m = n;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

}  // namespace

TEST_CASE("coprime sphere averages are totient ratios") {
  // On |x|+|y| = n the partner of k is n-k, so the sphere average collapses
  // to phi(n)/n for n >= 2. Independent oracle: direct totient computation.
  const MetricTable t = bfs_ball(preset_generators("std-d2"), 60);
  std::vector<int> radii;
  for (int n = 1; n <= 60; ++n) radii.push_back(n);
  const CoprimeDemo demo = coprimality_demo(t, radii);
  CHECK(demo.sphere_avg[0] == 1.0);  // all four unit-sphere points coprime
  for (std::size_t i = 1; i < demo.radii.size(); ++i) {
    const int n = demo.radii[i];
    const double expected =
        static_cast<double>(euler_phi(n)) / static_cast<double>(n);
    CHECK(demo.sphere_avg[i] == doctest::Approx(expected).epsilon(1e-12));
  }
  CHECK(demo.parity_gap > 0.05);

  const MetricTable t3 = bfs_ball(preset_generators("std-d3"), 2);
  CHECK_THROWS_AS(coprimality_demo(t3, {1, 2}), DimensionUnsupportedError);
}

TEST_CASE("simple spelling density targets") {
  const GeneratorSet std2 = preset_generators("std-d2");
  const MetricTable ts = bfs_ball(std2, 40);
  const SpellingDensity ds =
      simple_spelling_density(ts, build_hull(std2), 40);
  CHECK(ds.sphere_density == 1.0);
  CHECK(ds.ball_density == 1.0);
  CHECK(ds.target == Rational(1));

  const GeneratorSet knight = preset_generators("chess-knight");
  const MetricTable tk = bfs_ball(knight, 120);
  const SpellingDensity dk =
      simple_spelling_density(tk, build_hull(knight), 120);
  CHECK(dk.target == Rational(2, 7));
  CHECK(std::abs(dk.sphere_density - 2.0 / 7.0) <= 0.01);
  CHECK(std::abs(dk.ball_density - 2.0 / 7.0) <= 0.01);

  const GeneratorSet six = preset_generators("six-one-d2");
  const MetricTable t6 = bfs_ball(six, 120);
  const SpellingDensity d6 = simple_spelling_density(t6, build_hull(six), 120);
  CHECK(d6.target == Rational(1, 36));
  CHECK(std::abs(d6.sphere_density - 1.0 / 36.0) <= 0.01);

  // plausibility bound r/2A <= 1 for every planar preset
  for (const char* name : {"std-d2", "chess-knight", "six-one-d2"}) {
    const LimitShape shape = build_hull(preset_generators(name));
    CHECK(Rational(static_cast<std::int64_t>(shape.facets.size())) /
              (2 * shape.volume) <=
          Rational(1));
  }

  // d=3 reports measured densities without a target
  const GeneratorSet std3 = preset_generators("std-d3");
  const MetricTable t3 = bfs_ball(std3, 10);
  const SpellingDensity d3 = simple_spelling_density(t3, build_hull(std3), 10);
  CHECK_FALSE(d3.has_target);
  CHECK(d3.sphere_density > 0.0);
}

TEST_CASE("functional homogeneity orders") {
  CHECK(Functional::word_length_power(2).order() == 2);
  CHECK(Functional::euclidean_power(3).order() == 3);
  CHECK(Functional::coordinate_monomial({1, 2}).order() == 3);
  CHECK(Functional::coprime_indicator().order() == 0);
  CHECK(Functional::constant_one().order() == 0);
  // monomials scale like a^k on dilated test points
  const Functional mono = Functional::coordinate_monomial({2, 1});
  const Vec x{3, -2};
  auto eval = [&](const Vec& v) {
    return static_cast<double>(v[0]) * v[0] * v[1];
  };
  for (int a = 0; a <= 4; ++a) {
    CHECK(eval({a * x[0], a * x[1]}) ==
          doctest::Approx(std::pow(a, 3) * eval(x)));
  }
}
