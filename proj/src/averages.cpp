#include "zdgeo/averages.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace zdgeo {

Functional Functional::word_length_power(int p) {
  return {FunctionalKind::WordLengthPower, p, {}};
}
Functional Functional::l_norm_power(int p) {
  return {FunctionalKind::LNormPower, p, {}};
}
Functional Functional::euclidean_power(int p) {
  return {FunctionalKind::EuclideanPower, p, {}};
}
Functional Functional::coordinate_monomial(std::vector<int> exponents) {
  return {FunctionalKind::CoordinateMonomial, 1, std::move(exponents)};
}
Functional Functional::coprime_indicator() {
  return {FunctionalKind::CoprimeIndicator, 0, {}};
}
Functional Functional::constant_one() {
  return {FunctionalKind::ConstantOne, 0, {}};
}

Functional Functional::parse(const std::string& name, int power) {
  if (name == "word-length") return word_length_power(power);
  if (name == "l-norm") return l_norm_power(power);
  if (name == "euclidean") return euclidean_power(power);
  if (name == "coprime") return coprime_indicator();
  if (name == "one") return constant_one();
  throw ConfigError("unknown functional: " + name);
}

int Functional::order() const {
  switch (kind) {
    case FunctionalKind::WordLengthPower:
    case FunctionalKind::LNormPower:
    case FunctionalKind::EuclideanPower:
      return power;
    case FunctionalKind::CoordinateMonomial:
      return std::accumulate(exponents.begin(), exponents.end(), 0);
    case FunctionalKind::CoprimeIndicator:
    case FunctionalKind::ConstantOne:
      return 0;
  }
  return 0;
}

bool Functional::rational_valued() const {
  if (kind == FunctionalKind::EuclideanPower) return power % 2 == 0;
  return true;
}

std::string Functional::name() const {
  switch (kind) {
    case FunctionalKind::WordLengthPower:
      return "word-length^" + std::to_string(power);
    case FunctionalKind::LNormPower:
      return "l-norm^" + std::to_string(power);
    case FunctionalKind::EuclideanPower:
      return "euclidean^" + std::to_string(power);
    case FunctionalKind::CoordinateMonomial:
      return "monomial";
    case FunctionalKind::CoprimeIndicator:
      return "coprime";
    case FunctionalKind::ConstantOne:
      return "one";
  }
  return "?";
}

namespace {

bool coords_coprime(const Vec& x) {
  std::int64_t g = 0;
  for (std::int64_t c : x) g = std::gcd(g, c);
  return g == 1;
}

BigInt int_pow(BigInt base, int p) {
  BigInt acc = 1;
  for (int i = 0; i < p; ++i) acc *= base;
  return acc;
}

// Exact or floating accumulation of f over one sphere. Exact sums land in
// rat_sum (as a Rational), floating ones in real_sum.
struct SphereSum {
  Rational rat_sum;
  double real_sum = 0.0;
  std::int64_t count = 0;
};

SphereSum sum_over_sphere(const MetricTable& table, const Functional& f,
                          const LimitShape* shape, int n) {
  SphereSum s;
  s.count = table.sphere_size(n);
  switch (f.kind) {
    case FunctionalKind::ConstantOne:
      s.rat_sum = s.count;
      return s;
    case FunctionalKind::WordLengthPower:
      // every point of S_n has word length exactly n
      s.rat_sum = Rational(int_pow(n, f.power) * s.count);
      return s;
    case FunctionalKind::CoprimeIndicator: {
      std::int64_t hits = 0;
      table.for_each_sphere_point(n, [&](const Vec& x) {
        if (coords_coprime(x)) ++hits;
      });
      s.rat_sum = hits;
      return s;
    }
    case FunctionalKind::LNormPower: {
      Rational acc = 0;
      table.for_each_sphere_point(n, [&](const Vec& x) {
        const auto [p, q] = minkowski_norm_fraction(*shape, x);
        acc += Rational(int_pow(p, f.power), int_pow(q, f.power));
      });
      s.rat_sum = std::move(acc);
      return s;
    }
    case FunctionalKind::EuclideanPower: {
      if (f.power % 2 == 0) {
        BigInt acc = 0;
        table.for_each_sphere_point(n, [&](const Vec& x) {
          acc += int_pow(dot(x, x), f.power / 2);
        });
        s.rat_sum = Rational(acc);
      } else {
        double acc = 0.0;
        table.for_each_sphere_point(n, [&](const Vec& x) {
          acc += std::pow(std::sqrt(static_cast<double>(dot(x, x))), f.power);
        });
        s.real_sum = acc;
      }
      return s;
    }
    case FunctionalKind::CoordinateMonomial: {
      BigInt acc = 0;
      table.for_each_sphere_point(n, [&](const Vec& x) {
        BigInt term = 1;
        for (std::size_t i = 0; i < f.exponents.size(); ++i) {
          term *= int_pow(x[i], f.exponents[i]);
        }
        acc += term;
      });
      s.rat_sum = Rational(acc);
      return s;
    }
  }
  return s;
}

bool needs_shape(const Functional& f) {
  return f.kind == FunctionalKind::LNormPower;
}

AverageValue average_impl(const MetricTable& table, const Functional& f, int n,
                          bool over_ball) {
  if (n < 0 || n > table.radius()) throw ConfigError("radius out of range");
  if (f.kind == FunctionalKind::CoordinateMonomial &&
      static_cast<int>(f.exponents.size()) != table.dim()) {
    throw DimensionMismatchError("monomial exponent count differs from dim");
  }
  LimitShape shape;
  if (needs_shape(f)) shape = build_hull(table.gens());
  const LimitShape* sp = needs_shape(f) ? &shape : nullptr;

  AverageValue out;
  if (f.rational_valued()) {
    Rational total = 0;
    std::int64_t count = 0;
    for (int j = over_ball ? 0 : n; j <= n; ++j) {
      SphereSum s = sum_over_sphere(table, f, sp, j);
      total += s.rat_sum;
      count += s.count;
    }
    out.exact = true;
    out.exact_value = total / count;
    out.value = to_double(out.exact_value);
  } else {
    double total = 0.0;
    std::int64_t count = 0;
    for (int j = over_ball ? 0 : n; j <= n; ++j) {
      SphereSum s = sum_over_sphere(table, f, sp, j);
      total += s.real_sum;
      count += s.count;
    }
    out.value = total / static_cast<double>(count);
  }
  return out;
}

}  // namespace

AverageValue sphere_average(const MetricTable& table, const Functional& f,
                            int n) {
  return average_impl(table, f, n, false);
}

AverageValue ball_average(const MetricTable& table, const Functional& f,
                          int n) {
  return average_impl(table, f, n, true);
}

LimitIntegral limit_integral(const Functional& f, const LimitShape& shape,
                             const ConeMeasure& measure, Rng& rng,
                             std::int64_t samples) {
  LimitIntegral out;
  switch (f.kind) {
    case FunctionalKind::CoprimeIndicator:
      throw NotHomogeneousError(
          "the coprime indicator is not asymptotically homogeneous");
    case FunctionalKind::ConstantOne:
    case FunctionalKind::WordLengthPower:  // homogenization is the gauge power
    case FunctionalKind::LNormPower:       // gauge is identically 1 on L
      out.exact = true;
      out.exact_value = 1;
      out.value = 1.0;
      return out;
    case FunctionalKind::EuclideanPower:
    case FunctionalKind::CoordinateMonomial:
      break;
  }
  if (f.kind == FunctionalKind::CoordinateMonomial &&
      static_cast<int>(f.exponents.size()) != shape.dim) {
    throw DimensionMismatchError("monomial exponent count differs from dim");
  }
  if (samples < 2) throw ConfigError("limit integral needs at least 2 samples");
  ConeSampler sampler(shape, measure);
  std::vector<double> x;
  double sum = 0.0, sumsq = 0.0;
  for (std::int64_t i = 0; i < samples; ++i) {
    sampler.sample(rng, x);
    double g;
    if (f.kind == FunctionalKind::EuclideanPower) {
      double sq = 0.0;
      for (double c : x) sq += c * c;
      g = std::pow(std::sqrt(sq), f.power);
    } else {
      g = 1.0;
      for (std::size_t i2 = 0; i2 < f.exponents.size(); ++i2) {
        g *= std::pow(x[i2], f.exponents[i2]);
      }
    }
    sum += g;
    sumsq += g * g;
  }
  out.samples = samples;
  out.value = sum / samples;
  const double var =
      std::max(0.0, sumsq / samples - out.value * out.value);
  out.standard_error = std::sqrt(var / samples);
  return out;
}

FactorCheck sphere_ball_factor_check(const MetricTable& table,
                                     const Functional& f,
                                     const LimitShape& shape, int n) {
  if (f.kind == FunctionalKind::CoprimeIndicator) {
    throw NotHomogeneousError("factor check needs a homogeneous functional");
  }
  const int k = f.order();
  const double scale = std::pow(static_cast<double>(n), k);
  FactorCheck out;
  out.ball_normalized = ball_average(table, f, n).value / scale;
  out.sphere_normalized = sphere_average(table, f, n).value / scale;
  out.ratio = out.ball_normalized / out.sphere_normalized;
  out.target = static_cast<double>(shape.dim) / (shape.dim + k);
  out.deviation = std::abs(out.ratio - out.target);
  return out;
}

CoprimeDemo coprimality_demo(const MetricTable& table,
                             const std::vector<int>& radii) {
  if (table.dim() != 2) {
    throw DimensionUnsupportedError("coprimality demo is planar");
  }
  if (radii.empty()) throw ConfigError("no radii requested");
  const int top = *std::max_element(radii.begin(), radii.end());
  if (top > table.radius()) throw ConfigError("radius out of range");

  std::vector<std::int64_t> sphere_hits(top + 1, 0);
  for (int n = 0; n <= top; ++n) {
    std::int64_t hits = 0;
    table.for_each_sphere_point(n, [&](const Vec& x) {
      if (coords_coprime(x)) ++hits;
    });
    sphere_hits[n] = hits;
  }
  std::vector<std::int64_t> ball_hits(top + 1, 0);
  std::int64_t acc = 0;
  for (int n = 0; n <= top; ++n) {
    acc += sphere_hits[n];
    ball_hits[n] = acc;
  }

  CoprimeDemo demo;
  double even_sum = 0, odd_sum = 0;
  int even_n = 0, odd_n = 0;
  for (int n : radii) {
    const double s = table.sphere_size(n) == 0
                         ? 0.0
                         : static_cast<double>(sphere_hits[n]) /
                               static_cast<double>(table.sphere_size(n));
    const double b = static_cast<double>(ball_hits[n]) /
                     static_cast<double>(table.ball_size(n));
    demo.radii.push_back(n);
    demo.sphere_avg.push_back(s);
    demo.ball_avg.push_back(b);
    if (n < 1) continue;
    if (n % 2 == 0) {
      even_sum += s;
      ++even_n;
    } else {
      odd_sum += s;
      ++odd_n;
    }
  }
  if (even_n > 0) demo.even_mean = even_sum / even_n;
  if (odd_n > 0) demo.odd_mean = odd_sum / odd_n;
  demo.parity_gap = demo.odd_mean - demo.even_mean;
  return demo;
}

SpellingDensity simple_spelling_density(const MetricTable& table,
                                        const LimitShape& shape, int n) {
  if (n < 1 || n > table.radius()) throw ConfigError("radius out of range");
  SpellingDensity out;
  std::int64_t ball_hits = 0;
  std::int64_t sphere_hits = 0;
  for (int j = 0; j <= n; ++j) {
    std::int64_t hits = 0;
    table.for_each_sphere_point(j, [&](const Vec& x) {
      if (has_simple_spelling(shape, x)) ++hits;
    });
    ball_hits += hits;
    if (j == n) sphere_hits = hits;
  }
  out.sphere_hits = sphere_hits;
  out.ball_hits = ball_hits;
  out.sphere_density = static_cast<double>(sphere_hits) /
                       static_cast<double>(table.sphere_size(n));
  out.ball_density = static_cast<double>(ball_hits) /
                     static_cast<double>(table.ball_size(n));
  if (shape.dim == 2) {
    out.has_target = true;
    out.target = Rational(static_cast<std::int64_t>(shape.facets.size())) /
                 (2 * shape.volume);
  }
  return out;
}

}  // namespace zdgeo
