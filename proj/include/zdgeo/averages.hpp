#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zdgeo/growth.hpp"
#include "zdgeo/hull.hpp"
#include "zdgeo/metric.hpp"
#include "zdgeo/sampling.hpp"

namespace zdgeo {

enum class FunctionalKind {
  WordLengthPower,     // |x|^p, homogeneous order p (asymptotically)
  LNormPower,          // ||x||_L^p, order p
  EuclideanPower,      // |x|_2^p, order p
  CoordinateMonomial,  // prod x_i^{e_i}, order sum e_i
  CoprimeIndicator,    // gcd of coordinates = 1; order 0, not homogeneous
  ConstantOne,         // order 0
};

struct Functional {
  FunctionalKind kind = FunctionalKind::ConstantOne;
  int power = 1;
  std::vector<int> exponents;

  static Functional word_length_power(int p);
  static Functional l_norm_power(int p);
  static Functional euclidean_power(int p);
  static Functional coordinate_monomial(std::vector<int> exponents);
  static Functional coprime_indicator();
  static Functional constant_one();
  static Functional parse(const std::string& name, int power);

  int order() const;
  // Exact rational evaluation is available except for odd Euclidean powers.
  bool rational_valued() const;
  std::string name() const;
};

struct AverageValue {
  bool exact = false;
  Rational exact_value;
  double value = 0.0;
};

AverageValue sphere_average(const MetricTable& table, const Functional& f,
                            int n);
AverageValue ball_average(const MetricTable& table, const Functional& f,
                          int n);

struct LimitIntegral {
  bool exact = false;
  Rational exact_value;
  double value = 0.0;
  double standard_error = 0.0;
  std::int64_t samples = 0;
};

// v = integral of the homogenized functional over L against cone measure.
// Exact for gauge powers and the constant (both integrate to 1); Monte Carlo
// with a reported standard error otherwise. The coprime indicator has no
// homogenization and is rejected.
LimitIntegral limit_integral(const Functional& f, const LimitShape& shape,
                             const ConeMeasure& measure, Rng& rng,
                             std::int64_t samples);

struct FactorCheck {
  double ball_normalized = 0.0;    // ball average / n^k
  double sphere_normalized = 0.0;  // sphere average / n^k
  double ratio = 0.0;
  double target = 0.0;  // d / (d + k)
  double deviation = 0.0;
};

FactorCheck sphere_ball_factor_check(const MetricTable& table,
                                     const Functional& f,
                                     const LimitShape& shape, int n);

// Ball and sphere averages of the coprime indicator. Sphere averages have no
// limit; the witness reported here is the persistent gap between the odd-n
// and even-n parity classes over the requested radii.
struct CoprimeDemo {
  std::vector<int> radii;
  std::vector<double> ball_avg;
  std::vector<double> sphere_avg;
  double even_mean = 0.0;
  double odd_mean = 0.0;
  double parity_gap = 0.0;  // odd_mean - even_mean
};

CoprimeDemo coprimality_demo(const MetricTable& table,
                             const std::vector<int>& radii);

struct SpellingDensity {
  double sphere_density = 0.0;
  double ball_density = 0.0;
  std::int64_t sphere_hits = 0;
  std::int64_t ball_hits = 0;
  bool has_target = false;
  Rational target;  // r / 2A, planar shapes only
};

SpellingDensity simple_spelling_density(const MetricTable& table,
                                        const LimitShape& shape, int n);

}  // namespace zdgeo
