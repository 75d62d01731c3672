#pragma once

#include <cstdint>
#include <vector>

#include "zdgeo/hull.hpp"
#include "zdgeo/metric.hpp"

namespace zdgeo {

// Growth function ball(n) = #B_n and spherical growth sphere(n) = #S_n.
struct GrowthSeries {
  std::vector<std::int64_t> ball;
  std::vector<std::int64_t> sphere;

  int radius() const { return static_cast<int>(ball.size()) - 1; }
};

GrowthSeries growth_series(const MetricTable& table);

struct LeadingCoefficient {
  double estimate = 0.0;      // constant term of seq(n)/n^k ~ c0 + c1/n
  double slope = 0.0;         // fitted c1
  double max_residual = 0.0;  // max |seq(n)/n^k - fit(n)| over the window
};

// Least-squares fit of seq(n)/n^degree against 1 + 1/n over [lo, hi].
// The window must contain at least 8 points.
LeadingCoefficient leading_coefficient(const std::vector<std::int64_t>& seq,
                                       int degree, int lo, int hi);

// Sphere points of radius n classified by the facet simplex whose sector
// contains them. boundary counts points that sat on a shared sector wall and
// were tie-broken to the lowest simplex index.
struct SectorHistogram {
  int radius = 0;
  std::vector<std::int64_t> counts;        // per facet simplex
  std::vector<std::int64_t> facet_counts;  // per facet
  std::vector<std::int64_t> facet_boundary;  // tie-broken points per facet
  std::int64_t total = 0;
};

SectorHistogram sector_histogram(const MetricTable& table,
                                 const LimitShape& shape, int n);

// Per-radius sup deviation between the empirical sphere measure and cone
// measure, at simplex and at facet granularity, plus the quartile-median
// trend summary (medians of D over the first vs last quartile of radii).
struct ConvergenceReport {
  std::vector<int> radii;
  std::vector<double> simplex_deviation;
  std::vector<double> facet_deviation;
  double first_quartile_median = 0.0;
  double last_quartile_median = 0.0;
  bool trend_ok = false;
};

ConvergenceReport measure_convergence_report(const MetricTable& table,
                                             const LimitShape& shape,
                                             const ConeMeasure& measure,
                                             const std::vector<int>& radii);

}  // namespace zdgeo
