#include "zdgeo/growth.hpp"

#include <algorithm>
#include <cmath>

namespace zdgeo {

GrowthSeries growth_series(const MetricTable& table) {
  GrowthSeries g;
  for (int n = 0; n <= table.radius(); ++n) {
    g.sphere.push_back(table.sphere_size(n));
    g.ball.push_back(table.ball_size(n));
  }
  return g;
}

LeadingCoefficient leading_coefficient(const std::vector<std::int64_t>& seq,
                                       int degree, int lo, int hi) {
  if (lo < 1) lo = 1;  // n = 0 cannot be normalized
  if (hi >= static_cast<int>(seq.size()) || hi - lo + 1 < 8) {
    throw DegenerateWindowError("fit window needs at least 8 in-range points");
  }

  // Normal equations for y = c0 + c1 * (1/n).
  double s1 = 0, sx = 0, sxx = 0, sy = 0, sxy = 0;
  for (int n = lo; n <= hi; ++n) {
    const double x = 1.0 / n;
    const double y = static_cast<double>(seq[n]) / std::pow(n, degree);
    s1 += 1;
    sx += x;
    sxx += x * x;
    sy += y;
    sxy += x * y;
  }
  const double det = s1 * sxx - sx * sx;
  if (det == 0) throw DegenerateWindowError("fit window is degenerate");
  LeadingCoefficient out;
  out.estimate = (sy * sxx - sx * sxy) / det;
  out.slope = (s1 * sxy - sx * sy) / det;
  for (int n = lo; n <= hi; ++n) {
    const double y = static_cast<double>(seq[n]) / std::pow(n, degree);
    const double fit = out.estimate + out.slope / n;
    out.max_residual = std::max(out.max_residual, std::abs(y - fit));
  }
  return out;
}

SectorHistogram sector_histogram(const MetricTable& table,
                                 const LimitShape& shape, int n) {
  if (n < 1 || n > table.radius()) throw ConfigError("radius out of range");
  SectorHistogram h;
  h.radius = n;
  h.counts.assign(shape.simplex_count(), 0);
  h.facet_counts.assign(shape.facets.size(), 0);
  h.facet_boundary.assign(shape.facets.size(), 0);
  table.for_each_sphere_point(n, [&](const Vec& x) {
    bool tied = false;
    const int g = sector_of(shape, x, &tied);
    ++h.counts[g];
    const int f = shape.facet_of_simplex(g);
    ++h.facet_counts[f];
    if (tied) ++h.facet_boundary[f];
    ++h.total;
  });
  return h;
}

namespace {

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

}  // namespace

ConvergenceReport measure_convergence_report(const MetricTable& table,
                                             const LimitShape& shape,
                                             const ConeMeasure& measure,
                                             const std::vector<int>& radii) {
  ConvergenceReport report;
  std::vector<double> simplex_target, facet_target;
  for (const Rational& w : measure.weights) simplex_target.push_back(to_double(w));
  for (const Rational& w : measure.facet_weights) {
    facet_target.push_back(to_double(w));
  }

  for (int n : radii) {
    const SectorHistogram h = sector_histogram(table, shape, n);
    double ds = 0.0, df = 0.0;
    for (std::size_t g = 0; g < h.counts.size(); ++g) {
      ds = std::max(ds, std::abs(static_cast<double>(h.counts[g]) / h.total -
                                 simplex_target[g]));
    }
    for (std::size_t f = 0; f < h.facet_counts.size(); ++f) {
      df = std::max(df, std::abs(static_cast<double>(h.facet_counts[f]) / h.total -
                                 facet_target[f]));
    }
    report.radii.push_back(n);
    report.simplex_deviation.push_back(ds);
    report.facet_deviation.push_back(df);
  }

  const std::size_t count = report.radii.size();
  const std::size_t quartile = std::max<std::size_t>(1, count / 4);
  std::vector<double> first(report.simplex_deviation.begin(),
                            report.simplex_deviation.begin() + quartile);
  std::vector<double> last(report.simplex_deviation.end() - quartile,
                           report.simplex_deviation.end());
  report.first_quartile_median = median(std::move(first));
  report.last_quartile_median = median(std::move(last));
  report.trend_ok = report.last_quartile_median <= report.first_quartile_median;
  return report;
}

}  // namespace zdgeo
