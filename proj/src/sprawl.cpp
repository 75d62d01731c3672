#include "zdgeo/sprawl.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace zdgeo {

std::string SprawlEstimate::method_name() const {
  switch (method) {
    case Method::EmpiricalExhaustive:
      return "empirical-exhaustive";
    case Method::EmpiricalSampled:
      return "empirical-sampled";
    case Method::MonteCarlo:
      return "monte-carlo";
  }
  return "?";
}

namespace {

// d(x,y)/n with the table when the difference is stored, else the gauge.
struct PairDistance {
  const MetricTable* table;
  const LimitShape* shape;
  bool fallback_used = false;

  double operator()(const Vec& x, const Vec& y, int n) {
    Vec diff(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) diff[j] = x[j] - y[j];
    if (auto len = table->length_of(diff)) {
      return static_cast<double>(*len) / n;
    }
    fallback_used = true;
    const auto [p, q] = minkowski_norm_fraction(*shape, diff);
    return static_cast<double>(p) / (static_cast<double>(q) * n);
  }
};

}  // namespace

SprawlEstimate sprawl_empirical(const MetricTable& table, int n,
                                std::int64_t pair_budget, Rng& rng) {
  if (n < 1 || n > table.radius()) throw ConfigError("radius out of range");
  if (pair_budget < 1) throw ConfigError("pair budget must be positive");
  const std::int64_t sz = table.sphere_size(n);
  const LimitShape shape = build_hull(table.gens());
  PairDistance dist{&table, &shape};

  SprawlEstimate est;
  if (sz * sz <= pair_budget) {
    est.method = SprawlEstimate::Method::EmpiricalExhaustive;
    est.count = sz * sz;
    double sum = 0.0;
    Vec x, y;
    for (std::int64_t i = 0; i < sz; ++i) {
      table.sphere_point(n, i, x);
      for (std::int64_t j = 0; j < sz; ++j) {
        table.sphere_point(n, j, y);
        sum += dist(x, y, n);
      }
    }
    est.value = sum / static_cast<double>(est.count);
    est.standard_error = 0.0;
  } else {
    est.method = SprawlEstimate::Method::EmpiricalSampled;
    est.count = pair_budget;
    double sum = 0.0, sumsq = 0.0;
    Vec x, y;
    for (std::int64_t i = 0; i < pair_budget; ++i) {
      const std::int64_t a =
          static_cast<std::int64_t>(rng.next_double() * static_cast<double>(sz));
      const std::int64_t b =
          static_cast<std::int64_t>(rng.next_double() * static_cast<double>(sz));
      table.sphere_point(n, std::min(a, sz - 1), x);
      table.sphere_point(n, std::min(b, sz - 1), y);
      const double v = dist(x, y, n);
      sum += v;
      sumsq += v * v;
    }
    est.value = sum / static_cast<double>(pair_budget);
    const double var =
        std::max(0.0, sumsq / pair_budget - est.value * est.value);
    est.standard_error = std::sqrt(var / static_cast<double>(pair_budget));
  }
  est.used_norm_fallback = dist.fallback_used;
  return est;
}

SprawlEstimate sprawl_mc(const LimitShape& shape, const ConeMeasure& measure,
                         std::int64_t samples, Rng& rng, int threads,
                         std::int64_t batch_size) {
  if (samples < 2) throw ConfigError("sprawl needs at least 2 samples");
  SprawlEstimate est;
  est.method = SprawlEstimate::Method::MonteCarlo;
  est.count = samples;

  if (shape.dim == 1) {
    // Two atoms of weight 1/2 at +-a: the integral collapses to an exact sum.
    Rational exact = 0;
    for (int i = 0; i < shape.simplex_count(); ++i) {
      for (int j = 0; j < shape.simplex_count(); ++j) {
        const Vec diff = sub(shape.vertices[shape.simplex(i)[0]],
                             shape.vertices[shape.simplex(j)[0]]);
        exact += measure.weights[i] * measure.weights[j] *
                 minkowski_norm(shape, diff);
      }
    }
    est.value = to_double(exact);
    est.standard_error = 0.0;
    return est;
  }

  const std::uint64_t base_seed = rng.next_u64();
  const std::int64_t nbatches = (samples + batch_size - 1) / batch_size;
  struct Batch {
    double sum = 0.0;
    double sumsq = 0.0;
  };
  std::vector<Batch> results(nbatches);
  ConeSampler sampler(shape, measure);

  auto run_range = [&](std::int64_t lo, std::int64_t hi) {
    std::vector<double> x, y;
    for (std::int64_t b = lo; b < hi; ++b) {
      Rng local(Rng::derive_seed(base_seed, static_cast<std::uint64_t>(b)));
      const std::int64_t want =
          std::min(batch_size, samples - b * batch_size);
      double sum = 0.0, sumsq = 0.0;
      for (std::int64_t i = 0; i < want; ++i) {
        sampler.sample(local, x);
        sampler.sample(local, y);
        for (int j = 0; j < shape.dim; ++j) x[j] -= y[j];
        const double v = minkowski_norm_real(shape, x);
        sum += v;
        sumsq += v * v;
      }
      results[b] = {sum, sumsq};
    }
  };

  threads = std::max(1, threads);
  if (threads == 1 || nbatches == 1) {
    run_range(0, nbatches);
  } else {
    std::vector<std::thread> pool;
    const std::int64_t per = (nbatches + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const std::int64_t lo = t * per;
      const std::int64_t hi = std::min<std::int64_t>(nbatches, lo + per);
      if (lo >= hi) break;
      pool.emplace_back(run_range, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  double sum = 0.0, sumsq = 0.0;
  for (const Batch& b : results) {  // fixed order: deterministic reduction
    sum += b.sum;
    sumsq += b.sumsq;
  }
  est.value = sum / static_cast<double>(samples);
  const double var = std::max(0.0, sumsq / samples - est.value * est.value);
  est.standard_error = std::sqrt(var / static_cast<double>(samples));
  return est;
}

SprawlComparison sprawl_report(const LimitShape& shape,
                               const ConeMeasure& measure,
                               const MetricTable& table,
                               const SprawlConfig& config) {
  SprawlComparison cmp;
  Rng rng_emp(Rng::derive_seed(config.seed, 0));
  Rng rng_mc(Rng::derive_seed(config.seed, 1));
  cmp.empirical =
      sprawl_empirical(table, config.radius, config.pair_budget, rng_emp);
  cmp.monte_carlo = sprawl_mc(shape, measure, config.samples, rng_mc,
                              config.threads, config.batch_size);
  cmp.difference = std::abs(cmp.empirical.value - cmp.monte_carlo.value);
  cmp.combined_sigma =
      std::sqrt(cmp.empirical.standard_error * cmp.empirical.standard_error +
                cmp.monte_carlo.standard_error * cmp.monte_carlo.standard_error);
  cmp.margin = config.margin;
  cmp.below_two = cmp.empirical.value < 2.0 - config.margin &&
                  cmp.monte_carlo.value < 2.0 - config.margin;
  return cmp;
}

}  // namespace zdgeo
