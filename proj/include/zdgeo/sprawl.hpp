#pragma once

#include <cstdint>
#include <string>

#include "zdgeo/hull.hpp"
#include "zdgeo/metric.hpp"
#include "zdgeo/sampling.hpp"

namespace zdgeo {

// Sprawl statistic E(Z^d, S): limiting average of d(x, y)/n over pairs on the
// sphere of radius n. Always in [0, 2].
struct SprawlEstimate {
  double value = 0.0;
  enum class Method { EmpiricalExhaustive, EmpiricalSampled, MonteCarlo } method =
      Method::MonteCarlo;
  std::int64_t count = 0;  // pairs or samples
  double standard_error = 0.0;
  // Empirical runs fall back to the gauge for pair differences outside the
  // table; the induced error is below K/n after normalization.
  bool used_norm_fallback = false;

  std::string method_name() const;
};

struct SprawlConfig {
  int radius = 60;
  std::int64_t pair_budget = 1'000'000;
  std::int64_t samples = 1'000'000;
  std::uint64_t seed = 0;
  double margin = 0.05;  // strict-inequality margin for E < 2
  int threads = 1;
  std::int64_t batch_size = 1 << 16;
};

// Double sum over S_n x S_n when it fits the pair budget, otherwise that many
// uniformly sampled pairs with a standard error.
SprawlEstimate sprawl_empirical(const MetricTable& table, int n,
                                std::int64_t pair_budget, Rng& rng);

// Monte Carlo integral of ||x - y||_L over cone-measure pairs. Batches with
// derived per-batch seeds reduce in batch order, so the result is the same
// for any thread count. d = 1 degenerates to an exact two-atom sum.
SprawlEstimate sprawl_mc(const LimitShape& shape, const ConeMeasure& measure,
                         std::int64_t samples, Rng& rng, int threads = 1,
                         std::int64_t batch_size = 1 << 16);

struct SprawlComparison {
  SprawlEstimate empirical;
  SprawlEstimate monte_carlo;
  double difference = 0.0;
  double combined_sigma = 0.0;
  double margin = 0.0;
  bool below_two = false;  // both estimates < 2 - margin
};

SprawlComparison sprawl_report(const LimitShape& shape,
                               const ConeMeasure& measure,
                               const MetricTable& table,
                               const SprawlConfig& config);

}  // namespace zdgeo
