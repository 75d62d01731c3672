#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "zdgeo/hull.hpp"

namespace zdgeo {

// Deterministic random source. mt19937_64 is pinned by the standard, and the
// uniform/exponential transforms are hand-rolled so streams are reproducible
// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Standard exponential via inversion; never returns infinity.
  double next_exponential() {
    double u;
    do {
      u = next_double();
    } while (u <= 0.0);
    return -std::log(u);
  }

  // Decorrelated seed for batch/stream `index` derived from `base`.
  static std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

 private:
  std::mt19937_64 eng_;
};

// Point of L drawn from cone measure: a facet simplex is chosen with its
// exact weight, then a uniform point of that simplex via normalized
// exponential barycentric coordinates. The result satisfies ||x||_L = 1 up to
// 1e-12 in double arithmetic.
std::vector<double> sample_cone_measure(const ConeMeasure& measure,
                                        const LimitShape& shape, Rng& rng);

// Precomputed sampler for tight loops (cumulative weights cached once).
class ConeSampler {
 public:
  ConeSampler(const LimitShape& shape, const ConeMeasure& measure);
  void sample(Rng& rng, std::vector<double>& out) const;

 private:
  const LimitShape* shape_;
  std::vector<double> cumulative_;
};

// Gauge ||x||_L of a real point, in double arithmetic.
double minkowski_norm_real(const LimitShape& shape, const std::vector<double>& x);

}  // namespace zdgeo
