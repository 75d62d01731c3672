#include "zdgeo/sampling.hpp"

#include <cmath>

namespace zdgeo {

std::uint64_t Rng::derive_seed(std::uint64_t base, std::uint64_t index) {
  // splitmix64 step on base + golden-ratio stride
  std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

ConeSampler::ConeSampler(const LimitShape& shape, const ConeMeasure& measure)
    : shape_(&shape) {
  if (static_cast<int>(measure.weights.size()) != shape.simplex_count()) {
    throw DimensionMismatchError("measure does not match the shape");
  }
  if (shape.dim > 16) {
    throw DimensionUnsupportedError("sampler supports dimension up to 16");
  }
  double acc = 0.0;
  cumulative_.reserve(measure.weights.size());
  for (const Rational& w : measure.weights) {
    acc += to_double(w);
    cumulative_.push_back(acc);
  }
  if (!cumulative_.empty()) cumulative_.back() = 1.0;
}

void ConeSampler::sample(Rng& rng, std::vector<double>& out) const {
  const LimitShape& shape = *shape_;
  const int d = shape.dim;
  const double u = rng.next_double();
  int g = 0;
  while (g + 1 < static_cast<int>(cumulative_.size()) && cumulative_[g] <= u) {
    ++g;
  }
  const std::vector<int>& simplex = shape.simplex(g);

  double bary[16];
  double total = 0.0;
  for (int i = 0; i < d; ++i) {
    bary[i] = rng.next_exponential();
    total += bary[i];
  }
  out.assign(d, 0.0);
  for (int i = 0; i < d; ++i) {
    const double b = bary[i] / total;
    const Vec& v = shape.vertices[simplex[i]];
    for (int j = 0; j < d; ++j) out[j] += b * static_cast<double>(v[j]);
  }
}

std::vector<double> sample_cone_measure(const ConeMeasure& measure,
                                        const LimitShape& shape, Rng& rng) {
  ConeSampler sampler(shape, measure);
  std::vector<double> out;
  sampler.sample(rng, out);
  return out;
}

double minkowski_norm_real(const LimitShape& shape,
                           const std::vector<double>& x) {
  double best = 0.0;
  for (const Facet& f : shape.facets) {
    double num = 0.0;
    for (int j = 0; j < shape.dim; ++j) {
      num += static_cast<double>(f.normal[j]) * x[j];
    }
    best = std::max(best, num / static_cast<double>(f.support));
  }
  return best;
}

}  // namespace zdgeo
