#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "zdgeo/hull.hpp"
#include "zdgeo/lattice.hpp"

namespace zdgeo {

struct BfsOptions {
  // Stored-point budget. bfs_ball fails fast with CapacityExceededError
  // instead of thrashing once the table would outgrow this.
  std::int64_t max_points = 200'000'000;
  // Testing hook: skip the dense-array fast path even when the bounding box
  // fits. Both storage layouts must produce identical tables.
  bool force_sparse = false;
};

// Exact word lengths |w| for the ball of radius N, with per-radius sphere
// lists in lexicographic order. Immutable once built.
class MetricTable {
 public:
  const GeneratorSet& gens() const { return gens_; }
  int dim() const { return gens_.dim(); }
  int radius() const { return radius_; }

  std::int64_t sphere_size(int n) const {
    return static_cast<std::int64_t>(sphere_pts_[n].size()) / dim();
  }
  std::int64_t ball_size(int n) const { return ball_sizes_[n]; }

  // Fills out with sphere point i of radius n (lexicographic order).
  void sphere_point(int n, std::int64_t i, Vec& out) const;

  template <class F>
  void for_each_sphere_point(int n, F&& fn) const {
    const int d = dim();
    Vec x(d);
    const auto& flat = sphere_pts_[n];
    for (std::size_t off = 0; off < flat.size(); off += d) {
      for (int j = 0; j < d; ++j) x[j] = flat[off + j];
      fn(x);
    }
  }

  std::optional<int> length_of(const Vec& w) const;
  bool dense_storage() const { return dense_; }

  // Raw sphere data, used by the binary cache.
  const std::vector<std::vector<std::int32_t>>& raw_spheres() const {
    return sphere_pts_;
  }
  static MetricTable from_spheres(GeneratorSet gens, int radius,
                                  std::vector<std::vector<std::int32_t>> spheres,
                                  const BfsOptions& opts = {});

  struct VecHash {
    std::size_t operator()(const std::vector<std::int32_t>& v) const {
      std::size_t h = 1469598103934665603ull;
      for (std::int32_t c : v) {
        h ^= static_cast<std::uint32_t>(c);
        h *= 1099511628211ull;
      }
      return h;
    }
  };

 private:
  friend MetricTable bfs_ball(const GeneratorSet&, int, const BfsOptions&);

  MetricTable(GeneratorSet gens, int radius)
      : gens_(std::move(gens)), radius_(radius) {}
  void init_storage(const BfsOptions& opts);
  void finalize();

  GeneratorSet gens_;
  int radius_ = 0;
  std::vector<std::vector<std::int32_t>> sphere_pts_;  // flat coords per radius
  std::vector<std::int64_t> ball_sizes_;

  bool dense_ = false;
  std::int64_t half_ = 0;
  std::vector<std::int64_t> strides_;
  std::vector<std::int32_t> dense_len_;
  std::unordered_map<std::vector<std::int32_t>, std::int32_t, VecHash> sparse_;
};

// Breadth-first frontier expansion out to radius N.
MetricTable bfs_ball(const GeneratorSet& gens, int N,
                     const BfsOptions& opts = {});

// Exhaustive-spelling oracle: minimum total weight sum |alpha_i| over signed
// integer combinations of the +- pair representatives that spell w, searched
// up to the given budget. Independent of bfs_ball by construction.
std::optional<int> word_length_oracle(const GeneratorSet& gens, const Vec& w,
                                      int bound);

// Largest word length over the lattice points of Q. Requires a set that
// generates all of Z^d (otherwise some point of Q is unreachable).
int compute_K(const GeneratorSet& gens, const LimitShape& shape);

struct NormBoundsReport {
  std::vector<Vec> violations;
  Rational max_gap;           // empirical max of |w| - ||w||_L
  std::int64_t checked = 0;
};

// Checks ||w||_L <= |w| < ||w||_L + K for every stored point. Violations are
// report content, not exceptions.
NormBoundsReport verify_norm_bounds(const MetricTable& table,
                                    const LimitShape& shape, int K);

// Discrete consequence of (n-1)Q + S = nQ: every lattice point of nQ is one
// generator step from (n-1)Q.
bool tiling_check(const LimitShape& shape, const GeneratorSet& gens,
                  std::int64_t n);

struct SpellingWitness {
  std::vector<std::pair<Vec, std::int64_t>> terms;  // generator, coefficient
};

// A spelling of w as a nonnegative integer combination of the vertices of a
// single facet; such spellings are automatically geodesic. w = 0 counts as
// simply spelled with the empty witness.
std::optional<SpellingWitness> simple_spelling(const LimitShape& shape,
                                               const Vec& w);
bool has_simple_spelling(const LimitShape& shape, const Vec& w);

// max over x in S_n of (1 - ||x||_L / n): one-sided shrink of the normalized
// sphere inside L. Must stay below K/n.
Rational hausdorff_gap(const MetricTable& table, const LimitShape& shape,
                       int n);

}  // namespace zdgeo
