#include "zdgeo/metric.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numeric>

namespace zdgeo {
namespace {

// Box half-width such that B_N fits: N * max |generator coordinate|.
std::int64_t box_half(const GeneratorSet& gens, int N) {
  std::int64_t m = 0;
  for (const Vec& g : gens.vectors()) m = std::max(m, max_abs_coord(g));
  return m * N;
}

// (2*half+1)^d with saturation instead of overflow.
std::int64_t box_cells(std::int64_t half, int d) {
  const std::int64_t side = 2 * half + 1;
  std::int64_t cells = 1;
  for (int i = 0; i < d; ++i) {
    if (cells > (std::int64_t{1} << 62) / side) return std::int64_t{1} << 62;
    cells *= side;
  }
  return cells;
}

void sort_sphere(std::vector<std::int32_t>& flat, int d) {
  const std::int64_t count = static_cast<std::int64_t>(flat.size()) / d;
  std::vector<std::int64_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::int64_t a, std::int64_t b) {
    return std::lexicographical_compare(
        flat.begin() + a * d, flat.begin() + (a + 1) * d, flat.begin() + b * d,
        flat.begin() + (b + 1) * d);
  });
  std::vector<std::int32_t> sorted(flat.size());
  for (std::int64_t i = 0; i < count; ++i) {
    std::copy_n(flat.begin() + order[i] * d, d, sorted.begin() + i * d);
  }
  flat = std::move(sorted);
}

}  // namespace

void MetricTable::sphere_point(int n, std::int64_t i, Vec& out) const {
  const int d = dim();
  out.resize(d);
  const auto& flat = sphere_pts_[n];
  for (int j = 0; j < d; ++j) out[j] = flat[i * d + j];
}

std::optional<int> MetricTable::length_of(const Vec& w) const {
  const int d = dim();
  if (static_cast<int>(w.size()) != d) {
    throw DimensionMismatchError("point dimension differs from table");
  }
  if (dense_) {
    std::int64_t idx = 0;
    for (int j = 0; j < d; ++j) {
      if (w[j] < -half_ || w[j] > half_) return std::nullopt;
      idx += (w[j] + half_) * strides_[j];
    }
    const std::int32_t len = dense_len_[idx];
    if (len < 0) return std::nullopt;
    return len;
  }
  std::vector<std::int32_t> key(w.begin(), w.end());
  auto it = sparse_.find(key);
  if (it == sparse_.end()) return std::nullopt;
  return it->second;
}

void MetricTable::init_storage(const BfsOptions& opts) {
  const int d = dim();
  half_ = box_half(gens_, radius_);
  const std::int64_t cells = box_cells(half_, d);
  dense_ = !opts.force_sparse && cells <= opts.max_points;
  if (dense_) {
    strides_.assign(d, 1);
    for (int j = d - 2; j >= 0; --j) {
      strides_[j] = strides_[j + 1] * (2 * half_ + 1);
    }
    dense_len_.assign(cells, -1);
  }
}

void MetricTable::finalize() {
  ball_sizes_.clear();
  std::int64_t total = 0;
  for (auto& flat : sphere_pts_) {
    total += static_cast<std::int64_t>(flat.size()) / dim();
    ball_sizes_.push_back(total);
  }
}

MetricTable bfs_ball(const GeneratorSet& gens, int N, const BfsOptions& opts) {
  if (N < 0) throw ConfigError("radius must be nonnegative");
  if (box_half(gens, N) > std::numeric_limits<std::int32_t>::max()) {
    throw ConfigError("radius too large for 32-bit point storage");
  }
  const int d = gens.dim();
  MetricTable t(gens, N);
  t.init_storage(opts);

  std::int64_t stored = 0;
  auto try_claim = [&](const Vec& x, int len) -> bool {
    if (t.dense_) {
      std::int64_t idx = 0;
      for (int j = 0; j < d; ++j) idx += (x[j] + t.half_) * t.strides_[j];
      if (t.dense_len_[idx] >= 0) return false;
      t.dense_len_[idx] = len;
    } else {
      std::vector<std::int32_t> key(x.begin(), x.end());
      auto [it, inserted] = t.sparse_.emplace(std::move(key), len);
      if (!inserted) return false;
    }
    ++stored;
    return true;
  };

  Vec origin(d, 0);
  try_claim(origin, 0);
  t.sphere_pts_.emplace_back(origin.begin(), origin.end());

  Vec x(d), y(d);
  for (int n = 1; n <= N; ++n) {
    std::vector<std::int32_t> next;
    const auto& frontier = t.sphere_pts_[n - 1];
    const std::int64_t fcount = static_cast<std::int64_t>(frontier.size()) / d;
    for (std::int64_t i = 0; i < fcount; ++i) {
      for (int j = 0; j < d; ++j) x[j] = frontier[i * d + j];
      for (const Vec& g : gens.vectors()) {
        for (int j = 0; j < d; ++j) y[j] = x[j] + g[j];
        if (try_claim(y, n)) {
          for (int j = 0; j < d; ++j) {
            next.push_back(static_cast<std::int32_t>(y[j]));
          }
        }
      }
    }
    sort_sphere(next, d);
    t.sphere_pts_.push_back(std::move(next));
    if (stored > opts.max_points) {
      throw CapacityExceededError(
          "metric table exceeds the configured point budget; largest feasible "
          "radius is " + std::to_string(n - 1),
          n - 1);
    }
  }
  t.finalize();
  return t;
}

MetricTable MetricTable::from_spheres(
    GeneratorSet gens, int radius,
    std::vector<std::vector<std::int32_t>> spheres, const BfsOptions& opts) {
  if (static_cast<int>(spheres.size()) != radius + 1) {
    throw Error("sphere list count does not match radius");
  }
  MetricTable t(std::move(gens), radius);
  t.init_storage(opts);
  const int d = t.dim();
  t.sphere_pts_ = std::move(spheres);
  for (int n = 0; n <= radius; ++n) {
    const auto& flat = t.sphere_pts_[n];
    for (std::size_t off = 0; off < flat.size(); off += d) {
      if (t.dense_) {
        std::int64_t idx = 0;
        for (int j = 0; j < d; ++j) {
          idx += (flat[off + j] + t.half_) * t.strides_[j];
        }
        t.dense_len_[idx] = n;
      } else {
        std::vector<std::int32_t> key(flat.begin() + off, flat.begin() + off + d);
        t.sparse_.emplace(std::move(key), n);
      }
    }
  }
  t.finalize();
  return t;
}

std::optional<int> word_length_oracle(const GeneratorSet& gens, const Vec& w,
                                      int bound) {
  if (bound < 0) throw ConfigError("oracle bound must be nonnegative");
  const auto& pairs = gens.pair_representatives();
  const int r = static_cast<int>(pairs.size());
  std::int64_t max_l1 = 1;
  for (const Vec& g : pairs) max_l1 = std::max(max_l1, l1_norm(g));

  int best = bound + 1;
  Vec residual(w);
  auto lower_bound = [&]() {
    return static_cast<int>((l1_norm(residual) + max_l1 - 1) / max_l1);
  };

  // Depth-first over signed coefficients, one per +- pair, small magnitudes
  // first so cheap spellings tighten the cutoff early.
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == r) {
      if (is_zero(residual) && used < best) best = used;
      return;
    }
    if (used + lower_bound() >= best) return;
    const Vec& g = pairs[i];
    const int room = best - 1 - used;
    for (int mag = 0; mag <= room; ++mag) {
      for (int sign = 0; sign < (mag == 0 ? 1 : 2); ++sign) {
        const std::int64_t a = sign == 0 ? mag : -mag;
        for (std::size_t j = 0; j < residual.size(); ++j) {
          residual[j] -= a * g[j];
        }
        rec(i + 1, used + mag);
        for (std::size_t j = 0; j < residual.size(); ++j) {
          residual[j] += a * g[j];
        }
      }
    }
  };
  rec(0, 0);
  if (best > bound) return std::nullopt;
  return best;
}

int compute_K(const GeneratorSet& gens, const LimitShape& shape) {
  if (!gens.generates_full_lattice()) {
    throw NotFullLatticeError(
        "K is defined over Q cap Z^d and needs a set generating all of Z^d");
  }
  const int d = gens.dim();
  std::vector<Vec> targets;
  const std::int64_t R = shape.coord_radius();
  Vec x(d, -R);
  while (true) {
    if (in_dilate(shape, x, 1)) targets.push_back(x);
    int j = d - 1;
    while (j >= 0 && x[j] == R) x[j--] = -R;
    if (j < 0) break;
    ++x[j];
  }

  std::unordered_map<std::vector<std::int32_t>, int, MetricTable::VecHash> len;
  std::vector<Vec> frontier{Vec(d, 0)};
  len.emplace(std::vector<std::int32_t>(d, 0), 0);
  auto assigned = [&](const Vec& p) {
    return len.count(std::vector<std::int32_t>(p.begin(), p.end())) > 0;
  };

  while (!std::all_of(targets.begin(), targets.end(), assigned)) {
    if (frontier.empty() || len.size() > 50'000'000) {
      throw Error("internal error: K search did not terminate");
    }
    const int n = len[std::vector<std::int32_t>(
                      frontier.front().begin(), frontier.front().end())] + 1;
    std::vector<Vec> next;
    for (const Vec& x0 : frontier) {
      for (const Vec& g : gens.vectors()) {
        Vec y = add(x0, g);
        std::vector<std::int32_t> key(y.begin(), y.end());
        if (len.emplace(std::move(key), n).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  int K = 1;
  for (const Vec& p : targets) {
    K = std::max(K, len[std::vector<std::int32_t>(p.begin(), p.end())]);
  }
  return K;
}

NormBoundsReport verify_norm_bounds(const MetricTable& table,
                                    const LimitShape& shape, int K) {
  NormBoundsReport report;
  report.max_gap = 0;
  // max gap tracked as an unreduced fraction num/den, den > 0
  std::int64_t gap_num = 0, gap_den = 1;
  for (int n = 0; n <= table.radius(); ++n) {
    table.for_each_sphere_point(n, [&](const Vec& w) {
      ++report.checked;
      const auto [p, q] = minkowski_norm_fraction(shape, w);
      const bool lower_ok = p <= n * q;                          // ||w|| <= |w|
      const bool upper_ok = (std::int64_t{n} - K) * q < p;       // |w| < ||w||+K
      if (!lower_ok || !upper_ok) report.violations.push_back(w);
      const std::int64_t num = n * q - p;
      if (num * gap_den > gap_num * q) {
        gap_num = num;
        gap_den = q;
      }
    });
  }
  report.max_gap = Rational(BigInt(gap_num), BigInt(gap_den));
  return report;
}

bool tiling_check(const LimitShape& shape, const GeneratorSet& gens,
                  std::int64_t n) {
  if (n < 2) throw ConfigError("tiling check needs n >= 2");
  const int d = shape.dim;
  const std::int64_t R = n * shape.coord_radius();
  Vec x(d, -R);
  Vec y(d);
  while (true) {
    if (in_dilate(shape, x, n)) {
      bool covered = false;
      for (const Vec& g : gens.vectors()) {
        for (int j = 0; j < d; ++j) y[j] = x[j] - g[j];
        if (in_dilate(shape, y, n - 1)) {
          covered = true;
          break;
        }
      }
      if (!covered) return false;
    }
    int j = d - 1;
    while (j >= 0 && x[j] == R) x[j--] = -R;
    if (j < 0) break;
    ++x[j];
  }
  return true;
}

namespace {

// Nonnegative integer solution of sum a_i v_i = w over the vertices of one
// facet, if any. All facet vertices satisfy <n, v> = c, so the total weight
// is pinned to t = <n, w> / c; enumerate the vertices outside a chosen basis.
std::optional<SpellingWitness> facet_spelling(const LimitShape& shape,
                                              const Facet& facet, const Vec& w) {
  const int d = shape.dim;
  const std::int64_t raw = dot(facet.normal, w);
  if (raw <= 0 || raw % facet.support != 0) return std::nullopt;
  const std::int64_t t = raw / facet.support;

  std::vector<Vec> verts;
  for (int vi : facet.vertex_indices) verts.push_back(shape.vertices[vi]);

  std::vector<int> basis;
  std::vector<Vec> chosen;
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
    chosen.push_back(verts[i]);
    if (lattice_rank(chosen, d) == static_cast<int>(chosen.size())) {
      basis.push_back(i);
      if (static_cast<int>(basis.size()) == d) break;
    } else {
      chosen.pop_back();
    }
  }
  if (static_cast<int>(basis.size()) != d) {
    throw Error("internal error: facet vertices do not span");
  }
  std::vector<int> rest;
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
    if (std::find(basis.begin(), basis.end(), i) == basis.end()) {
      rest.push_back(i);
    }
  }

  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
  for (int col = 0; col < d; ++col) {
    for (int row = 0; row < d; ++row) m[row][col] = verts[basis[col]][row];
  }

  std::vector<std::int64_t> alpha(rest.size(), 0);
  while (true) {
    std::int64_t used = 0;
    for (std::int64_t a : alpha) used += a;
    if (used <= t) {
      std::vector<Rational> rhs(d);
      for (int row = 0; row < d; ++row) {
        std::int64_t v = w[row];
        for (std::size_t f = 0; f < rest.size(); ++f) {
          v -= alpha[f] * verts[rest[f]][row];
        }
        rhs[row] = v;
      }
      auto sol = solve_linear(m, rhs);
      if (sol) {
        bool ok = true;
        std::vector<std::int64_t> alpha_basis(d);
        for (int i = 0; i < d; ++i) {
          const Rational& a = (*sol)[i];
          if (a < 0 || denominator(a) != 1) {
            ok = false;
            break;
          }
          alpha_basis[i] = checked_int64(numerator(a));
        }
        if (ok) {
          SpellingWitness witness;
          for (int i = 0; i < d; ++i) {
            if (alpha_basis[i] > 0) {
              witness.terms.emplace_back(verts[basis[i]], alpha_basis[i]);
            }
          }
          for (std::size_t f = 0; f < rest.size(); ++f) {
            if (alpha[f] > 0) witness.terms.emplace_back(verts[rest[f]], alpha[f]);
          }
          return witness;
        }
      }
    }
    std::size_t j = 0;
    while (j < alpha.size() && alpha[j] == t) alpha[j++] = 0;
    if (j == alpha.size()) break;
    ++alpha[j];
  }
  return std::nullopt;
}

}  // namespace

std::optional<SpellingWitness> simple_spelling(const LimitShape& shape,
                                               const Vec& w) {
  if (static_cast<int>(w.size()) != shape.dim) {
    throw DimensionMismatchError("point dimension differs from shape");
  }
  if (is_zero(w)) return SpellingWitness{};

  if (shape.dim == 1) {
    const std::int64_t a = shape.vertices[1][0];
    if (w[0] % a != 0) return std::nullopt;
    SpellingWitness witness;
    witness.terms.emplace_back(Vec{w[0] > 0 ? a : -a}, std::abs(w[0]) / a);
    return witness;
  }

  if (shape.dim == 2) {
    // Unique candidate a*u + b*v = w per facet, by Cramer.
    for (const Facet& f : shape.facets) {
      const Vec& u = shape.vertices[f.vertex_indices[0]];
      const Vec& v = shape.vertices[f.vertex_indices[1]];
      const std::int64_t det = u[0] * v[1] - u[1] * v[0];
      const std::int64_t ta = w[0] * v[1] - w[1] * v[0];
      const std::int64_t tb = u[0] * w[1] - u[1] * w[0];
      if (ta % det != 0 || tb % det != 0) continue;
      const std::int64_t a = ta / det, b = tb / det;
      if (a < 0 || b < 0) continue;
      SpellingWitness witness;
      if (a > 0) witness.terms.emplace_back(u, a);
      if (b > 0) witness.terms.emplace_back(v, b);
      return witness;
    }
    return std::nullopt;
  }

  for (const Facet& f : shape.facets) {
    auto witness = facet_spelling(shape, f, w);
    if (witness) return witness;
  }
  return std::nullopt;
}

bool has_simple_spelling(const LimitShape& shape, const Vec& w) {
  return simple_spelling(shape, w).has_value();
}

Rational hausdorff_gap(const MetricTable& table, const LimitShape& shape,
                       int n) {
  if (n < 1 || n > table.radius()) throw ConfigError("radius out of range");
  if (table.sphere_size(n) == 0) {
    throw EmptySphereError("sphere " + std::to_string(n) + " is empty");
  }
  std::int64_t min_num = 0, min_den = 0;  // den 0 marks unset
  table.for_each_sphere_point(n, [&](const Vec& x) {
    const auto [p, q] = minkowski_norm_fraction(shape, x);
    if (min_den == 0 || p * min_den < min_num * q) {
      min_num = p;
      min_den = q;
    }
  });
  return 1 - Rational(BigInt(min_num), BigInt(min_den)) / n;
}

}  // namespace zdgeo
