#include "zdgeo/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

namespace zdgeo {

Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec negate(const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

std::int64_t dot(const Vec& a, const Vec& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x == 0; });
}

bool lex_less(const Vec& a, const Vec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::int64_t max_abs_coord(const Vec& a) {
  std::int64_t m = 0;
  for (std::int64_t x : a) m = std::max(m, std::abs(x));
  return m;
}

std::int64_t l1_norm(const Vec& a) {
  std::int64_t s = 0;
  for (std::int64_t x : a) s += std::abs(x);
  return s;
}

Vec primitive(const Vec& a) {
  std::int64_t g = 0;
  for (std::int64_t x : a) g = std::gcd(g, x);
  if (g <= 1) return a;
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] / g;
  return r;
}

BigInt det_big(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::optional<std::vector<Rational>> solve_linear(
    std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[col], m[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      const Rational f = m[i][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
      rhs[i] -= f * rhs[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

int lattice_rank(const std::vector<Vec>& vectors, int dim) {
  // Fraction-free row reduction over the integers.
  std::vector<std::vector<BigInt>> m;
  m.reserve(vectors.size());
  for (const Vec& v : vectors) {
    std::vector<BigInt> row(v.begin(), v.end());
    m.push_back(std::move(row));
  }
  int rank = 0;
  for (int col = 0; col < dim && rank < static_cast<int>(m.size()); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      if (m[i][col] == 0) continue;
      const BigInt a = m[rank][col];
      const BigInt b = m[i][col];
      for (int j = col; j < dim; ++j) m[i][j] = m[i][j] * a - m[rank][j] * b;
    }
    ++rank;
  }
  return rank;
}

GeneratorSet GeneratorSet::create(int dim, std::vector<Vec> vectors,
                                  bool symmetrize) {
  if (dim < 1) throw ConfigError("dimension must be at least 1");
  std::set<Vec> pool;
  for (const Vec& v : vectors) {
    if (static_cast<int>(v.size()) != dim) {
      throw DimensionMismatchError("generator length differs from dim");
    }
    if (is_zero(v)) throw ZeroGeneratorError("zero vector in generating set");
    pool.insert(v);
    if (symmetrize) pool.insert(negate(v));
  }
  if (pool.empty()) throw ZeroGeneratorError("empty generating set");
  for (const Vec& v : pool) {
    if (!pool.count(negate(v))) {
      throw ConfigError(
          "generating set is not symmetric; pass symmetrize=true or include "
          "both v and -v");
    }
  }
  std::vector<Vec> sorted(pool.begin(), pool.end());
  if (lattice_rank(sorted, dim) != dim) {
    throw NotFullRankError("generators span a proper subspace of R^d");
  }
  std::vector<Vec> pairs;
  for (const Vec& v : sorted) {
    if (lex_less(v, negate(v))) pairs.push_back(v);
  }
  return GeneratorSet(dim, std::move(sorted), std::move(pairs));
}

bool GeneratorSet::generates_full_lattice() const {
  const int d = dim_;
  const int r = static_cast<int>(pairs_.size());
  if (r < d) return false;
  // gcd over all d x d minors of the pair-representative matrix; signs of the
  // omitted mates do not change minor magnitudes.
  BigInt g = 0;
  std::vector<int> idx(d);
  for (int i = 0; i < d; ++i) idx[i] = i;
  while (true) {
    std::vector<std::vector<BigInt>> m(d, std::vector<BigInt>(d));
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) m[i][j] = pairs_[idx[i]][j];
    }
    g = gcd(g, abs(det_big(std::move(m))));
    if (g == 1) return true;
    int k = d - 1;
    while (k >= 0 && idx[k] == r - d + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  return g == 1;
}

std::uint64_t GeneratorSet::content_hash() const {
  // FNV-1a over dim and the sorted coordinates.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    for (int b = 0; b < 8; ++b) {
      h ^= (x >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(dim_));
  for (const Vec& v : vectors_) {
    for (std::int64_t c : v) mix(static_cast<std::uint64_t>(c));
  }
  return h;
}

}  // namespace zdgeo
