#include "zdgeo/hull.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>
#include <set>

namespace zdgeo {
namespace {

std::vector<BigInt> to_big(const Vec& v) {
  return std::vector<BigInt>(v.begin(), v.end());
}

BigInt dot_big(const std::vector<BigInt>& n, const Vec& p) {
  BigInt s = 0;
  for (std::size_t i = 0; i < n.size(); ++i) s += n[i] * p[i];
  return s;
}

// Generalized cross product: the (unoriented) normal of the hyperplane
// spanned by rows of dirs ((k-1) x k), via signed maximal minors.
std::vector<BigInt> hyperplane_normal(const std::vector<std::vector<BigInt>>& dirs,
                                      int k) {
  std::vector<BigInt> n(k);
  for (int j = 0; j < k; ++j) {
    std::vector<std::vector<BigInt>> minor;
    minor.reserve(dirs.size());
    for (const auto& row : dirs) {
      std::vector<BigInt> r;
      r.reserve(k - 1);
      for (int c = 0; c < k; ++c) {
        if (c != j) r.push_back(row[c]);
      }
      minor.push_back(std::move(r));
    }
    BigInt mj = det_big(std::move(minor));
    n[j] = (j % 2 == 0) ? mj : -mj;
  }
  return n;
}

struct SimplicialFacet {
  std::vector<int> verts;  // point ids, sorted
  std::vector<BigInt> normal;
  BigInt support;
  bool alive = true;
};

struct FacetGroup {
  Vec normal;  // primitive
  std::int64_t support = 0;
  std::vector<int> vertex_ids;  // extreme points only, sorted by coordinates
};

struct CoreHull {
  std::vector<int> vertex_ids;  // extreme point ids, sorted by coordinates
  std::vector<FacetGroup> groups;
};

// Facet plane oriented away from the seed centroid: <n, ref_sum> < scale * c.
void orient(std::vector<BigInt>& n, BigInt& c, const std::vector<BigInt>& ref_sum,
            const BigInt& scale) {
  BigInt lhs = 0;
  for (std::size_t i = 0; i < n.size(); ++i) lhs += n[i] * ref_sum[i];
  const BigInt rhs = scale * c;
  if (lhs == rhs) throw Error("internal hull error: reference on facet plane");
  if (lhs > rhs) {
    for (auto& v : n) v = -v;
    c = -c;
  }
}

SimplicialFacet make_facet(const std::vector<Vec>& pts, std::vector<int> verts,
                           int k, const std::vector<BigInt>& ref_sum,
                           const BigInt& ref_scale) {
  std::sort(verts.begin(), verts.end());
  std::vector<std::vector<BigInt>> dirs;
  dirs.reserve(k - 1);
  for (int i = 1; i < k; ++i) {
    std::vector<BigInt> row(k);
    for (int j = 0; j < k; ++j) row[j] = pts[verts[i]][j] - pts[verts[0]][j];
    dirs.push_back(std::move(row));
  }
  SimplicialFacet f;
  f.normal = hyperplane_normal(dirs, k);
  bool zero = std::all_of(f.normal.begin(), f.normal.end(),
                          [](const BigInt& v) { return v == 0; });
  if (zero) throw Error("internal hull error: degenerate facet");
  f.support = dot_big(f.normal, pts[verts[0]]);
  orient(f.normal, f.support, ref_sum, ref_scale);
  f.verts = std::move(verts);
  return f;
}

// Exact incremental hull of points with affine dimension k (coordinates in
// Z^k). Builds a simplicial surface, then merges coplanar pieces into true
// facets and keeps only extreme points as vertices.
CoreHull hull_core(const std::vector<Vec>& pts, int k) {
  const int npts = static_cast<int>(pts.size());
  CoreHull out;

  if (k == 1) {
    int lo = 0, hi = 0;
    for (int i = 1; i < npts; ++i) {
      if (pts[i][0] < pts[lo][0]) lo = i;
      if (pts[i][0] > pts[hi][0]) hi = i;
    }
    if (pts[lo][0] == pts[hi][0]) throw NotFullRankError("all points coincide");
    out.vertex_ids = {lo, hi};
    std::sort(out.vertex_ids.begin(), out.vertex_ids.end(),
              [&](int a, int b) { return lex_less(pts[a], pts[b]); });
    FacetGroup neg{Vec{-1}, -pts[lo][0], {lo}};
    FacetGroup pos{Vec{1}, pts[hi][0], {hi}};
    out.groups = {std::move(neg), std::move(pos)};
    std::sort(out.groups.begin(), out.groups.end(),
              [](const FacetGroup& a, const FacetGroup& b) {
                if (a.normal != b.normal) return lex_less(a.normal, b.normal);
                return a.support < b.support;
              });
    return out;
  }

  // Seed simplex: greedily extend an affinely independent subset.
  std::vector<int> seed{0};
  std::vector<Vec> dirs;
  for (int i = 1; i < npts && static_cast<int>(seed.size()) < k + 1; ++i) {
    Vec dir = sub(pts[i], pts[0]);
    dirs.push_back(dir);
    if (lattice_rank(dirs, k) == static_cast<int>(dirs.size())) {
      seed.push_back(i);
    } else {
      dirs.pop_back();
    }
  }
  if (static_cast<int>(seed.size()) != k + 1) {
    throw NotFullRankError("generators span a proper subspace");
  }

  std::vector<BigInt> ref_sum(k, 0);
  for (int s : seed) {
    for (int j = 0; j < k; ++j) ref_sum[j] += pts[s][j];
  }
  const BigInt ref_scale = k + 1;

  std::vector<SimplicialFacet> facets;
  for (int drop = 0; drop <= k; ++drop) {
    std::vector<int> verts;
    for (int i = 0; i <= k; ++i) {
      if (i != drop) verts.push_back(seed[i]);
    }
    facets.push_back(make_facet(pts, std::move(verts), k, ref_sum, ref_scale));
  }

  std::set<int> seeded(seed.begin(), seed.end());
  for (int p = 0; p < npts; ++p) {
    if (seeded.count(p)) continue;
    std::vector<int> visible;
    for (int f = 0; f < static_cast<int>(facets.size()); ++f) {
      if (!facets[f].alive) continue;
      if (dot_big(facets[f].normal, pts[p]) > facets[f].support) {
        visible.push_back(f);
      }
    }
    if (visible.empty()) continue;  // inside or on the current hull

    // Horizon ridges appear in exactly one visible facet.
    std::map<std::vector<int>, int> ridge_count;
    for (int f : visible) {
      const auto& verts = facets[f].verts;
      for (std::size_t drop = 0; drop < verts.size(); ++drop) {
        std::vector<int> ridge;
        for (std::size_t i = 0; i < verts.size(); ++i) {
          if (i != drop) ridge.push_back(verts[i]);
        }
        ++ridge_count[std::move(ridge)];
      }
    }
    for (int f : visible) facets[f].alive = false;
    for (auto& [ridge, count] : ridge_count) {
      if (count != 1) continue;
      std::vector<int> verts = ridge;
      verts.push_back(p);
      facets.push_back(make_facet(pts, std::move(verts), k, ref_sum, ref_scale));
    }
  }

  // Merge coplanar simplicial facets into the true facets.
  std::map<std::pair<Vec, std::int64_t>, std::set<int>> merged;
  for (const auto& f : facets) {
    if (!f.alive) continue;
    Vec n(k);
    BigInt g = 0;
    for (const BigInt& v : f.normal) g = gcd(g, abs(v));
    for (int j = 0; j < k; ++j) n[j] = checked_int64(f.normal[j] / g);
    const std::int64_t c = checked_int64(f.support / g);
    auto& bucket = merged[{std::move(n), c}];
    bucket.insert(f.verts.begin(), f.verts.end());
  }

  // A hull point is extreme iff the normals of its incident facet planes
  // span R^k.
  std::set<int> candidates;
  for (const auto& [key, ids] : merged) candidates.insert(ids.begin(), ids.end());
  std::set<int> extreme;
  for (int id : candidates) {
    std::vector<Vec> active;
    for (const auto& [key, ids] : merged) {
      if (dot(key.first, pts[id]) == key.second) active.push_back(key.first);
    }
    if (lattice_rank(active, k) == k) extreme.insert(id);
  }

  out.vertex_ids.assign(extreme.begin(), extreme.end());
  std::sort(out.vertex_ids.begin(), out.vertex_ids.end(),
            [&](int a, int b) { return lex_less(pts[a], pts[b]); });
  for (auto& [key, ids] : merged) {
    FacetGroup g;
    g.normal = key.first;
    g.support = key.second;
    for (int id : ids) {
      if (extreme.count(id)) g.vertex_ids.push_back(id);
    }
    std::sort(g.vertex_ids.begin(), g.vertex_ids.end(),
              [&](int a, int b) { return lex_less(pts[a], pts[b]); });
    out.groups.push_back(std::move(g));
  }
  std::sort(out.groups.begin(), out.groups.end(),
            [](const FacetGroup& a, const FacetGroup& b) {
              if (a.normal != b.normal) return lex_less(a.normal, b.normal);
              return a.support < b.support;
            });
  return out;
}

// Injective linear projection of an affine-dimension-k point family onto k
// independent coordinate axes. Faces and convexity are preserved, so the
// recursive triangulation can work in Z^k.
std::vector<Vec> project_independent(const std::vector<Vec>& pts, int k) {
  const int m = static_cast<int>(pts[0].size());
  std::vector<Vec> dirs;
  for (std::size_t i = 1; i < pts.size(); ++i) dirs.push_back(sub(pts[i], pts[0]));

  std::vector<int> cols;
  std::vector<Vec> chosen;  // transposed columns picked so far
  for (int j = 0; j < m && static_cast<int>(cols.size()) < k; ++j) {
    Vec col(dirs.size());
    for (std::size_t i = 0; i < dirs.size(); ++i) col[i] = dirs[i][j];
    chosen.push_back(col);
    if (lattice_rank(chosen, static_cast<int>(dirs.size())) ==
        static_cast<int>(chosen.size())) {
      cols.push_back(j);
    } else {
      chosen.pop_back();
    }
  }
  if (static_cast<int>(cols.size()) != k) {
    throw Error("internal hull error: projection rank deficit");
  }
  std::vector<Vec> proj;
  proj.reserve(pts.size());
  for (const Vec& p : pts) {
    Vec q(k);
    for (int j = 0; j < k; ++j) q[j] = p[cols[j]];
    proj.push_back(std::move(q));
  }
  return proj;
}

// Pulling triangulation of a k-polytope given by its extreme points: cone the
// lowest-index vertex over the triangulated facets that avoid it. For a
// polygon this is the fan from the lowest-index vertex.
std::vector<std::vector<int>> pull_triangulate(const std::vector<Vec>& coords,
                                               const std::vector<int>& ids,
                                               int k) {
  const int n = static_cast<int>(ids.size());
  std::vector<std::vector<int>> out;
  if (n == k + 1) {
    out.push_back(ids);
    std::sort(out[0].begin(), out[0].end());
    return out;
  }
  const int apex_pos =
      static_cast<int>(std::min_element(ids.begin(), ids.end()) - ids.begin());
  const int apex = ids[apex_pos];

  CoreHull core = hull_core(project_independent(coords, k), k);
  for (const FacetGroup& g : core.groups) {
    if (std::find(g.vertex_ids.begin(), g.vertex_ids.end(), apex_pos) !=
        g.vertex_ids.end()) {
      continue;
    }
    std::vector<Vec> sub_coords;
    std::vector<int> sub_ids;
    for (int local : g.vertex_ids) {
      sub_coords.push_back(coords[local]);
      sub_ids.push_back(ids[local]);
    }
    for (auto& s : pull_triangulate(sub_coords, sub_ids, k - 1)) {
      std::vector<int> simplex{apex};
      simplex.insert(simplex.end(), s.begin(), s.end());
      out.push_back(std::move(simplex));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Cyclic boundary order of a 2-face embedded in R^3, for reporting. Exact
// angular sort around the (scaled) centroid in a projected plane.
std::vector<int> polygon_cycle(const std::vector<Vec>& verts,
                               const std::vector<int>& ids, const Vec& normal) {
  int axis = 0;
  for (int j = 1; j < 3; ++j) {
    if (std::abs(normal[j]) > std::abs(normal[axis])) axis = j;
  }
  const int u = (axis + 1) % 3, v = (axis + 2) % 3;
  const int m = static_cast<int>(verts.size());
  std::int64_t cx = 0, cy = 0;
  for (const Vec& p : verts) {
    cx += p[u];
    cy += p[v];
  }
  // m * p - centroid_sum, exact integer angular comparison
  std::vector<std::pair<std::int64_t, std::int64_t>> rel(m);
  for (int i = 0; i < m; ++i) {
    rel[i] = {verts[i][u] * m - cx, verts[i][v] * m - cy};
  }
  auto half = [](const std::pair<std::int64_t, std::int64_t>& p) {
    return (p.second < 0 || (p.second == 0 && p.first < 0)) ? 1 : 0;
  };
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (half(rel[a]) != half(rel[b])) return half(rel[a]) < half(rel[b]);
    const auto cross = rel[a].first * rel[b].second - rel[a].second * rel[b].first;
    return cross > 0;
  });
  // Start at the lowest id, keep the rotation direction deterministic by
  // preferring the smaller-id neighbor second.
  int start = 0;
  for (int i = 1; i < m; ++i) {
    if (ids[order[i]] < ids[order[start]]) start = i;
  }
  std::vector<int> cycle(m);
  for (int i = 0; i < m; ++i) cycle[i] = ids[order[(start + i) % m]];
  if (m > 2 && cycle[1] > cycle[m - 1]) {
    std::reverse(cycle.begin() + 1, cycle.end());
  }
  return cycle;
}

}  // namespace

std::int64_t LimitShape::coord_radius() const {
  std::int64_t m = 0;
  for (const Vec& v : vertices) m = std::max(m, max_abs_coord(v));
  return m;
}

LimitShape build_hull(const GeneratorSet& gens) {
  const int d = gens.dim();
  LimitShape shape;
  shape.dim = d;

  if (d == 1) {
    std::int64_t a = 0;
    for (const Vec& v : gens.vectors()) a = std::max(a, std::abs(v[0]));
    shape.vertices = {Vec{-a}, Vec{a}};
    Facet neg{{0}, Vec{-1}, a, {{0}}};
    Facet pos{{1}, Vec{1}, a, {{1}}};
    shape.facets = {std::move(neg), std::move(pos)};
  } else {
    const std::vector<Vec>& pts = gens.vectors();
    CoreHull core = hull_core(pts, d);

    shape.vertices.reserve(core.vertex_ids.size());
    std::map<int, int> point_to_vertex;
    for (int id : core.vertex_ids) {
      point_to_vertex[id] = static_cast<int>(shape.vertices.size());
      shape.vertices.push_back(pts[id]);
    }

    for (const FacetGroup& g : core.groups) {
      Facet f;
      f.normal = g.normal;
      f.support = g.support;
      std::vector<Vec> coords;
      std::vector<int> ids;
      for (int id : g.vertex_ids) {
        coords.push_back(pts[id]);
        ids.push_back(point_to_vertex[id]);
      }
      if (d == 3 && ids.size() > 3) {
        f.vertex_indices = polygon_cycle(coords, ids, f.normal);
      } else {
        f.vertex_indices = ids;  // already ascending
      }
      f.simplices = pull_triangulate(coords, ids, d - 1);
      shape.facets.push_back(std::move(f));
    }

    for (const Vec& p : pts) {
      bool on_boundary = false;
      for (const Facet& f : shape.facets) {
        if (dot(f.normal, p) == f.support) {
          on_boundary = true;
          break;
        }
      }
      const bool is_vertex =
          std::binary_search(shape.vertices.begin(), shape.vertices.end(), p,
                             lex_less);
      if (on_boundary && !is_vertex) shape.boundary_generators.push_back(p);
    }
  }

  BigInt dfact = 1;
  for (int i = 2; i <= d; ++i) dfact *= i;
  BigInt vol_num = 0;
  for (int fi = 0; fi < static_cast<int>(shape.facets.size()); ++fi) {
    const auto& simplices = shape.facets[fi].simplices;
    for (int si = 0; si < static_cast<int>(simplices.size()); ++si) {
      std::vector<std::vector<BigInt>> m;
      for (int vi : simplices[si]) m.push_back(to_big(shape.vertices[vi]));
      vol_num += abs(det_big(std::move(m)));
      shape.simplex_table.emplace_back(fi, si);
    }
  }
  shape.volume = Rational(vol_num, dfact);

  // Central symmetry sanity: every vertex has its antipode in the list.
  for (const Vec& v : shape.vertices) {
    if (!std::binary_search(shape.vertices.begin(), shape.vertices.end(),
                            negate(v), lex_less)) {
      throw Error("internal hull error: vertex set not centrally symmetric");
    }
  }
  return shape;
}

Rational minkowski_norm(const LimitShape& shape, const Vec& x) {
  if (static_cast<int>(x.size()) != shape.dim) {
    throw DimensionMismatchError("point dimension differs from shape");
  }
  if (max_abs_coord(x) <= norm_coord_limit(shape)) {
    auto [num, den] = minkowski_norm_fraction(shape, x);
    return Rational(BigInt(num), BigInt(den));
  }
  Rational best = 0;
  for (const Facet& f : shape.facets) {
    Rational v(dot_big(to_big(f.normal), x), BigInt(f.support));
    if (v > best) best = v;
  }
  return best;
}

std::pair<std::int64_t, std::int64_t> minkowski_norm_fraction(
    const LimitShape& shape, const Vec& x) {
  std::int64_t bn = 0, bd = 1;
  for (const Facet& f : shape.facets) {
    const std::int64_t num = dot(f.normal, x);
    // num/support > bn/bd, all supports positive
    if (num * bd > bn * f.support) {
      bn = num;
      bd = f.support;
    }
  }
  return {bn, bd};
}

std::int64_t norm_coord_limit(const LimitShape& shape) {
  std::int64_t worst = 1;
  for (const Facet& f : shape.facets) {
    std::int64_t s = 0;
    for (std::int64_t v : f.normal) s += std::abs(v);
    worst = std::max({worst, s * f.support, s * s});
  }
  return (std::int64_t{1} << 60) / worst;
}

bool in_dilate(const LimitShape& shape, const Vec& x, std::int64_t n) {
  for (const Facet& f : shape.facets) {
    if (dot(f.normal, x) > n * f.support) return false;
  }
  return true;
}

ConeMeasure cone_measure(const LimitShape& shape) {
  ConeMeasure m;
  BigInt dfact = 1;
  for (int i = 2; i <= shape.dim; ++i) dfact *= i;
  m.facet_weights.assign(shape.facets.size(), Rational(0));
  Rational total = 0;
  for (int g = 0; g < shape.simplex_count(); ++g) {
    std::vector<std::vector<BigInt>> mat;
    for (int vi : shape.simplex(g)) mat.push_back(to_big(shape.vertices[vi]));
    Rational w = Rational(abs(det_big(std::move(mat))), dfact) / shape.volume;
    m.facet_weights[shape.facet_of_simplex(g)] += w;
    total += w;
    m.weights.push_back(std::move(w));
  }
  if (total != 1) throw Error("internal error: cone measure does not sum to 1");
  return m;
}

namespace {

// Closed-cone membership x = sum t_i v_i with t_i >= 0, exact. Returns
// containment plus whether some t_i vanished (x on the cone boundary).
// int64_ok certifies that 3x3 determinants with one column from x fit int64.
std::pair<bool, bool> cone_contains(const LimitShape& shape,
                                    const std::vector<int>& simplex,
                                    const Vec& x, bool int64_ok) {
  const int d = shape.dim;
  if (d == 1) {
    const std::int64_t v = shape.vertices[simplex[0]][0];
    return {(v > 0) == (x[0] > 0), false};
  }
  if (d == 2) {
    const Vec& a = shape.vertices[simplex[0]];
    const Vec& b = shape.vertices[simplex[1]];
    const std::int64_t det = a[0] * b[1] - a[1] * b[0];
    const std::int64_t ta = x[0] * b[1] - x[1] * b[0];
    const std::int64_t tb = a[0] * x[1] - a[1] * x[0];
    const int s = det > 0 ? 1 : -1;
    return {s * ta >= 0 && s * tb >= 0, ta == 0 || tb == 0};
  }
  if (d == 3 && int64_ok) {
    auto det3 = [](const std::int64_t m[3][3]) {
      return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
             m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
             m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };
    std::int64_t m[3][3];
    for (int col = 0; col < 3; ++col) {
      const Vec& v = shape.vertices[simplex[col]];
      for (int row = 0; row < 3; ++row) m[row][col] = v[row];
    }
    const std::int64_t det = det3(m);
    const int s = det > 0 ? 1 : -1;
    bool boundary = false;
    for (int col = 0; col < 3; ++col) {
      std::int64_t mc[3][3];
      for (int row = 0; row < 3; ++row) {
        for (int c2 = 0; c2 < 3; ++c2) mc[row][c2] = m[row][c2];
        mc[row][col] = x[row];
      }
      const std::int64_t ti = det3(mc);
      if (s * ti < 0) return {false, false};
      if (ti == 0) boundary = true;
    }
    return {true, boundary};
  }
  std::vector<std::vector<BigInt>> m(d, std::vector<BigInt>(d));
  for (int col = 0; col < d; ++col) {
    const Vec& v = shape.vertices[simplex[col]];
    for (int row = 0; row < d; ++row) m[row][col] = v[row];
  }
  const BigInt det = det_big(m);
  const int s = det > 0 ? 1 : -1;
  bool boundary = false;
  for (int col = 0; col < d; ++col) {
    auto mc = m;
    for (int row = 0; row < d; ++row) mc[row][col] = x[row];
    const BigInt ti = det_big(std::move(mc));
    if (s * ti < 0) return {false, false};
    if (ti == 0) boundary = true;
  }
  return {true, boundary};
}

}  // namespace

int sector_of(const LimitShape& shape, const Vec& x, bool* tied) {
  if (static_cast<int>(x.size()) != shape.dim) {
    throw DimensionMismatchError("point dimension differs from shape");
  }
  if (is_zero(x)) throw ZeroVectorError("sector of the zero vector is undefined");
  const bool int64_ok = shape.coord_radius() < (std::int64_t{1} << 20) &&
                        max_abs_coord(x) < (std::int64_t{1} << 19);
  int found = -1;
  bool on_boundary = false;
  for (int g = 0; g < shape.simplex_count(); ++g) {
    auto [inside, boundary] = cone_contains(shape, shape.simplex(g), x, int64_ok);
    if (!inside) continue;
    found = g;
    on_boundary = boundary;
    break;
  }
  if (found < 0) throw Error("internal error: point escaped all sectors");
  if (tied) *tied = on_boundary;
  return found;
}

}  // namespace zdgeo
