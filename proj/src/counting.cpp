#include "zdgeo/counting.hpp"

#include <string>

namespace zdgeo {

std::int64_t count_lattice_points(const LimitShape& shape, std::int64_t n) {
  if (n < 0) throw ConfigError("dilate index must be nonnegative");
  if (n == 0) return 1;
  const int d = shape.dim;
  const std::int64_t R = n * shape.coord_radius();
  if (R > norm_coord_limit(shape)) {
    throw ConfigError("dilate too large for exact 64-bit counting");
  }
  std::int64_t count = 0;
  Vec x(d, -R);
  while (true) {
    // gauge test ||x||_L <= n
    const auto [p, q] = minkowski_norm_fraction(shape, x);
    if (p <= n * q) ++count;
    int j = d - 1;
    while (j >= 0 && x[j] == R) x[j--] = -R;
    if (j < 0) break;
    ++x[j];
  }
  return count;
}

Rational EhrhartPolynomial::eval(std::int64_t n) const {
  Rational acc = 0;
  Rational pw = 1;
  for (const Rational& c : coeffs) {
    acc += c * pw;
    pw *= n;
  }
  return acc;
}

EhrhartPolynomial ehrhart_fit(const LimitShape& shape, std::int64_t maxN) {
  const int d = shape.dim;
  if (maxN < d) throw ConfigError("ehrhart fit needs maxN >= d");

  std::vector<std::int64_t> counts(maxN + 1);
  for (std::int64_t n = 0; n <= maxN; ++n) {
    counts[n] = count_lattice_points(shape, n);
  }

  // Vandermonde solve through n = 0..d.
  std::vector<std::vector<Rational>> m(d + 1, std::vector<Rational>(d + 1));
  std::vector<Rational> rhs(d + 1);
  for (int row = 0; row <= d; ++row) {
    Rational pw = 1;
    for (int col = 0; col <= d; ++col) {
      m[row][col] = pw;
      pw *= row;
    }
    rhs[row] = counts[row];
  }
  auto sol = solve_linear(std::move(m), std::move(rhs));
  if (!sol) throw Error("internal error: Vandermonde system singular");

  EhrhartPolynomial poly;
  poly.coeffs = std::move(*sol);
  for (std::int64_t n = d + 1; n <= maxN; ++n) {
    if (poly.eval(n) != counts[n]) {
      throw FitMismatchError(
          "lattice count at n=" + std::to_string(n) +
          " disagrees with the interpolated polynomial (hull or counting bug)");
    }
  }
  if (poly.coeffs[d] != shape.volume) {
    throw FitMismatchError(
        "leading coefficient " + rational_to_string(poly.coeffs[d]) +
        " differs from vol(Q) = " + rational_to_string(shape.volume));
  }
  poly.verified_up_to = maxN;
  return poly;
}

PickReport picks_identity(const LimitShape& shape) {
  if (shape.dim != 2) {
    throw DimensionUnsupportedError("Pick's identity is a planar statement");
  }
  PickReport r;
  r.area = shape.volume;
  const std::int64_t R = shape.coord_radius();
  Vec x(2);
  for (x[0] = -R; x[0] <= R; ++x[0]) {
    for (x[1] = -R; x[1] <= R; ++x[1]) {
      bool inside = true, on_edge = false;
      for (const Facet& f : shape.facets) {
        const std::int64_t v = dot(f.normal, x);
        if (v > f.support) {
          inside = false;
          break;
        }
        if (v == f.support) on_edge = true;
      }
      if (!inside) continue;
      if (on_edge) {
        ++r.boundary;
      } else {
        ++r.interior;
      }
    }
  }
  r.holds = r.area == Rational(r.interior) + Rational(r.boundary, 2) - 1;
  return r;
}

}  // namespace zdgeo
