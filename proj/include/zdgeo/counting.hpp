#pragma once

#include <cstdint>
#include <vector>

#include "zdgeo/hull.hpp"

namespace zdgeo {

// Exact |Z^d cap nQ| by bounding-box enumeration with the gauge test.
std::int64_t count_lattice_points(const LimitShape& shape, std::int64_t n);

struct EhrhartPolynomial {
  std::vector<Rational> coeffs;  // coeffs[i] multiplies n^i
  std::int64_t verified_up_to = 0;

  Rational eval(std::int64_t n) const;
};

// Interpolates the degree-d lattice-count polynomial through n = 0..d and
// verifies it reproduces the exact counts for d < n <= maxN. The leading
// coefficient must equal vol(Q); any mismatch signals a hull or counting bug.
EhrhartPolynomial ehrhart_fit(const LimitShape& shape, std::int64_t maxN);

struct PickReport {
  std::int64_t interior = 0;
  std::int64_t boundary = 0;
  Rational area;
  bool holds = false;
};

// A = i + b/2 - 1 for integer polygons; d = 2 only.
PickReport picks_identity(const LimitShape& shape);

}  // namespace zdgeo
