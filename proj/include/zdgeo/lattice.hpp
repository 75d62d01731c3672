#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zdgeo/numeric.hpp"

namespace zdgeo {

// A lattice point or direction in Z^d, coordinate order fixed by the caller.
using Vec = std::vector<std::int64_t>;

Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec negate(const Vec& a);
std::int64_t dot(const Vec& a, const Vec& b);
bool is_zero(const Vec& a);
bool lex_less(const Vec& a, const Vec& b);
std::int64_t max_abs_coord(const Vec& a);
std::int64_t l1_norm(const Vec& a);

// Divides out the gcd of the entries; the zero vector is left unchanged.
Vec primitive(const Vec& a);

// Rank of the set of vectors as a Q-vector space (fraction-free elimination).
int lattice_rank(const std::vector<Vec>& vectors, int dim);

// Determinant by Bareiss fraction-free elimination; exact for any size.
BigInt det_big(std::vector<std::vector<BigInt>> m);

// Solves the square system m * x = rhs exactly; nullopt when m is singular.
std::optional<std::vector<Rational>> solve_linear(
    std::vector<std::vector<Rational>> m, std::vector<Rational> rhs);

// Symmetric finite generating set for a rank-d sublattice of Z^d.
//
// Construction enforces: every vector has length dim, no zero vectors, and
// the set is closed under negation (either already symmetric or symmetrize
// was requested). Full rank is enforced; generating all of Z^d (unit gcd of
// the d x d minors) is a separate query because several operations are
// meaningful on proper sublattices.
class GeneratorSet {
 public:
  static GeneratorSet create(int dim, std::vector<Vec> vectors,
                             bool symmetrize = false);

  int dim() const { return dim_; }
  const std::vector<Vec>& vectors() const { return vectors_; }

  // One representative per {v, -v} pair, lexicographically sorted.
  const std::vector<Vec>& pair_representatives() const { return pairs_; }

  // True when the integer span of the generators is all of Z^d, i.e. the gcd
  // of all d x d minors of the generator matrix is 1.
  bool generates_full_lattice() const;

  // Stable content fingerprint (dim + sorted vectors); used as the cache key.
  std::uint64_t content_hash() const;

 private:
  GeneratorSet(int dim, std::vector<Vec> vectors, std::vector<Vec> pairs)
      : dim_(dim), vectors_(std::move(vectors)), pairs_(std::move(pairs)) {}

  int dim_ = 0;
  std::vector<Vec> vectors_;  // sorted lexicographically, symmetric
  std::vector<Vec> pairs_;
};

}  // namespace zdgeo
