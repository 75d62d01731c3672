#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zdgeo {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroGeneratorError : Error { using Error::Error; };
struct NotFullRankError : Error { using Error::Error; };
struct NotFullLatticeError : Error { using Error::Error; };
struct DimensionMismatchError : Error { using Error::Error; };
struct DimensionUnsupportedError : Error { using Error::Error; };
struct ZeroVectorError : Error { using Error::Error; };
struct CapacityExceededError : Error {
  CapacityExceededError(const std::string& what, int feasible)
      : Error(what), feasible_radius(feasible) {}
  int feasible_radius;
};
struct FitMismatchError : Error { using Error::Error; };
struct DegenerateWindowError : Error { using Error::Error; };
struct NotHomogeneousError : Error { using Error::Error; };
struct EmptySphereError : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

// Serialized form is "p/q" with q > 0 and gcd(|p|, q) = 1; plain "p" means p/1.
std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Narrowing that refuses to lose bits; hull data stays in int64 range at any
// scale this library targets.
std::int64_t checked_int64(const BigInt& v);

}  // namespace zdgeo
