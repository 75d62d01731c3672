#include "zdgeo/numeric.hpp"

#include <limits>

namespace zdgeo {

std::string rational_to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/";
    s += denominator(r).str();
  }
  return s;
}

Rational rational_from_string(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den <= 0) throw Error("rational denominator must be positive: " + s);
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw Error("malformed rational literal: " + s);
  }
}

std::int64_t checked_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw Error("integer magnitude exceeds 64-bit range: " + v.str());
  }
  return v.convert_to<std::int64_t>();
}

}  // namespace zdgeo
