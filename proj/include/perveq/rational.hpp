// Exact rational scalars used throughout the library.
//
// Everything here is small: root-of-unity angles have denominators bounded
// by a few thousand, perversity values stay well below 10^4, so a rational
// over long long never comes close to overflow.
#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

namespace perveq {

using Int = long long;
using Rat = boost::rational<Int>;

inline Rat rat(Int num, Int den = 1) { return Rat(num, den); }

inline bool is_integer(const Rat& r) { return r.denominator() == 1; }

// floor(p/q) with correct behaviour for negative values.
inline Int rfloor(const Rat& r) {
  Int n = r.numerator(), d = r.denominator();
  Int q = n / d;
  if (n % d != 0 && (n < 0)) --q;
  return q;
}

inline Int rceil(const Rat& r) { return -rfloor(-r); }

// Fractional part in [0, 1).
inline Rat frac01(const Rat& r) { return r - Rat(rfloor(r)); }

// Representative of r modulo m in [0, m), m > 0.
inline Rat rat_mod(const Rat& r, const Rat& m) {
  Rat q = r / m;
  return r - Rat(rfloor(q)) * m;
}

inline std::string to_string(const Rat& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << '/' << r.denominator();
  return os.str();
}

// Parses "p" or "p/q".
inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(s));
    Int num = std::stoll(s.substr(0, slash));
    Int den = std::stoll(s.substr(slash + 1));
    return Rat(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational: '" + s + "'");
  }
}

}  // namespace perveq
