#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace horo {

// Exact arithmetic everywhere; no floating point in this library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// Floor of a rational as an integer.
inline Int rat_floor(const Rat& r) {
  Int n = rat_num(r), d = rat_den(r);  // d > 0 by normalization
  Int q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

// Representative of r in [0,1); the coordinate arithmetic of Q/Z.
inline Rat mod1(const Rat& r) { return r - Rat(rat_floor(r)); }

inline bool is_zero_mod1(const Rat& r) { return mod1(r) == 0; }
inline bool is_half_mod1(const Rat& r) { return mod1(r) == Rat(1, 2); }

inline std::string rat_str(const Rat& r) {
  std::string s = rat_num(r).str();
  if (rat_den(r) != 1) s += "/" + rat_den(r).str();
  return s;
}

using QVec = std::vector<Rat>;  // vectors over Q, usually read mod 1

inline QVec mod1(QVec v) {
  for (auto& x : v) x = mod1(x);
  return v;
}

}  // namespace horo
