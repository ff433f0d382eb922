#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace tiler {

// Exact arbitrary-precision rational scalar. All geometry and all
// Parke-Taylor evaluation is done over these; no floating point anywhere.
using Rational = mpq_class;

inline Rational rational_from_string(const std::string& s) {
  Rational r(s);
  r.canonicalize();
  return r;
}

inline std::string rational_to_string(const Rational& r) {
  return r.get_str();
}

// A point of R^n with exact rational coordinates.
struct RationalVector {
  std::vector<Rational> coords;

  std::size_t size() const { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }
  Rational& operator[](std::size_t i) { return coords[i]; }
};

}  // namespace tiler
