#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tiler/hypersimplex.hpp"
#include "tiler/rational.hpp"

namespace tiler {

// Signs of the C(n,2) Plucker coordinates P_{ab}, a < b, prescribing a
// w-chamber of the G-amplituhedron.
struct SignPattern {
  int n = 0;
  std::map<std::pair<int, int>, int> signs;  // value in {+1, -1}
};

// A 2 x n matrix of exact rationals, columns z_1, ..., z_n.
struct ChamberMatrix {
  std::vector<Rational> top;
  std::vector<Rational> bottom;

  int n() const { return static_cast<int>(top.size()); }
  Rational minor(int a, int b) const {  // P_{ab}, 1-based
    return top[static_cast<std::size_t>(a) - 1] *
               bottom[static_cast<std::size_t>(b) - 1] -
           top[static_cast<std::size_t>(b) - 1] *
               bottom[static_cast<std::size_t>(a) - 1];
  }
};

// sgn P_{ab} = (-1)^{|I_a n [a,b-1]| - 1} for a < b.
SignPattern chamber_sign_pattern(const WSimplex& w);

// A matrix realizing chamber_sign_pattern(w) exactly: columns (1, s)^t with
// strictly increasing slopes assigned along the order 1, w^{(1)}_1, ...,
// w^{(1)}_{n-1}, then column b negated when |I_1 n [1,b-1]| is even.
// Default slopes are 1..n.
ChamberMatrix construct_chamber_point(
    const WSimplex& w,
    const std::optional<std::vector<Rational>>& slopes = std::nullopt);

enum class ChamberMembership { match, mismatch, indeterminate };

// Compares all exact minors against the chamber pattern; a zero minor is
// reported as indeterminate rather than as a mismatch.
ChamberMembership verify_point_in_chamber(const ChamberMatrix& m,
                                          const WSimplex& w);

}  // namespace tiler
