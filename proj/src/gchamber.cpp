#include "tiler/gchamber.hpp"

#include <algorithm>
#include <stdexcept>

namespace tiler {

namespace {

// |I_a n [a, b-1]| for the cyclic interval of [n].
int intersect_interval(const std::vector<int>& I, int a, int b, int n) {
  int cnt = 0;
  for (int t : I)
    if (((t - a) % n + n) % n < ((b - a) % n + n) % n) ++cnt;
  return cnt;
}

}  // namespace

SignPattern chamber_sign_pattern(const WSimplex& w) {
  const int n = w.n();
  SignPattern out;
  out.n = n;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      int e = intersect_interval(w.I[static_cast<std::size_t>(a) - 1], a, b, n);
      out.signs[{a, b}] = (e - 1) % 2 == 0 ? 1 : -1;
    }
  return out;
}

ChamberMatrix construct_chamber_point(
    const WSimplex& w, const std::optional<std::vector<Rational>>& slopes) {
  const int n = w.n();
  std::vector<Rational> s;
  if (slopes) {
    s = *slopes;
    if (static_cast<int>(s.size()) != n)
      throw std::invalid_argument("need exactly n slopes");
    for (int t = 0; t + 1 < n; ++t)
      if (!(s[static_cast<std::size_t>(t)] < s[static_cast<std::size_t>(t) + 1]))
        throw std::invalid_argument("slopes must be strictly increasing");
  } else {
    for (int t = 1; t <= n; ++t) s.emplace_back(t);
  }
  // w^{(1)}: the rotation of the cycle (w) ending at 1. Slopes are handed
  // out along the counterclockwise column order 1, w^{(1)}_1, ...,
  // w^{(1)}_{n-1}.
  auto it = std::find(w.w.begin(), w.w.end(), 1);
  int p = static_cast<int>(it - w.w.begin());
  std::vector<int> order{1};
  for (int t = 1; t < n; ++t)
    order.push_back(w.w[static_cast<std::size_t>((p + t) % n)]);
  std::vector<Rational> slope_of(static_cast<std::size_t>(n) + 1);
  for (int t = 0; t < n; ++t)
    slope_of[static_cast<std::size_t>(order[static_cast<std::size_t>(t)])] =
        s[static_cast<std::size_t>(t)];
  ChamberMatrix m;
  const auto& I1 = w.I[0];
  for (int b = 1; b <= n; ++b) {
    int e = intersect_interval(I1, 1, b, n);
    // For b = 1 the interval is empty; the paper's convention gives z_1 the
    // + sign (|I_1 n [1,0]| treated via the exponent of v_1 itself).
    Rational sign = (b == 1 || (e - 1) % 2 == 0) ? 1 : -1;
    m.top.push_back(sign);
    m.bottom.push_back(sign * slope_of[static_cast<std::size_t>(b)]);
  }
  return m;
}

ChamberMembership verify_point_in_chamber(const ChamberMatrix& m,
                                          const WSimplex& w) {
  if (m.n() != w.n()) throw std::invalid_argument("matrix size mismatch");
  auto pattern = chamber_sign_pattern(w);
  for (const auto& [ab, sign] : pattern.signs) {
    Rational p = m.minor(ab.first, ab.second);
    if (p == 0) return ChamberMembership::indeterminate;
    if ((p > 0 ? 1 : -1) != sign) return ChamberMembership::mismatch;
  }
  return ChamberMembership::match;
}

}  // namespace tiler
