#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "tiler/hypersimplex.hpp"
#include "tiler/subdivision.hpp"

using namespace tiler;

namespace {

Subdivision make(int n, std::vector<std::pair<Color, std::vector<Label>>> ps) {
  Subdivision s;
  s.ground = ground_interval(n);
  for (auto& [c, vs] : ps) s.polygons.push_back({c, std::move(vs)});
  canonicalize(s);
  return s;
}

Subdivision fig_nonagon() {
  return make(9, {{Color::black, {2, 3, 4, 6, 7}},
                  {Color::white, {4, 5, 6}},
                  {Color::white, {7, 9, 2}},
                  {Color::black, {7, 8, 9}},
                  {Color::black, {9, 1, 2}}});
}

Subdivision fig_hexagon() {
  return make(6, {{Color::white, {1, 2, 3}},
                  {Color::black, {1, 3, 4}},
                  {Color::white, {1, 4, 6}},
                  {Color::black, {4, 5, 6}}});
}

Subdivision fig_octagon() {
  return make(8, {{Color::white, {2, 5, 7}},
                  {Color::black, {1, 2, 7, 8}},
                  {Color::black, {5, 6, 7}},
                  {Color::grey, {2, 3, 4, 5}}});
}

std::vector<int> word(const std::string& digits) {
  std::vector<int> w;
  for (char c : digits) w.push_back(c - '0');
  return w;
}

// x_{[a,b-1]} of a point, cyclically; empty when a = b.
Rational interval_sum(const RationalVector& p, int a, int b, int n) {
  Rational s = 0;
  for (int t = a; t != b; t = t % n + 1) s += p[static_cast<std::size_t>(t) - 1];
  return s;
}

// Membership in the w-simplex via the minimal facet description.
bool in_simplex(const WSimplex& w, const RationalVector& p, bool strict) {
  const int n = w.n();
  Rational total = 0;
  for (const auto& c : p.coords) total += c;
  if (total != w.k + 1) return false;
  for (const auto& f : w_simplex_facets(w)) {
    Rational s = interval_sum(p, f.a, f.b, n);
    if (strict ? !(s > f.bound) : !(s >= f.bound)) return false;
  }
  return true;
}

std::vector<Rational> coords(std::vector<int> v) {
  std::vector<Rational> out;
  for (int t : v) out.emplace_back(t);
  return out;
}

int count_in_interval(const std::vector<int>& I, int a, int b, int n) {
  int cnt = 0;
  for (int t : I)
    if (((t - a) % n + n) % n < ((b - a) % n + n) % n) ++cnt;
  return cnt;
}

}  // namespace

TEST_CASE("cyclic_descents") {
  CHECK(cyclic_descents(word("1324")) == std::vector<int>{2, 4});
  CHECK(cyclic_descents(word("2134")) == std::vector<int>{1, 4});
  for (int n = 3; n <= 7; ++n) {
    std::vector<int> id(static_cast<std::size_t>(n));
    std::iota(id.begin(), id.end(), 1);
    CHECK(cyclic_descents(id) == std::vector<int>{n});
  }
  CHECK_THROWS_AS(cyclic_descents(word("1224")), std::invalid_argument);
  CHECK_THROWS_AS(cyclic_descents(word("125")), std::invalid_argument);
}

TEST_CASE("enumerate_D and Eulerian counts") {
  auto d14 = enumerate_D(1, 4);
  REQUIRE(d14.size() == 4);
  CHECK(d14[0].w == word("1324"));
  CHECK(d14[1].w == word("2134"));
  CHECK(d14[2].w == word("2314"));
  CHECK(d14[3].w == word("3124"));

  for (int n = 4; n <= 6; ++n) {
    auto d0 = enumerate_D(0, n);
    REQUIRE(d0.size() == 1);
    std::vector<int> id(static_cast<std::size_t>(n));
    std::iota(id.begin(), id.end(), 1);
    CHECK(d0[0].w == id);
  }

  CHECK(eulerian_count(1, 4) == 4);
  CHECK(eulerian_count(3, 7) == 302);
  CHECK(enumerate_D(3, 7).size() == 302);

  // The formula agrees with enumeration everywhere, and D partitions the
  // (n-1)! words with w_n = n.
  for (int n = 4; n <= 7; ++n) {
    std::uint64_t total = 0;
    for (int k = 0; k <= n - 2; ++k) {
      auto d = enumerate_D(k, n);
      CHECK(d.size() == eulerian_count(k, n));
      total += d.size();
      for (const auto& w : d) {
        CHECK(w.k == k);
        CHECK(w.w.back() == n);
        CHECK(static_cast<int>(cyclic_descents(w.w).size()) == k + 1);
      }
    }
    std::uint64_t fact = 1;
    for (int t = 2; t < n; ++t) fact *= static_cast<std::uint64_t>(t);
    CHECK(total == fact);
  }
}

TEST_CASE("vertex_sets") {
  auto I = vertex_sets(word("1324"));
  REQUIRE(I.size() == 4);
  CHECK(I[0] == std::vector<int>{1, 2});
  CHECK(I[1] == std::vector<int>{2, 3});
  CHECK(I[2] == std::vector<int>{1, 3});
  CHECK(I[3] == std::vector<int>{2, 4});

  auto Iid = vertex_sets(word("12345"));
  for (int r = 1; r <= 5; ++r)
    CHECK(Iid[static_cast<std::size_t>(r) - 1] == std::vector<int>{r});

  // Circuit step I_{w_i} = I_{w_{i-1}} \ {w_i - 1} u {w_i} and the Remark
  // invariants r in I_r, r-1 not in I_r.
  for (int n = 4; n <= 6; ++n)
    for (int k = 0; k <= n - 2; ++k)
      for (const auto& ws : enumerate_D(k, n)) {
        for (int r = 1; r <= n; ++r) {
          const auto& Ir = ws.I[static_cast<std::size_t>(r) - 1];
          CHECK(static_cast<int>(Ir.size()) == k + 1);
          CHECK(std::find(Ir.begin(), Ir.end(), r) != Ir.end());
          int rm1 = r == 1 ? n : r - 1;
          CHECK(std::find(Ir.begin(), Ir.end(), rm1) == Ir.end());
        }
        for (int t = 1; t < n; ++t) {
          int prev = ws.w[static_cast<std::size_t>(t) - 1];
          int cur = ws.w[static_cast<std::size_t>(t)];
          std::set<int> step(ws.I[static_cast<std::size_t>(prev) - 1].begin(),
                             ws.I[static_cast<std::size_t>(prev) - 1].end());
          step.erase(cur == 1 ? n : cur - 1);
          step.insert(cur);
          std::set<int> got(ws.I[static_cast<std::size_t>(cur) - 1].begin(),
                            ws.I[static_cast<std::size_t>(cur) - 1].end());
          CHECK(got == step);
        }
      }
}

TEST_CASE("w_simplex_facets") {
  auto ws = make_wsimplex(word("1324"));
  auto fs = w_simplex_facets(ws);
  REQUIRE(fs.size() == 4);
  auto has = [&](int a, int b, int bound) {
    return std::find(fs.begin(), fs.end(), SimplexFacet{a, b, bound}) !=
           fs.end();
  };
  CHECK(has(1, 3, 1));
  CHECK(has(3, 2, 1));
  CHECK(has(2, 4, 1));
  CHECK(has(4, 1, 0));

  auto id = make_wsimplex(word("12345"));
  for (const auto& f : w_simplex_facets(id)) CHECK(f.bound == 0);

  for (int n = 4; n <= 7; ++n)
    for (int k = 0; k <= n - 2; ++k)
      for (const auto& w : enumerate_D(k, n))
        CHECK(w_simplex_facets(w).size() == static_cast<std::size_t>(n));
}

TEST_CASE("vertices satisfy the interval bounds") {
  for (int n = 4; n <= 7; ++n)
    for (int k = 0; k <= n - 2; ++k)
      for (const auto& w : enumerate_D(k, n))
        for (int a = 1; a <= n; ++a)
          for (int b = 1; b <= n; ++b) {
            if (a == b) continue;
            int lo = count_in_interval(w.I[static_cast<std::size_t>(b) - 1],
                                       a, b, n);
            int hi = count_in_interval(w.I[static_cast<std::size_t>(a) - 1],
                                       a, b, n);
            for (const auto& Ir : w.I) {
              int x = count_in_interval(Ir, a, b, n);
              CHECK(lo <= x);
              CHECK(x <= hi);
            }
          }
}

TEST_CASE("facet_sharing") {
  auto w = make_wsimplex(word("514236"));
  auto u = make_wsimplex(word("541236"));
  auto shared = facet_sharing(u, w);
  REQUIRE(shared.has_value());
  CHECK(shared->i == 1);
  CHECK(shared->j == 4);
  CHECK(shared->c == 1);

  CHECK_FALSE(facet_sharing(w, w).has_value());

  // The pair is reported as oriented in the second argument's cycle:
  // (2 1 3 4) contains the adjacent pair (4, 2).
  auto a = make_wsimplex(word("1324"));
  auto b = make_wsimplex(word("2134"));
  auto s2 = facet_sharing(a, b);
  REQUIRE(s2.has_value());
  CHECK(s2->i == 4);
  CHECK(s2->j == 2);
  CHECK(s2->c == 1);

  // Swapping cyclically-adjacent labels never yields a shared facet.
  CHECK_FALSE(facet_sharing(make_wsimplex(word("3214")),
                            make_wsimplex(word("2314")))
                  .has_value());

  // Geometric oracle: simplices share a facet iff they have exactly n-1
  // common vertices; all common vertices then lie on x_{[i,j-1]} = c.
  for (int n = 4; n <= 6; ++n)
    for (int k = 0; k <= n - 2; ++k) {
      auto d = enumerate_D(k, n);
      for (const auto& x : d)
        for (const auto& y : d) {
          if (x.w == y.w) continue;
          std::set<std::vector<int>> vx(x.I.begin(), x.I.end());
          std::set<std::vector<int>> vy(y.I.begin(), y.I.end());
          std::vector<std::vector<int>> common;
          std::set_intersection(vx.begin(), vx.end(), vy.begin(), vy.end(),
                                std::back_inserter(common));
          auto sh = facet_sharing(x, y);
          REQUIRE(sh.has_value() == (common.size() ==
                                     static_cast<std::size_t>(n) - 1));
          if (sh)
            for (const auto& I : common)
              CHECK(count_in_interval(I, sh->i, sh->j, n) == sh->c);
        }
    }
}

TEST_CASE("tile_inequalities") {
  auto poly = tile_inequalities(fig_nonagon());
  CHECK(poly.n == 9);
  CHECK(poly.k == 5);
  CHECK_FALSE(poly.projected);
  auto find = [&](Label s, Label d) {
    for (const auto& b : poly.bounds)
      if (b.src == s && b.dst == d) return b;
    FAIL("missing bound");
    return IntervalBound{};
  };
  auto b37 = find(3, 7);
  CHECK(b37.lo == 2);
  CHECK(b37.hi == 3);
  auto b56 = find(5, 6);  // x_5 >= 0 is a facet (5 is a white vertex)
  CHECK(b56.lo == 0);
  CHECK(b56.facet_lower);
  auto b64 = find(6, 4);
  CHECK(b64.lo == 5);
  CHECK(b64.facet_lower);

  for (const auto& b : tile_inequalities(make(
           5, {{Color::white, {1, 2, 3, 4, 5}}})).bounds) {
    CHECK(b.lo == 0);
    CHECK(b.hi == 1);
  }
}

TEST_CASE("pt_polytope_inequalities") {
  // All grey: the unit hypercube in R^{n-1}.
  for (int n = 4; n <= 6; ++n) {
    auto cube = pt_polytope_inequalities(
        make(n, {{Color::grey, ground_interval(n)}}));
    CHECK(cube.projected);
    // The n-1 unit bounds of the hypercube plus the redundant full-interval
    // bound 0 <= x_{[1,n-1]} <= n-1 from the boundary edge between n and 1.
    CHECK(cube.bounds.size() == static_cast<std::size_t>(n));
    for (const auto& b : cube.bounds) {
      CHECK(b.lo == 0);
      if (b.dst == b.src + 1)
        CHECK(b.hi == 1);
      else {
        CHECK(b.src == 1);
        CHECK(b.dst == n);
        CHECK(b.hi == n - 1);
      }
    }
  }

  auto poly = pt_polytope_inequalities(fig_octagon());
  auto find = [&](Label s, Label d) {
    for (const auto& b : poly.bounds)
      if (b.src == s && b.dst == d) return b;
    FAIL("missing bound");
    return IntervalBound{};
  };
  auto b18 = find(1, 8);
  CHECK(b18.lo == 3);
  CHECK(b18.hi == 6);
  auto b57 = find(5, 7);
  CHECK(b57.lo == 1);
  CHECK(b57.hi == 2);
  auto b17 = find(1, 7);
  CHECK(b17.lo == 2);
  CHECK(b17.hi == 5);
  auto b28 = find(2, 8);
  CHECK(b28.lo == 2);
  CHECK(b28.hi == 5);
  for (const auto& b : poly.bounds) CHECK(b.src < b.dst);
}

TEST_CASE("simplices_in_tile on the hexagon example") {
  auto ws = simplices_in_tile(fig_hexagon());
  std::set<std::string> got;
  for (const auto& w : ws) {
    std::string s;
    for (int v : w.w) s += static_cast<char>('0' + v);
    got.insert(s);
  }
  std::set<std::string> want{"512436", "351246", "531246", "125436",
                             "312546", "152436", "315246", "154236",
                             "315426", "231546", "514236", "351426",
                             "531426", "235146", "253146", "523146"};
  CHECK(got == want);
  for (const auto& w : ws) CHECK(w.k == 2);
}

TEST_CASE("tile_volume") {
  CHECK(tile_volume(fig_octagon()) == 378);
  for (int n = 4; n <= 6; ++n) {
    std::uint64_t fact = 1;
    for (int t = 2; t < n; ++t) fact *= static_cast<std::uint64_t>(t);
    CHECK(tile_volume(make(n, {{Color::grey, ground_interval(n)}})) == fact);
  }
  // Volumes of a kermit tiling sum to the Eulerian number.
  std::uint64_t total = 0;
  for (Label a = 2; a <= 5; ++a)
    for (Label b = a + 1; b <= 5; ++b)
      total += tile_volume(kermit(6, 2, 1, {a, b}));
  CHECK(total == eulerian_count(2, 6));
}

TEST_CASE("barycenter") {
  auto b = barycenter(make_wsimplex(word("1324")));
  REQUIRE(b.size() == 4);
  CHECK(b[0] == Rational(1, 2));
  CHECK(b[1] == Rational(3, 4));
  CHECK(b[2] == Rational(1, 2));
  CHECK(b[3] == Rational(1, 4));

  auto id = barycenter(make_wsimplex(word("12345")));
  for (std::size_t t = 0; t < 5; ++t) CHECK(id[t] == Rational(1, 5));

  for (int k = 0; k <= 3; ++k)
    for (const auto& w : enumerate_D(k, 5)) {
      Rational s = 0;
      for (const auto& c : barycenter(w).coords) s += c;
      CHECK(s == k + 1);
    }
}

TEST_CASE("tile_contains_point") {
  auto poly = tile_inequalities(fig_hexagon());
  CHECK(tile_contains_point(poly, barycenter(make_wsimplex(word("512436"))),
                            true));
  // A vertex outside the tile: e_{123} violates x_{[4,5]} >= 1.
  RationalVector v{coords({1, 1, 1, 0, 0, 0})};
  CHECK_FALSE(tile_contains_point(poly, v, true));
  CHECK_FALSE(tile_contains_point(poly, v, false));
  // Wrong level set.
  RationalVector off{coords({1, 1, 0, 0, 0, 0})};
  CHECK_FALSE(tile_contains_point(poly, off, false));
  CHECK_THROWS_AS(
      tile_contains_point(poly, RationalVector{coords({1, 1, 1})}, false),
      std::invalid_argument);
}

TEST_CASE("barycenters identify their simplex uniquely") {
  for (int n = 4; n <= 7; ++n)
    for (int k = 0; k <= n - 2; ++k) {
      auto d = enumerate_D(k, n);
      std::set<std::vector<Rational>> seen;
      for (const auto& w : d)
        CHECK(seen.insert(barycenter(w).coords).second);
      for (const auto& w : d) {
        auto p = barycenter(w);
        int hits = 0;
        for (const auto& u : d)
          if (in_simplex(u, p, true)) ++hits;
        REQUIRE(hits == 1);
        CHECK(in_simplex(w, p, true));
      }
    }
}

TEST_CASE("extension and barycenter membership agree") {
  for (int n = 4; n <= 5; ++n)
    for (int k = 0; k <= n - 2; ++k)
      for (const auto& s : enumerate_bicolored(k, n)) {
        auto via_ext = simplices_in_tile(s);
        std::set<std::vector<int>> got;
        for (const auto& w : via_ext) got.insert(w.w);
        auto poly = tile_inequalities(s);
        std::set<std::vector<int>> via_geom;
        for (const auto& w : enumerate_D(k, n))
          if (tile_contains_point(poly, barycenter(w), true))
            via_geom.insert(w.w);
        CHECK(got == via_geom);
      }
}

TEST_CASE("project_point") {
  RationalVector p{coords({1, 2, 3, 4})};
  auto q = project_point(p);
  REQUIRE(q.size() == 3);
  CHECK(q[2] == 3);
}

TEST_CASE("decompose_pt_polytope") {
  auto tau = fig_octagon();
  int grey_idx = -1;
  for (std::size_t t = 0; t < tau.polygons.size(); ++t)
    if (tau.polygons[t].color == Color::grey) grey_idx = static_cast<int>(t);
  REQUIRE(grey_idx >= 0);

  auto parts = decompose_pt_polytope(tau, {{grey_idx, 2}});
  REQUIRE(parts.size() == 4);
  std::multiset<std::uint64_t> vols;
  for (const auto& s : parts) {
    CHECK(validate(s).tricolored == false);
    vols.insert(tile_volume(s));
  }
  CHECK(vols == std::multiset<std::uint64_t>{55, 62, 127, 134});

  // The extension sets partition Ext(C_tau).
  auto all = enumerate_extensions(sigma_order(tau));
  std::set<std::vector<Label>> seen;
  std::size_t covered = 0;
  for (const auto& s : parts)
    for (const auto& t : enumerate_extensions(sigma_order(s))) {
      CHECK(seen.insert(t.cycle()).second);
      ++covered;
      CHECK(is_extension(t, sigma_order(tau)));
    }
  CHECK(covered == all.size());

  // All-grey polygon: the full kermit family based at the chosen vertex.
  auto grey5 = make(5, {{Color::grey, ground_interval(5)}});
  auto fam = decompose_pt_polytope(grey5, {{0, 1}});
  CHECK(fam.size() == 8);
  std::set<Subdivision> expect;
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    std::vector<Label> I;
    for (int t = 0; t < 3; ++t)
      if (mask & (1u << t)) I.push_back(t + 2);
    expect.insert(kermit(5, static_cast<int>(I.size()), 1, I));
  }
  CHECK(std::set<Subdivision>(fam.begin(), fam.end()) == expect);

  // No grey polygons: the subdivision itself.
  auto hex = fig_hexagon();
  auto self = decompose_pt_polytope(hex, {});
  REQUIRE(self.size() == 1);
  CHECK(self[0] == hex);

  // Inadmissible base vertex.
  CHECK_THROWS_AS(decompose_pt_polytope(tau, {{grey_idx, 3}}),
                  std::invalid_argument);
}
