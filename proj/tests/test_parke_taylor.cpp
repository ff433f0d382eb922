#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "tiler/parke_taylor.hpp"

using namespace tiler;

namespace {

Subdivision make(int n, std::vector<std::pair<Color, std::vector<Label>>> ps) {
  Subdivision s;
  s.ground = ground_interval(n);
  for (auto& [c, vs] : ps) s.polygons.push_back({c, std::move(vs)});
  canonicalize(s);
  return s;
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

TotalCyclicOrder cyc(std::vector<Label> word) {
  return TotalCyclicOrder{std::move(word)};
}

// Point with integer coordinates z_1, ..., z_n on [n].
EvaluationPoint pt_at(std::vector<long> zs) {
  EvaluationPoint p;
  for (std::size_t i = 0; i < zs.size(); ++i)
    p.z[static_cast<Label>(i) + 1] = Rational(zs[i]);
  return p;
}

EvaluationPoint seeded_point(const std::vector<Label>& ground,
                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_point(ground, rng);
}

TotalCyclicOrder identity_cycle(const std::vector<Label>& ground) {
  auto g = ground;
  std::sort(g.begin(), g.end());
  return TotalCyclicOrder{g};
}

Rational pij(const EvaluationPoint& p, Label i, Label j) {
  return p.z.at(j) - p.z.at(i);
}

std::uint64_t binom(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::uint64_t b = 1;
  for (int t = 1; t <= r; ++t)
    b = b * static_cast<std::uint64_t>(n - r + t) / static_cast<std::uint64_t>(t);
  return b;
}

// The cycle on (ground minus {a,b}) u {*} obtained by collapsing the
// adjacent pair {a,b} of w to *.
TotalCyclicOrder collapse_pair(const TotalCyclicOrder& w, Label a, Label b) {
  std::vector<Label> out;
  const auto& c = w.cycle();
  for (std::size_t t = 0; t < c.size(); ++t) {
    Label x = c[t];
    if (x == a || x == b) {
      if (out.empty() || out.back() != kStar) out.push_back(kStar);
    } else {
      out.push_back(x);
    }
  }
  if (out.front() == kStar && out.back() == kStar) out.pop_back();
  return TotalCyclicOrder{out};
}

}  // namespace

TEST_CASE("pt_eval on explicit points") {
  // PT(I_3) at z = (0,1,2): 1/((1)(1)(-2)).
  CHECK(pt_eval(cyc({1, 2, 3}), pt_at({0, 1, 2})) == Rational(-1, 2));

  // PT(2143) = -1/(P12 P14 P34 P23) at any point.
  auto p = pt_at({3, -1, 7, 12});
  Rational direct = Rational(-1) / (pij(p, 1, 2) * pij(p, 1, 4) *
                                    pij(p, 3, 4) * pij(p, 2, 3));
  CHECK(pt_eval(cyc({2, 1, 4, 3}), p) == direct);

  // Rotation invariance of the cycle word.
  CHECK(pt_eval(cyc({1, 3, 2, 4}), p) == pt_eval(cyc({3, 2, 4, 1}), p));
  CHECK(cyc({1, 3, 2, 4}) == cyc({3, 2, 4, 1}));

  CHECK_THROWS_AS(pt_eval(cyc({1, 2, 3}), pt_at({0, 0, 2})),
                  std::invalid_argument);
}

TEST_CASE("simplex_weight matches PT of the cycle") {
  for (int n = 3; n <= 7; ++n) {
    std::vector<int> id(static_cast<std::size_t>(n));
    std::iota(id.begin(), id.end(), 1);
    std::vector<long> zs(static_cast<std::size_t>(n));
    std::iota(zs.begin(), zs.end(), 0L);
    // Denominator (1)^{n-1} (1-n).
    CHECK(simplex_weight(make_wsimplex(id), pt_at(zs)) ==
          Rational(-1, n - 1));
  }

  auto p = seeded_point(ground_interval(6), 11);
  CHECK(simplex_weight(make_wsimplex({5, 1, 4, 2, 3, 6}), p) ==
        pt_eval(cyc({2, 3, 6, 5, 1, 4}), p));
}

TEST_CASE("pt_eval homogeneity and S_n covariance") {
  auto w = cyc({5, 1, 4, 2, 3, 6});
  auto p = seeded_point(ground_interval(6), 23);

  // z -> t z + c scales PT by t^{-n}.
  for (auto [tn, td, c] : {std::tuple<long, long, long>{3, 1, 17},
                           {-2, 5, 0},
                           {7, 3, -4}}) {
    Rational t(tn, td);
    EvaluationPoint q;
    for (const auto& [lab, z] : p.z) q.z[lab] = t * z + Rational(c);
    Rational scale = 1;
    for (int i = 0; i < 6; ++i) scale *= t;
    CHECK(pt_eval(w, q) * scale == pt_eval(w, p));
  }

  // Left multiplication: PT(pi w)(z) = PT(w)(z o pi).
  std::vector<Label> pi{4, 6, 1, 3, 5, 2};  // pi(1)=4, pi(2)=6, ...
  std::vector<Label> mapped;
  for (Label x : w.cycle()) mapped.push_back(pi[static_cast<std::size_t>(x) - 1]);
  EvaluationPoint zpi;
  for (Label a = 1; a <= 6; ++a)
    zpi.z[a] = p.z.at(pi[static_cast<std::size_t>(a) - 1]);
  CHECK(pt_eval(cyc(mapped), p) == pt_eval(w, zpi));
}

TEST_CASE("tile weight is (-1)^k PT(I_n) for every bicolored subdivision") {
  for (int n = 4; n <= 6; ++n) {
    for (int k = 0; k <= n - 2; ++k) {
      for (const auto& sigma : enumerate_bicolored(k, n)) {
        for (std::uint64_t seed : {101u, 202u}) {
          auto p = seeded_point(sigma.ground, seed);
          Rational expect =
              Rational(k % 2 == 0 ? 1 : -1) * pt_eval(identity_cycle(sigma.ground), p);
          CHECK(tile_weight(sigma, p) == expect);
        }
      }
    }
  }

  // k = 0: the all-white subdivision has the single extension I_n.
  auto white = make(5, {{Color::white, {1, 2, 3, 4, 5}}});
  auto p = seeded_point(white.ground, 7);
  CHECK(tile_weight(white, p) == pt_eval(identity_cycle(white.ground), p));
}

TEST_CASE("tricolored tile weights vanish") {
  // One grey polygon: the octagon tau, summed over its 378 extensions.
  auto tau = fig_octagon();
  auto exts = enumerate_extensions(sigma_order(tau));
  REQUIRE(exts.size() == 378);
  for (std::uint64_t seed : {3u, 5u, 8u})
    CHECK(tile_weight(tau, seeded_point(tau.ground, seed)) == 0);

  // All-grey pentagon: the sum over all of D_5.
  auto grey = make(5, {{Color::grey, {1, 2, 3, 4, 5}}});
  REQUIRE(enumerate_extensions(sigma_order(grey)).size() == 24);
  CHECK(tile_weight(grey, seeded_point(grey.ground, 13)) == 0);
}

TEST_CASE("verify_tile_weight report") {
  auto sigma = fig_hexagon();
  auto rep = verify_tile_weight(sigma, 5, 42);
  CHECK(rep.family == "tile_weight");
  CHECK(rep.seed == 42);
  CHECK(rep.pass);
  REQUIRE(rep.trials.size() == 5);
  for (const auto& t : rep.trials) {
    CHECK(t.residual == 0);
    CHECK(t.point.size() == 6);
  }
  CHECK(rep.params.find("n=6") != std::string::npos);

  CHECK_THROWS_AS(verify_tile_weight(fig_octagon(), 1, 1),
                  std::invalid_argument);
}

TEST_CASE("corrupted extension set leaves a nonzero residual") {
  auto sigma = fig_hexagon();
  auto exts = enumerate_extensions(sigma_order(sigma));
  REQUIRE(exts.size() == 16);
  exts.pop_back();
  auto p = seeded_point(sigma.ground, 99);
  Rational residual = pt_sum(exts, p) - pt_eval(identity_cycle(sigma.ground), p);
  CHECK(residual != 0);
}

TEST_CASE("split_at_pair") {
  auto w = cyc({5, 1, 4, 2, 3, 6});
  auto [wl, wr] = split_at_pair(w, 1, 4);
  CHECK(wl == cyc({2, 3, kStar}));
  CHECK(wr == cyc({5, kStar, 6}));
  CHECK(wl.ground() == std::vector<Label>{2, 3, kStar});
  CHECK(wr.ground() == std::vector<Label>{5, 6, kStar});

  // The split is symmetric in the pair.
  auto [wl2, wr2] = split_at_pair(w, 4, 1);
  CHECK(wl2 == wl);
  CHECK(wr2 == wr);

  CHECK_THROWS_AS(split_at_pair(w, 1, 3), std::invalid_argument);

  // A side with fewer than 3 labels cannot carry a PT factor.
  CHECK_THROWS_AS(split_at_pair(cyc({1, 2, 3, 4}), 1, 2), IncompatibleArc);
}

TEST_CASE("facet_weight on the hexagon arc 1 -> 4") {
  auto sigma = fig_hexagon();
  auto pl = seeded_point({2, 3, kStar}, 31);
  auto pr = seeded_point({5, 6, kStar}, 37);
  // Six shuffles of {2,3} and {5,6}; k = 2 contributes (-1)^{k-1}.
  Rational expect = Rational(-6) * pt_eval(cyc({2, 3, kStar}), pl) *
                    pt_eval(cyc({5, 6, kStar}), pr);
  CHECK(facet_weight(sigma, Arc{1, 4}, pl, pr) == expect);

  // Only internal facet-defining arcs are accepted.
  CHECK_THROWS_AS(facet_weight(sigma, Arc{4, 1}, pl, pr), IncompatibleArc);
  CHECK_THROWS_AS(facet_weight(sigma, Arc{2, 1}, pl, pr), IncompatibleArc);
}

TEST_CASE("facet weight formula holds for every internal facet arc") {
  for (int n = 4; n <= 6; ++n) {
    for (int k = 0; k <= n - 2; ++k) {
      for (const auto& sigma : enumerate_bicolored(k, n)) {
        for (const auto& f : facet_defining_arcs(sigma)) {
          if (!f.internal) continue;
          std::pair<Subdivision, Subdivision> sides;
          try {
            sides = contract_arc(sigma, f.arc);
          } catch (const IncompatibleArc&) {
            // A side with fewer than 3 labels carries no PT factor; the
            // facet weight is undefined there too.
            auto pb = seeded_point(sigma.ground, 300);
            CHECK_THROWS_AS(facet_weight(sigma, f.arc, pb, pb),
                            IncompatibleArc);
            continue;
          }
          const auto& [l, r] = sides;
          auto pl = seeded_point(l.ground, 301);
          auto pr = seeded_point(r.ground, 302);
          Rational got = facet_weight(sigma, f.arc, pl, pr);

          // I_{N_L} and I_{N_R} follow the circular order of [n] (the side
          // intervals may wrap through n), with * at the contracted edge.
          auto side_identity = [&](Label from, Label to) {
            std::vector<Label> c;
            for (Label x = from % n + 1; x != to; x = x % n + 1) c.push_back(x);
            c.push_back(kStar);
            return TotalCyclicOrder{c};
          };

          // (-1)^{k-1} C(n-2, |N_L|-1) PT(I_{N_L}) PT(I_{N_R}).
          Rational expect =
              Rational(k % 2 == 0 ? -1 : 1) *
              Rational(static_cast<long>(binom(n - 2, l.n() - 1))) *
              pt_eval(side_identity(f.arc.src, f.arc.dst), pl) *
              pt_eval(side_identity(f.arc.dst, f.arc.src), pr);
          CHECK(got == expect);

          // Factorization through the contracted subdivisions.
          Rational factored =
              Rational(static_cast<long>(binom(n - 2, l.n() - 1))) *
              tile_weight(l, pl) * tile_weight(r, pr);
          CHECK(got == factored);
        }
      }
    }
  }
}

TEST_CASE("pt_residue removes the pair factor with a sign") {
  auto w = cyc({5, 1, 4, 2, 3, 6});
  auto p = seeded_point(ground_interval(6), 53);

  // At a generic point the residue is just P_ij PT(w), either orientation.
  CHECK(pt_residue(w, 1, 4, p) == pij(p, 1, 4) * pt_eval(w, p));
  CHECK(pt_residue(w, 4, 1, p) == pij(p, 4, 1) * pt_eval(w, p));
  CHECK(pt_residue(w, 4, 1, p) == -pt_residue(w, 1, 4, p));

  // Non-adjacent pairs have no pole.
  CHECK(pt_residue(w, 1, 2, p) == 0);
  CHECK(pt_residue(w, 2, 6, p) == 0);

  // The point may sit on the pole itself.
  auto q = p;
  q.z[4] = q.z.at(1);
  CHECK(pt_residue(w, 1, 4, q) != 0);
  CHECK_THROWS_AS(pt_eval(w, q), std::invalid_argument);
}

TEST_CASE("contracting an adjacent pair of the cycle") {
  // lim_{z_i -> z_{i-1}} (z_i - z_{i-1}) omega(w) = (-1)^c omega(w'), where
  // w' collapses {i-1, i} to * and c records the orientation of the pair.
  auto p = seeded_point(ground_interval(6), 61);
  for (const auto& w : {cyc({5, 1, 4, 2, 3, 6}), cyc({2, 3, 1, 5, 4, 6}),
                        cyc({1, 2, 3, 4, 5, 6})}) {
    const auto& c = w.cycle();
    for (std::size_t t = 0; t < c.size(); ++t) {
      Label a = c[t], b = c[(t + 1) % c.size()];
      if ((b % 6) + 1 != a && (a % 6) + 1 != b) continue;  // want {i-1, i}
      Label i = (a % 6) + 1 == b ? b : a;  // the larger of the cyclic pair
      auto q = p;
      q.z[i] = q.z.at(i == 1 ? 6 : i - 1);
      EvaluationPoint qc;
      for (const auto& [lab, z] : q.z)
        if (lab != i && lab != (i == 1 ? 6 : i - 1)) qc.z[lab] = z;
      qc.z[kStar] = q.z.at(i);
      auto wc = collapse_pair(w, a, b);
      int orient = a == (i == 1 ? 6 : i - 1) ? 1 : -1;
      CHECK(pt_residue(w, i == 1 ? 6 : i - 1, i, q) ==
            Rational(orient) * pt_eval(wc, qc));
    }
  }
}

TEST_CASE("residues of the tile weight vanish off polygon edges") {
  auto sigma = fig_hexagon();
  auto exts = enumerate_extensions(sigma_order(sigma));
  auto base = seeded_point(sigma.ground, 71);

  std::set<std::pair<Label, Label>> edges;
  for (const auto& poly : sigma.polygons) {
    const auto& vs = poly.vertices;
    for (std::size_t t = 0; t < vs.size(); ++t) {
      Label a = vs[t], b = vs[(t + 1) % vs.size()];
      edges.insert({std::min(a, b), std::max(a, b)});
    }
  }

  for (Label i = 1; i <= 6; ++i) {
    for (Label j = i + 1; j <= 6; ++j) {
      if (edges.count({i, j})) continue;
      auto q = base;
      q.z[j] = q.z.at(i);
      Rational res = 0;
      for (const auto& w : exts) res += pt_residue(w, i, j, q);
      CHECK(res == 0);

      // Pairwise cancellation: swapping the adjacent pair kills the pole.
      for (const auto& w : exts) {
        const auto& c = w.cycle();
        auto pos = std::find(c.begin(), c.end(), i) - c.begin();
        if (c[(static_cast<std::size_t>(pos) + 1) % c.size()] != j) continue;
        auto swapped = c;
        std::swap(swapped[static_cast<std::size_t>(pos)],
                  swapped[(static_cast<std::size_t>(pos) + 1) % c.size()]);
        CHECK(pt_residue(w, i, j, q) +
                  pt_residue(TotalCyclicOrder{swapped}, i, j, q) ==
              0);
      }
    }
  }

  // On a boundary edge the residue matches the one of (-1)^k PT(I_n).
  auto q = base;
  q.z[3] = q.z.at(2);
  Rational res = 0;
  for (const auto& w : exts) res += pt_residue(w, 2, 3, q);
  CHECK(res == pt_residue(identity_cycle(sigma.ground), 2, 3, q));
}

TEST_CASE("shuffle_set") {
  auto sh = shuffle_set({1}, {2, 3});
  REQUIRE(sh.size() == 3);
  CHECK(sh[0] == cyc({1, 2, 3, 4}));
  CHECK(sh[1] == cyc({2, 1, 3, 4}));
  CHECK(sh[2] == cyc({2, 3, 1, 4}));

  CHECK(shuffle_set({2, 1}, {3, 4}).size() == binom(4, 2));
  CHECK_THROWS_AS(shuffle_set({1, 2}, {2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(shuffle_set({1}, {3}), std::invalid_argument);
  CHECK(shuffle_set({}, {1, 2}).size() == 1);
}

TEST_CASE("u1 decoupling") {
  // n = 3 by hand: PT(123) + PT(213) = 0.
  auto p = pt_at({0, 1, 5});
  CHECK(pt_eval(cyc({1, 2, 3}), p) + pt_eval(cyc({2, 1, 3}), p) == 0);

  for (int n = 3; n <= 6; ++n) {
    auto rep = verify_u1(n, 3, 1000 + static_cast<std::uint64_t>(n));
    CHECK(rep.family == "u1");
    CHECK(rep.pass);
    for (const auto& t : rep.trials) CHECK(t.residual == 0);
  }
  CHECK_THROWS_AS(verify_u1(2, 1, 1), std::invalid_argument);
}

TEST_CASE("shuffle identities for every split of [n-1]") {
  for (int n = 4; n <= 6; ++n) {
    for (int mask = 1; mask < (1 << (n - 1)) - 1; ++mask) {
      std::vector<Label> u, v;
      for (Label x = 1; x <= n - 1; ++x)
        ((mask >> (x - 1)) & 1 ? u : v).push_back(x);
      auto rep = verify_shuffle(u, v, 2, static_cast<std::uint64_t>(mask));
      CHECK(rep.pass);
    }
  }

  // The identity holds for arbitrary orderings of the two sequences.
  for (auto [u, v] : std::vector<std::pair<std::vector<Label>, std::vector<Label>>>{
           {{3, 1}, {2, 4}}, {{2, 1}, {4, 3}}, {{4, 2, 1}, {3}}}) {
    CHECK(verify_shuffle(u, v, 2, 17).pass);
  }

  auto rep = verify_shuffle({1}, {2, 3}, 2, 5);
  CHECK(rep.family == "shuffle");
  CHECK(rep.params == "u=(1) v=(2,3)");
}

TEST_CASE("grey vanishing identity") {
  auto rep = verify_grey_vanishing(fig_octagon(), 3, 2024);
  CHECK(rep.family == "grey_vanishing");
  CHECK(rep.pass);
  REQUIRE(rep.trials.size() == 3);
  for (const auto& t : rep.trials) CHECK(t.residual == 0);

  CHECK_THROWS_AS(verify_grey_vanishing(fig_hexagon(), 1, 1),
                  std::invalid_argument);
}
