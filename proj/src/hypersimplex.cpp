#include "tiler/hypersimplex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace tiler {

namespace {

void require_permutation(const std::vector<int>& word) {
  const int n = static_cast<int>(word.size());
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int x : word) {
    if (x < 1 || x > n || seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("word is not a permutation of [n]");
    seen[static_cast<std::size_t>(x)] = 1;
  }
}

// Is t in the cyclic interval [a, b-1] of [n] (empty when a == b)?
bool in_interval(int t, int a, int b, int n) {
  return ((t - a) % n + n) % n < ((b - a) % n + n) % n;
}

std::vector<Label> standard_ground(const Subdivision& s) {
  auto g = ground_interval(s.n());
  if (s.ground != g)
    throw std::invalid_argument("operation requires the standard n-gon [1..n]");
  return g;
}

}  // namespace

std::vector<int> cyclic_descents(const std::vector<int>& word) {
  require_permutation(word);
  const int n = static_cast<int>(word.size());
  std::vector<int> pos(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(word[static_cast<std::size_t>(i)])] = i;
  std::vector<int> out;
  for (int i = 1; i < n; ++i)
    if (pos[static_cast<std::size_t>(i)] > pos[static_cast<std::size_t>(i) + 1])
      out.push_back(i);
  if (n >= 2 && pos[1] < pos[static_cast<std::size_t>(n)]) out.push_back(n);
  return out;
}

std::vector<std::vector<int>> vertex_sets(const std::vector<int>& w) {
  require_permutation(w);
  const int n = static_cast<int>(w.size());
  std::vector<std::vector<int>> I(static_cast<std::size_t>(n));
  for (int r = 1; r <= n; ++r) {
    // w^{(r)}: the rotation of the cycle (w) whose word ends at r.
    auto it = std::find(w.begin(), w.end(), r);
    int p = static_cast<int>(it - w.begin());
    std::vector<int> rot(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t)
      rot[static_cast<std::size_t>(t)] =
          w[static_cast<std::size_t>((p + 1 + t) % n)];
    I[static_cast<std::size_t>(r) - 1] = cyclic_descents(rot);
  }
  return I;
}

WSimplex make_wsimplex(const std::vector<int>& w) {
  require_permutation(w);
  if (w.empty() || w.back() != static_cast<int>(w.size()))
    throw std::invalid_argument("w must end with n");
  WSimplex s;
  s.w = w;
  s.k = static_cast<int>(cyclic_descents(w).size()) - 1;
  s.I = vertex_sets(w);
  return s;
}

std::vector<WSimplex> enumerate_D(int k, int n) {
  if (n < 2 || k < 0 || k > n - 2)
    throw std::invalid_argument("enumerate_D: need 0 <= k <= n-2");
  std::vector<int> head(static_cast<std::size_t>(n) - 1);
  std::iota(head.begin(), head.end(), 1);
  std::vector<WSimplex> out;
  do {
    std::vector<int> w = head;
    w.push_back(n);
    if (static_cast<int>(cyclic_descents(w).size()) == k + 1)
      out.push_back(make_wsimplex(w));
  } while (std::next_permutation(head.begin(), head.end()));
  return out;
}

std::uint64_t eulerian_count(int k, int n) {
  // E_{k,n-1} = sum_{l=0}^{k+1} (-1)^l C(n,l) (k+1-l)^{n-1}
  long long total = 0;
  for (int l = 0; l <= k + 1; ++l) {
    long long binom = 1;
    for (int t = 0; t < l; ++t) binom = binom * (n - t) / (t + 1);
    long long pw = 1;
    for (int t = 0; t < n - 1; ++t) pw *= (k + 1 - l);
    total += (l % 2 == 0 ? 1 : -1) * binom * pw;
  }
  return static_cast<std::uint64_t>(total);
}

std::vector<SimplexFacet> w_simplex_facets(const WSimplex& s) {
  const int n = s.n();
  std::vector<SimplexFacet> out;
  for (int p = 0; p < n; ++p) {
    int a = s.w[static_cast<std::size_t>(p)];
    int b = s.w[static_cast<std::size_t>((p + 1) % n)];
    int bound = 0;
    for (int t : s.I[static_cast<std::size_t>(b) - 1])
      if (in_interval(t, a, b, n)) ++bound;
    out.push_back({a, b, bound});
  }
  return out;
}

std::optional<SharedFacet> facet_sharing(const WSimplex& u, const WSimplex& w) {
  const int n = w.n();
  if (u.n() != n || u.k != w.k) return std::nullopt;
  if (u.w == w.w) return std::nullopt;
  for (int p = 0; p < n; ++p) {
    int q = (p + 1) % n;
    std::vector<int> swapped = w.w;
    std::swap(swapped[static_cast<std::size_t>(p)],
              swapped[static_cast<std::size_t>(q)]);
    // Canonical rotation: word ending at n.
    auto it = std::find(swapped.begin(), swapped.end(), n);
    std::rotate(swapped.begin(), it + 1 == swapped.end() ? swapped.begin()
                                                         : it + 1,
                swapped.end());
    if (swapped != u.w) continue;
    int i = w.w[static_cast<std::size_t>(p)];
    int j = w.w[static_cast<std::size_t>(q)];
    int d = ((j - i) % n + n) % n;
    if (d == 1 || d == n - 1) continue;  // adjacent values never share a facet
    int c = 0;
    for (int t : w.I[static_cast<std::size_t>(j) - 1])
      if (in_interval(t, i, j, n)) ++c;
    return SharedFacet{i, j, c};
  }
  return std::nullopt;
}

TilePolytope tile_inequalities(const Subdivision& sigma) {
  standard_ground(sigma);
  auto type = validate(sigma);
  if (type.tricolored)
    throw std::invalid_argument("tile_inequalities needs a bicolored subdivision");
  const int n = sigma.n();
  std::set<std::pair<Label, Label>> facet_arcs;
  for (const auto& f : facet_defining_arcs(sigma))
    facet_arcs.insert({f.arc.src, f.arc.dst});
  std::set<Label> white_vertices;
  for (const auto& p : sigma.polygons)
    if (p.color == Color::white)
      white_vertices.insert(p.vertices.begin(), p.vertices.end());

  TilePolytope poly;
  poly.n = n;
  poly.k = type.k;
  poly.projected = false;
  for (const auto& a : compatible_arcs(sigma)) {
    IntervalBound b;
    b.src = a.src;
    b.dst = a.dst;
    b.lo = area(sigma, a);
    b.hi = b.lo + 1;
    b.facet_lower = facet_arcs.count({a.src, a.dst}) != 0 ||
                    (a.dst == a.src % n + 1 && white_vertices.count(a.src) != 0);
    poly.bounds.push_back(b);
  }
  return poly;
}

TilePolytope pt_polytope_inequalities(const Subdivision& tau) {
  standard_ground(tau);
  validate(tau);
  TilePolytope poly;
  poly.n = tau.n();
  poly.k = -1;
  poly.projected = true;
  for (const auto& a : compatible_arcs(tau)) {
    if (a.src >= a.dst) continue;  // projected coordinates x_1..x_{n-1}
    IntervalBound b;
    b.src = a.src;
    b.dst = a.dst;
    b.lo = area(tau, a);
    b.hi = b.lo + grey_area(tau, a) + 1;
    poly.bounds.push_back(b);
  }
  return poly;
}

bool tile_contains_point(const TilePolytope& poly, const RationalVector& p,
                         bool strict) {
  const std::size_t dim =
      static_cast<std::size_t>(poly.projected ? poly.n - 1 : poly.n);
  if (p.size() != dim)
    throw std::invalid_argument("point dimension mismatch");
  if (!poly.projected) {
    Rational total = 0;
    for (const auto& c : p.coords) total += c;
    if (total != poly.k + 1) return false;
  }
  for (const auto& b : poly.bounds) {
    Rational val = 0;
    for (int t = b.src; t != b.dst; t = t % poly.n + 1)
      val += p[static_cast<std::size_t>(t) - 1];
    if (strict ? !(b.lo < val && val < b.hi) : !(b.lo <= val && val <= b.hi))
      return false;
  }
  return true;
}

std::vector<WSimplex> simplices_in_tile(const Subdivision& s) {
  standard_ground(s);
  validate(s);
  std::vector<WSimplex> out;
  for (const auto& t : enumerate_extensions(sigma_order(s)))
    out.push_back(make_wsimplex(t.cycle()));
  return out;
}

std::uint64_t tile_volume(const Subdivision& s) {
  validate(s);
  return count_extensions(sigma_order(s));
}

RationalVector barycenter(const WSimplex& w) {
  const int n = w.n();
  RationalVector p;
  p.coords.assign(static_cast<std::size_t>(n), Rational(0));
  for (const auto& I : w.I)
    for (int t : I) p[static_cast<std::size_t>(t) - 1] += 1;
  for (auto& c : p.coords) {
    c /= n;
    c.canonicalize();
  }
  return p;
}

RationalVector project_point(const RationalVector& p) {
  RationalVector q = p;
  q.coords.pop_back();
  return q;
}

std::vector<Subdivision> decompose_pt_polytope(
    const Subdivision& tau, const std::map<int, Label>& base_vertices) {
  standard_ground(tau);
  auto type = validate(tau);
  (void)type;
  const int n = tau.n();
  std::vector<int> grey_idx;
  for (std::size_t i = 0; i < tau.polygons.size(); ++i)
    if (tau.polygons[i].color == Color::grey)
      grey_idx.push_back(static_cast<int>(i));
  for (int g : grey_idx) {
    auto it = base_vertices.find(g);
    if (it == base_vertices.end())
      throw std::invalid_argument("missing base vertex for a grey polygon");
    const auto& vs = tau.polygons[static_cast<std::size_t>(g)].vertices;
    if (std::find(vs.begin(), vs.end(), it->second) == vs.end())
      throw std::invalid_argument("base vertex not a vertex of its polygon");
  }

  // Admissibility: repeatedly find a pending grey polygon with an edge
  // (base, j), base < j, holding the polygon on the left of base -> j with
  // no other pending grey polygon on that side.
  {
    std::set<int> pending(grey_idx.begin(), grey_idx.end());
    auto left_of = [&](const Polygon& p, Label i, Label j) {
      return std::all_of(p.vertices.begin(), p.vertices.end(), [&](Label v) {
        return ((v - i) % n + n) % n <= ((j - i) % n + n) % n;
      });
    };
    while (!pending.empty()) {
      bool progressed = false;
      for (int g : pending) {
        const auto& p = tau.polygons[static_cast<std::size_t>(g)];
        Label base = base_vertices.at(g);
        const auto m = p.vertices.size();
        for (std::size_t t = 0; t < m && !progressed; ++t) {
          Label a = p.vertices[t], b = p.vertices[(t + 1) % m];
          // p lies to the left of the arc b -> a.
          Label i = b, j = a;
          if (i != base || i >= j) continue;
          bool clear = true;
          for (int h : pending)
            if (h != g &&
                left_of(tau.polygons[static_cast<std::size_t>(h)], i, j))
              clear = false;
          if (clear) {
            pending.erase(g);
            progressed = true;
          }
        }
        if (progressed) break;
      }
      if (!progressed)
        throw std::invalid_argument(
            "base vertices do not follow an admissible order");
    }
  }

  // Kermit replacement options per grey polygon.
  std::vector<std::vector<std::vector<Polygon>>> options;
  for (int g : grey_idx) {
    const auto& p = tau.polygons[static_cast<std::size_t>(g)];
    Label base = base_vertices.at(g);
    const auto m = p.vertices.size();
    std::size_t ib = static_cast<std::size_t>(
        std::find(p.vertices.begin(), p.vertices.end(), base) -
        p.vertices.begin());
    Label pred = p.vertices[(ib + m - 1) % m];
    std::vector<Label> free;
    for (Label v : p.vertices)
      if (v != base && v != pred) free.push_back(v);
    std::vector<std::vector<Polygon>> opts;
    for (std::uint32_t mask = 0; mask < (1u << free.size()); ++mask) {
      std::vector<Label> I;
      for (std::size_t t = 0; t < free.size(); ++t)
        if (mask & (1u << t)) I.push_back(free[t]);
      opts.push_back(kermit_pieces(p.vertices, base, I));
    }
    options.push_back(std::move(opts));
  }

  std::vector<Subdivision> out;
  std::vector<std::size_t> choice(options.size(), 0);
  while (true) {
    Subdivision s;
    s.ground = tau.ground;
    for (std::size_t i = 0; i < tau.polygons.size(); ++i)
      if (tau.polygons[i].color != Color::grey)
        s.polygons.push_back(tau.polygons[i]);
    for (std::size_t g = 0; g < options.size(); ++g)
      for (const auto& piece : options[g][choice[g]])
        s.polygons.push_back(piece);
    canonicalize(s);
    merge_same_color(s);
    canonicalize(s);
    validate(s);
    out.push_back(std::move(s));
    // Next choice vector.
    std::size_t g = 0;
    while (g < options.size() && ++choice[g] == options[g].size()) {
      choice[g] = 0;
      ++g;
    }
    if (g == options.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tiler
