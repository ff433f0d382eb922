#include "tiler/subdivision.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <tuple>

namespace tiler {

namespace {

std::string label_str(Label v) {
  return v == kStar ? std::string("*") : std::to_string(v);
}

std::map<Label, int> position_map(const std::vector<Label>& ground) {
  std::map<Label, int> pos;
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if (!pos.emplace(ground[i], static_cast<int>(i)).second)
      throw ValidationError(ValidationError::Kind::BadStructure,
                            "ground set has repeated labels");
  }
  return pos;
}

// Cyclic distance from position a to position b, walking clockwise.
int cyc_dist(int a, int b, int n) { return ((b - a) % n + n) % n; }

int poly_order(Color c) { return c == Color::black ? 0 : c == Color::white ? 1 : 2; }

bool polygon_less(const Polygon& a, const Polygon& b) {
  if (a.vertices != b.vertices) return a.vertices < b.vertices;
  return poly_order(a.color) < poly_order(b.color);
}

}  // namespace

std::string color_name(Color c) {
  switch (c) {
    case Color::black: return "black";
    case Color::white: return "white";
    case Color::grey: return "grey";
  }
  return "?";
}

Color color_from_name(const std::string& s) {
  if (s == "black") return Color::black;
  if (s == "white") return Color::white;
  if (s == "grey" || s == "gray") return Color::grey;
  throw std::invalid_argument("unknown color: " + s);
}

bool Subdivision::is_bicolored() const {
  return std::none_of(polygons.begin(), polygons.end(),
                      [](const Polygon& p) { return p.color == Color::grey; });
}

bool Subdivision::operator<(const Subdivision& o) const {
  if (ground != o.ground) return ground < o.ground;
  return std::lexicographical_compare(polygons.begin(), polygons.end(),
                                      o.polygons.begin(), o.polygons.end(),
                                      polygon_less);
}

void canonicalize(Subdivision& s) {
  auto pos = position_map(s.ground);
  for (auto& p : s.polygons) {
    for (Label v : p.vertices)
      if (pos.find(v) == pos.end())
        throw ValidationError(ValidationError::Kind::BadStructure,
                              "polygon vertex " + label_str(v) +
                                  " not in ground");
    std::sort(p.vertices.begin(), p.vertices.end(),
              [&](Label a, Label b) { return pos.at(a) < pos.at(b); });
  }
  std::sort(s.polygons.begin(), s.polygons.end(), polygon_less);
}

void merge_same_color(Subdivision& s) {
  auto pos = position_map(s.ground);
  const int n = s.n();
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<int, int>, std::vector<std::size_t>> edge_use;
    for (std::size_t pi = 0; pi < s.polygons.size(); ++pi) {
      const auto& vs = s.polygons[pi].vertices;
      for (std::size_t t = 0; t < vs.size(); ++t) {
        int a = pos.at(vs[t]), b = pos.at(vs[(t + 1) % vs.size()]);
        edge_use[{std::min(a, b), std::max(a, b)}].push_back(pi);
      }
    }
    for (const auto& [e, users] : edge_use) {
      bool boundary =
          (e.second - e.first == 1) || (e.first == 0 && e.second == n - 1);
      if (boundary || users.size() != 2) continue;
      auto& x = s.polygons[users[0]];
      auto& y = s.polygons[users[1]];
      if (x.color != y.color) continue;
      std::set<Label> merged(x.vertices.begin(), x.vertices.end());
      merged.insert(y.vertices.begin(), y.vertices.end());
      x.vertices.assign(merged.begin(), merged.end());
      std::sort(x.vertices.begin(), x.vertices.end(),
                [&](Label a, Label b) { return pos.at(a) < pos.at(b); });
      s.polygons.erase(s.polygons.begin() +
                       static_cast<std::ptrdiff_t>(users[1]));
      changed = true;
      break;
    }
  }
}

SubdivisionType validate(const Subdivision& s) {
  const int n = s.n();
  if (n < 3)
    throw ValidationError(ValidationError::Kind::BadStructure,
                          "ambient polygon needs >= 3 vertices");
  auto pos = position_map(s.ground);
  if (s.polygons.empty())
    throw ValidationError(ValidationError::Kind::CoverageGap, "no polygons");

  // Edge usage: (position pair p<q) -> polygon indices using it.
  std::map<std::pair<int, int>, std::vector<int>> edge_use;
  int total_area = 0;
  for (std::size_t pi = 0; pi < s.polygons.size(); ++pi) {
    const auto& poly = s.polygons[pi];
    const auto m = poly.vertices.size();
    if (m < 3)
      throw ValidationError(ValidationError::Kind::BadStructure,
                            "polygon with fewer than 3 vertices");
    std::vector<int> vp;
    for (Label v : poly.vertices) {
      auto it = pos.find(v);
      if (it == pos.end())
        throw ValidationError(ValidationError::Kind::BadStructure,
                              "polygon vertex " + label_str(v) +
                                  " not in ground");
      vp.push_back(it->second);
    }
    if (!std::is_sorted(vp.begin(), vp.end()) ||
        std::adjacent_find(vp.begin(), vp.end()) != vp.end())
      throw ValidationError(ValidationError::Kind::BadStructure,
                            "polygon vertices not in canonical cyclic order");
    total_area += static_cast<int>(m) - 2;
    for (std::size_t t = 0; t < m; ++t) {
      int a = vp[t], b = vp[(t + 1) % m];
      edge_use[{std::min(a, b), std::max(a, b)}].push_back(
          static_cast<int>(pi));
    }
  }

  std::vector<std::pair<int, int>> chords;
  for (const auto& [e, users] : edge_use) {
    bool boundary = (e.second - e.first == 1) ||
                    (e.first == 0 && e.second == n - 1);
    if (boundary) {
      if (users.size() > 1)
        throw ValidationError(ValidationError::Kind::CoverageOverlap,
                              "boundary edge covered twice");
    } else {
      chords.push_back(e);
      if (users.size() == 1)
        throw ValidationError(ValidationError::Kind::CoverageGap,
                              "chord bounding a single polygon");
      if (users.size() > 2)
        throw ValidationError(ValidationError::Kind::CoverageOverlap,
                              "chord bounding more than two polygons");
      if (s.polygons[static_cast<std::size_t>(users[0])].color ==
          s.polygons[static_cast<std::size_t>(users[1])].color)
        throw ValidationError(ValidationError::Kind::ColorClash,
                              "same-color polygons share a chord");
    }
  }
  // Every boundary edge of the n-gon must be used exactly once.
  for (int p = 0; p < n; ++p) {
    int q = (p + 1) % n;
    auto e = std::make_pair(std::min(p, q), std::max(p, q));
    if (edge_use.find(e) == edge_use.end())
      throw ValidationError(ValidationError::Kind::CoverageGap,
                            "boundary edge not covered");
  }
  for (std::size_t a = 0; a < chords.size(); ++a)
    for (std::size_t b = a + 1; b < chords.size(); ++b) {
      auto [p1, q1] = chords[a];
      auto [p2, q2] = chords[b];
      bool crossing = (p1 < p2 && p2 < q1 && q1 < q2) ||
                      (p2 < p1 && p1 < q2 && q2 < q1);
      if (crossing)
        throw ValidationError(ValidationError::Kind::CrossingChords,
                              "crossing chords");
    }
  if (total_area < n - 2)
    throw ValidationError(ValidationError::Kind::CoverageGap,
                          "polygon areas cover less than the n-gon");
  if (total_area > n - 2)
    throw ValidationError(ValidationError::Kind::CoverageOverlap,
                          "polygon areas exceed the n-gon");

  SubdivisionType t;
  t.n = n;
  for (const auto& p : s.polygons) {
    int a = static_cast<int>(p.vertices.size()) - 2;
    if (p.color == Color::black) t.k += a;
    if (p.color == Color::grey) {
      t.ell += a;
      t.tricolored = true;
    }
  }
  return t;
}

namespace {

// Dissections of the convex polygon on vertex positions idx (>= 2 entries,
// in cyclic order), recursing on the face that contains the edge
// (idx.front(), idx.back()). Faces are position-index lists.
std::vector<std::vector<std::vector<int>>> dissect(
    const std::vector<int>& idx) {
  if (idx.size() == 2) return {{}};
  const int m = static_cast<int>(idx.size());
  std::vector<std::vector<std::vector<int>>> out;
  const int interior = m - 2;
  for (std::uint32_t mask = 1; mask < (1u << interior); ++mask) {
    std::vector<int> face_at{0};
    for (int t = 0; t < interior; ++t)
      if (mask & (1u << t)) face_at.push_back(t + 1);
    face_at.push_back(m - 1);
    std::vector<int> face;
    for (int a : face_at) face.push_back(idx[static_cast<std::size_t>(a)]);
    // Recursively dissect every gap between consecutive face vertices.
    std::vector<std::vector<std::vector<std::vector<int>>>> gap_options;
    for (std::size_t g = 0; g + 1 < face_at.size(); ++g) {
      int a = face_at[g], b = face_at[g + 1];
      if (b == a + 1) continue;
      std::vector<int> sub(idx.begin() + a, idx.begin() + b + 1);
      gap_options.push_back(dissect(sub));
    }
    std::vector<std::vector<std::vector<int>>> combos{{face}};
    for (const auto& opts : gap_options) {
      std::vector<std::vector<std::vector<int>>> next;
      for (const auto& partial : combos)
        for (const auto& choice : opts) {
          auto d = partial;
          d.insert(d.end(), choice.begin(), choice.end());
          next.push_back(d);
        }
      combos = std::move(next);
    }
    out.insert(out.end(), combos.begin(), combos.end());
  }
  return out;
}

// Face adjacency graph of a dissection: faces sharing a chord.
std::vector<std::vector<int>> face_adjacency(
    const std::vector<std::vector<int>>& faces) {
  std::map<std::pair<int, int>, std::vector<int>> edge_use;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& vs = faces[f];
    for (std::size_t t = 0; t < vs.size(); ++t) {
      int a = vs[t], b = vs[(t + 1) % vs.size()];
      edge_use[{std::min(a, b), std::max(a, b)}].push_back(
          static_cast<int>(f));
    }
  }
  std::vector<std::vector<int>> adj(faces.size());
  for (const auto& [e, users] : edge_use)
    if (users.size() == 2) {
      adj[static_cast<std::size_t>(users[0])].push_back(users[1]);
      adj[static_cast<std::size_t>(users[1])].push_back(users[0]);
    }
  return adj;
}

Subdivision build_subdivision(int n, const std::vector<std::vector<int>>& faces,
                              const std::vector<Color>& colors) {
  Subdivision s;
  s.ground = ground_interval(n);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    Polygon p;
    p.color = colors[f];
    for (int v : faces[f]) p.vertices.push_back(v + 1);
    s.polygons.push_back(std::move(p));
  }
  canonicalize(s);
  return s;
}

}  // namespace

std::vector<std::vector<std::vector<Label>>> enumerate_dissections(int n) {
  if (n < 3) throw std::invalid_argument("enumerate_dissections: need n >= 3");
  std::vector<int> idx(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::vector<std::vector<std::vector<Label>>> out;
  for (const auto& faces : dissect(idx)) {
    std::vector<std::vector<Label>> d;
    for (const auto& f : faces) {
      std::vector<Label> vs;
      for (int v : f) vs.push_back(v + 1);
      std::sort(vs.begin(), vs.end());
      d.push_back(std::move(vs));
    }
    std::sort(d.begin(), d.end());
    out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subdivision> enumerate_bicolored(int k, int n) {
  if (n < 3 || k < 0 || k > n - 2)
    throw std::invalid_argument("enumerate_bicolored: need n >= 3, 0 <= k <= n-2");
  std::vector<int> idx(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::vector<Subdivision> out;
  for (const auto& faces : dissect(idx)) {
    auto adj = face_adjacency(faces);
    for (Color c0 : {Color::black, Color::white}) {
      // The dual graph is a tree: the color of face 0 forces everything.
      std::vector<Color> colors(faces.size());
      std::vector<int> st{0};
      std::vector<char> seen(faces.size(), 0);
      colors[0] = c0;
      seen[0] = 1;
      while (!st.empty()) {
        int f = st.back();
        st.pop_back();
        for (int g : adj[static_cast<std::size_t>(f)])
          if (!seen[static_cast<std::size_t>(g)]) {
            seen[static_cast<std::size_t>(g)] = 1;
            colors[static_cast<std::size_t>(g)] =
                colors[static_cast<std::size_t>(f)] == Color::black
                    ? Color::white
                    : Color::black;
            st.push_back(g);
          }
      }
      int black = 0;
      for (std::size_t f = 0; f < faces.size(); ++f)
        if (colors[f] == Color::black)
          black += static_cast<int>(faces[f].size()) - 2;
      if (black == k) out.push_back(build_subdivision(n, faces, colors));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subdivision> enumerate_tricolored(int n) {
  if (n < 3) throw std::invalid_argument("enumerate_tricolored: need n >= 3");
  std::vector<int> idx(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::vector<Subdivision> out;
  for (const auto& faces : dissect(idx)) {
    auto adj = face_adjacency(faces);
    std::vector<Color> colors(faces.size(), Color::white);
    // Backtrack over proper 3-colorings of the dual tree.
    auto rec = [&](auto&& self, std::size_t f) -> void {
      if (f == faces.size()) {
        out.push_back(build_subdivision(n, faces, colors));
        return;
      }
      for (Color c : {Color::black, Color::white, Color::grey}) {
        bool ok = true;
        for (int g : adj[f])
          if (static_cast<std::size_t>(g) < f &&
              colors[static_cast<std::size_t>(g)] == c)
            ok = false;
        if (ok) {
          colors[f] = c;
          self(self, f + 1);
        }
      }
    };
    rec(rec, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_compatible_arc(const Subdivision& s, const Arc& a) {
  if (a.src == a.dst) return false;
  for (const auto& p : s.polygons) {
    auto it_i = std::find(p.vertices.begin(), p.vertices.end(), a.src);
    auto it_j = std::find(p.vertices.begin(), p.vertices.end(), a.dst);
    if (it_i == p.vertices.end() || it_j == p.vertices.end()) continue;
    if (p.color != Color::grey) return true;
    // Inside a grey polygon only boundary edges count.
    auto di = std::distance(p.vertices.begin(), it_i);
    auto dj = std::distance(p.vertices.begin(), it_j);
    auto m = static_cast<std::ptrdiff_t>(p.vertices.size());
    if ((di + 1) % m == dj || (dj + 1) % m == di) return true;
  }
  return false;
}

std::vector<Arc> compatible_arcs(const Subdivision& s) {
  std::vector<Arc> out;
  for (Label i : s.ground)
    for (Label j : s.ground)
      if (i != j && is_compatible_arc(s, {i, j})) out.push_back({i, j});
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

int colored_area_left(const Subdivision& s, const Arc& a, Color color) {
  if (!is_compatible_arc(s, a))
    throw IncompatibleArc("arc " + label_str(a.src) + "->" + label_str(a.dst) +
                          " is not compatible with the subdivision");
  auto pos = position_map(s.ground);
  const int n = s.n();
  int pi = pos.at(a.src), pj = pos.at(a.dst);
  int width = cyc_dist(pi, pj, n);
  int total = 0;
  for (const auto& p : s.polygons) {
    if (p.color != color) continue;
    int cnt = 0;
    for (Label v : p.vertices)
      if (cyc_dist(pi, pos.at(v), n) <= width) ++cnt;
    // Vertices of p inside the closed clockwise interval [src, dst] form the
    // part of p to the left of the arc; it contributes its triangle count.
    if (cnt >= 3) total += cnt - 2;
  }
  return total;
}

}  // namespace

int area(const Subdivision& s, const Arc& a) {
  return colored_area_left(s, a, Color::black);
}

int grey_area(const Subdivision& s, const Arc& a) {
  return colored_area_left(s, a, Color::grey);
}

std::vector<FacetArc> facet_defining_arcs(const Subdivision& s) {
  auto pos = position_map(s.ground);
  const int n = s.n();
  std::vector<FacetArc> out;
  for (const auto& p : s.polygons) {
    if (p.color != Color::black) continue;
    const auto m = p.vertices.size();
    for (std::size_t t = 0; t < m; ++t) {
      Label a = p.vertices[t], b = p.vertices[(t + 1) % m];
      // Walking the polygon clockwise from a to b, the polygon itself lies
      // in the closed clockwise interval [b, a]: the arc b -> a has it on
      // the left.
      bool internal = cyc_dist(pos.at(a), pos.at(b), n) != 1 &&
                      cyc_dist(pos.at(b), pos.at(a), n) != 1;
      out.push_back({{b, a}, internal});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const FacetArc& x, const FacetArc& y) { return x.arc < y.arc; });
  return out;
}

PartialCyclicOrder sigma_order(const Subdivision& s) {
  PartialCyclicOrder out{s.ground};
  for (const auto& p : s.polygons) {
    if (p.color == Color::grey) continue;
    std::vector<Label> seq = p.vertices;
    if (p.color == Color::black) std::reverse(seq.begin(), seq.end());
    for (std::size_t i = 0; i < seq.size(); ++i)
      for (std::size_t j = i + 1; j < seq.size(); ++j)
        for (std::size_t l = j + 1; l < seq.size(); ++l)
          if (!out.contains(seq[i], seq[j], seq[l]))
            out.add_triple(seq[i], seq[j], seq[l]);
  }
  out.close();
  return out;
}

std::vector<Polygon> kermit_pieces(const std::vector<Label>& ring, Label v,
                                   const std::vector<Label>& I) {
  const int m = static_cast<int>(ring.size());
  if (m < 3) throw std::invalid_argument("kermit: polygon needs >= 3 vertices");
  auto it = std::find(ring.begin(), ring.end(), v);
  if (it == ring.end())
    throw std::invalid_argument("kermit: base vertex not in polygon");
  int iv = static_cast<int>(it - ring.begin());
  Label pred_v = ring[static_cast<std::size_t>((iv - 1 + m) % m)];
  std::set<Label> iset(I.begin(), I.end());
  if (iset.size() != I.size())
    throw std::invalid_argument("kermit: repeated labels in I");
  for (Label x : I) {
    if (std::find(ring.begin(), ring.end(), x) == ring.end())
      throw std::invalid_argument("kermit: label " + label_str(x) +
                                  " not in polygon");
    if (x == v || x == pred_v)
      throw std::invalid_argument("kermit: triangle at " + label_str(x) +
                                  " would degenerate");
  }
  // Fan triangulation at v: triangles {v, u, succ(u)} for the m-2 vertices
  // u = succ(v), ..., pred(pred(v)); runs of equal color merge.
  std::vector<Polygon> out;
  int t = 0;
  while (t < m - 2) {
    Label u = ring[static_cast<std::size_t>((iv + 1 + t) % m)];
    bool black = iset.count(u) != 0;
    int e = t;
    while (e + 1 < m - 2) {
      Label nu = ring[static_cast<std::size_t>((iv + 1 + e + 1) % m)];
      if ((iset.count(nu) != 0) != black) break;
      ++e;
    }
    Polygon p;
    p.color = black ? Color::black : Color::white;
    p.vertices.push_back(v);
    for (int q = t; q <= e + 1; ++q)
      p.vertices.push_back(ring[static_cast<std::size_t>((iv + 1 + q) % m)]);
    out.push_back(std::move(p));
    t = e + 1;
  }
  return out;
}

Subdivision kermit(int n, int k, Label v, const std::vector<Label>& I) {
  if (static_cast<int>(I.size()) != k)
    throw std::invalid_argument("kermit: |I| != k");
  Subdivision s;
  s.ground = ground_interval(n);
  s.polygons = kermit_pieces(s.ground, v, I);
  canonicalize(s);
  validate(s);
  return s;
}

std::pair<Subdivision, Subdivision> contract_arc(const Subdivision& s,
                                                 const Arc& a) {
  auto facets = facet_defining_arcs(s);
  auto fit = std::find_if(facets.begin(), facets.end(), [&](const FacetArc& f) {
    return f.arc == a;
  });
  if (fit == facets.end())
    throw IncompatibleArc("arc is not facet-defining");
  if (!fit->internal) throw IncompatibleArc("arc is not internal");

  auto pos = position_map(s.ground);
  const int n = s.n();
  int pi = pos.at(a.src), pj = pos.at(a.dst);
  auto side_ground = [&](int from, int to) {
    std::vector<Label> g;
    for (int p = (from + 1) % n; p != to; p = (p + 1) % n)
      g.push_back(s.ground[static_cast<std::size_t>(p)]);
    g.push_back(kStar);
    // Rotate the cyclic order so the minimal label comes first.
    auto mn = std::min_element(g.begin(), g.end());
    std::rotate(g.begin(), mn, g.end());
    return g;
  };
  if (side_ground(pi, pj).size() < 3 || side_ground(pj, pi).size() < 3)
    throw IncompatibleArc("contraction side has fewer than 3 labels");
  auto build_side = [&](int from, int to) {
    Subdivision side;
    side.ground = side_ground(from, to);
    int width = cyc_dist(from, to, n);
    for (const auto& p : s.polygons) {
      bool inside = std::all_of(p.vertices.begin(), p.vertices.end(),
                                [&](Label v) {
                                  return cyc_dist(from, pos.at(v), n) <= width;
                                });
      if (!inside) continue;
      Polygon q;
      q.color = p.color;
      for (Label v : p.vertices) {
        Label w = (v == a.src || v == a.dst) ? kStar : v;
        if (std::find(q.vertices.begin(), q.vertices.end(), w) ==
            q.vertices.end())
          q.vertices.push_back(w);
      }
      if (q.vertices.size() >= 3) side.polygons.push_back(std::move(q));
    }
    canonicalize(side);
    // Dropping the contracted black polygon can leave same-color neighbors
    // sharing a chord; re-merge them.
    merge_same_color(side);
    canonicalize(side);
    validate(side);
    return side;
  };
  return {build_side(pi, pj), build_side(pj, pi)};
}

}  // namespace tiler
