#include "tiler/tiling.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "tiler/cyclic_order.hpp"
#include "tiler/rational.hpp"

namespace tiler {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int t = 0; t < k; ++t)
    r = r * static_cast<std::uint64_t>(n - t) / static_cast<std::uint64_t>(t + 1);
  return r;
}

namespace {

std::map<std::vector<int>, int> simplex_index(const std::vector<WSimplex>& D) {
  std::map<std::vector<int>, int> idx;
  for (std::size_t i = 0; i < D.size(); ++i) idx[D[i].w] = static_cast<int>(i);
  return idx;
}

std::vector<int> extension_ids(const Subdivision& s,
                               const std::map<std::vector<int>, int>& idx) {
  std::vector<int> ids;
  for (const auto& t : enumerate_extensions(sigma_order(s))) {
    std::vector<int> w(t.cycle().begin(), t.cycle().end());
    auto it = idx.find(w);
    if (it == idx.end())
      throw std::invalid_argument("extension outside D_{k+1,n}");
    ids.push_back(it->second);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

// Classic dancing-links exact cover (Algorithm X), columns chosen by
// minimum remaining candidates.
class DancingLinks {
 public:
  DancingLinks(int columns, const std::vector<std::vector<int>>& rows)
      : ncols_(columns) {
    const int head = 0;
    nodes_.push_back({head, head, 0, 0, -1, -1});  // root at index 0
    col_head_.resize(static_cast<std::size_t>(columns));
    col_size_.assign(static_cast<std::size_t>(columns), 0);
    for (int c = 0; c < columns; ++c) {
      int id = alloc();
      col_head_[static_cast<std::size_t>(c)] = id;
      nodes_[static_cast<std::size_t>(id)].col = c;
      link_lr(nodes_[0].left, id, 0);
      nodes_[static_cast<std::size_t>(id)].up = id;
      nodes_[static_cast<std::size_t>(id)].down = id;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      int first = -1;
      for (int c : rows[r]) {
        int id = alloc();
        auto& nd = nodes_[static_cast<std::size_t>(id)];
        nd.col = c;
        nd.row = static_cast<int>(r);
        int h = col_head_[static_cast<std::size_t>(c)];
        // vertical insertion above the column head
        nd.down = h;
        nd.up = nodes_[static_cast<std::size_t>(h)].up;
        nodes_[static_cast<std::size_t>(nodes_[static_cast<std::size_t>(h)].up)]
            .down = id;
        nodes_[static_cast<std::size_t>(h)].up = id;
        ++col_size_[static_cast<std::size_t>(c)];
        if (first < 0) {
          first = id;
          nd.left = id;
          nd.right = id;
        } else {
          link_lr(nodes_[static_cast<std::size_t>(first)].left, id, first);
        }
      }
    }
  }

  // Invokes sink for every solution (as sorted row-index lists); stops when
  // sink returns false.
  void solve(const std::function<bool(const std::vector<int>&)>& sink) {
    sink_ = &sink;
    stopped_ = false;
    search();
  }

 private:
  struct Node {
    int left, right, up, down;
    int col;
    int row;
  };

  int alloc() {
    nodes_.push_back({0, 0, 0, 0, -1, -1});
    int id = static_cast<int>(nodes_.size()) - 1;
    nodes_[static_cast<std::size_t>(id)].left = id;
    nodes_[static_cast<std::size_t>(id)].right = id;
    nodes_[static_cast<std::size_t>(id)].up = id;
    nodes_[static_cast<std::size_t>(id)].down = id;
    return id;
  }

  void link_lr(int left, int id, int right) {
    nodes_[static_cast<std::size_t>(id)].left = left;
    nodes_[static_cast<std::size_t>(id)].right = right;
    nodes_[static_cast<std::size_t>(left)].right = id;
    nodes_[static_cast<std::size_t>(right)].left = id;
  }

  void cover(int c) {
    int h = col_head_[static_cast<std::size_t>(c)];
    auto& hn = nodes_[static_cast<std::size_t>(h)];
    nodes_[static_cast<std::size_t>(hn.left)].right = hn.right;
    nodes_[static_cast<std::size_t>(hn.right)].left = hn.left;
    for (int i = hn.down; i != h; i = nodes_[static_cast<std::size_t>(i)].down)
      for (int j = nodes_[static_cast<std::size_t>(i)].right; j != i;
           j = nodes_[static_cast<std::size_t>(j)].right) {
        auto& nj = nodes_[static_cast<std::size_t>(j)];
        nodes_[static_cast<std::size_t>(nj.up)].down = nj.down;
        nodes_[static_cast<std::size_t>(nj.down)].up = nj.up;
        --col_size_[static_cast<std::size_t>(nj.col)];
      }
  }

  void uncover(int c) {
    int h = col_head_[static_cast<std::size_t>(c)];
    auto& hn = nodes_[static_cast<std::size_t>(h)];
    for (int i = hn.up; i != h; i = nodes_[static_cast<std::size_t>(i)].up)
      for (int j = nodes_[static_cast<std::size_t>(i)].left; j != i;
           j = nodes_[static_cast<std::size_t>(j)].left) {
        auto& nj = nodes_[static_cast<std::size_t>(j)];
        nodes_[static_cast<std::size_t>(nj.up)].down = j;
        nodes_[static_cast<std::size_t>(nj.down)].up = j;
        ++col_size_[static_cast<std::size_t>(nj.col)];
      }
    nodes_[static_cast<std::size_t>(hn.left)].right = h;
    nodes_[static_cast<std::size_t>(hn.right)].left = h;
  }

  void search() {
    if (stopped_) return;
    if (nodes_[0].right == 0) {
      auto sol = stack_;
      std::sort(sol.begin(), sol.end());
      if (!(*sink_)(sol)) stopped_ = true;
      return;
    }
    int best = -1;
    for (int c = nodes_[0].right; c != 0;
         c = nodes_[static_cast<std::size_t>(c)].right) {
      int col = nodes_[static_cast<std::size_t>(c)].col;
      if (best < 0 || col_size_[static_cast<std::size_t>(col)] <
                          col_size_[static_cast<std::size_t>(
                              nodes_[static_cast<std::size_t>(best)].col)])
        best = c;
    }
    int col = nodes_[static_cast<std::size_t>(best)].col;
    if (col_size_[static_cast<std::size_t>(col)] == 0) return;
    cover(col);
    int h = col_head_[static_cast<std::size_t>(col)];
    for (int i = nodes_[static_cast<std::size_t>(h)].down; i != h;
         i = nodes_[static_cast<std::size_t>(i)].down) {
      stack_.push_back(nodes_[static_cast<std::size_t>(i)].row);
      for (int j = nodes_[static_cast<std::size_t>(i)].right; j != i;
           j = nodes_[static_cast<std::size_t>(j)].right)
        cover(nodes_[static_cast<std::size_t>(j)].col);
      search();
      for (int j = nodes_[static_cast<std::size_t>(i)].left; j != i;
           j = nodes_[static_cast<std::size_t>(j)].left)
        uncover(nodes_[static_cast<std::size_t>(j)].col);
      stack_.pop_back();
      if (stopped_) break;
    }
    uncover(col);
  }

  int ncols_;
  std::vector<Node> nodes_;
  std::vector<int> col_head_;
  std::vector<int> col_size_;
  std::vector<int> stack_;
  const std::function<bool(const std::vector<int>&)>* sink_ = nullptr;
  bool stopped_ = false;
};

Tiling tiling_from_rows(int k, int n,
                        const std::vector<TileCandidate>& candidates,
                        const std::vector<int>& rows) {
  Tiling t;
  t.k = k;
  t.n = n;
  for (int r : rows) t.tiles.push_back(candidates[static_cast<std::size_t>(r)]);
  std::sort(t.tiles.begin(), t.tiles.end(),
            [](const TileCandidate& a, const TileCandidate& b) {
              return a.subdivision < b.subdivision;
            });
  return t;
}

bool tiling_less(const Tiling& a, const Tiling& b) {
  return std::lexicographical_compare(
      a.tiles.begin(), a.tiles.end(), b.tiles.begin(), b.tiles.end(),
      [](const TileCandidate& x, const TileCandidate& y) {
        return x.subdivision < y.subdivision;
      });
}

std::vector<Tiling> solve_cover(int k, int n,
                                const std::vector<TileCandidate>& candidates,
                                const std::vector<int>& columns,
                                std::optional<std::uint64_t> limit) {
  // Column t covers the w-simplex with id columns[t].
  std::map<int, int> col_of;
  for (std::size_t t = 0; t < columns.size(); ++t)
    col_of[columns[t]] = static_cast<int>(t);
  std::vector<std::vector<int>> rows;
  std::vector<int> row_tile;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    std::vector<int> cols;
    bool ok = true;
    for (int id : candidates[c].extension_ids) {
      auto it = col_of.find(id);
      if (it == col_of.end()) {
        ok = false;  // covers a simplex outside the target set
        break;
      }
      cols.push_back(it->second);
    }
    if (ok && !cols.empty()) {
      rows.push_back(std::move(cols));
      row_tile.push_back(static_cast<int>(c));
    }
  }
  std::vector<Tiling> out;
  DancingLinks dlx(static_cast<int>(columns.size()), rows);
  dlx.solve([&](const std::vector<int>& sol_rows) {
    std::vector<int> tiles;
    for (int r : sol_rows) tiles.push_back(row_tile[static_cast<std::size_t>(r)]);
    out.push_back(tiling_from_rows(k, n, candidates, tiles));
    return !(limit && out.size() >= *limit);
  });
  if (!limit) std::sort(out.begin(), out.end(), tiling_less);
  return out;
}

std::vector<TileCandidate> build_candidates(
    int k, int n, const std::function<bool(const Subdivision&)>& row_filter) {
  auto D = enumerate_D(k, n);
  auto idx = simplex_index(D);
  std::vector<TileCandidate> candidates;
  for (auto& s : enumerate_bicolored(k, n)) {
    if (row_filter && !row_filter(s)) continue;
    TileCandidate c;
    c.extension_ids = extension_ids(s, idx);
    c.subdivision = std::move(s);
    candidates.push_back(std::move(c));
  }
  return candidates;
}

}  // namespace

TilingResult is_tiling(const std::vector<Subdivision>& candidates, int k,
                       int n) {
  auto D = enumerate_D(k, n);
  auto idx = simplex_index(D);
  std::vector<int> covered_by(D.size(), -1);
  std::vector<TileCandidate> tiles;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    auto type = validate(candidates[c]);
    if (type.tricolored || type.k != k || type.n != n)
      throw std::invalid_argument("candidate is not a type-(k,n) bicolored subdivision");
    TileCandidate tc;
    tc.subdivision = candidates[c];
    tc.extension_ids = extension_ids(candidates[c], idx);
    for (int id : tc.extension_ids) {
      if (covered_by[static_cast<std::size_t>(id)] >= 0) {
        FailureCertificate f;
        f.w = D[static_cast<std::size_t>(id)].w;
        f.doubly_covered = true;
        f.tile_indices = {covered_by[static_cast<std::size_t>(id)],
                          static_cast<int>(c)};
        return f;
      }
      covered_by[static_cast<std::size_t>(id)] = static_cast<int>(c);
    }
    tiles.push_back(std::move(tc));
  }
  for (std::size_t id = 0; id < covered_by.size(); ++id)
    if (covered_by[id] < 0) {
      FailureCertificate f;
      f.w = D[id].w;
      f.doubly_covered = false;
      return f;
    }
  Tiling t;
  t.k = k;
  t.n = n;
  t.tiles = std::move(tiles);
  std::sort(t.tiles.begin(), t.tiles.end(),
            [](const TileCandidate& a, const TileCandidate& b) {
              return a.subdivision < b.subdivision;
            });
  return t;
}

std::vector<Tiling> enumerate_tilings(
    int k, int n, std::optional<std::uint64_t> limit,
    const std::function<bool(const Subdivision&)>& row_filter) {
  auto candidates = build_candidates(k, n, row_filter);
  std::vector<int> columns;
  for (int i = 0; i < static_cast<int>(eulerian_count(k, n)); ++i)
    columns.push_back(i);
  return solve_cover(k, n, candidates, columns, limit);
}

std::vector<Tiling> enumerate_restricted_tilings(
    int k, int n, const std::vector<int>& targets,
    std::optional<std::uint64_t> limit) {
  auto candidates = build_candidates(k, n, nullptr);
  std::vector<int> columns = targets;
  std::sort(columns.begin(), columns.end());
  columns.erase(std::unique(columns.begin(), columns.end()), columns.end());
  return solve_cover(k, n, candidates, columns, limit);
}

PairingCheck check_facet_pairing(const Tiling& t, Label i, Label j, int c) {
  PairingCheck out;
  // Boundary edges of the n-gon carry no internal hyperplane.
  if ((i % t.n) + 1 == j || (j % t.n) + 1 == i) return out;
  for (const auto& tile : t.tiles) {
    const auto& s = tile.subdivision;
    for (const auto& f : facet_defining_arcs(s)) {
      if (f.arc == Arc{i, j} && area(s, {i, j}) == c) ++out.count_above;
      if (f.arc == Arc{j, i} && area(s, {i, j}) == c - 1) ++out.count_below;
    }
  }
  out.pass = out.count_above == out.count_below;
  return out;
}

PairingCheck check_arc_balance(const Tiling& t, Label i, Label j) {
  PairingCheck out;
  for (const auto& tile : t.tiles)
    for (const auto& f : facet_defining_arcs(tile.subdivision)) {
      if (f.arc == Arc{i, j}) ++out.count_above;
      if (f.arc == Arc{j, i}) ++out.count_below;
    }
  out.pass = out.count_above == out.count_below;
  return out;
}

namespace {

struct Pt {
  Rational x, y;
};

// Exact rational points on the unit circle via the tan-half-angle map,
// one per ground position; increasing parameter = counterclockwise.
std::vector<Pt> circle_points(int n) {
  std::vector<Pt> out;
  for (int v = 1; v <= n; ++v) {
    Rational u(v);
    Rational d = 1 + u * u;
    Pt p{(1 - u * u) / d, 2 * u / d};
    p.x.canonicalize();
    p.y.canonicalize();
    out.push_back(p);
  }
  return out;
}

Rational cross(const Pt& a, const Pt& b, const Pt& q) {
  return (b.x - a.x) * (q.y - a.y) - (b.y - a.y) * (q.x - a.x);
}

bool strictly_inside(const std::vector<Pt>& verts, const Pt& q) {
  // verts are in counterclockwise convex position.
  const std::size_t m = verts.size();
  for (std::size_t t = 0; t < m; ++t)
    if (cross(verts[t], verts[(t + 1) % m], q) <= 0) return false;
  return true;
}

}  // namespace

CoveringCheck check_covering_multiplicity(const Tiling& t, int samples,
                                          std::uint64_t seed) {
  CoveringCheck out;
  out.samples = samples;
  const int n = t.n;
  out.multiplicity = static_cast<int>(binomial(n - 3, t.k - 1));
  auto pts = circle_points(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> wdist(1, 1000);
  for (int s = 0; s < samples; ++s) {
    // Random interior point: a strictly positive rational convex
    // combination of the vertices, resampled until it avoids every line
    // through two vertices (general position for all possible chords).
    Pt q;
    while (true) {
      Rational sx = 0, sy = 0, sw = 0;
      for (int v = 0; v < n; ++v) {
        Rational w(wdist(rng));
        sx += w * pts[static_cast<std::size_t>(v)].x;
        sy += w * pts[static_cast<std::size_t>(v)].y;
        sw += w;
      }
      q = {sx / sw, sy / sw};
      q.x.canonicalize();
      q.y.canonicalize();
      bool general = true;
      for (int a = 0; a < n && general; ++a)
        for (int b = a + 1; b < n && general; ++b)
          if (cross(pts[static_cast<std::size_t>(a)],
                    pts[static_cast<std::size_t>(b)], q) == 0)
            general = false;
      if (general) break;
      ++out.resampled;
    }
    int mult = 0;
    for (const auto& tile : t.tiles)
      for (const auto& p : tile.subdivision.polygons) {
        if (p.color != Color::black) continue;
        std::vector<Pt> verts;
        for (Label v : p.vertices)
          verts.push_back(pts[static_cast<std::size_t>(v) - 1]);
        if (strictly_inside(verts, q)) ++mult;
      }
    if (mult != out.multiplicity) out.pass = false;
  }
  return out;
}

std::optional<std::vector<std::vector<std::pair<int, int>>>>
check_covering_partition(const Tiling& t) {
  const int n = t.n;
  const int groups_needed = static_cast<int>(binomial(n - 3, t.k - 1));
  // Multiset of black polygons with provenance.
  std::map<std::vector<Label>, std::vector<std::pair<int, int>>> instances;
  for (std::size_t ti = 0; ti < t.tiles.size(); ++ti) {
    const auto& polys = t.tiles[ti].subdivision.polygons;
    for (std::size_t pi = 0; pi < polys.size(); ++pi)
      if (polys[pi].color == Color::black)
        instances[polys[pi].vertices].emplace_back(static_cast<int>(ti),
                                                   static_cast<int>(pi));
  }
  if (groups_needed == 0)
    return instances.empty()
               ? std::optional<std::vector<std::vector<std::pair<int, int>>>>{
                     std::vector<std::vector<std::pair<int, int>>>{}}
               : std::nullopt;
  std::map<std::vector<Label>, int> counts;
  for (const auto& [vs, prov] : instances)
    counts[vs] = static_cast<int>(prov.size());
  // Candidate groups: dissections of the n-gon all of whose faces are
  // available black polygons.
  std::vector<std::vector<std::vector<Label>>> cands;
  for (const auto& d : enumerate_dissections(n)) {
    bool ok = std::all_of(d.begin(), d.end(), [&](const auto& f) {
      return counts.count(f) != 0;
    });
    if (ok) cands.push_back(d);
  }
  std::vector<std::vector<std::vector<Label>>> chosen;
  auto rec = [&](auto&& self) -> bool {
    auto it = std::find_if(counts.begin(), counts.end(),
                           [](const auto& kv) { return kv.second > 0; });
    if (it == counts.end())
      return static_cast<int>(chosen.size()) == groups_needed;
    if (static_cast<int>(chosen.size()) >= groups_needed) return false;
    const auto pivot = it->first;
    for (const auto& d : cands) {
      if (std::find(d.begin(), d.end(), pivot) == d.end()) continue;
      bool feasible = true;
      std::map<std::vector<Label>, int> used;
      for (const auto& f : d) ++used[f];
      for (const auto& [f, u] : used)
        if (counts[f] < u) feasible = false;
      if (!feasible) continue;
      for (const auto& [f, u] : used) counts[f] -= u;
      chosen.push_back(d);
      if (self(self)) return true;
      chosen.pop_back();
      for (const auto& [f, u] : used) counts[f] += u;
    }
    return false;
  };
  if (!rec(rec)) return std::nullopt;
  // Attach provenance: hand out unused instances per face.
  std::map<std::vector<Label>, std::size_t> next;
  std::vector<std::vector<std::pair<int, int>>> out;
  for (const auto& d : chosen) {
    std::vector<std::pair<int, int>> group;
    for (const auto& f : d) group.push_back(instances[f][next[f]++]);
    out.push_back(std::move(group));
  }
  return out;
}

}  // namespace tiler
