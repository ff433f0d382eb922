#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "tiler/rational.hpp"
#include "tiler/subdivision.hpp"

namespace tiler {

// A maximal simplex of the circuit triangulation of the hypersimplex
// Delta_{k+1,n}: a permutation w with w_n = n and k+1 cyclic descents,
// together with its vertex sets I_1..I_n (I[r-1] holds I_r, sorted).
struct WSimplex {
  std::vector<int> w;
  int k = 0;
  std::vector<std::vector<int>> I;

  int n() const { return static_cast<int>(w.size()); }
  bool operator==(const WSimplex& o) const { return w == o.w; }
  bool operator<(const WSimplex& o) const { return w < o.w; }
};

// Cyclic left descents of a permutation word: {i < n : i appears right of
// i+1} plus {n} when 1 appears left of n.
std::vector<int> cyclic_descents(const std::vector<int>& word);

// Vertex sets I_r = cdes(w^{(r)}), where w^{(r)} is the rotation of the
// cycle (w) ending at r.
std::vector<std::vector<int>> vertex_sets(const std::vector<int>& w);

// Builds a WSimplex from a word with w_n = n.
WSimplex make_wsimplex(const std::vector<int>& w);

// All of D_{k+1,n} (vertex sets precomputed), sorted lexicographically by w.
std::vector<WSimplex> enumerate_D(int k, int n);

// |D_{k+1,n}|: the Eulerian number E_{k,n-1} via the alternating-sum
// formula.
std::uint64_t eulerian_count(int k, int n);

// One facet inequality x_{[a,b-1]} >= bound of the simplex Delta_(w); `a`
// immediately precedes `b` in the cycle (w).
struct SimplexFacet {
  int a = 0;
  int b = 0;
  int bound = 0;
  bool operator==(const SimplexFacet&) const = default;
};

// The n facet inequalities of Delta_(w) (the equality x_[n] = k+1 is
// implicit).
std::vector<SimplexFacet> w_simplex_facets(const WSimplex& w);

// If (w) = (A i j B) and (u) = (A j i B) with j != i +- 1 (mod n), the two
// simplices share the facet on the hyperplane x_{[i,j-1]} = c.
struct SharedFacet {
  int i = 0;
  int j = 0;
  int c = 0;
};
std::optional<SharedFacet> facet_sharing(const WSimplex& u, const WSimplex& w);

// Bound record lo <= x_{[src, dst-1]} <= hi for a compatible arc
// src -> dst; `facet_lower` marks lower bounds that are facets of the tile.
struct IntervalBound {
  Label src = 0;
  Label dst = 0;
  int lo = 0;
  int hi = 0;
  bool facet_lower = false;
};

// Inequality description of a tile Gamma_sigma (ambient form, on the
// stratum x_[n] = k+1) or of a Parke-Taylor polytope (projected form in
// R^{n-1}, no equality).
struct TilePolytope {
  int n = 0;
  int k = 0;  // meaningful only when !projected
  bool projected = false;
  std::vector<IntervalBound> bounds;
};

// Gamma_sigma for a bicolored subdivision: area <= x_{[i,j-1]} <= area + 1
// over all compatible arcs, facets marked (x_i >= 0 at white vertices,
// x_{[i,j-1]} >= area at facet-defining arcs).
TilePolytope tile_inequalities(const Subdivision& sigma);

// Projected Parke-Taylor polytope of a tricolored subdivision:
// area <= x_{[i,j-1]} <= area + grey_area + 1 over compatible arcs with
// src < dst, in the coordinates x_1..x_{n-1}.
TilePolytope pt_polytope_inequalities(const Subdivision& tau);

// Exact membership test; strict = interior.
bool tile_contains_point(const TilePolytope& poly, const RationalVector& p,
                         bool strict);

// {Delta_(w) : (w) in Ext(C_sigma)} via circular-extension enumeration.
std::vector<WSimplex> simplices_in_tile(const Subdivision& s);

// Normalized volume = |Ext(C_sigma)|.
std::uint64_t tile_volume(const Subdivision& s);

// Average of the vertices e_{I_1}, ..., e_{I_n}; strictly inside Delta_(w).
RationalVector barycenter(const WSimplex& w);

// Drops the last coordinate (the projection R^n -> R^{n-1} of Remark on the
// hypercube slice).
RationalVector project_point(const RationalVector& p);

// Replaces every grey polygon of tau (keyed by its index in tau.polygons)
// by all kermit subdivisions based at the given vertex; the chosen vertices
// must follow the admissible order (each polygon must have an edge
// (base, j), base < j, with the polygon on the left and no other pending
// grey polygon on that side). Returns the resulting bicolored subdivisions.
std::vector<Subdivision> decompose_pt_polytope(
    const Subdivision& tau, const std::map<int, Label>& base_vertices);

}  // namespace tiler
