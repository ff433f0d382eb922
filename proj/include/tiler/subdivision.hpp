#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tiler/cyclic_order.hpp"
#include "tiler/errors.hpp"

namespace tiler {

enum class Color { black, white, grey };

std::string color_name(Color c);
Color color_from_name(const std::string& s);

// A face of a subdivision of the labeled convex n-gon. Vertices are stored
// canonically: in the ambient clockwise cyclic order, starting at the vertex
// of minimal ambient position.
struct Polygon {
  Color color = Color::white;
  std::vector<Label> vertices;

  bool operator==(const Polygon&) const = default;
};

// A bicolored (no grey faces) or tricolored subdivision of the convex
// polygon whose vertices are `ground` in clockwise order. For the standard
// n-gon, ground = [1..n]; contraction produces subdivisions over ground sets
// such as {i+1, ..., j-1, *}.
struct Subdivision {
  std::vector<Label> ground;
  std::vector<Polygon> polygons;

  int n() const { return static_cast<int>(ground.size()); }
  bool is_bicolored() const;

  bool operator==(const Subdivision&) const = default;
  bool operator<(const Subdivision& o) const;
};

// A directed arc src -> dst between distinct polygon vertices.
struct Arc {
  Label src = 0;
  Label dst = 0;
  bool operator==(const Arc&) const = default;
  bool operator<(const Arc& o) const {
    return src != o.src ? src < o.src : dst < o.dst;
  }
};

struct SubdivisionType {
  int k = 0;    // black area (number of black triangles)
  int ell = 0;  // grey area
  int n = 0;
  bool tricolored = false;  // true iff a grey polygon is present
};

// Sorts polygons and rotates each vertex list into canonical form.
void canonicalize(Subdivision& s);

// Merges same-color polygons sharing a chord until none remain.
void merge_same_color(Subdivision& s);

// Checks all structural invariants (noncrossing chords, exact coverage,
// proper coloring / maximal merging) and reports the type. Throws
// ValidationError on failure.
SubdivisionType validate(const Subdivision& s);

// All dissections of the standard n-gon by noncrossing diagonals; each
// dissection is a list of faces given by canonical vertex lists.
std::vector<std::vector<std::vector<Label>>> enumerate_dissections(int n);

// All bicolored subdivisions of type (k,n) of the standard n-gon, in
// canonical order.
std::vector<Subdivision> enumerate_bicolored(int k, int n);

// All tricolored subdivisions of the standard n-gon (any black/grey areas,
// including the purely bicolored ones), in canonical order.
std::vector<Subdivision> enumerate_tricolored(int n);

// All directed arcs that bound a polygon or lie entirely inside a black or
// white polygon. Arcs strictly inside a grey polygon are not compatible.
std::vector<Arc> compatible_arcs(const Subdivision& s);

bool is_compatible_arc(const Subdivision& s, const Arc& a);

// Number of black triangles strictly to the left of the (compatible) arc
// i -> j; the left side is the one holding the clockwise interval from i to
// j. Throws IncompatibleArc otherwise.
int area(const Subdivision& s, const Arc& a);
// Same count for grey triangles.
int grey_area(const Subdivision& s, const Arc& a);

// Arcs that bound a black polygon to their left, with an `internal` flag for
// those that are chords (not boundary edges of the n-gon).
struct FacetArc {
  Arc arc;
  bool internal = false;
  bool operator==(const FacetArc&) const = default;
};
std::vector<FacetArc> facet_defining_arcs(const Subdivision& s);

// The sigma/tau-order C_s: union of per-polygon chains, clockwise for white
// polygons and counterclockwise for black ones; grey polygons contribute
// nothing.
PartialCyclicOrder sigma_order(const Subdivision& s);

// The kermit subdivision sigma^v_I of the standard n-gon: black triangles
// {v, i, i+1} for i in I, merged maximally with the white remainder.
// I must avoid v and v-1 (cyclically) so that no triangle degenerates.
Subdivision kermit(int n, int k, Label v, const std::vector<Label>& I);

// Kermit subdivision of the convex polygon with vertex cycle `ring` (in
// clockwise order), base vertex v in ring, I a subset of ring minus
// {v, predecessor of v}. Used for grey-polygon replacement.
std::vector<Polygon> kermit_pieces(const std::vector<Label>& ring, Label v,
                                   const std::vector<Label>& I);

// Contracts an internal facet-defining arc i -> j: returns the induced
// subdivisions on N_L = [i+1, j-1] u {*} and N_R = [j+1, i-1] u {*} with i
// and j identified to *. Both sides must have >= 3 labels.
std::pair<Subdivision, Subdivision> contract_arc(const Subdivision& s,
                                                 const Arc& a);

}  // namespace tiler
