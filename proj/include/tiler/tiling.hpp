#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "tiler/hypersimplex.hpp"
#include "tiler/subdivision.hpp"

namespace tiler {

// A bicolored subdivision together with the sorted indices (into
// enumerate_D(k,n)) of the w-simplices inside its tile.
struct TileCandidate {
  Subdivision subdivision;
  std::vector<int> extension_ids;
};

// An exact cover of D_{k+1,n} by tile extension sets.
struct Tiling {
  int k = 0;
  int n = 0;
  std::vector<TileCandidate> tiles;
};

// Names a w-simplex that is uncovered, or doubly covered (with the indices
// of the two offending tiles).
struct FailureCertificate {
  std::vector<int> w;
  bool doubly_covered = false;
  std::vector<int> tile_indices;
};

using TilingResult = std::variant<Tiling, FailureCertificate>;

// Checks whether the candidates' extension sets partition D_{k+1,n}.
TilingResult is_tiling(const std::vector<Subdivision>& candidates, int k,
                       int n);

// All exact covers of D_{k+1,n} by extension sets of type-(k,n) bicolored
// subdivisions (dancing links / Algorithm X). Tiles within a tiling are in
// canonical order; tilings are sorted lexicographically, unless a limit
// cuts the search short (then search order). `row_filter`, when given,
// restricts the candidate subdivisions.
std::vector<Tiling> enumerate_tilings(
    int k, int n, std::optional<std::uint64_t> limit = std::nullopt,
    const std::function<bool(const Subdivision&)>& row_filter = nullptr);

// Exact cover of an explicit subset of D_{k+1,n} ("combinatorial tilings"
// restriction mode): `targets` are indices into enumerate_D(k,n).
std::vector<Tiling> enumerate_restricted_tilings(
    int k, int n, const std::vector<int>& targets,
    std::optional<std::uint64_t> limit = std::nullopt);

struct PairingCheck {
  int count_above = 0;  // tiles with i->j facet-defining at area c
  int count_below = 0;  // tiles with j->i facet-defining at area c-1
  bool pass = true;
};

// Facet-pairing balance across the hyperplane x_{[i,j-1]} = c.
PairingCheck check_facet_pairing(const Tiling& t, Label i, Label j, int c);

// Balance of facet-defining directions across a diagonal {i,j}.
PairingCheck check_arc_balance(const Tiling& t, Label i, Label j);

struct CoveringCheck {
  int multiplicity = 0;  // expected C(n-3, k-1)
  int samples = 0;
  int resampled = 0;  // draws that landed on a chord, redrawn
  bool pass = true;
};

// Black polygons of all tiles cover the n-gon C(n-3,k-1) times: checked at
// `samples` exact rational interior points in general position.
CoveringCheck check_covering_multiplicity(const Tiling& t, int samples,
                                          std::uint64_t seed);

// Stronger partition form: the multiset of black polygons splits into
// C(n-3,k-1) groups, each tiling the whole n-gon. Returns the groups (tile
// index, polygon index within that tile) or nullopt when no partition
// exists.
std::optional<std::vector<std::vector<std::pair<int, int>>>>
check_covering_partition(const Tiling& t);

std::uint64_t binomial(int n, int k);

}  // namespace tiler
