#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tiler/cyclic_order.hpp"
#include "tiler/hypersimplex.hpp"
#include "tiler/rational.hpp"
#include "tiler/subdivision.hpp"

namespace tiler {

// Exact evaluation point: one rational z-value per ground label, pairwise
// distinct (the gauge where the top matrix row is all ones and
// P_{ij} = z_j - z_i).
struct EvaluationPoint {
  std::map<Label, Rational> z;
};

// Draws pairwise-distinct integer values from a large range for the given
// ground labels (Schwartz-Zippel style identity testing).
EvaluationPoint random_point(const std::vector<Label>& ground,
                             std::mt19937_64& rng);

// PT(w) = 1 / prod (z_{w_{i+1}} - z_{w_i}), cyclically.
Rational pt_eval(const TotalCyclicOrder& cycle, const EvaluationPoint& point);

// Sum of pt_eval over a list of cycles.
Rational pt_sum(const std::vector<TotalCyclicOrder>& cycles,
                const EvaluationPoint& point);

// Omega(Delta_(w)) = PT(w).
Rational simplex_weight(const WSimplex& w, const EvaluationPoint& point);

// Omega(Gamma_sigma) = sum over Ext(C_sigma) of PT; for tricolored
// subdivisions this is the Parke-Taylor-polytope weight.
Rational tile_weight(const Subdivision& s, const EvaluationPoint& point);

// Splits a total cyclic order at an adjacent pair {i,j}: subwords on
// N_L = [i+1, j-1] u {*} and N_R = [j+1, i-1] u {*} with i and j both
// identified to *. Both sides must have >= 3 labels.
std::pair<TotalCyclicOrder, TotalCyclicOrder> split_at_pair(
    const TotalCyclicOrder& w, Label i, Label j);

// Omega(Gamma_sigma^{(ij)}) = sum over Ext_{(ij)}(C_sigma) of
// PT(w_L) PT(w_R), evaluated at points on N_L and N_R.
Rational facet_weight(const Subdivision& sigma, const Arc& arc,
                      const EvaluationPoint& point_left,
                      const EvaluationPoint& point_right);

// Res_{P_{ij}=0} PT(w): the product with the (z_j - z_i) factor removed,
// signed by the orientation of the pair in the cycle; 0 when i,j are not
// adjacent in w. The point may have z_i = z_j.
Rational pt_residue(const TotalCyclicOrder& w, Label i, Label j,
                    const EvaluationPoint& point);

// The set of shuffles Sh_n(u, v): cycles (s_1 ... s_{n-1} n) where s runs
// over all interleavings of the disjoint sequences u and v covering [n-1].
std::vector<TotalCyclicOrder> shuffle_set(const std::vector<Label>& u,
                                          const std::vector<Label>& v);

struct VerificationTrial {
  std::vector<std::pair<Label, Rational>> point;
  Rational residual;
};

struct VerificationReport {
  std::string family;
  std::string params;
  std::uint64_t seed = 0;
  std::vector<VerificationTrial> trials;
  bool pass = true;
};

// Prop "constant tile weight": tile_weight(sigma) - (-1)^k PT(I_n) == 0 at
// `trials` seeded random points.
VerificationReport verify_tile_weight(const Subdivision& sigma, int trials,
                                      std::uint64_t seed);

// family: "u1" (params: n), "shuffle" (params: u and v), "grey_vanishing"
// (params: a tricolored subdivision with >= 1 grey polygon), or
// "tile_weight" (params: a bicolored subdivision).
VerificationReport verify_u1(int n, int trials, std::uint64_t seed);
VerificationReport verify_shuffle(const std::vector<Label>& u,
                                  const std::vector<Label>& v, int trials,
                                  std::uint64_t seed);
VerificationReport verify_grey_vanishing(const Subdivision& tau, int trials,
                                         std::uint64_t seed);

}  // namespace tiler
