#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tiler/errors.hpp"

namespace tiler {

// Labels are small positive integers, plus the distinguished label `kStar`
// used for the identified endpoints of a split/contracted arc. `kStar`
// compares above every integer label, which fixes canonical cycle rotations.
using Label = int;
inline constexpr Label kStar = 1 << 20;

// A partial cyclic order: a cyclically and transitively closed, asymmetric
// set of ordered triples on a finite ground set. Immutable from the outside;
// construct via the free functions below.
class PartialCyclicOrder {
 public:
  PartialCyclicOrder() = default;
  // Ground must consist of distinct labels; it is stored sorted.
  explicit PartialCyclicOrder(std::vector<Label> ground);

  const std::vector<Label>& ground() const { return ground_; }
  std::size_t ground_size() const { return ground_.size(); }
  bool has_label(Label a) const { return index_.count(a) != 0; }

  bool contains(Label a, Label b, Label c) const;
  // Number of (closed) triples; a multiple of 3.
  std::size_t triple_count() const { return triples_.size(); }
  // One representative per cyclic class, minimal label first; sorted.
  std::vector<std::array<Label, 3>> canonical_triples() const;

  // Inserts a triple together with its cyclic rotations. Throws
  // ConflictError if the reversed triple is already present. Does not close
  // transitively; call close() afterwards.
  void add_triple(Label a, Label b, Label c);
  // Fixed-point transitive closure; throws ConflictError on asymmetry
  // violation. Idempotent.
  void close();

  bool operator==(const PartialCyclicOrder& o) const;

 private:
  std::uint32_t pack(Label a, Label b, Label c) const;
  int idx(Label a) const;

  std::vector<Label> ground_;
  std::unordered_map<Label, int> index_;
  std::unordered_set<std::uint32_t> triples_;
};

// A total cyclic order, stored as the canonical rotation of its cycle word:
// the rotation ending at the maximum label. For ground [n] the cycle word is
// then literally a permutation w with w_n = n.
class TotalCyclicOrder {
 public:
  // Rotates the given cycle into canonical form. Requires >= 3 distinct
  // labels.
  explicit TotalCyclicOrder(std::vector<Label> cycle);

  const std::vector<Label>& cycle() const { return cycle_; }
  std::vector<Label> ground() const;  // sorted labels

  // True iff b lies strictly between a and c when walking the cycle forward
  // from a. Requires distinct labels present in the cycle.
  bool has_triple(Label a, Label b, Label c) const;

  PartialCyclicOrder as_partial() const;

  bool operator==(const TotalCyclicOrder& o) const { return cycle_ == o.cycle_; }
  bool operator<(const TotalCyclicOrder& o) const { return cycle_ < o.cycle_; }

 private:
  std::vector<Label> cycle_;
  std::unordered_map<Label, int> pos_;
};

// The standard ground set [n] = {1, ..., n}.
inline std::vector<Label> ground_interval(int n) {
  std::vector<Label> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = i + 1;
  return g;
}

// The chain C_{(x_1,...,x_m)}: the closure of {(x_i,x_j,x_l) : i<j<l} under
// cyclicity. seq must have >= 3 distinct labels, all contained in ground.
PartialCyclicOrder chain_from_sequence(const std::vector<Label>& seq,
                                       const std::vector<Label>& ground);

// Smallest closed partial cyclic order containing all inputs; ground is the
// union of the input grounds. Throws ConflictError on inconsistency.
PartialCyclicOrder union_orders(const std::vector<PartialCyclicOrder>& orders);

// True iff every triple of `partial` holds in `total`. Grounds must agree.
bool is_extension(const TotalCyclicOrder& total,
                  const PartialCyclicOrder& partial);

// All circular extensions of `partial`, sorted lexicographically by
// canonical cycle word. Empty list when none exist.
std::vector<TotalCyclicOrder> enumerate_extensions(
    const PartialCyclicOrder& partial);

// |Ext(partial)| without materializing the list.
std::uint64_t count_extensions(const PartialCyclicOrder& partial);

// Ext_{(ij)}: extensions in which i is immediately followed by j.
std::vector<TotalCyclicOrder> extensions_with_adjacent_pair(
    const PartialCyclicOrder& partial, Label i, Label j);

// Sub-cyclic order on `subset` (must be contained in the ground).
PartialCyclicOrder restrict(const PartialCyclicOrder& partial,
                            const std::vector<Label>& subset);

}  // namespace tiler
