#include "tiler/cyclic_order.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

namespace tiler {

namespace {

std::string triple_str(Label a, Label b, Label c) {
  auto one = [](Label x) {
    return x == kStar ? std::string("*") : std::to_string(x);
  };
  return "(" + one(a) + "," + one(b) + "," + one(c) + ")";
}

}  // namespace

PartialCyclicOrder::PartialCyclicOrder(std::vector<Label> ground)
    : ground_(std::move(ground)) {
  std::sort(ground_.begin(), ground_.end());
  if (std::adjacent_find(ground_.begin(), ground_.end()) != ground_.end())
    throw std::invalid_argument("ground set has repeated labels");
  if (ground_.size() > 31)
    throw std::invalid_argument("ground set too large (max 31 labels)");
  for (std::size_t i = 0; i < ground_.size(); ++i)
    index_[ground_[i]] = static_cast<int>(i);
}

int PartialCyclicOrder::idx(Label a) const {
  auto it = index_.find(a);
  if (it == index_.end())
    throw std::invalid_argument("label not in ground set");
  return it->second;
}

std::uint32_t PartialCyclicOrder::pack(Label a, Label b, Label c) const {
  return (static_cast<std::uint32_t>(idx(a)) << 10) |
         (static_cast<std::uint32_t>(idx(b)) << 5) |
         static_cast<std::uint32_t>(idx(c));
}

bool PartialCyclicOrder::contains(Label a, Label b, Label c) const {
  return triples_.count(pack(a, b, c)) != 0;
}

void PartialCyclicOrder::add_triple(Label a, Label b, Label c) {
  if (a == b || b == c || a == c)
    throw std::invalid_argument("triple has repeated labels");
  if (contains(c, b, a))
    throw ConflictError("asymmetry violated at " + triple_str(a, b, c));
  triples_.insert(pack(a, b, c));
  triples_.insert(pack(b, c, a));
  triples_.insert(pack(c, a, b));
}

void PartialCyclicOrder::close() {
  // Worklist closure under the transitivity rule
  //   (a,b,c) and (a,c,d)  =>  (a,b,d),
  // applied to every cyclic rotation. Indexes triples by (first,second) and
  // (first,last) so each combination step is a hash lookup.
  auto unpack = [this](std::uint32_t t) {
    return std::array<Label, 3>{ground_[(t >> 10) & 31], ground_[(t >> 5) & 31],
                                ground_[t & 31]};
  };
  std::unordered_map<std::uint64_t, std::vector<Label>> by_first_second;
  std::unordered_map<std::uint64_t, std::vector<Label>> by_first_last;
  auto key = [this](Label x, Label y) {
    return (static_cast<std::uint64_t>(idx(x)) << 32) |
           static_cast<std::uint64_t>(idx(y));
  };
  std::deque<std::array<Label, 3>> work;
  for (std::uint32_t t : triples_) work.push_back(unpack(t));
  for (const auto& [a, b, c] : work) {
    by_first_second[key(a, b)].push_back(c);
    by_first_last[key(a, c)].push_back(b);
  }
  auto emit = [&](Label a, Label b, Label c) {
    if (contains(a, b, c)) return;
    add_triple(a, b, c);
    for (auto [x, y, z] : {std::array<Label, 3>{a, b, c},
                           std::array<Label, 3>{b, c, a},
                           std::array<Label, 3>{c, a, b}}) {
      by_first_second[key(x, y)].push_back(z);
      by_first_last[key(x, z)].push_back(y);
      work.push_back({x, y, z});
    }
  };
  while (!work.empty()) {
    auto [a, b, c] = work.front();
    work.pop_front();
    // As left operand: (a,b,c) with (a,c,d) gives (a,b,d).
    if (auto it = by_first_second.find(key(a, c)); it != by_first_second.end()) {
      auto ds = it->second;  // copy: emit() may invalidate the bucket
      for (Label d : ds)
        if (d != b) emit(a, b, d);
    }
    // As right operand: (a,x,b) with (a,b,c) gives (a,x,c).
    if (auto it = by_first_last.find(key(a, b)); it != by_first_last.end()) {
      auto xs = it->second;
      for (Label x : xs)
        if (x != c) emit(a, x, c);
    }
  }
}

std::vector<std::array<Label, 3>> PartialCyclicOrder::canonical_triples()
    const {
  std::vector<std::array<Label, 3>> out;
  for (std::uint32_t t : triples_) {
    std::array<Label, 3> tr{ground_[(t >> 10) & 31], ground_[(t >> 5) & 31],
                            ground_[t & 31]};
    if (tr[0] < tr[1] && tr[0] < tr[2]) out.push_back(tr);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool PartialCyclicOrder::operator==(const PartialCyclicOrder& o) const {
  return ground_ == o.ground_ && canonical_triples() == o.canonical_triples();
}

TotalCyclicOrder::TotalCyclicOrder(std::vector<Label> cycle)
    : cycle_(std::move(cycle)) {
  if (cycle_.size() < 3)
    throw std::invalid_argument("a total cyclic order needs >= 3 labels");
  auto max_it = std::max_element(cycle_.begin(), cycle_.end());
  std::rotate(cycle_.begin(), max_it + 1 == cycle_.end() ? cycle_.begin()
                                                         : max_it + 1,
              cycle_.end());
  for (std::size_t i = 0; i < cycle_.size(); ++i) {
    if (!pos_.emplace(cycle_[i], static_cast<int>(i)).second)
      throw std::invalid_argument("cycle has repeated labels");
  }
}

std::vector<Label> TotalCyclicOrder::ground() const {
  std::vector<Label> g = cycle_;
  std::sort(g.begin(), g.end());
  return g;
}

bool TotalCyclicOrder::has_triple(Label a, Label b, Label c) const {
  auto p = [&](Label x) {
    auto it = pos_.find(x);
    if (it == pos_.end())
      throw std::invalid_argument("label not in cycle");
    return it->second;
  };
  int pa = p(a), pb = p(b), pc = p(c);
  if (pa == pb || pb == pc || pa == pc)
    throw std::invalid_argument("triple has repeated labels");
  int n = static_cast<int>(cycle_.size());
  int db = (pb - pa + n) % n;
  int dc = (pc - pa + n) % n;
  return db < dc;
}

PartialCyclicOrder TotalCyclicOrder::as_partial() const {
  return chain_from_sequence(cycle_, cycle_);
}

PartialCyclicOrder chain_from_sequence(const std::vector<Label>& seq,
                                       const std::vector<Label>& ground) {
  if (seq.size() < 3)
    throw std::invalid_argument("chain needs >= 3 labels");
  PartialCyclicOrder p{std::vector<Label>(ground)};
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      for (std::size_t l = j + 1; l < seq.size(); ++l)
        if (!p.contains(seq[i], seq[j], seq[l]))
          p.add_triple(seq[i], seq[j], seq[l]);
  p.close();
  return p;
}

PartialCyclicOrder union_orders(const std::vector<PartialCyclicOrder>& orders) {
  std::vector<Label> ground;
  for (const auto& o : orders)
    ground.insert(ground.end(), o.ground().begin(), o.ground().end());
  std::sort(ground.begin(), ground.end());
  ground.erase(std::unique(ground.begin(), ground.end()), ground.end());
  PartialCyclicOrder out{ground};
  for (const auto& o : orders)
    for (const auto& t : o.canonical_triples())
      if (!out.contains(t[0], t[1], t[2])) out.add_triple(t[0], t[1], t[2]);
  out.close();
  return out;
}

bool is_extension(const TotalCyclicOrder& total,
                  const PartialCyclicOrder& partial) {
  if (total.ground() != partial.ground())
    throw std::invalid_argument("ground sets differ");
  for (const auto& t : partial.canonical_triples())
    if (!total.has_triple(t[0], t[1], t[2])) return false;
  return true;
}

namespace {

// Incremental-insertion backtracking: place ground labels in increasing
// order into a growing cycle; a placement survives iff no partial-order
// triple among placed labels is reversed. Visits each full arrangement once
// (the first label is pinned at position 0).
void extend_rec(const PartialCyclicOrder& partial,
                const std::vector<Label>& g, std::vector<Label>& arr,
                std::size_t next,
                const std::function<void(const std::vector<Label>&)>& sink) {
  if (next == g.size()) {
    sink(arr);
    return;
  }
  Label x = g[next];
  for (std::size_t at = 1; at <= arr.size(); ++at) {
    arr.insert(arr.begin() + static_cast<std::ptrdiff_t>(at), x);
    // Check every triple {u,v,x} with u,v already placed: compute the
    // orientation realized by arr and reject if the partial order holds the
    // reverse.
    bool ok = true;
    for (std::size_t pu = 0; ok && pu < arr.size(); ++pu) {
      if (arr[pu] == x) continue;
      for (std::size_t pv = pu + 1; ok && pv < arr.size(); ++pv) {
        if (arr[pv] == x) continue;
        // Realized orientation of (x, arr[pu], arr[pv]) or its reverse.
        std::size_t px = at;
        Label u = arr[pu], v = arr[pv];
        bool x_u_v;
        if (px < pu)
          x_u_v = true;  // x ... u ... v
        else if (px > pv)
          x_u_v = true;  // u ... v ... x  (same cyclic orientation)
        else
          x_u_v = false;  // u ... x ... v
        if (x_u_v ? partial.contains(v, u, x) : partial.contains(x, u, v))
          ok = false;
      }
    }
    if (ok) extend_rec(partial, g, arr, next + 1, sink);
    arr.erase(arr.begin() + static_cast<std::ptrdiff_t>(at));
  }
}

void for_each_extension(
    const PartialCyclicOrder& partial,
    const std::function<void(const std::vector<Label>&)>& sink) {
  const auto& g = partial.ground();
  if (g.size() < 3)
    throw std::invalid_argument("extension enumeration needs >= 3 labels");
  std::vector<Label> arr{g[0], g[1]};
  extend_rec(partial, g, arr, 2, sink);
}

}  // namespace

std::vector<TotalCyclicOrder> enumerate_extensions(
    const PartialCyclicOrder& partial) {
  std::vector<TotalCyclicOrder> out;
  for_each_extension(partial, [&](const std::vector<Label>& arr) {
    out.emplace_back(arr);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_extensions(const PartialCyclicOrder& partial) {
  std::uint64_t count = 0;
  for_each_extension(partial, [&](const std::vector<Label>&) { ++count; });
  return count;
}

std::vector<TotalCyclicOrder> extensions_with_adjacent_pair(
    const PartialCyclicOrder& partial, Label i, Label j) {
  if (i == j) throw std::invalid_argument("pair labels must differ");
  std::vector<TotalCyclicOrder> out;
  for (const auto& t : enumerate_extensions(partial)) {
    const auto& c = t.cycle();
    for (std::size_t p = 0; p < c.size(); ++p) {
      if (c[p] == i && c[(p + 1) % c.size()] == j) {
        out.push_back(t);
        break;
      }
    }
  }
  return out;
}

PartialCyclicOrder restrict(const PartialCyclicOrder& partial,
                            const std::vector<Label>& subset) {
  for (Label s : subset)
    if (!partial.has_label(s))
      throw std::invalid_argument("subset not contained in ground");
  PartialCyclicOrder out{std::vector<Label>(subset)};
  for (const auto& t : partial.canonical_triples())
    if (out.has_label(t[0]) && out.has_label(t[1]) && out.has_label(t[2]))
      out.add_triple(t[0], t[1], t[2]);
  return out;
}

}  // namespace tiler
