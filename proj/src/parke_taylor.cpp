#include "tiler/parke_taylor.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tiler {

namespace {

const Rational& zval(const EvaluationPoint& point, Label a) {
  auto it = point.z.find(a);
  if (it == point.z.end())
    throw std::invalid_argument("evaluation point misses a label");
  return it->second;
}

void require_distinct(const EvaluationPoint& point) {
  std::set<Rational> vals;
  for (const auto& [lab, v] : point.z)
    if (!vals.insert(v).second)
      throw std::invalid_argument("evaluation point values must be distinct");
}

}  // namespace

EvaluationPoint random_point(const std::vector<Label>& ground,
                             std::mt19937_64& rng) {
  // Integer coordinates from a range far larger than any residual-degree
  // bound at desk scale, so a false identity passing a trial is vanishingly
  // unlikely.
  std::uniform_int_distribution<long long> dist(-1'000'000'000'000LL,
                                                1'000'000'000'000LL);
  EvaluationPoint p;
  std::set<long long> used;
  for (Label g : ground) {
    long long v = dist(rng);
    while (!used.insert(v).second) v = dist(rng);
    p.z[g] = Rational(static_cast<long>(v));
  }
  return p;
}

Rational pt_eval(const TotalCyclicOrder& cycle, const EvaluationPoint& point) {
  const auto& c = cycle.cycle();
  Rational denom = 1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    Rational d = zval(point, c[(i + 1) % c.size()]) - zval(point, c[i]);
    if (d == 0)
      throw std::invalid_argument("coincident z values in pt_eval");
    denom *= d;
  }
  return Rational(1) / denom;
}

Rational pt_sum(const std::vector<TotalCyclicOrder>& cycles,
                const EvaluationPoint& point) {
  Rational total = 0;
  for (const auto& c : cycles) total += pt_eval(c, point);
  total.canonicalize();
  return total;
}

Rational simplex_weight(const WSimplex& w, const EvaluationPoint& point) {
  std::vector<Label> cyc(w.w.begin(), w.w.end());
  return pt_eval(TotalCyclicOrder{cyc}, point);
}

Rational tile_weight(const Subdivision& s, const EvaluationPoint& point) {
  return pt_sum(enumerate_extensions(sigma_order(s)), point);
}

std::pair<TotalCyclicOrder, TotalCyclicOrder> split_at_pair(
    const TotalCyclicOrder& w, Label i, Label j) {
  const auto& c = w.cycle();
  const std::size_t n = c.size();
  std::size_t pi = static_cast<std::size_t>(
      std::find(c.begin(), c.end(), i) - c.begin());
  if (pi == n) throw std::invalid_argument("label i not in cycle");
  // Normalize so that i immediately precedes j (Def 6.3 is symmetric in the
  // pair).
  if (c[(pi + 1) % n] != j) {
    std::size_t pj = static_cast<std::size_t>(
        std::find(c.begin(), c.end(), j) - c.begin());
    if (pj == n || c[(pj + 1) % n] != i)
      throw std::invalid_argument("pair not adjacent in the cycle");
    std::swap(i, j);
    pi = pj;
  }
  auto in_open = [&](Label x, Label lo, Label hi) {
    // x strictly between lo and hi in the cyclic order of integer labels.
    int m = 0;
    for (Label v : c) m = std::max(m, v);
    return ((x - lo) % m + m) % m < ((hi - lo) % m + m) % m && x != lo;
  };
  std::vector<Label> left{kStar}, right{kStar};
  for (std::size_t t = 2; t < n; ++t) {
    Label x = c[(pi + t) % n];
    if (in_open(x, i, j))
      left.push_back(x);
    else
      right.push_back(x);
  }
  if (left.size() < 3 || right.size() < 3)
    throw IncompatibleArc("split side has fewer than 3 labels");
  return {TotalCyclicOrder{left}, TotalCyclicOrder{right}};
}

Rational facet_weight(const Subdivision& sigma, const Arc& arc,
                      const EvaluationPoint& point_left,
                      const EvaluationPoint& point_right) {
  auto facets = facet_defining_arcs(sigma);
  bool ok = std::any_of(facets.begin(), facets.end(), [&](const FacetArc& f) {
    return f.arc == arc && f.internal;
  });
  if (!ok) throw IncompatibleArc("arc is not internal facet-defining");
  Rational total = 0;
  for (const auto& w :
       extensions_with_adjacent_pair(sigma_order(sigma), arc.src, arc.dst)) {
    auto [wl, wr] = split_at_pair(w, arc.src, arc.dst);
    total += pt_eval(wl, point_left) * pt_eval(wr, point_right);
  }
  total.canonicalize();
  return total;
}

Rational pt_residue(const TotalCyclicOrder& w, Label i, Label j,
                    const EvaluationPoint& point) {
  const auto& c = w.cycle();
  const std::size_t n = c.size();
  int orient = 0;  // +1: edge i->j present; -1: edge j->i present
  std::size_t skip = n;
  for (std::size_t t = 0; t < n; ++t) {
    Label a = c[t], b = c[(t + 1) % n];
    if (a == i && b == j) {
      orient = 1;
      skip = t;
    } else if (a == j && b == i) {
      orient = -1;
      skip = t;
    }
  }
  if (orient == 0) return 0;
  Rational denom = 1;
  for (std::size_t t = 0; t < n; ++t) {
    if (t == skip) continue;
    Rational d = zval(point, c[(t + 1) % n]) - zval(point, c[t]);
    if (d == 0)
      throw std::invalid_argument("coincident z values outside the pair");
    denom *= d;
  }
  Rational r = Rational(orient) / denom;
  r.canonicalize();
  return r;
}

std::vector<TotalCyclicOrder> shuffle_set(const std::vector<Label>& u,
                                          const std::vector<Label>& v) {
  std::set<Label> seen;
  for (Label x : u) seen.insert(x);
  for (Label x : v) seen.insert(x);
  const int n = static_cast<int>(u.size() + v.size()) + 1;
  if (static_cast<int>(seen.size()) != n - 1 || seen.count(n) ||
      *seen.begin() < 1 || *seen.rbegin() > n - 1)
    throw std::invalid_argument("u, v must disjointly cover [n-1]");
  std::vector<TotalCyclicOrder> out;
  std::vector<Label> acc;
  auto rec = [&](auto&& self, std::size_t a, std::size_t b) -> void {
    if (a == u.size() && b == v.size()) {
      auto word = acc;
      word.push_back(n);
      out.emplace_back(word);
      return;
    }
    if (a < u.size()) {
      acc.push_back(u[a]);
      self(self, a + 1, b);
      acc.pop_back();
    }
    if (b < v.size()) {
      acc.push_back(v[b]);
      self(self, a, b + 1);
      acc.pop_back();
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

VerificationReport run_zero_check(
    const std::string& family, const std::string& params,
    const std::vector<Label>& ground, int trials, std::uint64_t seed,
    const std::function<Rational(const EvaluationPoint&)>& residual_fn) {
  VerificationReport rep;
  rep.family = family;
  rep.params = params;
  rep.seed = seed;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    EvaluationPoint p = random_point(ground, rng);
    require_distinct(p);
    VerificationTrial trial;
    for (const auto& [lab, v] : p.z) trial.point.emplace_back(lab, v);
    trial.residual = residual_fn(p);
    trial.residual.canonicalize();
    if (trial.residual != 0) rep.pass = false;
    rep.trials.push_back(std::move(trial));
  }
  return rep;
}

std::string subdivision_params(const Subdivision& s) {
  std::ostringstream os;
  os << "n=" << s.n() << " polygons=";
  for (const auto& p : s.polygons) {
    os << color_name(p.color)[0] << "(";
    for (std::size_t i = 0; i < p.vertices.size(); ++i)
      os << (i ? "," : "") << p.vertices[i];
    os << ")";
  }
  return os.str();
}

}  // namespace

VerificationReport verify_tile_weight(const Subdivision& sigma, int trials,
                                      std::uint64_t seed) {
  auto type = validate(sigma);
  if (type.tricolored)
    throw std::invalid_argument("verify_tile_weight needs a bicolored subdivision");
  auto exts = enumerate_extensions(sigma_order(sigma));
  const int n = sigma.n();
  std::vector<Label> id_cycle = ground_interval(n);
  TotalCyclicOrder identity{id_cycle};
  int sign = type.k % 2 == 0 ? 1 : -1;
  return run_zero_check(
      "tile_weight", subdivision_params(sigma), sigma.ground, trials, seed,
      [&](const EvaluationPoint& p) -> Rational {
        // Named result: the gmpxx expression template must collapse before
        // its temporaries go out of scope.
        Rational r = pt_sum(exts, p) - Rational(sign) * pt_eval(identity, p);
        return r;
      });
}

VerificationReport verify_u1(int n, int trials, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("u1 identity needs n >= 3");
  std::vector<Label> u{1}, v;
  for (Label x = 2; x <= n - 1; ++x) v.push_back(x);
  auto cycles = shuffle_set(u, v);
  return run_zero_check("u1", "n=" + std::to_string(n), ground_interval(n),
                        trials, seed, [&](const EvaluationPoint& p) {
                          return pt_sum(cycles, p);
                        });
}

VerificationReport verify_shuffle(const std::vector<Label>& u,
                                  const std::vector<Label>& v, int trials,
                                  std::uint64_t seed) {
  auto cycles = shuffle_set(u, v);
  const int n = static_cast<int>(u.size() + v.size()) + 1;
  std::ostringstream os;
  os << "u=(";
  for (std::size_t i = 0; i < u.size(); ++i) os << (i ? "," : "") << u[i];
  os << ") v=(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return run_zero_check("shuffle", os.str(), ground_interval(n), trials, seed,
                        [&](const EvaluationPoint& p) {
                          return pt_sum(cycles, p);
                        });
}

VerificationReport verify_grey_vanishing(const Subdivision& tau, int trials,
                                         std::uint64_t seed) {
  auto type = validate(tau);
  if (!type.tricolored)
    throw std::invalid_argument(
        "grey-vanishing identity needs >= 1 grey polygon");
  auto exts = enumerate_extensions(sigma_order(tau));
  return run_zero_check("grey_vanishing", subdivision_params(tau), tau.ground,
                        trials, seed, [&](const EvaluationPoint& p) {
                          return pt_sum(exts, p);
                        });
}

}  // namespace tiler
