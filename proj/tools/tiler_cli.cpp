// Command-line frontend: batch enumeration, tiling verification and search,
// and randomized exact verification of the Parke-Taylor identities.
//
// Output is JSON-lines: one object per entity on stdout; `verify` emits a
// single report object; `search` appends a summary object. Exit codes:
// 0 success, 1 verification failure, 2 bad parameters, 3 resource bound.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "tiler/json_io.hpp"

using namespace tiler;
using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

int max_n() {
  if (const char* env = std::getenv("TILER_MAX_N")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 8;
}

// Reserved for parallel backends; accepted so callers can pin it.
int thread_budget() {
  if (const char* env = std::getenv("TILER_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

struct ResourceBound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_within_bound(int n) {
  if (n > max_n())
    throw ResourceBound("n exceeds TILER_MAX_N = " + std::to_string(max_n()));
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

// ---------------------------------------------------------------------------
// enumerate

int cmd_enumerate_subdivisions(int k, int n) {
  require_within_bound(n);
  for (const auto& s : enumerate_bicolored(k, n)) emit(to_json(s));
  return 0;
}

int cmd_enumerate_wsimplices(int k, int n) {
  require_within_bound(n);
  for (const auto& w : enumerate_D(k, n)) emit(to_json(w));
  return 0;
}

int cmd_enumerate_extensions(const std::string& order_file) {
  auto order = partial_order_from_json(load_json(order_file));
  require_within_bound(static_cast<int>(order.ground_size()));
  for (const auto& t : enumerate_extensions(order)) emit(to_json(t));
  return 0;
}

// ---------------------------------------------------------------------------
// verify

json pairing_to_json(const PairingCheck& p) {
  return {{"count_above", p.count_above},
          {"count_below", p.count_below},
          {"pass", p.pass}};
}

int cmd_verify_tiling(const std::string& file, const std::string& check,
                      int trials, std::uint64_t seed) {
  auto [tiles, kn] = tiling_file_from_json(load_json(file));
  auto [k, n] = kn;
  require_within_bound(n);
  json report;
  report["file"] = file;
  report["k"] = k;
  report["n"] = n;
  bool pass = true;

  auto res = is_tiling(tiles, k, n);
  if (std::holds_alternative<FailureCertificate>(res)) {
    const auto& f = std::get<FailureCertificate>(res);
    report["cover"] = {{"pass", false},
                       {"witness_w", f.w},
                       {"doubly_covered", f.doubly_covered},
                       {"tile_indices", f.tile_indices}};
    report["pass"] = false;
    emit(report);
    return kExitFail;
  }
  const auto& t = std::get<Tiling>(res);
  std::size_t volume = 0;
  for (const auto& tile : t.tiles) volume += tile.extension_ids.size();
  report["cover"] = {{"pass", true},
                     {"tiles", t.tiles.size()},
                     {"volume", volume}};

  bool all = check == "all";
  if (all || check == "facet-pairing" || check == "arc-balance") {
    json arcs = json::array();
    bool ok = true;
    for (Label i = 1; i <= n; ++i)
      for (Label j = i + 1; j <= n; ++j) {
        if ((i % n) + 1 == j || (j % n) + 1 == i) continue;
        if (all || check == "arc-balance") {
          auto b = check_arc_balance(t, i, j);
          ok = ok && b.pass;
          if (!b.pass)
            arcs.push_back({{"arc", {i, j}}, {"balance", pairing_to_json(b)}});
        }
        if (all || check == "facet-pairing")
          for (int c = 1; c <= k; ++c) {
            auto p = check_facet_pairing(t, i, j, c);
            ok = ok && p.pass;
            if (!p.pass)
              arcs.push_back(
                  {{"arc", {i, j}}, {"c", c}, {"pairing", pairing_to_json(p)}});
          }
      }
    report["hyperplanes"] = {{"pass", ok}, {"failures", arcs}};
    pass = pass && ok;
  }
  if (all || check == "covering") {
    auto cov = check_covering_multiplicity(t, 32, seed);
    report["covering"] = {{"multiplicity", cov.multiplicity},
                          {"samples", cov.samples},
                          {"resampled", cov.resampled},
                          {"pass", cov.pass}};
    pass = pass && cov.pass;
  }
  if (all || check == "weights") {
    std::mt19937_64 rng(seed);
    bool ok = true;
    std::vector<Label> id = ground_interval(n);
    TotalCyclicOrder identity{id};
    Rational magic(static_cast<long>(binomial(n - 2, k)) *
                   (k % 2 == 0 ? 1 : -1));
    for (int trial = 0; trial < trials; ++trial) {
      auto p = random_point(t.tiles[0].subdivision.ground, rng);
      Rational sum = 0;
      for (const auto& tile : t.tiles) sum += tile_weight(tile.subdivision, p);
      if (sum != magic * pt_eval(identity, p)) ok = false;
    }
    report["weights"] = {{"trials", trials}, {"seed", seed}, {"pass", ok}};
    pass = pass && ok;
  }

  report["pass"] = pass;
  emit(report);
  return pass ? 0 : kExitFail;
}

int cmd_verify_identities(const std::string& family, int n,
                          const std::vector<int>& u, const std::vector<int>& v,
                          const std::string& file, int trials,
                          std::uint64_t seed) {
  VerificationReport rep;
  if (family == "u1") {
    require_within_bound(n);
    rep = verify_u1(n, trials, seed);
  } else if (family == "shuffle") {
    rep = verify_shuffle(std::vector<Label>(u.begin(), u.end()),
                         std::vector<Label>(v.begin(), v.end()), trials, seed);
  } else if (family == "grey_vanishing" || family == "tile_weight") {
    if (file.empty())
      throw std::invalid_argument("--file required for this family");
    auto s = subdivision_from_json(load_json(file));
    require_within_bound(s.n());
    rep = family == "grey_vanishing" ? verify_grey_vanishing(s, trials, seed)
                                     : verify_tile_weight(s, trials, seed);
  } else {
    throw std::invalid_argument("unknown family " + family);
  }
  emit(to_json(rep));
  return rep.pass ? 0 : kExitFail;
}

int cmd_verify_chambers(int k, int n) {
  require_within_bound(n);
  bool pass = true;
  json failures = json::array();
  std::size_t total = 0;
  for (const auto& w : enumerate_D(k, n)) {
    ++total;
    auto m = construct_chamber_point(w);
    if (verify_point_in_chamber(m, w) != ChamberMembership::match) {
      pass = false;
      failures.push_back(to_json(w));
    }
  }
  emit({{"family", "chambers"},
        {"k", k},
        {"n", n},
        {"simplices", total},
        {"failures", failures},
        {"pass", pass}});
  return pass ? 0 : kExitFail;
}

// ---------------------------------------------------------------------------
// search

int cmd_search(int k, int n, std::optional<std::uint64_t> limit,
               const std::string& check, std::uint64_t seed) {
  require_within_bound(n);
  auto tilings = enumerate_tilings(k, n, limit);
  const std::uint64_t magic = binomial(n - 2, k);
  bool all_pass = true;
  for (const auto& t : tilings) {
    json line = to_json(t);
    std::size_t volume = 0;
    for (const auto& tile : t.tiles) volume += tile.extension_ids.size();
    line["size"] = t.tiles.size();
    line["volume"] = volume;
    bool pass = t.tiles.size() == magic;
    if (check == "all") {
      bool hyper = true;
      for (Label i = 1; i <= n; ++i)
        for (Label j = i + 1; j <= n; ++j) {
          if ((i % n) + 1 == j || (j % n) + 1 == i) continue;
          hyper = hyper && check_arc_balance(t, i, j).pass;
          for (int c = 1; c <= k; ++c)
            hyper = hyper && check_facet_pairing(t, i, j, c).pass;
        }
      auto cov = check_covering_multiplicity(t, 8, seed);
      line["checks"] = {{"hyperplanes", hyper}, {"covering", cov.pass}};
      pass = pass && hyper && cov.pass;
    }
    line["pass"] = pass;
    all_pass = all_pass && pass;
    emit(line);
  }
  emit({{"summary", true},
        {"count", tilings.size()},
        {"magic", magic},
        {"limit_reached", limit && tilings.size() >= *limit},
        {"pass", all_pass}});
  return all_pass ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  (void)thread_budget();
  CLI::App app{"positroid tilings of the hypersimplex: enumeration, "
               "verification, and search"};
  app.require_subcommand(1);

  int k = 0, n = 0, trials = 5;
  std::uint64_t seed = 0;
  std::uint64_t limit_value = 0;
  std::string file, order_file, check = "all", family;
  std::vector<int> u, v;

  auto* enumerate = app.add_subcommand("enumerate", "list combinatorial objects");
  enumerate->require_subcommand(1);
  auto* subs = enumerate->add_subcommand("subdivisions",
                                         "bicolored subdivisions of type (k,n)");
  subs->add_option("--k", k)->required();
  subs->add_option("--n", n)->required()->check(CLI::Range(3, 64));
  auto* wsim = enumerate->add_subcommand("wsimplices", "all of D_{k+1,n}");
  wsim->add_option("--k", k)->required();
  wsim->add_option("--n", n)->required()->check(CLI::Range(3, 64));
  auto* exts = enumerate->add_subcommand(
      "extensions", "circular extensions of a partial cyclic order");
  exts->add_option("--order-file", order_file)->required();

  auto* verify = app.add_subcommand("verify", "check tilings and identities");
  verify->require_subcommand(1);
  auto* vt = verify->add_subcommand("tiling", "exact cover and the necessary "
                                              "conditions on a tiling file");
  vt->add_option("--file", file)->required();
  vt->add_option("--check", check)
      ->check(CLI::IsMember({"cover", "facet-pairing", "arc-balance",
                             "covering", "weights", "all"}));
  vt->add_option("--trials", trials);
  vt->add_option("--seed", seed);
  auto* vi = verify->add_subcommand("identities",
                                    "randomized exact identity checks");
  vi->add_option("--family", family)
      ->required()
      ->check(CLI::IsMember({"u1", "shuffle", "grey_vanishing", "tile_weight"}));
  vi->add_option("--n", n);
  vi->add_option("--u", u)->delimiter(',');
  vi->add_option("--v", v)->delimiter(',');
  vi->add_option("--file", file);
  vi->add_option("--trials", trials);
  vi->add_option("--seed", seed);
  auto* vc = verify->add_subcommand("chambers",
                                    "chamber-point round trip over D_{k+1,n}");
  vc->add_option("--k", k)->required();
  vc->add_option("--n", n)->required()->check(CLI::Range(3, 64));

  auto* search = app.add_subcommand("search", "exhaustive exact-cover search");
  search->add_option("--k", k)->required();
  search->add_option("--n", n)->required()->check(CLI::Range(3, 64));
  auto* limit_opt = search->add_option("--limit", limit_value);
  search->add_option("--check", check)
      ->check(CLI::IsMember({"none", "all"}));
  search->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (subs->parsed()) return cmd_enumerate_subdivisions(k, n);
    if (wsim->parsed()) return cmd_enumerate_wsimplices(k, n);
    if (exts->parsed()) return cmd_enumerate_extensions(order_file);
    if (vt->parsed()) return cmd_verify_tiling(file, check, trials, seed);
    if (vi->parsed())
      return cmd_verify_identities(family, n, u, v, file, trials, seed);
    if (vc->parsed()) return cmd_verify_chambers(k, n);
    if (search->parsed())
      return cmd_search(k, n,
                        limit_opt->count()
                            ? std::optional<std::uint64_t>(limit_value)
                            : std::nullopt,
                        check, seed);
  } catch (const ResourceBound& e) {
    std::cerr << json{{"error", e.what()}, {"resource_bound", true}}.dump()
              << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
