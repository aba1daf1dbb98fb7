// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// 1 when any criterion fails. A criterion needing absent data prints SKIP.

#include "graphdss/analysis.hpp"
#include "graphdss/catalog.hpp"
#include "graphdss/code.hpp"
#include "graphdss/error.hpp"
#include "graphdss/random.hpp"
#include "graphdss/repair.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>

using namespace graphdss;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  bool skipped = false;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

int failures = 0;

void report(int id, const std::string& title, double limit_s,
            const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (limit_s > 0 && secs >= limit_s) {
    std::ostringstream os;
    os << "took " << secs << " s, limit " << limit_s << " s";
    o.fail(os.str());
  }
  if (!o.pass) ++failures;
  const char* status = !o.pass ? "FAIL" : o.skipped ? "SKIP" : "PASS";
  std::printf("%s  %d  %-58s %8.3f s  %s\n", status, id, title.c_str(),
              secs, o.detail.c_str());
  std::fflush(stdout);
}

std::string str(std::size_t x) { return std::to_string(x); }

// Catalog systems built by the default pipeline (deterministic tour,
// uniform policy).
struct Named {
  std::string name;
  Graph base;
  CubicSystem sys;
};

std::vector<Named> catalog_systems(Pairing mode) {
  std::vector<Named> out;
  for (std::size_t g = 3; g <= 6; ++g) {
    const CatalogEntry e = cage(g);
    out.push_back({e.name, e.graph, default_system(e.graph, mode)});
  }
  return out;
}

// ---- 1 ----------------------------------------------------------------------

struct Row {
  std::size_t disks, blocks, disks_rec, blocks_rec, length, dimension, d;
};
// Typed from the published cage table; d is the girth of the 4-regular graph.
constexpr Row kTable[] = {
    {5, 15, 2, 6, 15, 6, 3},
    {8, 24, 3, 9, 24, 9, 4},
    {19, 57, 4, 12, 57, 20, 5},
    {26, 78, 5, 15, 78, 27, 6},
    {67, 201, 6, 18, 201, 68, 7},
};

std::optional<std::string> compare_row(std::size_t g, const Graph& base, const Row& r) {
  const CubicSystem sys = default_system(base);
  const SystemProfile p = profile(sys, base);
  const ParityCode code = derive_code(sys.cubic);
  std::ostringstream got;
  got << p.disk_count << "," << p.block_count << "," << p.max_guaranteed_disk_erasures << ","
      << p.blocks_recoverable << ",[" << p.code_length << "," << p.code_dimension << ","
      << p.girth_base << "] girth(cubic)=" << p.girth_cubic;
  const bool ok = p.disk_count == r.disks && p.block_count == r.blocks &&
                  p.max_guaranteed_disk_erasures == r.disks_rec &&
                  p.blocks_recoverable == r.blocks_rec && p.code_length == r.length &&
                  p.code_dimension == r.dimension && p.girth_base == r.d &&
                  code.length - code.rank == r.dimension;
  if (!ok) return "cage" + str(g) + " got " + got.str();
  return std::nullopt;
}

Outcome criterion1() {
  Outcome o;
  std::ostringstream rows;
  for (std::size_t i = 0; i < 4; ++i) {
    const std::size_t g = i + 3;
    const Graph base = cage(g).graph;
    if (auto bad = compare_row(g, base, kTable[i])) {
      o.fail(*bad);
      return o;
    }
    const CubicSystem sys = default_system(base);
    rows << "[" << kTable[i].length << "," << kTable[i].dimension << "," << kTable[i].d
         << "|" << *girth(sys.cubic) << "] ";
  }
  o.detail = "rows 1-4 exact; [n,k,d=girth(G)|girth(cubic)] " + rows.str();
  return o;
}

Outcome criterion1_row5() {
  Outcome o;
  const char* env = std::getenv(kCage7PathEnv);
  if (!env) {
    o.skipped = true;
    o.detail = std::string("not verified: set ") + kCage7PathEnv +
               " to the 67-vertex cage JSON";
    return o;
  }
  const CatalogEntry e = cage(7, std::filesystem::path(env));
  if (auto bad = compare_row(7, e.graph, kTable[4])) {
    o.fail(*bad);
  } else {
    o.detail = "row 5 exact";
  }
  return o;
}

// ---- 2 ----------------------------------------------------------------------

Outcome check_bound(const std::string& name, const CubicSystem& sys, const Graph& base,
                    std::uint64_t expect_checked, std::ostringstream& log) {
  Outcome o;
  const RecoveryVerdict v = verify_recovery_bound(sys, base, Exhaustive{});
  // Independent re-check of the witness with the brute-force cycle finder.
  std::vector<char> mask(sys.cubic.edge_count(), 0);
  for (EdgeId e : sys.disk_edge_set(v.witness).members()) mask[e] = 1;
  if (v.checked != expect_checked || v.recoverable != expect_checked || !v.all_g_minus_1_ok) {
    o.fail(name + ": " + str(v.recoverable) + "/" + str(v.checked) + " recoverable, expected " +
           str(expect_checked));
  } else if (v.witness.size() != v.girth || !v.witness_unrecoverable ||
             !oracle::has_cycle(sys.cubic, mask)) {
    o.fail(name + ": no unrecoverable " + str(v.girth) + "-set witness");
  }
  log << name << " " << v.recoverable << "/" << v.checked << " +witness" << v.witness.size()
      << "; ";
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::ostringstream log;
  const std::uint64_t expected[] = {10, 56, 3876, 65780};
  const auto systems = catalog_systems(Pairing::Parallel);
  for (std::size_t i = 0; i < systems.size(); ++i) {
    const Outcome one =
        check_bound(systems[i].name, systems[i].sys, systems[i].base, expected[i], log);
    if (!one.pass) o.fail(one.detail);
  }
  if (o.pass) o.detail = log.str();
  return o;
}

// ---- 3 ----------------------------------------------------------------------

bool residual_matches(const CubicSystem& sys, const EdgeSubset& erased) {
  const EdgeSubset residual = peel(sys, erased).residual;
  if (!(residual == two_core(sys.cubic, erased))) return false;
  const auto members = erased.members();
  const auto oracle_core = oracle::strip_leaves(sys.cubic, {members.begin(), members.end()});
  const auto got = residual.members();
  return std::set<EdgeId>(got.begin(), got.end()) == oracle_core;
}

Outcome criterion3() {
  Outcome o;
  const CubicSystem petersen_sys = k5_paper_system(K5Variant::Girth5);
  const std::size_t m = petersen_sys.cubic.edge_count();
  std::uint64_t subsets = 0;
  std::uint64_t mismatches = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (__builtin_popcountll(mask) > 6) continue;
    EdgeSubset s(m);
    for (EdgeId e = 0; e < m; ++e)
      if (mask >> e & 1) s.set(e);
    ++subsets;
    if (!residual_matches(petersen_sys, s)) ++mismatches;
  }
  std::uint64_t expected_subsets = 0;
  for (std::uint64_t i = 0; i <= 6; ++i) expected_subsets += binomial(m, i);
  if (subsets != expected_subsets) o.fail("enumerated " + str(subsets) + " subsets");

  std::uint64_t random_checked = 0;
  for (std::size_t g : {5, 6}) {
    const Graph base = cage(g).graph;
    const CubicSystem sys = default_system(base);
    const std::size_t mm = sys.cubic.edge_count();
    for (std::uint64_t t = 0; t < 10000; ++t) {
      auto rng = stream_for(3000 + g, t);
      std::vector<EdgeId> order(mm);
      std::iota(order.begin(), order.end(), 0);
      const std::size_t size = uniform_below(rng, mm + 1);
      for (std::size_t i = 0; i < size; ++i) {
        std::swap(order[i], order[i + uniform_below(rng, mm - i)]);
      }
      const EdgeSubset s(mm, std::span<const EdgeId>(order.data(), size));
      ++random_checked;
      if (!residual_matches(sys, s)) ++mismatches;
    }
  }
  if (mismatches) o.fail(str(mismatches) + " residual/2-core mismatches");
  if (o.pass) {
    o.detail = "petersen " + str(subsets) + " subsets of size <= 6, robertson+pg23 " +
               str(random_checked) + " seeded subsets, 0 mismatches";
  }
  return o;
}

// ---- 4 ----------------------------------------------------------------------

Outcome criterion4() {
  Outcome o;
  std::vector<Named> systems;
  systems.push_back({"k5-girth5", complete_graph(5), k5_paper_system(K5Variant::Girth5)});
  systems.push_back({"k5-girth3", complete_graph(5), k5_paper_system(K5Variant::Girth3)});
  for (Pairing mode : {Pairing::Parallel, Pairing::Crossed}) {
    for (auto& s : catalog_systems(mode)) systems.push_back(std::move(s));
  }
  std::size_t disks = 0;
  for (const Named& s : systems) {
    for (std::size_t d = 0; d < s.sys.disk_count(); ++d) {
      ++disks;
      const auto a = repair_disk(s.sys, d, DiskRepairStrategy::MinBandwidth);
      const auto b = repair_disk(s.sys, d, DiskRepairStrategy::MinRounds);
      if (a.transferred_symbols != 4 || a.rounds != 3 || !a.residual.empty()) {
        o.fail(s.name + " disk " + str(d) + " MinBandwidth " + str(a.transferred_symbols) +
               "/" + str(a.rounds));
      }
      if (b.transferred_symbols != 5 || b.rounds != 2 || !b.residual.empty()) {
        o.fail(s.name + " disk " + str(d) + " MinRounds " + str(b.transferred_symbols) + "/" +
               str(b.rounds));
      }
    }
  }
  // Pairs drawn from the systems that have non-adjacent disks.
  const std::vector<std::size_t> pool = {3, 4, 5};  // k44, robertson, pg23 (parallel)
  std::size_t pairs = 0;
  for (std::uint64_t t = 0; t < 100; ++t) {
    auto rng = stream_for(4000, t);
    const Named& s = systems[pool[t % pool.size()]];
    const std::size_t n = s.sys.disk_count();
    std::size_t a = 0, b = 0;
    do {
      a = uniform_below(rng, n);
      b = uniform_below(rng, n);
    } while (a == b || disks_adjacent(s.sys, a, b));
    const std::size_t pair[] = {a, b};
    const RepairReport r = repair_disks(s.sys, pair);
    ++pairs;
    if (r.transferred_symbols != 8 || !r.residual.empty()) {
      o.fail(s.name + " disks {" + str(a) + "," + str(b) + "} transferred " +
             str(r.transferred_symbols));
    }
  }
  if (o.pass) {
    o.detail = str(disks) + " disks at 4/3 and 5/2; " + str(pairs) +
               " non-adjacent pairs at 8 symbols";
  }
  return o;
}

// ---- 5 ----------------------------------------------------------------------

Outcome criterion5() {
  Outcome o;
  std::vector<Graph> graphs;
  for (std::size_t g = 3; g <= 6; ++g) graphs.push_back(cage(g).graph);
  for (std::uint64_t i = 0; i < 50; ++i) {
    auto rng = stream_for(5000, i);
    const std::size_t n = 6 + uniform_below(rng, 25);
    graphs.push_back(random_4_regular(n, 5000 + i));
  }
  std::size_t built = 0;
  for (const Graph& g : graphs) {
    const std::size_t n = g.vertex_count();
    const OrientedGraph gd = orient_from_tour(g, eulerian_tour(g));
    for (Pairing mode : {Pairing::Parallel, Pairing::Crossed}) {
      const CubicSystem sys = build_cubic(gd, PairingPolicy::uniform(n, mode));
      ++built;
      const bool ok = is_connected(sys.cubic) && is_regular(sys.cubic, 3) &&
                      sys.cubic.vertex_count() == 2 * n && sys.cubic.edge_count() == 3 * n &&
                      verify_disk_decomposition(sys);
      if (!ok) o.fail("N=" + str(n) + " failed");
    }
  }
  if (o.pass) o.detail = str(built) + " systems (4 cages + 50 random, 2 policies), 0 failures";
  return o;
}

// ---- 6 ----------------------------------------------------------------------

Outcome criterion6() {
  Outcome o;
  const CubicSystem g5 = k5_paper_system(K5Variant::Girth5);
  const CubicSystem g3 = k5_paper_system(K5Variant::Girth3);
  if (!are_isomorphic(g5.cubic, petersen_graph())) o.fail("girth-5 system is not Petersen");
  if (girth(g5.cubic) != 5u) o.fail("girth-5 system has girth " + str(*girth(g5.cubic)));
  if (girth(g3.cubic) != 3u) o.fail("girth-3 system has girth " + str(*girth(g3.cubic)));
  std::ostringstream log;
  const Graph k5 = complete_graph(5);
  for (const auto& [name, sys] : {std::pair{"girth5", &g5}, std::pair{"girth3", &g3}}) {
    const Outcome one = check_bound(name, *sys, k5, 10, log);
    if (!one.pass) o.fail(one.detail);
  }
  if (o.pass) o.detail = "Petersen isomorphic, girths 5 and 3; " + log.str();
  return o;
}

// ---- 7 ----------------------------------------------------------------------

std::size_t span_min_weight(const ParityCode& code, std::uint64_t& words) {
  const std::size_t k = code.dimension;
  std::size_t best = code.length + 1;
  words = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    BitRow w(code.length);
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) w ^= code.generator_basis[i];
    ++words;
    if (mask == 0) continue;
    if (!is_codeword(code, w)) return 0;
    best = std::min(best, w.count());
  }
  return best;
}

Outcome criterion7() {
  Outcome o;
  std::vector<Graph> graphs;
  for (std::size_t g = 3; g <= 6; ++g) {
    graphs.push_back(cage(g).graph);
    graphs.push_back(default_system(cage(g).graph).cubic);
  }
  graphs.push_back(petersen_graph());
  for (const Graph& g : graphs) {
    const ParityCode code = derive_code(g);
    const std::size_t naive = oracle::naive_rank(oracle::incidence_rows(g));
    if (code.rank != g.vertex_count() - 1 || naive != code.rank) {
      o.fail("rank " + str(code.rank) + " on n=" + str(g.vertex_count()));
    }
  }
  std::ostringstream log;
  for (std::size_t g : {3, 4}) {
    const CubicSystem sys = default_system(cage(g).graph);
    const ParityCode code = derive_code(sys.cubic);
    std::uint64_t words = 0;
    const std::size_t d = span_min_weight(code, words);
    const std::size_t gc = *girth(sys.cubic);
    if (d != gc || minimum_distance(code, sys.cubic) != gc) {
      o.fail("cage" + str(g) + " distance " + str(d) + " vs girth " + str(gc));
    }
    log << words << " words d=" << d << "; ";
  }

  std::size_t trips = 0;
  const auto systems = catalog_systems(Pairing::Parallel);
  for (std::uint64_t t = 0; t < 100; ++t) {
    auto rng = stream_for(7000, t);
    const Named& s = systems[t % systems.size()];
    const ParityCode code = derive_code(s.sys.cubic);
    const std::size_t block = 1 + uniform_below(rng, 64);
    std::vector<Block> data(code.dimension, Block(block));
    for (auto& b : data)
      for (auto& x : b) x = static_cast<std::uint8_t>(rng());
    const StorageState original = encode(code, data);
    const std::size_t disk = uniform_below(rng, s.sys.disk_count());
    const std::size_t one[] = {disk};
    const RepairReport report = peel(s.sys, s.sys.disk_edge_set(one));
    StorageState damaged = original;
    for (EdgeId e : report.erased.members()) {
      for (auto& x : damaged.blocks[e]) x = static_cast<std::uint8_t>(rng());
    }
    const StorageState repaired = repair_state(code, damaged, report);
    ++trips;
    if (!(repaired == original) || extract_data(code, repaired) != data) {
      o.fail("round trip " + str(t) + " differs");
    }
  }
  const Rational rate = profile(k5_paper_system(K5Variant::Girth5), complete_graph(5)).rate;
  if (!(rate == Rational::make(2, 5))) o.fail("K5 rate " + rate.str());
  if (o.pass) {
    o.detail = "rank n-1 on " + str(graphs.size()) + " graphs; " + log.str() + str(trips) +
               " round trips identical; K5 rate " + rate.str();
  }
  return o;
}

// ---- 8 ----------------------------------------------------------------------

bool covers_exactly_once(const Graph& g, const std::vector<Disk>& paths) {
  if (paths.size() * 3 != g.edge_count()) return false;
  std::vector<int> used(g.edge_count(), 0);
  for (const Disk& p : paths) {
    if (std::set<VertexId>(p.begin(), p.end()).size() != 4) return false;
    for (std::size_t i = 0; i < 3; ++i) {
      const auto e = g.find_edge(p[i], p[i + 1]);
      if (!e) return false;
      ++used[*e];
    }
  }
  return std::all_of(used.begin(), used.end(), [](int u) { return u == 1; });
}

Outcome criterion8() {
  Outcome o;
  std::vector<std::pair<std::string, Graph>> graphs;
  graphs.emplace_back("petersen", petersen_graph());
  graphs.emplace_back("K4", complete_graph(4));
  graphs.emplace_back("K3,3", Graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                                        {2, 3}, {2, 4}, {2, 5}}));
  for (std::uint64_t i = 0; i < 50; ++i) {
    auto rng = stream_for(8000, i);
    const std::size_t n = 2 * (2 + uniform_below(rng, 19));  // 4..40
    graphs.emplace_back("random" + str(i), oracle::random_hamiltonian_cubic(n, 8000 + i));
  }
  for (const auto& [name, g] : graphs) {
    const auto paths = decompose_p4(g);
    if (!paths) {
      o.fail(name + ": no decomposition");
    } else if (!covers_exactly_once(g, *paths)) {
      o.fail(name + ": bad decomposition");
    }
  }
  if (o.pass) o.detail = str(graphs.size()) + " cubic graphs decomposed, every edge once";
  return o;
}

}  // namespace

int main() {
  std::printf("graphdss acceptance suite\n");
  report(1, "published cage table rows 1-4 exact (limit 5 s)", 5.0, criterion1);
  report(1, "published cage table row 5 (needs cage data file)", 0, criterion1_row5);
  report(2, "g-1 disk erasures recoverable, exhaustive (limit 120 s)", 120.0, criterion2);
  report(3, "peel residual equals 2-core", 0, criterion3);
  report(4, "disk repair bandwidth 4/3, 5/2; pairs at 8", 0, criterion4);
  report(5, "construction invariants", 0, criterion5);
  report(6, "pinned K5 systems", 0, criterion6);
  report(7, "code rank, distance, round trips, rate", 0, criterion7);
  report(8, "generic P4 decomposer", 0, criterion8);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
