#include "graphdss/analysis.hpp"

#include "graphdss/code.hpp"
#include "graphdss/error.hpp"
#include "graphdss/random.hpp"
#include "graphdss/repair.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace graphdss {

Rational Rational::make(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  const std::uint64_t g = std::gcd(num, den);
  return {num / (g == 0 ? 1 : g), den / (g == 0 ? 1 : g)};
}

Rational cubic_code_rate(std::size_t n) {
  // 1 - (n-1)/(3n/2) = (n+2)/(3n).
  return Rational::make(n + 2, 3 * n);
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n-k+i) / i is exact; divide out the common factor first.
    const std::uint64_t g = std::gcd(r, i);
    const std::uint64_t mult = (n - k + i) / (i / g);
    r /= g;
    if (r > UINT64_MAX / mult) return UINT64_MAX;
    r *= mult;
  }
  return r;
}

std::vector<std::size_t> disk_cycle_of(const CubicSystem& sys,
                                       std::span<const EdgeId> cycle) {
  const Graph& g = sys.cubic;
  if (cycle.size() < 3) {
    throw Error(ErrorCode::NotACycle, "a cycle needs at least three edges");
  }
  std::vector<std::size_t> deg(g.vertex_count(), 0);
  std::set<EdgeId> distinct;
  for (EdgeId e : cycle) {
    if (e >= g.edge_count() || !distinct.insert(e).second) {
      throw Error(ErrorCode::NotACycle,
                  "edge " + std::to_string(e) + " invalid or repeated");
    }
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  for (std::size_t d : deg) {
    if (d != 0 && d != 2) {
      throw Error(ErrorCode::NotACycle, "edges do not form a 2-regular subgraph");
    }
  }
  // Connected: walk from the first edge and count edges reached.
  std::vector<char> seen(g.edge_count(), 0);
  std::vector<VertexId> stack{g.edge(cycle[0]).u};
  std::size_t reached = 0;
  std::vector<char> vseen(g.vertex_count(), 0);
  vseen[stack.back()] = 1;
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident(x)) {
      if (!distinct.count(e) || seen[e]) continue;
      seen[e] = 1;
      ++reached;
      const VertexId y = g.other_end(e, x);
      if (!vseen[y]) {
        vseen[y] = 1;
        stack.push_back(y);
      }
    }
  }
  if (reached != cycle.size()) {
    throw Error(ErrorCode::NotACycle, "edges form more than one cycle");
  }
  const auto owner = sys.edge_owners();
  std::set<std::size_t> disks;
  for (EdgeId e : cycle) disks.insert(owner[e]);
  return {disks.begin(), disks.end()};
}

namespace {

std::vector<std::vector<std::size_t>> disk_adjacency(const CubicSystem& sys) {
  const std::size_t n = sys.disk_count();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (disks_adjacent(sys, a, b)) {
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
    }
  }
  return adj;
}

// Enumerates connected vertex subsets of exactly `size` vertices, each once
// (Wernicke's ESU). Stops early when visit returns true.
bool for_each_connected_subset(
    const std::vector<std::vector<std::size_t>>& adj, std::size_t size,
    const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> subset;
  std::vector<char> in_subset(n, 0);
  std::vector<std::size_t> near(n, 0);  // # subset vertices adjacent or equal

  std::function<bool(std::vector<std::size_t>, std::size_t)> extend =
      [&](std::vector<std::size_t> ext, std::size_t root) -> bool {
    if (subset.size() == size) return visit(subset);
    while (!ext.empty()) {
      const std::size_t w = ext.back();
      ext.pop_back();
      std::vector<std::size_t> next = ext;
      for (std::size_t u : adj[w]) {
        if (u > root && near[u] == 0 && !in_subset[u]) next.push_back(u);
      }
      subset.push_back(w);
      in_subset[w] = 1;
      ++near[w];
      for (std::size_t u : adj[w]) ++near[u];
      if (extend(std::move(next), root)) return true;
      for (std::size_t u : adj[w]) --near[u];
      --near[w];
      in_subset[w] = 0;
      subset.pop_back();
    }
    return false;
  };

  for (std::size_t v = 0; v < n; ++v) {
    subset.assign(1, v);
    in_subset[v] = 1;
    ++near[v];
    for (std::size_t u : adj[v]) ++near[u];
    std::vector<std::size_t> ext;
    for (std::size_t u : adj[v]) {
      if (u > v) ext.push_back(u);
    }
    const bool stop = extend(std::move(ext), v);
    for (std::size_t u : adj[v]) --near[u];
    --near[v];
    in_subset[v] = 0;
    if (stop) return true;
  }
  return false;
}

}  // namespace

std::vector<std::size_t> min_disk_cycle_witness(const CubicSystem& sys) {
  const auto adj = disk_adjacency(sys);
  std::vector<std::size_t> found;
  for (std::size_t t = 1; t <= sys.disk_count(); ++t) {
    const bool hit = for_each_connected_subset(
        adj, t, [&](const std::vector<std::size_t>& s) {
          if (two_core(sys.cubic, sys.disk_edge_set(s)).empty()) return false;
          found = s;
          return true;
        });
    if (hit) {
      std::sort(found.begin(), found.end());
      return found;
    }
  }
  return {};
}

std::size_t min_disk_cycle(const CubicSystem& sys, const Graph& base) {
  if (base.vertex_count() != sys.disk_count()) {
    throw Error(ErrorCode::InvalidGraph,
                "base graph has " + std::to_string(base.vertex_count()) +
                    " vertices, system has " + std::to_string(sys.disk_count()) +
                    " disks");
  }
  return min_disk_cycle_witness(sys).size();
}

namespace {

bool subset_recoverable(const CubicSystem& sys,
                        std::span<const std::size_t> disks) {
  return peel(sys, sys.disk_edge_set(disks)).residual.empty();
}

}  // namespace

RecoveryVerdict verify_recovery_bound(const CubicSystem& sys, const Graph& base,
                                      const VerifyMode& mode) {
  const auto g = girth(base);
  if (!g) throw Error(ErrorCode::Acyclic, "base graph is a forest");
  if (base.vertex_count() != sys.disk_count()) {
    throw Error(ErrorCode::InvalidGraph, "base graph does not match system");
  }
  RecoveryVerdict v;
  v.girth = *g;
  v.subset_size = *g - 1;
  const std::size_t n = sys.disk_count();
  const std::size_t k = v.subset_size;

  const auto record = [&](std::span<const std::size_t> s) {
    ++v.checked;
    if (subset_recoverable(sys, s)) {
      ++v.recoverable;
    } else if (v.counterexample.empty()) {
      v.counterexample.assign(s.begin(), s.end());
    }
  };

  if (std::holds_alternative<Exhaustive>(mode)) {
    std::vector<std::size_t> s(k);
    std::iota(s.begin(), s.end(), 0);
    if (k <= n) {
      for (;;) {
        record(s);
        // Next combination in lexicographic order.
        std::size_t i = k;
        while (i > 0 && s[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++s[i - 1];
        for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
      }
    }
  } else {
    const auto& sampled = std::get<Sampled>(mode);
    std::vector<std::size_t> pool(n);
    for (std::uint64_t t = 0; t < sampled.trials; ++t) {
      auto rng = stream_for(sampled.seed, t);
      std::iota(pool.begin(), pool.end(), 0);
      for (std::size_t i = 0; i < k; ++i) {
        const auto j = i + uniform_below(rng, n - i);
        std::swap(pool[i], pool[j]);
      }
      std::vector<std::size_t> s(pool.begin(), pool.begin() + k);
      std::sort(s.begin(), s.end());
      record(s);
    }
  }
  v.all_g_minus_1_ok = v.checked == v.recoverable;

  for (VertexId x : shortest_cycle_vertices(base)) {
    v.witness.push_back(sys.disk_of_vertex(x));
  }
  std::sort(v.witness.begin(), v.witness.end());
  v.witness_unrecoverable = !subset_recoverable(sys, v.witness);
  return v;
}

SystemProfile profile(const CubicSystem& sys, const Graph& base) {
  SystemProfile p;
  p.disk_count = sys.disk_count();
  p.block_count = sys.cubic.edge_count();
  const auto gb = girth(base);
  const auto gc = girth(sys.cubic);
  if (!gb || !gc) throw Error(ErrorCode::Acyclic, "profile needs cycles");
  p.girth_base = *gb;
  p.girth_cubic = *gc;
  p.max_guaranteed_disk_erasures = *gb - 1;
  p.blocks_recoverable = 3 * (*gb - 1);
  p.max_guaranteed_block_erasures = *gc - 1;
  const ParityCode code = derive_code(sys.cubic);
  p.code_length = code.length;
  p.code_dimension = code.dimension;
  p.code_distance = minimum_distance(code, sys.cubic);
  p.rate = Rational::make(code.dimension, code.length);
  return p;
}

}  // namespace graphdss
