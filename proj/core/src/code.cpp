#include "graphdss/code.hpp"

#include "graphdss/error.hpp"

#include <algorithm>
#include <bit>
#include <deque>

namespace graphdss {

std::size_t gf2_rank(std::vector<BitRow> rows) {
  std::size_t rank = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto pivot = rows[i].find_first();
    if (pivot == BitRow::npos) continue;
    ++rank;
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (rows[j].test(pivot)) rows[j] ^= rows[i];
    }
  }
  return rank;
}

ParityCode derive_code(const Graph& g) {
  if (!is_connected(g)) {
    throw Error(ErrorCode::Disconnected, "code requires a connected graph");
  }
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();

  ParityCode code;
  code.graph = g;
  code.length = m;
  code.parity_rows.assign(n, BitRow(m));
  for (EdgeId e = 0; e < m; ++e) {
    code.parity_rows[g.edge(e).u].set(e);
    code.parity_rows[g.edge(e).v].set(e);
  }
  code.rank = gf2_rank(code.parity_rows);
  code.dimension = m - code.rank;

  code.parent_edge.assign(n, m);
  std::vector<VertexId> parent(n, 0);
  std::vector<std::size_t> depth(n, 0);
  std::vector<char> seen(n, 0);
  std::vector<char> tree(m, 0);
  if (n > 0) {
    std::deque<VertexId> q{0};
    seen[0] = 1;
    while (!q.empty()) {
      const VertexId x = q.front();
      q.pop_front();
      code.tree_order.push_back(x);
      for (EdgeId e : g.incident(x)) {
        const VertexId y = g.other_end(e, x);
        if (seen[y]) continue;
        seen[y] = 1;
        parent[y] = x;
        depth[y] = depth[x] + 1;
        code.parent_edge[y] = e;
        tree[e] = 1;
        q.push_back(y);
      }
    }
  }
  for (EdgeId e = 0; e < m; ++e) {
    if (tree[e]) continue;
    code.information_set.push_back(e);
    // Fundamental cycle: e plus both tree paths up to the common ancestor.
    BitRow cycle(m);
    cycle.set(e);
    VertexId a = g.edge(e).u;
    VertexId b = g.edge(e).v;
    while (a != b) {
      if (depth[a] < depth[b]) std::swap(a, b);
      cycle.flip(code.parent_edge[a]);
      a = parent[a];
    }
    code.generator_basis.push_back(std::move(cycle));
  }
  return code;
}

bool is_codeword(const ParityCode& code, const BitRow& word) {
  for (const BitRow& row : code.parity_rows) {
    if ((row & word).count() % 2 != 0) return false;
  }
  return true;
}

std::size_t minimum_distance(const ParityCode& code, const Graph& g) {
  const std::size_t k = code.generator_basis.size();
  if (k == 0) {
    throw Error(ErrorCode::Acyclic, "graph has no cycle; code is trivial");
  }
  const auto expected = girth(g);
  if (k <= 20) {
    // Gray-code walk flips one basis vector per step.
    BitRow word(code.length);
    std::size_t best = code.length + 1;
    const std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t i = 1; i < total; ++i) {
      const auto bit = static_cast<std::size_t>(std::countr_zero(i));
      word ^= code.generator_basis[bit];
      best = std::min(best, word.count());
    }
    if (!expected || *expected != best) {
      throw Error(ErrorCode::InvariantMismatch,
                  "brute-force distance " + std::to_string(best) +
                      " differs from girth");
    }
    return best;
  }
  const auto cycle = shortest_cycle(g);
  BitRow word(code.length);
  for (EdgeId e : cycle) word.set(e);
  if (!is_codeword(code, word)) {
    throw Error(ErrorCode::InvariantMismatch,
                "girth cycle is not a codeword");
  }
  return cycle.size();
}

StorageState encode(const ParityCode& code, std::span<const Block> data) {
  if (data.size() != code.dimension ||
      code.information_set.size() != code.dimension) {
    throw Error(ErrorCode::WrongBlockCount,
                "expected " + std::to_string(code.dimension) +
                    " data blocks, got " + std::to_string(data.size()));
  }
  const std::size_t s = data.empty() ? 0 : data.front().size();
  for (const Block& b : data) {
    if (b.size() != s) {
      throw Error(ErrorCode::UnequalBlockSizes,
                  "data blocks must all have " + std::to_string(s) + " bytes");
    }
  }
  const Graph& g = code.graph;
  StorageState state;
  state.block_size = s;
  state.blocks.assign(code.length, Block(s, 0));
  for (std::size_t i = 0; i < data.size(); ++i) {
    state.blocks[code.information_set[i]] = data[i];
  }
  // Reverse BFS order: every child is solved before its parent edge.
  for (auto it = code.tree_order.rbegin(); it != code.tree_order.rend(); ++it) {
    const VertexId v = *it;
    const EdgeId up = code.parent_edge[v];
    if (up == code.length) continue;
    Block acc(s, 0);
    for (EdgeId e : g.incident(v)) {
      if (e == up) continue;
      const Block& b = state.blocks[e];
      for (std::size_t i = 0; i < s; ++i) acc[i] ^= b[i];
    }
    state.blocks[up] = std::move(acc);
  }
  return state;
}

std::vector<Block> extract_data(const ParityCode& code,
                                const StorageState& state) {
  std::vector<Block> out;
  out.reserve(code.information_set.size());
  for (EdgeId e : code.information_set) out.push_back(state.blocks.at(e));
  return out;
}

bool verify_state(const ParityCode& code, const StorageState& state) {
  if (state.blocks.size() != code.length) return false;
  for (const Block& b : state.blocks) {
    if (b.size() != state.block_size) return false;
  }
  const Graph& g = code.graph;
  Block acc(state.block_size);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::fill(acc.begin(), acc.end(), std::uint8_t{0});
    for (EdgeId e : g.incident(v)) {
      const Block& b = state.blocks[e];
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i] ^= b[i];
    }
    if (std::any_of(acc.begin(), acc.end(),
                    [](std::uint8_t x) { return x != 0; })) {
      return false;
    }
  }
  return true;
}

}  // namespace graphdss
