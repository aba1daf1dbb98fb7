#pragma once

#include "graphdss/graph.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace graphdss {

using BitRow = boost::dynamic_bitset<std::uint64_t>;
using Block = std::vector<std::uint8_t>;

/// Binary cycle-space code of a connected graph: coordinates are edges,
/// parity checks are vertices.
struct ParityCode {
  static constexpr int field_order = 2;

  Graph graph;
  std::size_t length = 0;
  /// Row v has ones at the edges incident to v.
  std::vector<BitRow> parity_rows;
  std::size_t rank = 0;
  std::size_t dimension = 0;
  /// One fundamental cycle per non-tree edge of the spanning tree.
  std::vector<BitRow> generator_basis;
  /// Non-tree edges, ascending; these carry user data verbatim.
  std::vector<EdgeId> information_set;

  /// BFS tree rooted at vertex 0: visit order and the edge to each parent
  /// (the root's entry is edge_count()).
  std::vector<VertexId> tree_order;
  std::vector<EdgeId> parent_edge;
};

/// Rank over GF(2) by word-parallel Gaussian elimination.
std::size_t gf2_rank(std::vector<BitRow> rows);

/// Throws Error(Disconnected).
ParityCode derive_code(const Graph& g);

/// H * word == 0.
bool is_codeword(const ParityCode& code, const BitRow& word);

/// Minimum weight of a nonzero codeword. Enumerates all 2^k codewords when
/// k <= 20 and checks the result against the girth; for larger k returns the
/// girth after confirming a girth-length cycle is a codeword.
/// Throws Error(Acyclic) when the code is trivial.
std::size_t minimum_distance(const ParityCode& code, const Graph& g);

/// Payload of every edge; each byte position is eight independent bit-plane
/// codewords.
struct StorageState {
  std::size_t block_size = 0;
  std::vector<Block> blocks;

  friend bool operator==(const StorageState&, const StorageState&) = default;
};

/// Systematic encoder: information-set edges carry the data blocks in
/// order, tree edges are solved leaf-upward.
/// Throws Error(WrongBlockCount) or Error(UnequalBlockSizes).
StorageState encode(const ParityCode& code, std::span<const Block> data);

/// The data blocks sitting on the information set.
std::vector<Block> extract_data(const ParityCode& code,
                                const StorageState& state);

/// True iff at every vertex the XOR of incident blocks is zero.
bool verify_state(const ParityCode& code, const StorageState& state);

}  // namespace graphdss
