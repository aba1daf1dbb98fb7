#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace graphdss {

using VertexId = std::size_t;
using EdgeId = std::size_t;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected simple graph with positional edge identity. Edge i is always
/// the i-th entry of edges(); every bitset, codeword and disk in the library
/// is indexed by that position.
class Graph {
 public:
  Graph() = default;

  /// Throws Error(InvalidGraph) on self-loops, duplicate edges, out-of-range
  /// endpoints, or label lists whose size does not match.
  Graph(std::size_t vertex_count, std::vector<Edge> edges,
        std::vector<std::string> vertex_labels = {},
        std::vector<std::string> edge_labels = {});

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  /// Incident edge indices of v, ascending.
  std::span<const EdgeId> incident(VertexId v) const {
    return incidence_.at(v);
  }
  std::size_t degree(VertexId v) const { return incidence_.at(v).size(); }

  VertexId other_end(EdgeId e, VertexId v) const;
  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;

  const std::vector<std::string>& vertex_labels() const noexcept {
    return vertex_labels_;
  }
  const std::vector<std::string>& edge_labels() const noexcept {
    return edge_labels_;
  }
  /// Display name: the label when present, else the index.
  std::string vertex_name(VertexId v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::vector<std::string> vertex_labels_;
  std::vector<std::string> edge_labels_;
};

/// Set of edges of one graph, stored as a bitset over edge indices.
class EdgeSubset {
 public:
  EdgeSubset() = default;
  explicit EdgeSubset(std::size_t edge_count) : bits_(edge_count) {}
  EdgeSubset(std::size_t edge_count, std::span<const EdgeId> members);
  EdgeSubset(std::size_t edge_count, std::initializer_list<EdgeId> members)
      : EdgeSubset(edge_count, std::span<const EdgeId>(members.begin(),
                                                       members.size())) {}

  static EdgeSubset full(std::size_t edge_count);

  std::size_t size() const noexcept { return bits_.size(); }
  std::size_t count() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }

  bool test(EdgeId e) const { return bits_.test(e); }
  void set(EdgeId e) { bits_.set(e); }
  void reset(EdgeId e) { bits_.reset(e); }

  bool is_subset_of(const EdgeSubset& other) const {
    return bits_.is_subset_of(other.bits_);
  }
  std::vector<EdgeId> members() const;

  EdgeSubset& operator|=(const EdgeSubset& o) {
    bits_ |= o.bits_;
    return *this;
  }
  EdgeSubset& operator&=(const EdgeSubset& o) {
    bits_ &= o.bits_;
    return *this;
  }

  const boost::dynamic_bitset<std::uint64_t>& bits() const noexcept {
    return bits_;
  }

  friend bool operator==(const EdgeSubset& a, const EdgeSubset& b) {
    return a.bits_ == b.bits_;
  }

 private:
  boost::dynamic_bitset<std::uint64_t> bits_;
};

std::vector<std::size_t> degree_sequence(const Graph& g);

/// True when every vertex has degree k.
bool is_regular(const Graph& g, std::size_t k);

bool is_connected(const Graph& g);

/// Exact girth by breadth-first search from every vertex, with the search
/// cut off once it can no longer improve on the best cycle found.
/// std::nullopt means the graph is a forest.
std::optional<std::size_t> girth(const Graph& g);

/// Edge indices of one shortest cycle, in walk order; empty for forests.
std::vector<EdgeId> shortest_cycle(const Graph& g);

/// Vertices of one shortest cycle, in walk order; empty for forests.
std::vector<VertexId> shortest_cycle_vertices(const Graph& g);

/// Largest subset of `erased` in which every touched vertex has erased
/// degree >= 2, found by repeated leaf stripping. Empty iff `erased` spans a
/// forest.
EdgeSubset two_core(const Graph& g, const EdgeSubset& erased);

/// Backtracking isomorphism test with degree pruning, for small graphs.
bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace graphdss
