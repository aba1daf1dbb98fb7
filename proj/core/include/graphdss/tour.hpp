#pragma once

#include "graphdss/graph.hpp"

#include <array>
#include <span>
#include <vector>

namespace graphdss {

using ArcId = std::size_t;

struct Arc {
  VertexId tail = 0;
  VertexId head = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Directed version of a graph. Arc i came from undirected edge
/// source_edge()[i].
class OrientedGraph {
 public:
  OrientedGraph() = default;
  OrientedGraph(std::size_t vertex_count, std::vector<Arc> arcs,
                std::vector<EdgeId> source_edge);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  const Arc& arc(ArcId a) const { return arcs_.at(a); }
  const std::vector<EdgeId>& source_edge() const noexcept {
    return source_edge_;
  }

  std::span<const ArcId> in_arcs(VertexId v) const { return in_.at(v); }
  std::span<const ArcId> out_arcs(VertexId v) const { return out_.at(v); }

  bool is_two_in_two_out() const;

  // Selectors over In(v) and Out(v), compared by the index of the far
  // endpoint. Require the 2-in-2-out shape at v.
  ArcId min_in(VertexId v) const;
  ArcId max_in(VertexId v) const;
  ArcId min_out(VertexId v) const;
  ArcId max_out(VertexId v) const;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Arc> arcs_;
  std::vector<EdgeId> source_edge_;
  std::vector<std::vector<ArcId>> in_;
  std::vector<std::vector<ArcId>> out_;
};

/// Closed walk using every edge exactly once (Hierholzer), starting at
/// vertex 0 and always taking the smallest unused incident edge index.
/// Throws Error(NotEulerian) on odd degrees or a disconnected edge set.
std::vector<EdgeId> eulerian_tour(const Graph& g);

/// Directs each edge the way the tour traverses it. Arc i is edge i.
/// Throws Error(InvalidTour) unless `tour` is a closed walk covering every
/// edge exactly once.
OrientedGraph orient_from_tour(const Graph& g, std::span<const EdgeId> tour);

/// Validates an explicit direction assignment. Arcs keep the given order.
/// Throws Error(MismatchedEdges) unless the arcs are exactly g's edges, and
/// in strict mode Error(NotTwoInTwoOut) unless every vertex has in- and
/// out-degree 2.
OrientedGraph load_orientation(const Graph& g, std::span<const Arc> arcs,
                               bool strict = true);

}  // namespace graphdss
