#include "graphdss/tour.hpp"

#include "graphdss/error.hpp"

#include <algorithm>
#include <utility>

namespace graphdss {

OrientedGraph::OrientedGraph(std::size_t vertex_count, std::vector<Arc> arcs,
                             std::vector<EdgeId> source_edge)
    : vertex_count_(vertex_count),
      arcs_(std::move(arcs)),
      source_edge_(std::move(source_edge)),
      in_(vertex_count),
      out_(vertex_count) {
  if (source_edge_.size() != arcs_.size()) {
    throw Error(ErrorCode::MismatchedEdges,
                "source_edge map size differs from arc count");
  }
  for (ArcId a = 0; a < arcs_.size(); ++a) {
    const auto [t, h] = arcs_[a];
    if (t >= vertex_count_ || h >= vertex_count_ || t == h) {
      throw Error(ErrorCode::MismatchedEdges,
                  "arc " + std::to_string(a) + " is out of range or a loop");
    }
    out_[t].push_back(a);
    in_[h].push_back(a);
  }
}

bool OrientedGraph::is_two_in_two_out() const {
  for (VertexId v = 0; v < vertex_count_; ++v) {
    if (in_[v].size() != 2 || out_[v].size() != 2) return false;
  }
  return true;
}

namespace {

void require_two(const std::vector<ArcId>& arcs, VertexId v) {
  if (arcs.size() != 2) {
    throw Error(ErrorCode::NotTwoInTwoOut,
                "vertex " + std::to_string(v) + " does not have in/out degree 2");
  }
}

}  // namespace

ArcId OrientedGraph::min_in(VertexId v) const {
  const auto& in = in_.at(v);
  require_two(in, v);
  return arcs_[in[0]].tail < arcs_[in[1]].tail ? in[0] : in[1];
}

ArcId OrientedGraph::max_in(VertexId v) const {
  const auto& in = in_.at(v);
  require_two(in, v);
  return arcs_[in[0]].tail < arcs_[in[1]].tail ? in[1] : in[0];
}

ArcId OrientedGraph::min_out(VertexId v) const {
  const auto& out = out_.at(v);
  require_two(out, v);
  return arcs_[out[0]].head < arcs_[out[1]].head ? out[0] : out[1];
}

ArcId OrientedGraph::max_out(VertexId v) const {
  const auto& out = out_.at(v);
  require_two(out, v);
  return arcs_[out[0]].head < arcs_[out[1]].head ? out[1] : out[0];
}

std::vector<EdgeId> eulerian_tour(const Graph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) % 2 != 0) {
      throw Error(ErrorCode::NotEulerian,
                  "vertex " + std::to_string(v) + " has odd degree " +
                      std::to_string(g.degree(v)));
    }
  }
  if (g.edge_count() == 0) return {};

  VertexId start = 0;
  while (g.degree(start) == 0) ++start;

  std::vector<char> used(g.edge_count(), 0);
  std::vector<std::size_t> cursor(g.vertex_count(), 0);
  // Stack entries: (vertex, edge used to arrive there).
  std::vector<std::pair<VertexId, EdgeId>> stack{{start, g.edge_count()}};
  std::vector<EdgeId> circuit;
  circuit.reserve(g.edge_count());
  while (!stack.empty()) {
    const VertexId x = stack.back().first;
    const auto inc = g.incident(x);
    auto& c = cursor[x];
    while (c < inc.size() && used[inc[c]]) ++c;
    if (c == inc.size()) {
      if (stack.back().second != g.edge_count()) {
        circuit.push_back(stack.back().second);
      }
      stack.pop_back();
      continue;
    }
    const EdgeId e = inc[c];
    used[e] = 1;
    stack.emplace_back(g.other_end(e, x), e);
  }
  if (circuit.size() != g.edge_count()) {
    throw Error(ErrorCode::NotEulerian, "edge set is disconnected");
  }
  // Hierholzer emits edges in reverse traversal order.
  std::reverse(circuit.begin(), circuit.end());
  return circuit;
}

OrientedGraph orient_from_tour(const Graph& g, std::span<const EdgeId> tour) {
  const std::size_t m = g.edge_count();
  if (tour.size() != m) {
    throw Error(ErrorCode::InvalidTour, "tour length " +
                                            std::to_string(tour.size()) +
                                            " != edge count " + std::to_string(m));
  }
  std::vector<char> used(m, 0);
  for (EdgeId e : tour) {
    if (e >= m || used[e]) {
      throw Error(ErrorCode::InvalidTour,
                  "edge " + std::to_string(e) + " missing or repeated");
    }
    used[e] = 1;
  }
  std::vector<Arc> arcs(m);
  std::vector<EdgeId> source(m);
  for (EdgeId e = 0; e < m; ++e) source[e] = e;
  if (m == 0) return OrientedGraph(g.vertex_count(), {}, {});

  // The start vertex is the end of the first edge not shared with the second.
  const Edge first = g.edge(tour[0]);
  VertexId start = first.u;
  if (m > 1) {
    const Edge second = g.edge(tour[1]);
    const bool u_shared = first.u == second.u || first.u == second.v;
    const bool v_shared = first.v == second.u || first.v == second.v;
    if (!u_shared && !v_shared) {
      throw Error(ErrorCode::InvalidTour, "first two edges are not adjacent");
    }
    start = u_shared ? first.v : first.u;
  }
  VertexId at = start;
  for (EdgeId e : tour) {
    const Edge ed = g.edge(e);
    if (ed.u != at && ed.v != at) {
      throw Error(ErrorCode::InvalidTour,
                  "edge " + std::to_string(e) + " does not continue the walk");
    }
    const VertexId next = ed.u == at ? ed.v : ed.u;
    arcs[e] = Arc{at, next};
    at = next;
  }
  if (at != start) {
    throw Error(ErrorCode::InvalidTour, "walk is not closed");
  }
  return OrientedGraph(g.vertex_count(), std::move(arcs), std::move(source));
}

OrientedGraph load_orientation(const Graph& g, std::span<const Arc> arcs,
                               bool strict) {
  if (arcs.size() != g.edge_count()) {
    throw Error(ErrorCode::MismatchedEdges,
                "arc count " + std::to_string(arcs.size()) + " != edge count " +
                    std::to_string(g.edge_count()));
  }
  std::vector<char> used(g.edge_count(), 0);
  std::vector<EdgeId> source;
  source.reserve(arcs.size());
  for (const Arc& a : arcs) {
    const auto e = g.find_edge(a.tail, a.head);
    if (!e) {
      throw Error(ErrorCode::MismatchedEdges,
                  "arc (" + std::to_string(a.tail) + "," +
                      std::to_string(a.head) + ") is not an edge");
    }
    if (used[*e]) {
      throw Error(ErrorCode::MismatchedEdges,
                  "edge " + std::to_string(*e) + " directed twice");
    }
    used[*e] = 1;
    source.push_back(*e);
  }
  OrientedGraph out(g.vertex_count(), {arcs.begin(), arcs.end()},
                    std::move(source));
  if (strict) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (out.in_arcs(v).size() != 2 || out.out_arcs(v).size() != 2) {
        throw Error(ErrorCode::NotTwoInTwoOut,
                    "vertex " + std::to_string(v) + " has in-degree " +
                        std::to_string(out.in_arcs(v).size()) +
                        " and out-degree " +
                        std::to_string(out.out_arcs(v).size()));
      }
    }
  }
  return out;
}

}  // namespace graphdss
