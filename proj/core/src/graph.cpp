#include "graphdss/graph.hpp"

#include "graphdss/error.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

namespace graphdss {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::NotEulerian: return "NotEulerian";
    case ErrorCode::InvalidTour: return "InvalidTour";
    case ErrorCode::MismatchedEdges: return "MismatchedEdges";
    case ErrorCode::NotTwoInTwoOut: return "NotTwoInTwoOut";
    case ErrorCode::NotCubic: return "NotCubic";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::Acyclic: return "Acyclic";
    case ErrorCode::WrongBlockCount: return "WrongBlockCount";
    case ErrorCode::UnequalBlockSizes: return "UnequalBlockSizes";
    case ErrorCode::InvalidDisk: return "InvalidDisk";
    case ErrorCode::Unrecoverable: return "Unrecoverable";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::MissingDataFile: return "MissingDataFile";
    case ErrorCode::InvariantMismatch: return "InvariantMismatch";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges,
             std::vector<std::string> vertex_labels,
             std::vector<std::string> edge_labels)
    : vertex_count_(vertex_count),
      edges_(std::move(edges)),
      incidence_(vertex_count),
      vertex_labels_(std::move(vertex_labels)),
      edge_labels_(std::move(edge_labels)) {
  if (!vertex_labels_.empty() && vertex_labels_.size() != vertex_count_) {
    throw Error(ErrorCode::InvalidGraph, "vertex label count " +
                                             std::to_string(vertex_labels_.size()) +
                                             " != vertex count " +
                                             std::to_string(vertex_count_));
  }
  if (!edge_labels_.empty() && edge_labels_.size() != edges_.size()) {
    throw Error(ErrorCode::InvalidGraph, "edge label count " +
                                             std::to_string(edge_labels_.size()) +
                                             " != edge count " +
                                             std::to_string(edges_.size()));
  }
  std::set<std::pair<VertexId, VertexId>> seen;
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const auto [u, v] = edges_[e];
    if (u >= vertex_count_ || v >= vertex_count_) {
      throw Error(ErrorCode::InvalidGraph,
                  "edge " + std::to_string(e) + " has an endpoint out of range");
    }
    if (u == v) {
      throw Error(ErrorCode::InvalidGraph,
                  "edge " + std::to_string(e) + " is a self-loop at vertex " +
                      std::to_string(u));
    }
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
      throw Error(ErrorCode::InvalidGraph,
                  "edge " + std::to_string(e) + " duplicates {" +
                      std::to_string(u) + "," + std::to_string(v) + "}");
    }
    incidence_[u].push_back(e);
    incidence_[v].push_back(e);
  }
}

VertexId Graph::other_end(EdgeId e, VertexId v) const {
  const Edge& ed = edges_.at(e);
  return ed.u == v ? ed.v : ed.u;
}

std::optional<EdgeId> Graph::find_edge(VertexId a, VertexId b) const {
  if (a >= vertex_count_ || b >= vertex_count_) return std::nullopt;
  const auto& small = incidence_[a].size() <= incidence_[b].size()
                          ? incidence_[a]
                          : incidence_[b];
  const VertexId from = &small == &incidence_[a] ? a : b;
  const VertexId to = from == a ? b : a;
  for (EdgeId e : small) {
    if (other_end(e, from) == to) return e;
  }
  return std::nullopt;
}

std::string Graph::vertex_name(VertexId v) const {
  if (!vertex_labels_.empty()) return vertex_labels_.at(v);
  return std::to_string(v);
}

EdgeSubset::EdgeSubset(std::size_t edge_count, std::span<const EdgeId> members)
    : bits_(edge_count) {
  for (EdgeId e : members) bits_.set(e);
}

EdgeSubset EdgeSubset::full(std::size_t edge_count) {
  EdgeSubset s(edge_count);
  s.bits_.set();
  return s;
}

std::vector<EdgeId> EdgeSubset::members() const {
  std::vector<EdgeId> out;
  out.reserve(bits_.count());
  for (auto i = bits_.find_first(); i != decltype(bits_)::npos;
       i = bits_.find_next(i)) {
    out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> out(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) out[v] = g.degree(v);
  return out;
}

bool is_regular(const Graph& g, std::size_t k) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != k) return false;
  }
  return true;
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident(x)) {
      const VertexId y = g.other_end(e, x);
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == n;
}

std::optional<std::size_t> girth(const Graph& g) {
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  const std::size_t n = g.vertex_count();
  std::size_t best = kUnset;
  std::vector<std::size_t> dist(n);
  std::vector<EdgeId> parent(n);
  std::deque<VertexId> queue;
  for (VertexId root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kUnset);
    dist[root] = 0;
    parent[root] = kUnset;
    queue.assign(1, root);
    while (!queue.empty()) {
      const VertexId x = queue.front();
      queue.pop_front();
      // Every cycle closed from here on has length >= 2 * dist[x].
      if (best != kUnset && 2 * dist[x] >= best) break;
      for (EdgeId e : g.incident(x)) {
        if (e == parent[x]) continue;
        const VertexId y = g.other_end(e, x);
        if (dist[y] == kUnset) {
          dist[y] = dist[x] + 1;
          parent[y] = e;
          queue.push_back(y);
        } else {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  if (best == kUnset) return std::nullopt;
  return best;
}

namespace {

struct Cycle {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
};

// Shortest cycle through each edge {u,v} is e plus a shortest u-v path that
// avoids e; the minimum over all edges is a girth cycle.
Cycle find_shortest_cycle(const Graph& g) {
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  const std::size_t n = g.vertex_count();
  std::size_t best_len = kUnset;
  Cycle best;
  std::vector<std::size_t> dist(n);
  std::vector<EdgeId> parent(n);
  std::deque<VertexId> queue;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edge(e);
    std::fill(dist.begin(), dist.end(), kUnset);
    dist[u] = 0;
    parent[u] = kUnset;
    queue.assign(1, u);
    while (!queue.empty() && dist[v] == kUnset) {
      const VertexId x = queue.front();
      queue.pop_front();
      if (best_len != kUnset && dist[x] + 2 >= best_len) break;
      for (EdgeId f : g.incident(x)) {
        if (f == e) continue;
        const VertexId y = g.other_end(f, x);
        if (dist[y] == kUnset) {
          dist[y] = dist[x] + 1;
          parent[y] = f;
          queue.push_back(y);
        }
      }
    }
    if (dist[v] == kUnset || dist[v] + 1 >= best_len) continue;
    best_len = dist[v] + 1;
    best.vertices.clear();
    best.edges.clear();
    // Walk v back to u, reverse into u..v order, then close with e.
    VertexId x = v;
    best.vertices.push_back(v);
    while (x != u) {
      const EdgeId f = parent[x];
      best.edges.push_back(f);
      x = g.other_end(f, x);
      best.vertices.push_back(x);
    }
    std::reverse(best.vertices.begin(), best.vertices.end());
    std::reverse(best.edges.begin(), best.edges.end());
    best.edges.push_back(e);
  }
  return best;
}

}  // namespace

std::vector<EdgeId> shortest_cycle(const Graph& g) {
  return find_shortest_cycle(g).edges;
}

std::vector<VertexId> shortest_cycle_vertices(const Graph& g) {
  return find_shortest_cycle(g).vertices;
}

EdgeSubset two_core(const Graph& g, const EdgeSubset& erased) {
  if (erased.size() != g.edge_count()) {
    throw Error(ErrorCode::InvalidGraph,
                "edge subset size " + std::to_string(erased.size()) +
                    " != edge count " + std::to_string(g.edge_count()));
  }
  EdgeSubset core = erased;
  std::vector<std::size_t> deg(g.vertex_count(), 0);
  for (EdgeId e : erased.members()) {
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  std::vector<VertexId> leaves;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (deg[v] == 1) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    const VertexId x = leaves.back();
    leaves.pop_back();
    if (deg[x] != 1) continue;
    for (EdgeId e : g.incident(x)) {
      if (!core.test(e)) continue;
      core.reset(e);
      deg[x] = 0;
      const VertexId y = g.other_end(e, x);
      if (--deg[y] == 1) leaves.push_back(y);
      break;
    }
  }
  return core;
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const Graph& a, const Graph& b)
      : a_(a), b_(b), map_(a.vertex_count(), kNone),
        used_(b.vertex_count(), 0) {
    // Visit a's vertices in BFS order so each new vertex has mapped
    // neighbours constraining it.
    std::vector<char> seen(a.vertex_count(), 0);
    for (VertexId s = 0; s < a.vertex_count(); ++s) {
      if (seen[s]) continue;
      std::deque<VertexId> q{s};
      seen[s] = 1;
      while (!q.empty()) {
        const VertexId x = q.front();
        q.pop_front();
        order_.push_back(x);
        for (EdgeId e : a.incident(x)) {
          const VertexId y = a.other_end(e, x);
          if (!seen[y]) {
            seen[y] = 1;
            q.push_back(y);
          }
        }
      }
    }
  }

  bool run() { return extend(0); }

 private:
  static constexpr VertexId kNone = std::numeric_limits<VertexId>::max();

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const VertexId x = order_[depth];
    for (VertexId y = 0; y < b_.vertex_count(); ++y) {
      if (used_[y] || b_.degree(y) != a_.degree(x)) continue;
      if (!consistent(x, y)) continue;
      map_[x] = y;
      used_[y] = 1;
      if (extend(depth + 1)) return true;
      map_[x] = kNone;
      used_[y] = 0;
    }
    return false;
  }

  bool consistent(VertexId x, VertexId y) const {
    for (VertexId w = 0; w < a_.vertex_count(); ++w) {
      if (map_[w] == kNone) continue;
      const bool ea = a_.find_edge(x, w).has_value();
      const bool eb = b_.find_edge(y, map_[w]).has_value();
      if (ea != eb) return false;
    }
    return true;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<VertexId> map_;
  std::vector<char> used_;
  std::vector<VertexId> order_;
};

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() ||
      a.edge_count() != b.edge_count()) {
    return false;
  }
  auto da = degree_sequence(a);
  auto db = degree_sequence(b);
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return IsoSearch(a, b).run();
}

}  // namespace graphdss
