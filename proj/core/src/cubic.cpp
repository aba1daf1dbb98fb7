#include "graphdss/cubic.hpp"

#include "graphdss/error.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace graphdss {

std::string arc_display_name(const Arc& a) {
  return "(v" + std::to_string(a.tail + 1) + ",v" + std::to_string(a.head + 1) +
         ")";
}

std::array<EdgeId, 3> CubicSystem::disk_edges(std::size_t d) const {
  if (d >= disks.size()) {
    throw Error(ErrorCode::InvalidDisk, "disk " + std::to_string(d) +
                                            " out of range (" +
                                            std::to_string(disks.size()) +
                                            " disks)");
  }
  const Disk& p = disks[d];
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (p[i] == p[j]) {
        throw Error(ErrorCode::InvalidDisk,
                    "disk " + std::to_string(d) + " repeats a vertex");
      }
    }
  }
  std::array<EdgeId, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto e = cubic.find_edge(p[i], p[i + 1]);
    if (!e) {
      throw Error(ErrorCode::InvalidDisk,
                  "disk " + std::to_string(d) + " is not a path of the graph");
    }
    out[i] = *e;
  }
  return out;
}

std::vector<std::size_t> CubicSystem::edge_owners() const {
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> owner(cubic.edge_count(), kNone);
  for (std::size_t d = 0; d < disks.size(); ++d) {
    for (EdgeId e : disk_edges(d)) {
      if (owner[e] != kNone) {
        throw Error(ErrorCode::InvalidDisk,
                    "edge " + std::to_string(e) + " is in two disks");
      }
      owner[e] = d;
    }
  }
  for (EdgeId e = 0; e < owner.size(); ++e) {
    if (owner[e] == kNone) {
      throw Error(ErrorCode::InvalidDisk,
                  "edge " + std::to_string(e) + " is in no disk");
    }
  }
  return owner;
}

EdgeSubset CubicSystem::disk_edge_set(
    std::span<const std::size_t> disk_indices) const {
  EdgeSubset out(cubic.edge_count());
  for (std::size_t d : disk_indices) {
    for (EdgeId e : disk_edges(d)) out.set(e);
  }
  return out;
}

std::size_t CubicSystem::disk_of_vertex(VertexId v) const {
  const auto it = std::find(disk_owner.begin(), disk_owner.end(), v);
  if (it == disk_owner.end()) {
    throw Error(ErrorCode::InvalidDisk,
                "no disk is owned by vertex " + std::to_string(v));
  }
  return static_cast<std::size_t>(it - disk_owner.begin());
}

Graph CubicSystem::base_graph() const {
  if (arc_names.empty()) {
    throw Error(ErrorCode::InvalidGraph,
                "system has no underlying 4-regular graph");
  }
  std::vector<Edge> edges;
  edges.reserve(arc_names.size());
  for (const Arc& a : arc_names) edges.push_back({a.tail, a.head});
  return Graph(disk_owner.size(), std::move(edges));
}

namespace {

Disk canonical_path(Disk p, const std::function<bool(VertexId, VertexId)>& less) {
  if (less(p[3], p[0])) std::reverse(p.begin(), p.end());
  return p;
}

}  // namespace

CubicSystem build_cubic(const OrientedGraph& gd, const PairingPolicy& policy) {
  const std::size_t n = gd.vertex_count();
  if (!gd.is_two_in_two_out()) {
    throw Error(ErrorCode::NotTwoInTwoOut,
                "orientation is not 2-in-2-out; input must be 4-regular");
  }
  if (policy.size() != n) {
    throw Error(ErrorCode::InvalidGraph,
                "pairing policy covers " + std::to_string(policy.size()) +
                    " vertices, graph has " + std::to_string(n));
  }
  const auto& arcs = gd.arcs();
  const auto arc_less = [&](VertexId x, VertexId y) { return arcs[x] < arcs[y]; };

  CubicSystem sys;
  sys.disks.reserve(n);
  sys.disk_owner.reserve(n);
  std::vector<Edge> edges;
  edges.reserve(3 * n);
  for (VertexId v = 0; v < n; ++v) {
    const ArcId a = gd.min_in(v);
    const ArcId b = gd.max_in(v);
    const ArcId c = gd.min_out(v);
    const ArcId d = gd.max_out(v);
    Disk path = policy.at(v) == Pairing::Parallel ? Disk{c, a, b, d}
                                                  : Disk{c, b, a, d};
    path = canonical_path(path, arc_less);
    for (std::size_t i = 0; i < 3; ++i) edges.push_back({path[i], path[i + 1]});
    sys.disks.push_back(path);
    sys.disk_owner.push_back(v);
  }
  std::vector<std::string> labels;
  labels.reserve(arcs.size());
  for (const Arc& a : arcs) labels.push_back(arc_display_name(a));
  sys.cubic = Graph(arcs.size(), std::move(edges), std::move(labels));
  sys.arc_names = arcs;
  sys.policy = policy;
  return sys;
}

std::optional<std::vector<EdgeId>> find_perfect_matching(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n % 2 != 0) return std::nullopt;
  constexpr VertexId kNone = std::numeric_limits<VertexId>::max();
  std::vector<VertexId> mate(n, kNone);
  std::vector<EdgeId> chosen;
  chosen.reserve(n / 2);

  std::function<bool(std::size_t)> search = [&](std::size_t matched) -> bool {
    if (matched == n) return true;
    // Most-constrained unmatched vertex; a vertex with no free neighbour
    // kills the branch.
    VertexId pick = kNone;
    std::size_t pick_options = std::numeric_limits<std::size_t>::max();
    for (VertexId v = 0; v < n; ++v) {
      if (mate[v] != kNone) continue;
      std::size_t options = 0;
      for (EdgeId e : g.incident(v)) {
        if (mate[g.other_end(e, v)] == kNone) ++options;
      }
      if (options == 0) return false;
      if (options < pick_options) {
        pick = v;
        pick_options = options;
      }
    }
    for (EdgeId e : g.incident(pick)) {
      const VertexId w = g.other_end(e, pick);
      if (mate[w] != kNone) continue;
      mate[pick] = w;
      mate[w] = pick;
      chosen.push_back(e);
      if (search(matched + 2)) return true;
      chosen.pop_back();
      mate[pick] = kNone;
      mate[w] = kNone;
    }
    return false;
  };
  if (!search(0)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

namespace {

std::vector<Disk> paths_from_matching(const Graph& g,
                                      const std::vector<EdgeId>& matching) {
  const std::size_t n = g.vertex_count();
  std::vector<char> in_matching(g.edge_count(), 0);
  for (EdgeId e : matching) in_matching[e] = 1;

  // Orient every cycle of the complementary 2-factor.
  constexpr VertexId kNone = std::numeric_limits<VertexId>::max();
  std::vector<VertexId> succ(n, kNone);
  for (VertexId s = 0; s < n; ++s) {
    if (succ[s] != kNone) continue;
    VertexId prev = kNone;
    VertexId at = s;
    do {
      VertexId next = kNone;
      for (EdgeId e : g.incident(at)) {
        if (in_matching[e]) continue;
        const VertexId w = g.other_end(e, at);
        if (w != prev) {
          next = w;
          break;
        }
      }
      succ[at] = next;
      prev = at;
      at = next;
    } while (at != s);
  }

  std::vector<Disk> out;
  out.reserve(matching.size());
  for (EdgeId e : matching) {
    const auto [u, v] = g.edge(e);
    out.push_back(Disk{succ[u], u, v, succ[v]});
  }
  return out;
}

class CoverSearch {
 public:
  explicit CoverSearch(const Graph& g) : g_(g), covered_(g.edge_count(), 0) {}

  std::optional<std::vector<Disk>> run() {
    if (g_.edge_count() % 3 != 0) return std::nullopt;
    if (!extend()) return std::nullopt;
    return paths_;
  }

 private:
  bool free_edge(VertexId a, VertexId b, EdgeId& out) const {
    const auto e = g_.find_edge(a, b);
    if (!e || covered_[*e]) return false;
    out = *e;
    return true;
  }

  bool try_path(const Disk& p) {
    std::array<EdgeId, 3> es{};
    for (std::size_t i = 0; i < 3; ++i) {
      if (!free_edge(p[i], p[i + 1], es[i])) return false;
    }
    if (p[0] == p[2] || p[0] == p[3] || p[1] == p[3]) return false;
    for (EdgeId e : es) covered_[e] = 1;
    paths_.push_back(p);
    if (extend()) return true;
    paths_.pop_back();
    for (EdgeId e : es) covered_[e] = 0;
    return false;
  }

  bool extend() {
    EdgeId first = 0;
    while (first < covered_.size() && covered_[first]) ++first;
    if (first == covered_.size()) return true;
    const auto [x, y] = g_.edge(first);
    // `first` in the middle.
    for (EdgeId ea : g_.incident(x)) {
      if (ea == first || covered_[ea]) continue;
      const VertexId a = g_.other_end(ea, x);
      for (EdgeId eb : g_.incident(y)) {
        if (eb == first || covered_[eb]) continue;
        const VertexId b = g_.other_end(eb, y);
        if (a != b && try_path(Disk{a, x, y, b})) return true;
      }
    }
    // `first` at an end.
    for (const auto& [p, q] : {std::pair{x, y}, std::pair{y, x}}) {
      for (EdgeId e1 : g_.incident(q)) {
        if (e1 == first || covered_[e1]) continue;
        const VertexId z = g_.other_end(e1, q);
        for (EdgeId e2 : g_.incident(z)) {
          if (e2 == e1 || covered_[e2]) continue;
          const VertexId w = g_.other_end(e2, z);
          if (try_path(Disk{p, q, z, w})) return true;
        }
      }
    }
    return false;
  }

  const Graph& g_;
  std::vector<char> covered_;
  std::vector<Disk> paths_;
};

}  // namespace

std::optional<std::vector<Disk>> decompose_p4(const Graph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 3) {
      throw Error(ErrorCode::NotCubic, "vertex " + std::to_string(v) +
                                           " has degree " +
                                           std::to_string(g.degree(v)));
    }
  }
  std::vector<Disk> paths;
  if (const auto matching = find_perfect_matching(g)) {
    paths = paths_from_matching(g, *matching);
  } else if (auto cover = CoverSearch(g).run()) {
    paths = std::move(*cover);
  } else {
    return std::nullopt;
  }
  const auto less = [](VertexId a, VertexId b) { return a < b; };
  for (Disk& p : paths) p = canonical_path(p, less);
  return paths;
}

CubicSystem system_from_paths(Graph cubic, std::vector<Disk> disks) {
  CubicSystem sys;
  sys.cubic = std::move(cubic);
  sys.disks = std::move(disks);
  return sys;
}

bool verify_disk_decomposition(const CubicSystem& sys) {
  try {
    (void)sys.edge_owners();
  } catch (const Error&) {
    return false;
  }
  return true;
}

}  // namespace graphdss
