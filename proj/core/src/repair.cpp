#include "graphdss/repair.hpp"

#include "graphdss/error.hpp"

#include <algorithm>
#include <limits>

namespace graphdss {

namespace {

// Shared bookkeeping for every schedule: which blocks are known, which
// transfers happened, and the depth of each recovered block.
class Session {
 public:
  Session(const CubicSystem& sys, const EdgeSubset& erased)
      : g_(sys.cubic),
        owner_(sys.edge_owners()),
        disk_count_(sys.disk_count()),
        erased_(erased),
        known_(g_.edge_count()),
        depth_(g_.edge_count(), 0),
        read_(disk_count_ * g_.edge_count(), 0),
        unknown_at_(g_.vertex_count(), 0) {
    if (erased.size() != g_.edge_count()) {
      throw Error(ErrorCode::InvalidGraph,
                  "erasure pattern has " + std::to_string(erased.size()) +
                      " bits, system has " + std::to_string(g_.edge_count()) +
                      " blocks");
    }
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      known_[e] = !erased.test(e);
      if (!known_[e]) {
        ++unknown_at_[g_.edge(e).u];
        ++unknown_at_[g_.edge(e).v];
      }
    }
  }

  const Graph& graph() const { return g_; }
  std::size_t unknown_at(VertexId v) const { return unknown_at_[v]; }

  EdgeId unknown_edge(VertexId v) const {
    for (EdgeId e : g_.incident(v)) {
      if (!known_[e]) return e;
    }
    return g_.edge_count();
  }

  // Intact block f read to solve e; surviving blocks of e's own disk are
  // local.
  bool is_transfer(EdgeId e, EdgeId f) const {
    return !erased_.test(f) && owner_[f] != owner_[e];
  }

  // New transfers needed to solve `e` from vertex v.
  std::size_t cost(VertexId v, EdgeId e) const {
    std::size_t c = 0;
    for (EdgeId f : g_.incident(v)) {
      if (f != e && is_transfer(e, f) && !read_[owner_[e] * g_.edge_count() + f]) {
        ++c;
      }
    }
    return c;
  }

  void recover(VertexId v, EdgeId e) {
    if (unknown_at_[v] != 1 || known_[e]) {
      throw Error(ErrorCode::InvariantMismatch,
                  "vertex " + std::to_string(v) +
                      " cannot solve edge " + std::to_string(e));
    }
    std::size_t deepest = 0;
    for (EdgeId f : g_.incident(v)) {
      if (f == e) continue;
      deepest = std::max(deepest, depth_[f]);
      if (is_transfer(e, f)) {
        auto& r = read_[owner_[e] * g_.edge_count() + f];
        if (!r) {
          r = 1;
          ++transferred_;
        }
      }
    }
    known_[e] = 1;
    depth_[e] = deepest + 1;
    --unknown_at_[g_.edge(e).u];
    --unknown_at_[g_.edge(e).v];
    steps_.push_back({e, v, depth_[e]});
  }

  RepairReport finish() && {
    RepairReport report;
    report.erased = erased_;
    report.residual = EdgeSubset(g_.edge_count());
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      if (!known_[e]) report.residual.set(e);
    }
    for (const auto& s : steps_) report.rounds = std::max(report.rounds, s.round);
    report.transferred_symbols = transferred_;
    report.recovered = std::move(steps_);
    return report;
  }

 private:
  const Graph& g_;
  std::vector<std::size_t> owner_;
  std::size_t disk_count_;
  EdgeSubset erased_;
  std::vector<char> known_;
  std::vector<std::size_t> depth_;
  std::vector<char> read_;
  std::vector<std::size_t> unknown_at_;
  std::vector<RecoveryStep> steps_;
  std::size_t transferred_ = 0;
};

void peel_rounds(Session& s) {
  const Graph& g = s.graph();
  std::vector<std::pair<VertexId, EdgeId>> wave;
  std::vector<char> claimed(g.edge_count(), 0);
  for (;;) {
    wave.clear();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (s.unknown_at(v) != 1) continue;
      const EdgeId e = s.unknown_edge(v);
      if (claimed[e]) continue;
      claimed[e] = 1;
      wave.emplace_back(v, e);
    }
    if (wave.empty()) return;
    for (const auto& [v, e] : wave) s.recover(v, e);
  }
}

void peel_bandwidth(Session& s) {
  const Graph& g = s.graph();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  for (;;) {
    VertexId best_v = kNone;
    EdgeId best_e = kNone;
    std::size_t best_cost = kNone;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (s.unknown_at(v) != 1) continue;
      const EdgeId e = s.unknown_edge(v);
      const std::size_t c = s.cost(v, e);
      if (c < best_cost) {
        best_cost = c;
        best_v = v;
        best_e = e;
      }
    }
    if (best_v == kNone) return;
    s.recover(best_v, best_e);
  }
}

RepairReport run_disk_plan(const CubicSystem& sys, const Disk& path,
                           const std::array<EdgeId, 3>& edges,
                           DiskRepairStrategy strategy) {
  const EdgeSubset erased(sys.cubic.edge_count(),
                          std::span<const EdgeId>(edges.data(), edges.size()));
  Session s(sys, erased);
  if (strategy == DiskRepairStrategy::MinBandwidth) {
    s.recover(path[0], edges[0]);
    s.recover(path[1], edges[1]);
    s.recover(path[2], edges[2]);
  } else {
    s.recover(path[0], edges[0]);
    s.recover(path[3], edges[2]);
    s.recover(path[1], edges[1]);
  }
  return std::move(s).finish();
}

}  // namespace

RepairReport peel(const CubicSystem& sys, const EdgeSubset& erased,
                  PeelSchedule schedule) {
  Session s(sys, erased);
  if (schedule == PeelSchedule::Rounds) {
    peel_rounds(s);
  } else {
    peel_bandwidth(s);
  }
  return std::move(s).finish();
}

RepairReport repair_disk(const CubicSystem& sys, std::size_t disk,
                         DiskRepairStrategy strategy) {
  const auto edges = sys.disk_edges(disk);
  const Disk& path = sys.disks[disk];
  RepairReport forward = run_disk_plan(sys, path, edges, strategy);
  // The reversed path is an equally valid plan; keep the canonical direction
  // unless the reverse is strictly cheaper.
  const Disk back{path[3], path[2], path[1], path[0]};
  const std::array<EdgeId, 3> back_edges{edges[2], edges[1], edges[0]};
  RepairReport reverse = run_disk_plan(sys, back, back_edges, strategy);
  if (reverse.transferred_symbols < forward.transferred_symbols) return reverse;
  return forward;
}

RepairReport repair_disks(const CubicSystem& sys,
                          std::span<const std::size_t> disks) {
  return peel(sys, sys.disk_edge_set(disks), PeelSchedule::Bandwidth);
}

bool disks_adjacent(const CubicSystem& sys, std::size_t a, std::size_t b) {
  if (a >= sys.disk_count() || b >= sys.disk_count()) {
    throw Error(ErrorCode::InvalidDisk, "disk index out of range");
  }
  for (VertexId x : sys.disks[a]) {
    for (VertexId y : sys.disks[b]) {
      if (x == y) return true;
    }
  }
  return false;
}

StorageState repair_state(const ParityCode& code, StorageState damaged,
                          const RepairReport& report) {
  if (!report.residual.empty()) {
    std::string list;
    for (EdgeId e : report.residual.members()) {
      list += (list.empty() ? "" : ",") + std::to_string(e);
    }
    throw Error(ErrorCode::Unrecoverable,
                "erased blocks {" + list + "} lie on cycles of erased blocks");
  }
  if (damaged.blocks.size() != code.length) {
    throw Error(ErrorCode::WrongBlockCount,
                "state has " + std::to_string(damaged.blocks.size()) +
                    " blocks, code length is " + std::to_string(code.length));
  }
  const Graph& g = code.graph;
  const std::size_t s = damaged.block_size;
  for (EdgeId e : report.erased.members()) damaged.blocks[e].assign(s, 0);
  for (const RecoveryStep& step : report.recovered) {
    Block acc(s, 0);
    for (EdgeId f : g.incident(step.parity_vertex)) {
      if (f == step.edge) continue;
      const Block& b = damaged.blocks[f];
      for (std::size_t i = 0; i < s; ++i) acc[i] ^= b[i];
    }
    damaged.blocks[step.edge] = std::move(acc);
  }
  return damaged;
}

}  // namespace graphdss
