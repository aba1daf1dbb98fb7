#pragma once

#include "graphdss/graph.hpp"
#include "graphdss/tour.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace graphdss {

/// How the two in-arcs of a vertex attach to its two out-arcs.
///  Parallel: min In -- min Out, max In -- max Out.
///  Crossed:  min In -- max Out, max In -- min Out.
enum class Pairing { Parallel, Crossed };

class PairingPolicy {
 public:
  PairingPolicy() = default;
  explicit PairingPolicy(std::vector<Pairing> modes) : modes_(std::move(modes)) {}

  static PairingPolicy uniform(std::size_t vertex_count, Pairing mode) {
    return PairingPolicy(std::vector<Pairing>(vertex_count, mode));
  }

  std::size_t size() const noexcept { return modes_.size(); }
  Pairing at(VertexId v) const { return modes_.at(v); }
  const std::vector<Pairing>& modes() const noexcept { return modes_; }

  friend bool operator==(const PairingPolicy&, const PairingPolicy&) = default;

 private:
  std::vector<Pairing> modes_;
};

/// A disk is a path on four vertices of the cubic graph (three blocks).
using Disk = std::array<VertexId, 4>;

/// The cubic graph together with its partition into disks.
///
/// When built from a 4-regular graph G, vertex i of `cubic` is arc i of the
/// orientation of G, `arc_names[i]` is that arc, and disk d consists of the
/// four arcs incident to `disk_owner[d]`. Systems obtained from a generic
/// decomposition leave `disk_owner`, `arc_names` and `policy` empty.
struct CubicSystem {
  Graph cubic;
  std::vector<Disk> disks;
  std::vector<VertexId> disk_owner;
  std::vector<Arc> arc_names;
  std::optional<PairingPolicy> policy;

  std::size_t disk_count() const noexcept { return disks.size(); }

  /// The three edge indices of disk d in path order.
  /// Throws Error(InvalidDisk) if d is out of range or not a path of cubic.
  std::array<EdgeId, 3> disk_edges(std::size_t d) const;

  /// Disk index owning each edge. Throws Error(InvalidDisk) when the disks do
  /// not partition the edge set.
  std::vector<std::size_t> edge_owners() const;

  /// All edges of the given disks.
  EdgeSubset disk_edge_set(std::span<const std::size_t> disk_indices) const;

  /// Disk whose owner is vertex v of G. Requires disk_owner.
  std::size_t disk_of_vertex(VertexId v) const;

  /// Reconstructs the underlying 4-regular graph from arc_names.
  Graph base_graph() const;
};

/// Builds the cubic graph on the arcs of a 2-in-2-out orientation. For each
/// vertex v, the in-arcs a = min In(v), b = max In(v) are joined, and each is
/// joined to one out-arc according to policy.at(v). Disk v is the resulting
/// path, read from its smaller end-arc. Edge 3v+i is the i-th edge of disk v.
/// Throws Error(NotTwoInTwoOut).
CubicSystem build_cubic(const OrientedGraph& gd, const PairingPolicy& policy);

/// Partitions the edges of a cubic graph into paths on three edges. Uses a
/// perfect matching M: E \ M is a 2-factor, each of whose cycles is oriented,
/// and matching edge {u,v} yields succ(u)-u-v-succ(v). Falls back to
/// exhaustive search when no perfect matching exists. Returns std::nullopt
/// when no decomposition exists. Throws Error(NotCubic).
std::optional<std::vector<Disk>> decompose_p4(const Graph& g);

/// Perfect matching by backtracking (most-constrained vertex first).
std::optional<std::vector<EdgeId>> find_perfect_matching(const Graph& g);

/// Wraps a generic decomposition as a system without an underlying 4-regular
/// graph.
CubicSystem system_from_paths(Graph cubic, std::vector<Disk> disks);

/// True iff every disk is a path of the cubic graph, disks are pairwise
/// edge-disjoint, and together they cover every edge.
bool verify_disk_decomposition(const CubicSystem& sys);

/// "(v1,v2)" style display name for an arc, 1-based.
std::string arc_display_name(const Arc& a);

}  // namespace graphdss
