#pragma once

#include "graphdss/code.hpp"
#include "graphdss/cubic.hpp"
#include "graphdss/graph.hpp"

#include <span>
#include <vector>

namespace graphdss {

struct RecoveryStep {
  EdgeId edge = 0;
  /// Vertex whose parity equation solved the edge.
  VertexId parity_vertex = 0;
  /// Dependency depth: 1 + the deepest recovered edge the equation used.
  std::size_t round = 0;

  friend bool operator==(const RecoveryStep&, const RecoveryStep&) = default;
};

/// Transcript of one repair session.
///
/// transferred_symbols counts intact blocks read from other disks, once per
/// (destination disk, block) pair: a block read twice for the same newcomer
/// disk is one transfer, a block sent to two newcomers is two. Blocks that
/// were erased and then recovered are internal and never count.
struct RepairReport {
  EdgeSubset erased;
  std::vector<RecoveryStep> recovered;
  std::size_t transferred_symbols = 0;
  std::size_t rounds = 0;
  EdgeSubset residual;
};

enum class PeelSchedule {
  /// Synchronous rounds: every vertex with exactly one erased incident edge
  /// fires at once, lowest vertex first when two endpoints compete.
  Rounds,
  /// One recovery at a time, picking the equation that needs the fewest new
  /// transfers, lowest vertex on ties.
  Bandwidth,
};

enum class DiskRepairStrategy {
  /// Walk the path from one end: 4 transfers, 3 rounds.
  MinBandwidth,
  /// Solve both ends, then the middle: 5 transfers, 2 rounds.
  MinRounds,
};

/// Peeling decoder. The residual is the set of edges no schedule can
/// recover; it always equals two_core(sys.cubic, erased).
RepairReport peel(const CubicSystem& sys, const EdgeSubset& erased,
                  PeelSchedule schedule = PeelSchedule::Rounds);

/// Repairs one disk with every other block intact.
/// Throws Error(InvalidDisk).
RepairReport repair_disk(const CubicSystem& sys, std::size_t disk,
                         DiskRepairStrategy strategy);

/// Erases every block of the given disks and peels with the bandwidth
/// schedule.
RepairReport repair_disks(const CubicSystem& sys,
                          std::span<const std::size_t> disks);

/// True when the two disks share a vertex of the cubic graph.
bool disks_adjacent(const CubicSystem& sys, std::size_t a, std::size_t b);

/// Replays the report's schedule on real payloads. Blocks of erased edges
/// in `damaged` are ignored and overwritten.
/// Throws Error(Unrecoverable) when the report has a nonempty residual.
StorageState repair_state(const ParityCode& code, StorageState damaged,
                          const RepairReport& report);

}  // namespace graphdss
