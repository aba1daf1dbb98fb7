#pragma once

#include "graphdss/cubic.hpp"
#include "graphdss/graph.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace graphdss {

/// Non-negative fraction in lowest terms.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Rational make(std::uint64_t num, std::uint64_t den);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Rate 1 - (n-1)/(3n/2) of the cycle code of a cubic graph on n vertices.
Rational cubic_code_rate(std::size_t cubic_vertex_count);

struct SystemProfile {
  std::size_t disk_count = 0;
  std::size_t block_count = 0;
  std::size_t girth_base = 0;
  std::size_t girth_cubic = 0;
  /// Any girth_base - 1 disk erasures are recoverable.
  std::size_t max_guaranteed_disk_erasures = 0;
  std::size_t blocks_recoverable = 0;
  /// Any girth_cubic - 1 block erasures, in any position, are recoverable.
  std::size_t max_guaranteed_block_erasures = 0;
  std::size_t code_length = 0;
  std::size_t code_dimension = 0;
  /// Minimum distance of the cycle code of the cubic graph.
  std::size_t code_distance = 0;
  Rational rate;
};

/// Disks owning the edges of a cycle of the cubic graph.
/// Throws Error(NotACycle) unless the edges form one simple cycle.
std::vector<std::size_t> disk_cycle_of(const CubicSystem& sys,
                                       std::span<const EdgeId> cycle);

/// Smallest t such that the blocks of some t disks contain a cycle. Searches
/// connected disk sets (disks adjacent when they share a vertex) in
/// increasing size.
std::size_t min_disk_cycle(const CubicSystem& sys, const Graph& base);

/// Smallest disk set, as found by min_disk_cycle.
std::vector<std::size_t> min_disk_cycle_witness(const CubicSystem& sys);

struct Exhaustive {};
struct Sampled {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};
using VerifyMode = std::variant<Exhaustive, Sampled>;

struct RecoveryVerdict {
  std::size_t girth = 0;
  /// Size of the disk sets checked (girth - 1).
  std::size_t subset_size = 0;
  std::uint64_t checked = 0;
  std::uint64_t recoverable = 0;
  bool all_g_minus_1_ok = false;
  /// Disks of a girth cycle of the base graph.
  std::vector<std::size_t> witness;
  bool witness_unrecoverable = false;
  /// First failing subset, if any.
  std::vector<std::size_t> counterexample;
};

/// Peels every (girth-1)-subset of disks (or `trials` uniform ones) and
/// checks the girth-cycle witness is unrecoverable. Sampled trials draw
/// from a generator seeded by (seed, trial index).
RecoveryVerdict verify_recovery_bound(const CubicSystem& sys, const Graph& base,
                                      const VerifyMode& mode);

/// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

SystemProfile profile(const CubicSystem& sys, const Graph& base);

}  // namespace graphdss
