#pragma once

#include "graphdss/cubic.hpp"
#include "graphdss/graph.hpp"
#include "graphdss/tour.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace graphdss {

enum class CatalogSource { BuiltIn, DataFile };

struct CatalogEntry {
  std::string name;
  Graph graph;
  std::size_t claimed_regularity = 0;
  std::size_t claimed_girth = 0;
  CatalogSource source = CatalogSource::BuiltIn;
};

/// Environment variable naming the (4,7)-cage data file.
inline constexpr const char* kCage7PathEnv = "GRAPHDSS_CAGE7";

/// The (4,g)-cage for g in 3..7: K5, K4,4, the Robertson graph, the
/// incidence graph of PG(2,3), or the 67-vertex graph from a data file
/// (explicit path, else $GRAPHDSS_CAGE7). Regularity and girth are
/// recomputed on load.
/// Throws Error(MissingDataFile) for g = 7 without a file and
/// Error(InvariantMismatch) when a graph fails its claims.
CatalogEntry cage(std::size_t g,
                  const std::optional<std::filesystem::path>& data_file = {});

CatalogEntry petersen();

/// Looks up "k5", "k44", "robertson", "pg23", "cage7", "petersen", or the
/// aliases "cage3".."cage7".
CatalogEntry catalog_by_name(const std::string& name,
                             const std::optional<std::filesystem::path>& data_file = {});

std::vector<std::string> catalog_names();

Graph complete_graph(std::size_t n);
/// K_{n,n} with odd-numbered (1-based) vertices on one side.
Graph complete_bipartite_interleaved(std::size_t n);
Graph robertson_graph();
/// Points (vertices 0..12) and lines (13..25) of PG(2,3), adjacent when
/// incident.
Graph pg23_incidence_graph();
Graph petersen_graph();

/// Orientation of K5 whose cubic graph carries the five-disk examples.
std::vector<Arc> k5_paper_arcs();
/// Orientation of K4,4 (interleaved indexing) for the eight-disk example.
std::vector<Arc> k44_paper_arcs();

enum class K5Variant { Girth5, Girth3 };

/// Policy that realizes the variant on k5_paper_arcs(): Girth5 crosses at
/// v1, v3 and v5; Girth3 is uniformly parallel.
PairingPolicy k5_paper_policy(K5Variant variant);

CubicSystem k5_paper_system(K5Variant variant);

/// Connected simple `degree`-regular graph on n vertices, sampled by random
/// stub pairing with restarts. Deterministic per (n, degree, seed).
/// Throws Error(GenerationFailed) after the retry bound.
Graph random_regular(std::size_t n, std::size_t degree, std::uint64_t seed);

/// Connected 4-regular graph on n >= 5 vertices.
Graph random_4_regular(std::size_t n, std::uint64_t seed);

/// Builds the system the default pipeline produces: the deterministic
/// Eulerian tour of g oriented, then build_cubic under a uniform policy.
CubicSystem default_system(const Graph& g, Pairing mode = Pairing::Parallel);

/// One published row of the (4,g)-cage comparison table; distance is the
/// girth of the 4-regular graph.
struct PublishedRow {
  std::size_t cage_girth;
  std::size_t disks;
  std::size_t blocks;
  std::size_t disks_recoverable;
  std::size_t blocks_recoverable;
  std::size_t length;
  std::size_t dimension;
  std::size_t distance;
};
std::span<const PublishedRow> published_cage_table();

}  // namespace graphdss
