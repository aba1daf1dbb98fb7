#pragma once

#include "graphdss/analysis.hpp"
#include "graphdss/code.hpp"
#include "graphdss/cubic.hpp"
#include "graphdss/graph.hpp"
#include "graphdss/repair.hpp"
#include "graphdss/tour.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace graphdss {

// All parsers throw Error(ParseError) on malformed input and propagate the
// constructors' own errors (InvalidGraph, ...) on well-formed but invalid
// content.

/// {"vertices": N, "edges": [[u,v],...], "vertex_labels": [...],
///  "edge_labels": [...]}; label arrays are omitted when empty.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(std::string_view text);

/// {"arcs": [[tail,head],...]}
std::string arcs_to_json(const std::vector<Arc>& arcs);
std::vector<Arc> arcs_from_json(std::string_view text);

/// Graph JSON of the cubic graph plus "disks", "disk_owner", "arc_names"
/// and "policy" (array of "parallel"/"crossed", or null).
std::string system_to_json(const CubicSystem& sys);
CubicSystem system_from_json(std::string_view text);

/// {"recovered": [[edge,vertex,round],...], "transferred": T, "rounds": R,
///  "residual": [...], "erased": [...]}
std::string report_to_json(const RepairReport& report);

std::string verdict_to_json(const RecoveryVerdict& verdict);

std::string profile_csv_header();
std::string profile_csv_row(const std::string& name, const SystemProfile& p);
std::string profile_text(const std::string& name, const SystemProfile& p);

/// Undirected DOT; edge label is the edge index.
std::string to_dot(const Graph& g, const std::string& name = "G");

/// One line per parity row, as a 0/1 string over edge indices.
std::string parity_matrix_text(const ParityCode& code);

/// State directory layout: header.json ({"m", "s", "information_set"}) and
/// one file block_NNNN.bin per edge, in edge-index order.
void write_state_dir(const std::filesystem::path& dir, const ParityCode& code,
                     const StorageState& state);

struct LoadedState {
  StorageState state;
  /// Edges whose block file is missing or has the wrong size.
  EdgeSubset missing;
};
LoadedState read_state_dir(const std::filesystem::path& dir,
                           const ParityCode& code);

std::filesystem::path block_path(const std::filesystem::path& dir, EdgeId e);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace graphdss
