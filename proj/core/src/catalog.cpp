#include "graphdss/catalog.hpp"

#include "graphdss/error.hpp"
#include "graphdss/io.hpp"
#include "graphdss/random.hpp"

#include <array>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace graphdss {

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph(n, std::move(edges));
}

Graph complete_bipartite_interleaved(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < 2 * n; ++i) {
    for (VertexId j = i + 1; j < 2 * n; ++j) {
      if (i % 2 != j % 2) edges.push_back({i, j});
    }
  }
  return Graph(2 * n, std::move(edges));
}

Graph robertson_graph() {
  // Hamiltonian 19-cycle plus one chord per vertex.
  constexpr std::array<std::size_t, 19> kJumps = {
      8, 4, 7, 4, 8, 5, 7, 4, 7, 8, 4, 5, 7, 8, 4, 8, 4, 8, 4};
  constexpr std::size_t n = kJumps.size();
  std::vector<Edge> edges;
  for (VertexId i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  for (VertexId i = 0; i < n; ++i) edges.push_back({i, (i + kJumps[i]) % n});
  return Graph(n, std::move(edges));
}

Graph pg23_incidence_graph() {
  // Projective points over GF(3): nonzero triples scaled so the first
  // nonzero coordinate is 1. Lines use the same representatives.
  std::vector<std::array<int, 3>> reps;
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      for (int z = 0; z < 3; ++z) {
        const std::array<int, 3> t{x, y, z};
        const int lead = x != 0 ? x : (y != 0 ? y : z);
        if (lead == 1) reps.push_back(t);
      }
    }
  }
  const std::size_t q = reps.size();
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (const auto& p : reps) {
    labels.push_back("P" + std::to_string(p[0]) + std::to_string(p[1]) +
                     std::to_string(p[2]));
  }
  for (const auto& l : reps) {
    labels.push_back("L" + std::to_string(l[0]) + std::to_string(l[1]) +
                     std::to_string(l[2]));
  }
  for (VertexId i = 0; i < q; ++i) {
    for (VertexId j = 0; j < q; ++j) {
      const int dot = reps[i][0] * reps[j][0] + reps[i][1] * reps[j][1] +
                      reps[i][2] * reps[j][2];
      if (dot % 3 == 0) edges.push_back({i, q + j});
    }
  }
  return Graph(2 * q, std::move(edges), std::move(labels));
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5});
  for (VertexId i = 0; i < 5; ++i) edges.push_back({i, i + 5});
  for (VertexId i = 0; i < 5; ++i) edges.push_back({5 + i, 5 + (i + 2) % 5});
  return Graph(10, std::move(edges));
}

namespace {

std::vector<Arc> one_based(std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Arc> out;
  for (const auto& [t, h] : pairs) {
    out.push_back({static_cast<VertexId>(t - 1), static_cast<VertexId>(h - 1)});
  }
  return out;
}

CatalogEntry checked(CatalogEntry entry) {
  if (!is_regular(entry.graph, entry.claimed_regularity)) {
    throw Error(ErrorCode::InvariantMismatch,
                entry.name + " is not " +
                    std::to_string(entry.claimed_regularity) + "-regular");
  }
  const auto g = girth(entry.graph);
  if (!g || *g != entry.claimed_girth) {
    throw Error(ErrorCode::InvariantMismatch,
                entry.name + " does not have girth " +
                    std::to_string(entry.claimed_girth));
  }
  if (!is_connected(entry.graph)) {
    throw Error(ErrorCode::InvariantMismatch, entry.name + " is disconnected");
  }
  return entry;
}

}  // namespace

std::vector<Arc> k5_paper_arcs() {
  return one_based({{1, 2}, {1, 4}, {2, 3}, {2, 5}, {3, 1},
                    {3, 4}, {4, 2}, {4, 5}, {5, 1}, {5, 3}});
}

std::vector<Arc> k44_paper_arcs() {
  return one_based({{1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4}, {3, 8},
                    {4, 1}, {4, 5}, {5, 2}, {5, 6}, {6, 3}, {6, 7},
                    {7, 4}, {7, 8}, {8, 1}, {8, 5}});
}

PairingPolicy k5_paper_policy(K5Variant variant) {
  if (variant == K5Variant::Girth3) {
    return PairingPolicy::uniform(5, Pairing::Parallel);
  }
  return PairingPolicy({Pairing::Crossed, Pairing::Parallel, Pairing::Crossed,
                        Pairing::Parallel, Pairing::Crossed});
}

CubicSystem k5_paper_system(K5Variant variant) {
  const Graph k5 = complete_graph(5);
  const auto arcs = k5_paper_arcs();
  return build_cubic(load_orientation(k5, arcs), k5_paper_policy(variant));
}

CatalogEntry cage(std::size_t g,
                  const std::optional<std::filesystem::path>& data_file) {
  switch (g) {
    case 3:
      return checked({"k5", complete_graph(5), 4, 3, CatalogSource::BuiltIn});
    case 4:
      return checked({"k44", complete_bipartite_interleaved(4), 4, 4,
                      CatalogSource::BuiltIn});
    case 5:
      return checked({"robertson", robertson_graph(), 4, 5,
                      CatalogSource::BuiltIn});
    case 6:
      return checked({"pg23", pg23_incidence_graph(), 4, 6,
                      CatalogSource::BuiltIn});
    case 7: {
      std::optional<std::filesystem::path> path = data_file;
      if (!path) {
        if (const char* env = std::getenv(kCage7PathEnv); env && *env) {
          path = std::filesystem::path(env);
        }
      }
      if (!path) {
        throw Error(ErrorCode::MissingDataFile,
                    std::string("the 67-vertex (4,7)-cage is not built in; "
                                "supply its JSON graph file via ") +
                        kCage7PathEnv + "=<path> or --cage7-file <path>");
      }
      std::ifstream in(*path);
      if (!in) {
        throw Error(ErrorCode::MissingDataFile,
                    "cannot open cage data file " + path->string());
      }
      std::stringstream buf;
      buf << in.rdbuf();
      CatalogEntry e{"cage7", graph_from_json(buf.str()), 4, 7,
                     CatalogSource::DataFile};
      if (e.graph.vertex_count() != 67) {
        throw Error(ErrorCode::InvariantMismatch,
                    "cage data file must describe 67 vertices, found " +
                        std::to_string(e.graph.vertex_count()));
      }
      return checked(std::move(e));
    }
    default:
      throw Error(ErrorCode::InvalidGraph,
                  "no (4," + std::to_string(g) + ")-cage in the catalog");
  }
}

CatalogEntry petersen() {
  return checked({"petersen", petersen_graph(), 3, 5, CatalogSource::BuiltIn});
}

std::vector<std::string> catalog_names() {
  return {"k5", "k44", "robertson", "pg23", "cage7", "petersen"};
}

CatalogEntry catalog_by_name(const std::string& name,
                             const std::optional<std::filesystem::path>& data_file) {
  if (name == "k5" || name == "cage3") return cage(3, data_file);
  if (name == "k44" || name == "cage4") return cage(4, data_file);
  if (name == "robertson" || name == "cage5") return cage(5, data_file);
  if (name == "pg23" || name == "cage6") return cage(6, data_file);
  if (name == "cage7") return cage(7, data_file);
  if (name == "petersen") return petersen();
  throw Error(ErrorCode::InvalidGraph, "unknown catalog entry '" + name + "'");
}

Graph random_regular(std::size_t n, std::size_t degree, std::uint64_t seed) {
  if (degree >= n || (n * degree) % 2 != 0) {
    throw Error(ErrorCode::GenerationFailed,
                "no simple " + std::to_string(degree) + "-regular graph on " +
                    std::to_string(n) + " vertices");
  }
  constexpr std::size_t kMaxRestarts = 100000;
  std::mt19937_64 rng(seed);
  std::vector<VertexId> stubs;
  std::vector<Edge> edges;
  std::set<std::pair<VertexId, VertexId>> present;
  for (std::size_t attempt = 0; attempt < kMaxRestarts; ++attempt) {
    stubs.clear();
    for (VertexId v = 0; v < n; ++v) stubs.insert(stubs.end(), degree, v);
    edges.clear();
    present.clear();
    bool stuck = false;
    while (!stubs.empty() && !stuck) {
      std::size_t misses = 0;
      for (;;) {
        const std::size_t i = uniform_below(rng, stubs.size());
        std::size_t j = uniform_below(rng, stubs.size() - 1);
        if (j >= i) ++j;
        const VertexId a = std::min(stubs[i], stubs[j]);
        const VertexId b = std::max(stubs[i], stubs[j]);
        if (a != b && !present.count({a, b})) {
          present.insert({a, b});
          edges.push_back({a, b});
          // Remove the higher slot first so the lower index stays valid.
          const std::size_t hi = std::max(i, j);
          const std::size_t lo = std::min(i, j);
          stubs[hi] = stubs.back();
          stubs.pop_back();
          stubs[lo] = stubs.back();
          stubs.pop_back();
          break;
        }
        if (++misses > 64) {
          stuck = true;
          break;
        }
      }
    }
    if (stuck) continue;
    Graph g(n, edges);
    if (is_connected(g)) return g;
  }
  throw Error(ErrorCode::GenerationFailed,
              "random pairing did not produce a connected simple graph");
}

Graph random_4_regular(std::size_t n, std::uint64_t seed) {
  if (n < 5) {
    throw Error(ErrorCode::GenerationFailed,
                "4-regular simple graphs need at least 5 vertices");
  }
  return random_regular(n, 4, seed);
}

CubicSystem default_system(const Graph& g, Pairing mode) {
  const auto tour = eulerian_tour(g);
  const auto gd = orient_from_tour(g, tour);
  return build_cubic(gd, PairingPolicy::uniform(g.vertex_count(), mode));
}

std::span<const PublishedRow> published_cage_table() {
  static constexpr PublishedRow kRows[] = {
      {3, 5, 15, 2, 6, 15, 6, 3},        {4, 8, 24, 3, 9, 24, 9, 4},
      {5, 19, 57, 4, 12, 57, 20, 5},     {6, 26, 78, 5, 15, 78, 27, 6},
      {7, 67, 201, 6, 18, 201, 68, 7},
  };
  return kRows;
}

}  // namespace graphdss
