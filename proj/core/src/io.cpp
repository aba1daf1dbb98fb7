#include "graphdss/io.hpp"

#include "graphdss/error.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace graphdss {

using json = nlohmann::ordered_json;

namespace {

json parse(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

json graph_object(const Graph& g) {
  json j;
  j["vertices"] = g.vertex_count();
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  if (!g.vertex_labels().empty()) j["vertex_labels"] = g.vertex_labels();
  if (!g.edge_labels().empty()) j["edge_labels"] = g.edge_labels();
  return j;
}

Graph graph_from_object(const json& j) {
  return guarded([&] {
    const auto n = j.at("vertices").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) {
        throw Error(ErrorCode::ParseError, "edge entries must be [u,v] pairs");
      }
      edges.push_back({e[0].get<VertexId>(), e[1].get<VertexId>()});
    }
    std::vector<std::string> vl;
    std::vector<std::string> el;
    if (j.contains("vertex_labels")) {
      vl = j["vertex_labels"].get<std::vector<std::string>>();
    }
    if (j.contains("edge_labels")) {
      el = j["edge_labels"].get<std::vector<std::string>>();
    }
    return Graph(n, std::move(edges), std::move(vl), std::move(el));
  });
}

std::vector<Arc> arcs_from_array(const json& a) {
  std::vector<Arc> out;
  for (const auto& p : a) {
    if (!p.is_array() || p.size() != 2) {
      throw Error(ErrorCode::ParseError, "arc entries must be [tail,head] pairs");
    }
    out.push_back({p[0].get<VertexId>(), p[1].get<VertexId>()});
  }
  return out;
}

json subset_array(const EdgeSubset& s) { return json(s.members()); }

}  // namespace

std::string graph_to_json(const Graph& g) { return graph_object(g).dump(2); }

Graph graph_from_json(std::string_view text) {
  return graph_from_object(parse(text));
}

std::string arcs_to_json(const std::vector<Arc>& arcs) {
  json a = json::array();
  for (const Arc& x : arcs) a.push_back({x.tail, x.head});
  json j;
  j["arcs"] = std::move(a);
  return j.dump(2);
}

std::vector<Arc> arcs_from_json(std::string_view text) {
  const json j = parse(text);
  return guarded([&] { return arcs_from_array(j.at("arcs")); });
}

std::string system_to_json(const CubicSystem& sys) {
  json j = graph_object(sys.cubic);
  json disks = json::array();
  for (const Disk& d : sys.disks) disks.push_back({d[0], d[1], d[2], d[3]});
  j["disks"] = std::move(disks);
  j["disk_owner"] = sys.disk_owner;
  json names = json::array();
  for (const Arc& a : sys.arc_names) names.push_back({a.tail, a.head});
  j["arc_names"] = std::move(names);
  if (sys.policy) {
    json p = json::array();
    for (Pairing m : sys.policy->modes()) {
      p.push_back(m == Pairing::Parallel ? "parallel" : "crossed");
    }
    j["policy"] = std::move(p);
  } else {
    j["policy"] = nullptr;
  }
  return j.dump(2);
}

CubicSystem system_from_json(std::string_view text) {
  const json j = parse(text);
  return guarded([&] {
    CubicSystem sys;
    sys.cubic = graph_from_object(j);
    for (const auto& d : j.at("disks")) {
      if (!d.is_array() || d.size() != 4) {
        throw Error(ErrorCode::ParseError, "disks must list four vertices");
      }
      sys.disks.push_back(
          {d[0].get<VertexId>(), d[1].get<VertexId>(), d[2].get<VertexId>(),
           d[3].get<VertexId>()});
    }
    if (j.contains("disk_owner")) {
      sys.disk_owner = j["disk_owner"].get<std::vector<VertexId>>();
    }
    if (j.contains("arc_names")) sys.arc_names = arcs_from_array(j["arc_names"]);
    if (j.contains("policy") && !j["policy"].is_null()) {
      std::vector<Pairing> modes;
      for (const auto& m : j["policy"]) {
        const auto s = m.get<std::string>();
        if (s == "parallel") {
          modes.push_back(Pairing::Parallel);
        } else if (s == "crossed") {
          modes.push_back(Pairing::Crossed);
        } else {
          throw Error(ErrorCode::ParseError, "unknown pairing '" + s + "'");
        }
      }
      sys.policy = PairingPolicy(std::move(modes));
    }
    return sys;
  });
}

std::string report_to_json(const RepairReport& report) {
  json j;
  json rec = json::array();
  for (const auto& s : report.recovered) {
    rec.push_back({s.edge, s.parity_vertex, s.round});
  }
  j["recovered"] = std::move(rec);
  j["transferred"] = report.transferred_symbols;
  j["rounds"] = report.rounds;
  j["residual"] = subset_array(report.residual);
  j["erased"] = subset_array(report.erased);
  return j.dump(2);
}

std::string verdict_to_json(const RecoveryVerdict& v) {
  json j;
  j["girth"] = v.girth;
  j["subset_size"] = v.subset_size;
  j["checked"] = v.checked;
  j["recoverable"] = v.recoverable;
  j["all_g_minus_1_ok"] = v.all_g_minus_1_ok;
  j["witness"] = v.witness;
  j["witness_unrecoverable"] = v.witness_unrecoverable;
  if (!v.counterexample.empty()) j["counterexample"] = v.counterexample;
  return j.dump(2);
}

std::string profile_csv_header() {
  return "name,disks,blocks,disks_recoverable,blocks_recoverable,code_length,"
         "code_dimension,girth_base,girth_cubic,code_distance,rate";
}

std::string profile_csv_row(const std::string& name, const SystemProfile& p) {
  std::ostringstream os;
  os << name << ',' << p.disk_count << ',' << p.block_count << ','
     << p.max_guaranteed_disk_erasures << ',' << p.blocks_recoverable << ','
     << p.code_length << ',' << p.code_dimension << ',' << p.girth_base << ','
     << p.girth_cubic << ',' << p.code_distance << ',' << p.rate.str();
  return os.str();
}

std::string profile_text(const std::string& name, const SystemProfile& p) {
  std::ostringstream os;
  os << name << ": " << p.disk_count << " disks, " << p.block_count
     << " blocks\n"
     << "  any " << p.max_guaranteed_disk_erasures << " disk erasures ("
     << p.blocks_recoverable << " blocks) recoverable; girth(G) = "
     << p.girth_base << "\n"
     << "  any " << p.max_guaranteed_block_erasures
     << " block erasures recoverable; girth of cubic graph = " << p.girth_cubic
     << "\n"
     << "  code [" << p.code_length << ", " << p.code_dimension << ", "
     << p.girth_base << "] (table d = girth(G)); true minimum distance "
     << p.code_distance << "\n"
     << "  rate " << p.rate.str() << " = " << std::setprecision(6)
     << p.rate.value() << "\n";
  return os.str();
}

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    os << "  n" << v << " [label=\"" << g.vertex_name(v) << "\"];\n";
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    os << "  n" << g.edge(e).u << " -- n" << g.edge(e).v << " [label=\"" << e
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string parity_matrix_text(const ParityCode& code) {
  std::string out;
  out.reserve(code.parity_rows.size() * (code.length + 1));
  for (const BitRow& row : code.parity_rows) {
    for (std::size_t e = 0; e < code.length; ++e) out += row.test(e) ? '1' : '0';
    out += '\n';
  }
  return out;
}

std::filesystem::path block_path(const std::filesystem::path& dir, EdgeId e) {
  char name[32];
  std::snprintf(name, sizeof(name), "block_%04zu.bin", e);
  return dir / name;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::MissingDataFile, "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::MissingDataFile, "cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

void write_state_dir(const std::filesystem::path& dir, const ParityCode& code,
                     const StorageState& state) {
  std::filesystem::create_directories(dir);
  json header;
  header["m"] = code.length;
  header["s"] = state.block_size;
  header["information_set"] = code.information_set;
  write_text_file(dir / "header.json", header.dump(2) + "\n");
  for (EdgeId e = 0; e < state.blocks.size(); ++e) {
    const Block& b = state.blocks[e];
    write_text_file(block_path(dir, e),
                    std::string_view(reinterpret_cast<const char*>(b.data()),
                                     b.size()));
  }
}

LoadedState read_state_dir(const std::filesystem::path& dir,
                           const ParityCode& code) {
  const json header = parse(read_text_file(dir / "header.json"));
  return guarded([&] {
    const auto m = header.at("m").get<std::size_t>();
    const auto s = header.at("s").get<std::size_t>();
    if (m != code.length) {
      throw Error(ErrorCode::WrongBlockCount,
                  "state has " + std::to_string(m) + " blocks, code length is " +
                      std::to_string(code.length));
    }
    const auto info = header.at("information_set").get<std::vector<EdgeId>>();
    if (info != code.information_set) {
      throw Error(ErrorCode::InvariantMismatch,
                  "state was written for a different information set");
    }
    LoadedState out{{s, std::vector<Block>(m, Block(s, 0))}, EdgeSubset(m)};
    for (EdgeId e = 0; e < m; ++e) {
      const auto p = block_path(dir, e);
      std::ifstream in(p, std::ios::binary);
      if (!in) {
        out.missing.set(e);
        continue;
      }
      std::string bytes((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
      if (bytes.size() != s) {
        out.missing.set(e);
        continue;
      }
      out.state.blocks[e].assign(bytes.begin(), bytes.end());
    }
    return out;
  });
}

}  // namespace graphdss
