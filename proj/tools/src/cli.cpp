#include "graphdss/cli.hpp"

#include "graphdss/analysis.hpp"
#include "graphdss/catalog.hpp"
#include "graphdss/code.hpp"
#include "graphdss/cubic.hpp"
#include "graphdss/error.hpp"
#include "graphdss/graph.hpp"
#include "graphdss/io.hpp"
#include "graphdss/repair.hpp"
#include "graphdss/tour.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace graphdss::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

constexpr std::uint64_t kExhaustiveBound = 100000;
constexpr std::uint64_t kDefaultTrials = 1000000;
constexpr std::uint64_t kMultiDiskCap = 100000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string catalog;
  std::string input;
  std::string system;
  std::string orientation = "tour";
  std::string policy = "parallel";
  std::string cage7_file;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trials;
  std::string out;
  std::string matrix_out;
  std::size_t block_size = 4096;
  bool table1 = false;
  bool exhaustive = false;
  bool measure_bandwidth = false;
  std::size_t disks = 0;
  bool cubic = false;
  std::string data;
  std::string state_dir;
  std::vector<std::size_t> erase_edges;
  std::vector<std::size_t> erase_disks;
};

std::optional<fs::path> cage7_path(const RunConfig& c) {
  if (c.cage7_file.empty()) return std::nullopt;
  return fs::path(c.cage7_file);
}

struct Source {
  std::string name;
  CubicSystem sys;
  std::optional<Graph> base;
};

Graph load_graph(const RunConfig& c, std::string& name) {
  if (!c.catalog.empty() && !c.input.empty()) {
    throw UsageError("--catalog and --input are mutually exclusive");
  }
  if (!c.catalog.empty()) {
    name = c.catalog;
    return catalog_by_name(c.catalog, cage7_path(c)).graph;
  }
  if (!c.input.empty()) {
    name = fs::path(c.input).stem().string();
    return graph_from_json(read_text_file(c.input));
  }
  throw UsageError("no input: pass --catalog NAME, --input FILE or --system FILE");
}

void require_four_regular(const Graph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 4) {
      throw Error(ErrorCode::InvalidGraph,
                  "not 4-regular: vertex " + std::to_string(v) +
                      (g.vertex_labels().empty() ? "" : " (" + g.vertex_name(v) + ")") +
                      " has degree " + std::to_string(g.degree(v)));
    }
  }
  if (!is_connected(g)) {
    throw Error(ErrorCode::Disconnected, "input graph is not connected");
  }
}

/// "parallel", "crossed", or "MODE@v1,v3,..." (listed vertices get MODE,
/// the rest the other mode; 1-based like the vertex names v1..vN).
PairingPolicy parse_policy(const std::string& text, std::size_t n) {
  const auto mode_of = [&](const std::string& s) {
    if (s == "parallel") return Pairing::Parallel;
    if (s == "crossed") return Pairing::Crossed;
    throw UsageError("unknown pairing mode '" + s + "'");
  };
  const auto at = text.find('@');
  if (at == std::string::npos) return PairingPolicy::uniform(n, mode_of(text));
  const Pairing listed = mode_of(text.substr(0, at));
  const Pairing rest =
      listed == Pairing::Parallel ? Pairing::Crossed : Pairing::Parallel;
  std::vector<Pairing> modes(n, rest);
  std::stringstream ss(text.substr(at + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.size() < 2 || item[0] != 'v') {
      throw UsageError("policy vertices are written v1..vN, got '" + item + "'");
    }
    std::size_t idx = 0;
    try {
      idx = std::stoul(item.substr(1));
    } catch (const std::exception&) {
      throw UsageError("bad policy vertex '" + item + "'");
    }
    if (idx == 0 || idx > n) {
      throw UsageError("policy vertex " + item + " out of range v1..v" +
                       std::to_string(n));
    }
    modes[idx - 1] = listed;
  }
  return PairingPolicy(std::move(modes));
}

OrientedGraph orientation_for(const RunConfig& c, const Graph& g,
                              const std::string& name) {
  if (c.orientation == "tour") return orient_from_tour(g, eulerian_tour(g));
  if (c.orientation == "paper") {
    if (c.input.empty() && (name == "k5" || name == "cage3")) {
      const auto arcs = k5_paper_arcs();
      return load_orientation(g, arcs);
    }
    if (c.input.empty() && (name == "k44" || name == "cage4")) {
      const auto arcs = k44_paper_arcs();
      return load_orientation(g, arcs);
    }
    throw UsageError("--orientation paper is only defined for k5 and k44");
  }
  const auto arcs = arcs_from_json(read_text_file(c.orientation));
  return load_orientation(g, arcs);
}

Source load_source(const RunConfig& c) {
  Source s;
  if (!c.system.empty()) {
    if (!c.catalog.empty() || !c.input.empty()) {
      throw UsageError("--system cannot be combined with --catalog or --input");
    }
    s.name = fs::path(c.system).stem().string();
    s.sys = system_from_json(read_text_file(c.system));
    if (!verify_disk_decomposition(s.sys)) {
      throw Error(ErrorCode::InvalidDisk, "system file has an invalid disk layout");
    }
    if (!s.sys.arc_names.empty()) s.base = s.sys.base_graph();
    return s;
  }
  Graph g = load_graph(c, s.name);
  require_four_regular(g);
  const OrientedGraph gd = orientation_for(c, g, s.name);
  s.sys = build_cubic(gd, parse_policy(c.policy, g.vertex_count()));
  s.base = std::move(g);
  return s;
}

const Graph& require_base(const Source& s) {
  if (!s.base) {
    throw UsageError("system '" + s.name +
                     "' has no underlying 4-regular graph (built by decompose?)");
  }
  return *s.base;
}

void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
  if (c.out.empty()) {
    out << text;
  } else {
    write_text_file(c.out, text);
  }
}

std::string summary(const Source& s) {
  return s.name + ": " + std::to_string(s.sys.disk_count()) + " disks, " +
         std::to_string(s.sys.cubic.vertex_count()) + " cubic vertices, " +
         std::to_string(s.sys.cubic.edge_count()) + " blocks";
}

// ---- build / decompose / export-dot ----------------------------------------

int cmd_build(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Source s = load_source(c);
  emit(c, system_to_json(s.sys) + "\n", out);
  (c.out.empty() ? err : out) << summary(s) << "\n";
  return kOk;
}

int cmd_decompose(const RunConfig& c, std::ostream& out, std::ostream& err) {
  std::string name;
  Graph g = load_graph(c, name);
  const auto paths = decompose_p4(g);
  if (!paths) {
    err << name << ": no decomposition into paths of three edges exists\n";
    return kPropertyViolation;
  }
  CubicSystem sys = system_from_paths(std::move(g), *paths);
  if (!verify_disk_decomposition(sys)) {
    err << name << ": decomposition failed verification\n";
    return kPropertyViolation;
  }
  emit(c, system_to_json(sys) + "\n", out);
  (c.out.empty() ? err : out)
      << name << ": " << sys.disk_count() << " disks, "
      << sys.cubic.edge_count() << " blocks\n";
  return kOk;
}

int cmd_export_dot(const RunConfig& c, std::ostream& out, std::ostream&) {
  if (c.cubic) {
    const Source s = load_source(c);
    emit(c, to_dot(s.sys.cubic, "cubic"), out);
  } else if (!c.system.empty()) {
    const CubicSystem sys = system_from_json(read_text_file(c.system));
    emit(c, to_dot(sys.arc_names.empty() ? sys.cubic : sys.base_graph(), "G"),
         out);
  } else {
    std::string name;
    emit(c, to_dot(load_graph(c, name), "G"), out);
  }
  return kOk;
}

// ---- profile ----------------------------------------------------------------

bool row_matches(const SystemProfile& p, const PublishedRow& r) {
  return p.disk_count == r.disks && p.block_count == r.blocks &&
         p.max_guaranteed_disk_erasures == r.disks_recoverable &&
         p.blocks_recoverable == r.blocks_recoverable &&
         p.code_length == r.length && p.code_dimension == r.dimension &&
         p.girth_base == r.distance;
}

std::string published_text(const PublishedRow& r) {
  std::ostringstream os;
  os << r.disks << "," << r.blocks << "," << r.disks_recoverable << ","
     << r.blocks_recoverable << ",[" << r.length << "," << r.dimension << ","
     << r.distance << "]";
  return os.str();
}

int cmd_table1(const RunConfig& c, std::ostream& out, std::ostream& err) {
  std::ostringstream csv;
  std::ostringstream diff;
  csv << profile_csv_header() << "\n";
  bool ok = true;
  std::size_t row_no = 0;
  for (const PublishedRow& r : published_cage_table()) {
    ++row_no;
    std::optional<CatalogEntry> entry;
    try {
      entry = cage(r.cage_girth, cage7_path(c));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::MissingDataFile) throw;
      diff << "# row " << row_no << " cage" << r.cage_girth
           << ": not verified (" << e.what() << ")\n";
      continue;
    }
    const CubicSystem sys = default_system(entry->graph);
    const SystemProfile p = profile(sys, entry->graph);
    csv << profile_csv_row(entry->name, p) << "\n";
    const bool match = row_matches(p, r);
    ok = ok && match;
    diff << "# row " << row_no << " " << entry->name << ": "
         << (match ? "match" : "MISMATCH") << " (published "
         << published_text(r) << ", girth of cubic graph " << p.girth_cubic
         << ", true distance " << p.code_distance << ")\n";
  }
  emit(c, csv.str(), out);
  out << diff.str();
  if (!ok) err << "table mismatch\n";
  return ok ? kOk : kPropertyViolation;
}

int cmd_profile(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.table1) return cmd_table1(c, out, err);
  const Source s = load_source(c);
  const Graph& base = require_base(s);
  const SystemProfile p = profile(s.sys, base);
  emit(c, profile_csv_header() + "\n" + profile_csv_row(s.name, p) + "\n", out);
  out << profile_text(s.name, p);
  if (!c.matrix_out.empty()) {
    write_text_file(c.matrix_out, parity_matrix_text(derive_code(s.sys.cubic)));
  }
  const bool consistent =
      p.code_length == 3 * p.disk_count &&
      p.rate == cubic_code_rate(s.sys.cubic.vertex_count());
  if (!consistent) {
    err << "profile invariants violated\n";
    return kPropertyViolation;
  }
  return kOk;
}

// ---- simulate ---------------------------------------------------------------

/// Calls visit on every k-set of pairwise non-adjacent disks, in
/// lexicographic order, until visit returns false.
void for_each_independent_set(
    const CubicSystem& sys, std::size_t k,
    const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  const std::size_t n = sys.disk_count();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      adj[a][b] = adj[b][a] = disks_adjacent(sys, a, b) ? 1 : 0;
    }
  }
  std::vector<std::size_t> chosen;
  std::function<bool(std::size_t)> rec = [&](std::size_t from) -> bool {
    if (chosen.size() == k) return visit(chosen);
    for (std::size_t d = from; d < n; ++d) {
      const bool free = std::none_of(chosen.begin(), chosen.end(),
                                     [&](std::size_t x) { return adj[x][d]; });
      if (!free) continue;
      chosen.push_back(d);
      if (!rec(d + 1)) return false;
      chosen.pop_back();
    }
    return true;
  };
  rec(0);
}

int cmd_simulate(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.trials && !c.seed) {
    throw UsageError("--trials needs an explicit --seed");
  }
  const Source s = load_source(c);
  const Graph& base = require_base(s);
  const auto g = girth(base);
  if (!g) throw Error(ErrorCode::Acyclic, "base graph has no cycle");
  const std::uint64_t subsets = binomial(s.sys.disk_count(), *g - 1);

  VerifyMode mode = Exhaustive{};
  if (!c.exhaustive) {
    if (c.trials || c.seed) {
      mode = Sampled{c.trials.value_or(kDefaultTrials), *c.seed};
    } else if (subsets > kExhaustiveBound) {
      throw UsageError("C(" + std::to_string(s.sys.disk_count()) + "," +
                       std::to_string(*g - 1) + ") = " + std::to_string(subsets) +
                       " subsets exceeds the exhaustive bound; pass --seed S "
                       "(sampled, default " + std::to_string(kDefaultTrials) +
                       " trials) or --exhaustive");
    }
  }

  json j;
  j["system"] = s.name;
  if (const auto* sampled = std::get_if<Sampled>(&mode)) {
    j["mode"] = "sampled";
    j["trials"] = sampled->trials;
    j["seed"] = sampled->seed;
  } else {
    j["mode"] = "exhaustive";
  }
  const RecoveryVerdict verdict = verify_recovery_bound(s.sys, base, mode);
  j["recovery"] = json::parse(verdict_to_json(verdict));
  bool ok = verdict.all_g_minus_1_ok && verdict.witness_unrecoverable;

  // Single-disk repair cost for every disk under both strategies.
  bool bw_ok = true;
  bool rounds_ok = true;
  for (std::size_t d = 0; d < s.sys.disk_count(); ++d) {
    const auto a = repair_disk(s.sys, d, DiskRepairStrategy::MinBandwidth);
    const auto b = repair_disk(s.sys, d, DiskRepairStrategy::MinRounds);
    bw_ok = bw_ok && a.transferred_symbols == 4 && a.rounds == 3 &&
            a.residual.empty();
    rounds_ok = rounds_ok && b.transferred_symbols == 5 && b.rounds == 2 &&
                b.residual.empty();
  }
  j["disk_repair"] = {{"disks", s.sys.disk_count()},
                      {"min_bandwidth", {{"transferred", 4}, {"rounds", 3}, {"ok", bw_ok}}},
                      {"min_rounds", {{"transferred", 5}, {"rounds", 2}, {"ok", rounds_ok}}}};
  ok = ok && bw_ok && rounds_ok;

  if (c.measure_bandwidth || c.disks > 0) {
    const std::size_t k = c.disks == 0 ? 1 : c.disks;
    std::uint64_t sets = 0;
    std::optional<std::vector<std::size_t>> failure;
    std::size_t failure_transfer = 0;
    bool truncated = false;
    for_each_independent_set(s.sys, k, [&](const std::vector<std::size_t>& ds) {
      if (sets == kMultiDiskCap) {
        truncated = true;
        return false;
      }
      ++sets;
      const RepairReport r = repair_disks(s.sys, ds);
      if (!r.residual.empty() || r.transferred_symbols != 4 * k) {
        if (!failure) {
          failure = ds;
          failure_transfer = r.transferred_symbols;
        }
      }
      return true;
    });
    json m;
    m["disks_per_set"] = k;
    m["sets"] = sets;
    m["truncated"] = truncated;
    m["expected_transferred"] = 4 * k;
    m["ok"] = !failure.has_value();
    if (failure) {
      m["failure"] = *failure;
      m["failure_transferred"] = failure_transfer;
    }
    j["multi_disk"] = std::move(m);
    ok = ok && !failure;
  }
  j["ok"] = ok;
  emit(c, j.dump(2) + "\n", out);

  err << s.name << ": " << verdict.recoverable << "/" << verdict.checked << " "
      << verdict.subset_size << "-subsets recoverable; witness {";
  for (std::size_t i = 0; i < verdict.witness.size(); ++i) {
    err << (i ? "," : "") << verdict.witness[i];
  }
  err << "} " << (verdict.witness_unrecoverable ? "unrecoverable" : "RECOVERABLE")
      << "; " << (ok ? "verified" : "FAILED") << "\n";
  return ok ? kOk : kPropertyViolation;
}

// ---- store / repair ---------------------------------------------------------

int cmd_store(const RunConfig& c, std::ostream& out, std::ostream&) {
  if (c.data.empty() || c.state_dir.empty()) {
    throw UsageError("store needs --data FILE and --state-dir DIR");
  }
  if (c.block_size == 0) throw UsageError("--block-size must be positive");
  const Source s = load_source(c);
  const ParityCode code = derive_code(s.sys.cubic);
  const std::string bytes = read_text_file(c.data);
  const std::size_t need = code.dimension * c.block_size;
  if (bytes.size() != need) {
    throw Error(ErrorCode::WrongBlockCount,
                "data file is " + std::to_string(bytes.size()) +
                    " bytes; this system stores exactly k*s = " +
                    std::to_string(code.dimension) + "*" +
                    std::to_string(c.block_size) + " = " + std::to_string(need) +
                    " bytes");
  }
  std::vector<Block> data(code.dimension);
  for (std::size_t i = 0; i < code.dimension; ++i) {
    const auto* p = reinterpret_cast<const std::uint8_t*>(bytes.data()) +
                    i * c.block_size;
    data[i].assign(p, p + c.block_size);
  }
  const StorageState state = encode(code, data);
  const fs::path dir = c.state_dir;
  write_state_dir(dir, code, state);
  write_text_file(dir / "system.json", system_to_json(s.sys) + "\n");
  out << s.name << ": stored " << code.dimension << " data blocks of "
      << c.block_size << " bytes as " << code.length << " blocks in "
      << dir.string() << "\n";
  return kOk;
}

int cmd_repair(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.state_dir.empty()) throw UsageError("repair needs --state-dir DIR");
  const fs::path dir = c.state_dir;
  const CubicSystem sys = system_from_json(read_text_file(
      c.system.empty() ? dir / "system.json" : fs::path(c.system)));
  if (!verify_disk_decomposition(sys)) {
    throw Error(ErrorCode::InvalidDisk, "system file has an invalid disk layout");
  }
  const ParityCode code = derive_code(sys.cubic);
  LoadedState loaded = read_state_dir(dir, code);

  EdgeSubset erased = loaded.missing;
  for (std::size_t e : c.erase_edges) {
    if (e >= code.length) {
      throw UsageError("edge " + std::to_string(e) + " out of range (" +
                       std::to_string(code.length) + " blocks)");
    }
    erased.set(e);
  }
  for (std::size_t d : c.erase_disks) {
    for (EdgeId e : sys.disk_edges(d)) erased.set(e);
  }

  const RepairReport report = peel(sys, erased, PeelSchedule::Bandwidth);
  out << report_to_json(report) << "\n";
  if (!report.residual.empty()) {
    err << "Unrecoverable: residual cycle edges {";
    const auto members = report.residual.members();
    for (std::size_t i = 0; i < members.size(); ++i) {
      err << (i ? "," : "") << members[i];
    }
    err << "}\n";
    return kPropertyViolation;
  }
  const StorageState repaired = repair_state(code, std::move(loaded.state), report);
  if (!verify_state(code, repaired)) {
    err << "repaired state fails its parity checks\n";
    return kPropertyViolation;
  }
  for (EdgeId e : erased.members()) {
    const Block& b = repaired.blocks[e];
    write_text_file(block_path(dir, e),
                    std::string_view(reinterpret_cast<const char*>(b.data()),
                                     b.size()));
  }
  err << "repaired " << erased.count() << " blocks, " << report.transferred_symbols
      << " transferred, " << report.rounds << " rounds\n";
  return kOk;
}

// ---- option wiring ----------------------------------------------------------

void add_source_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--catalog", c.catalog, "Built-in graph: " + [] {
    std::string names;
    for (const auto& n : catalog_names()) names += (names.empty() ? "" : ", ") + n;
    return names;
  }());
  sub->add_option("--input", c.input, "Graph JSON file");
  sub->add_option("--system", c.system, "System JSON file written by build");
  sub->add_option("--orientation", c.orientation,
                  "tour (default), paper (k5/k44), or an arc-list JSON file");
  sub->add_option("--policy", c.policy,
                  "parallel (default), crossed, or MODE@v1,v3,...");
  sub->add_option("--cage7-file", c.cage7_file,
                  std::string("(4,7)-cage graph JSON (else $") + kCage7PathEnv + ")");
  sub->add_option("--out", c.out, "Write the main output here instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  RunConfig c;
  CLI::App app{"Graph-based distributed storage systems"};
  app.name("graphdss");
  app.require_subcommand(1, 1);

  auto* build = app.add_subcommand("build", "Build a storage system from a 4-regular graph");
  add_source_options(build, c);

  auto* decompose = app.add_subcommand("decompose", "Split a cubic graph into 3-edge paths");
  decompose->add_option("--catalog", c.catalog, "Built-in graph (e.g. petersen)");
  decompose->add_option("--input", c.input, "Graph JSON file");
  decompose->add_option("--cage7-file", c.cage7_file, "(4,7)-cage graph JSON");
  decompose->add_option("--out", c.out, "Write the system JSON here");

  auto* prof = app.add_subcommand("profile", "Report code and recovery parameters");
  add_source_options(prof, c);
  prof->add_flag("--table1", c.table1, "Profile every cage and diff against the published table");
  prof->add_option("--matrix-out", c.matrix_out, "Write the parity-check matrix here");

  auto* sim = app.add_subcommand("simulate", "Verify disk-erasure recovery and repair bandwidth");
  add_source_options(sim, c);
  sim->add_flag("--exhaustive", c.exhaustive, "Check every (g-1)-subset of disks");
  sim->add_option("--trials", c.trials, "Sampled subsets (needs --seed)");
  sim->add_option("--seed", c.seed, "Seed for sampled verification");
  sim->add_option("--disks", c.disks, "Erase sets of this many pairwise non-adjacent disks");
  sim->add_flag("--measure-bandwidth", c.measure_bandwidth,
                "Check repair_disks transfers 4 symbols per disk");

  auto* store = app.add_subcommand("store", "Encode a data file into per-block files");
  add_source_options(store, c);
  store->add_option("--data", c.data, "Input file of exactly k*s bytes");
  store->add_option("--state-dir", c.state_dir, "Directory for the encoded blocks");
  store->add_option("--block-size", c.block_size, "Bytes per block (default 4096)");

  auto* rep = app.add_subcommand("repair", "Rebuild erased or missing block files");
  rep->add_option("--state-dir", c.state_dir, "Directory written by store")->required();
  rep->add_option("--system", c.system, "System JSON (default: STATE_DIR/system.json)");
  rep->add_option("--erase-edges", c.erase_edges, "Treat these blocks as lost")->delimiter(',');
  rep->add_option("--erase-disks", c.erase_disks, "Treat every block of these disks as lost")
      ->delimiter(',');

  auto* dot = app.add_subcommand("export-dot", "Write a graph in Graphviz DOT");
  add_source_options(dot, c);
  dot->add_flag("--cubic", c.cubic, "Export the cubic graph instead of the input graph");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (c.cage7_file.empty()) {
    if (const char* env = std::getenv(kCage7PathEnv)) c.cage7_file = env;
  }

  try {
    if (build->parsed()) return cmd_build(c, out, err);
    if (decompose->parsed()) return cmd_decompose(c, out, err);
    if (prof->parsed()) return cmd_profile(c, out, err);
    if (sim->parsed()) return cmd_simulate(c, out, err);
    if (store->parsed()) return cmd_store(c, out, err);
    if (rep->parsed()) return cmd_repair(c, out, err);
    if (dot->parsed()) return cmd_export_dot(c, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    const bool property = e.code() == ErrorCode::Unrecoverable ||
                          e.code() == ErrorCode::InvariantMismatch;
    return property ? kPropertyViolation : kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace graphdss::cli
