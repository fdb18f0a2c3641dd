// ordtrail: longest strictly ordered trails in edge-weighted graphs.
//
// Exit codes: 0 success, 1 a checked property failed, 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ordtrail/ordtrail.hpp"
#include "ordtrail/report.hpp"

namespace {

using ordtrail::report::Json;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailed = 1;
constexpr int kExitUsage = 2;

constexpr std::size_t kOracleMaxVertices = 9;

struct InputOptions {
  std::string file;
  std::string mode = "auto";
};

ordtrail::ModeSelection mode_selection(const std::string& mode) {
  if (mode == "strict") return ordtrail::ModeSelection::Strict;
  if (mode == "relaxed") return ordtrail::ModeSelection::Relaxed;
  return ordtrail::ModeSelection::Auto;
}

ordtrail::WeightedGraph load_graph(const InputOptions& in) {
  std::stringstream buffer;
  if (in.file == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream file(in.file, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open " + in.file);
    buffer << file.rdbuf();
  }
  return ordtrail::parse_edge_list(buffer.str(), mode_selection(in.mode));
}

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("file", in.file, "Edge-list file ('-' for stdin)")->required();
  cmd->add_option("--mode", in.mode, "Weight mode")
      ->check(CLI::IsMember({"auto", "strict", "relaxed"}))
      ->capture_default_str();
}

void print_json(const Json& doc) { std::cout << doc.dump(2) << '\n'; }

std::string weights_text(const ordtrail::WeightedGraph& g, const ordtrail::Trail& t,
                         ordtrail::OrderKind kind) {
  std::string out;
  const char* sep = kind == ordtrail::OrderKind::Decreasing ? " > " : " < ";
  for (const auto& s : t.steps) {
    if (!out.empty()) out += sep;
    out += g.weight(s.from, s.to)->to_string();
  }
  return out;
}

// compute -----------------------------------------------------------------

struct ComputeOptions {
  InputOptions in;
  std::string order = "dec";
  bool trail = false;
  bool labels = false;
  bool text = false;
};

int run_compute(const ComputeOptions& opt) {
  const auto g = load_graph(opt.in);
  const auto kind = opt.order == "inc" ? ordtrail::OrderKind::Increasing : ordtrail::OrderKind::Decreasing;
  const auto r = ordtrail::longest_ordered_trail(g, kind);
  if (opt.text) {
    std::cout << (kind == ordtrail::OrderKind::Decreasing ? "longest decreasing trail: "
                                                          : "longest increasing trail: ")
              << r.optimum << '\n';
    if (opt.trail) {
      std::cout << "trail: " << (r.witness.empty() ? "(empty)" : ordtrail::format_trail(r.witness));
      if (!r.witness.empty()) std::cout << "  weights " << weights_text(g, r.witness, kind);
      std::cout << '\n';
    }
    if (opt.labels) {
      for (std::size_t v = 0; v < r.labels.size(); ++v) {
        std::cout << "L(v" << v + 1 << ") = " << r.labels[v] << '\n';
      }
    }
    std::cout << "2*floor(q/n) = " << r.bound_a << ", floor(2q/n) = " << r.bound_b << '\n';
  } else {
    print_json(ordtrail::report::trail_report_json(g, r, opt.trail, opt.labels));
  }
  return kExitOk;
}

// oracle ------------------------------------------------------------------

struct OracleOptions {
  InputOptions in;
  std::size_t from = 0;
  std::size_t cap = 1000;
  bool text = false;
};

int run_oracle(const OracleOptions& opt) {
  const auto g = load_graph(opt.in);
  const auto brute = ordtrail::brute_force_longest(g);
  const auto fast = ordtrail::longest_ordered_trail(g, ordtrail::OrderKind::Decreasing);
  const bool agrees = brute.optimum == fast.optimum && brute.per_vertex == fast.labels;

  std::optional<ordtrail::TrailEnumeration> listing;
  if (opt.from > 0) {
    if (opt.from > g.n()) throw CLI::ValidationError("--from", "vertex outside 1.." + std::to_string(g.n()));
    listing = ordtrail::enumerate_dec_trails_from(g, ordtrail::VertexId::from_label(opt.from), opt.cap);
  }

  if (opt.text) {
    std::cout << "brute-force longest decreasing trail: " << brute.optimum << '\n';
    for (std::size_t v = 0; v < brute.per_vertex.size(); ++v) {
      std::cout << "  v" << v + 1 << ": " << brute.per_vertex[v] << '\n';
    }
    std::cout << "nodes explored: " << brute.nodes_explored << '\n';
    std::cout << "agrees with label sweep: " << (agrees ? "yes" : "NO") << '\n';
    if (listing) {
      std::cout << "maximal decreasing trails from v" << opt.from << ":\n";
      for (const auto& t : listing->trails) std::cout << "  " << ordtrail::format_trail(t) << '\n';
      if (listing->truncated) std::cout << "  (truncated at " << opt.cap << ")\n";
    }
  } else {
    Json out;
    out["schema_version"] = ordtrail::report::kSchemaVersion;
    out["optimum"] = brute.optimum;
    out["per_vertex"] = brute.per_vertex;
    out["nodes_explored"] = brute.nodes_explored;
    out["agrees"] = agrees;
    if (listing) {
      Json trails = Json::array();
      for (const auto& t : listing->trails) {
        trails.push_back(ordtrail::report::trail_json(g, t, ordtrail::VertexId::from_label(opt.from)));
      }
      out["from"] = opt.from;
      out["trails"] = std::move(trails);
      out["truncated"] = listing->truncated;
    }
    print_json(out);
  }
  return agrees ? kExitOk : kExitPropertyFailed;
}

// check -------------------------------------------------------------------

struct CheckOptions {
  InputOptions in;
  bool text = false;
};

int run_check(const CheckOptions& opt) {
  const auto g = load_graph(opt.in);
  const auto bounds = ordtrail::check_lower_bound(g);
  const auto fast = ordtrail::longest_ordered_trail(g, ordtrail::OrderKind::Decreasing);
  const bool witness_ok = ordtrail::is_ordered_trail(g, fast.witness, ordtrail::OrderKind::Decreasing) &&
                          fast.witness.length() == fast.optimum;

  std::optional<bool> oracle_agrees;
  if (g.n() <= kOracleMaxVertices) {
    const auto brute = ordtrail::brute_force_longest(g);
    oracle_agrees = brute.optimum == fast.optimum && brute.per_vertex == fast.labels;
  }
  const bool ok = bounds.passed() && witness_ok && oracle_agrees.value_or(true);

  if (opt.text) {
    auto verdict = [](bool pass) { return pass ? "pass" : "FAIL"; };
    std::cout << "longest decreasing trail: " << bounds.longest << '\n'
              << "2*floor(q/n) = " << bounds.bound_a << ": " << verdict(bounds.pass_a) << '\n'
              << "floor(2q/n) = " << bounds.bound_b << ": " << verdict(bounds.pass_b) << '\n'
              << "witness valid: " << verdict(witness_ok) << '\n'
              << "oracle: "
              << (oracle_agrees ? verdict(*oracle_agrees) : "skipped (n > 9)") << '\n';
  } else {
    Json out;
    out["schema_version"] = ordtrail::report::kSchemaVersion;
    out["n"] = g.n();
    out["q"] = g.q();
    out["bounds"] = ordtrail::report::bound_check_json(bounds);
    out["witness_valid"] = witness_ok;
    out["oracle_agrees"] = oracle_agrees ? Json(*oracle_agrees) : Json(nullptr);
    out["ok"] = ok;
    print_json(out);
  }
  return ok ? kExitOk : kExitPropertyFailed;
}

// extremal ----------------------------------------------------------------

struct ExtremalCliOptions {
  std::size_t complete = 0;
  std::string graph_file;
  bool exhaustive = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  bool reduce = false;
  unsigned jobs = 1;
  bool timing = false;
  bool text = false;
};

int run_extremal(const ExtremalCliOptions& opt) {
  const auto structure = opt.complete > 0
                             ? ordtrail::Structure::complete_graph(opt.complete)
                             : ordtrail::Structure::of(load_graph({opt.graph_file, "auto"}));
  ordtrail::ExtremalOptions options;
  options.mode = opt.exhaustive ? ordtrail::SearchMode::Exhaustive : ordtrail::SearchMode::Sampled;
  options.samples = opt.samples;
  options.seed = opt.seed;
  options.reduce_symmetry = opt.reduce;
  options.jobs = opt.jobs;
  const auto r = ordtrail::min_over_weightings(structure, options);

  if (opt.text) {
    std::cout << "weightings examined: " << r.examined << '\n'
              << "minimum longest decreasing trail: " << r.minimum << '\n'
              << "witness weighting:";
    for (auto w : r.witness) std::cout << ' ' << w;
    std::cout << '\n';
    if (r.reduced) std::cout << "symmetry reduction factor: " << r.reduction_factor << '\n';
    if (opt.timing) std::cout << "elapsed: " << r.elapsed.count() << " ms\n";
  } else {
    print_json(ordtrail::report::extremal_json(r, opt.timing));
  }
  return kExitOk;
}

// gen ---------------------------------------------------------------------

struct GenOptions {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  bool complete = false;
  std::uint64_t seed = 0;
  std::string out;
};

int run_gen(const GenOptions& opt) {
  const std::size_t m = opt.complete ? ordtrail::max_edges(opt.vertices) : opt.edges;
  const auto g = ordtrail::random_graph(opt.vertices, m, opt.seed);
  const std::string text = "c random graph n=" + std::to_string(opt.vertices) + " m=" + std::to_string(m) +
                           " seed=" + std::to_string(opt.seed) + "\n" + ordtrail::render_edge_list(g);
  if (opt.out.empty() || opt.out == "-") {
    std::cout << text;
  } else {
    std::ofstream file(opt.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + opt.out);
    file << text;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Longest strictly ordered trails in edge-weighted graphs"};
  app.require_subcommand(1);

  ComputeOptions compute;
  auto* compute_cmd = app.add_subcommand("compute", "Longest ordered trail by label propagation");
  add_input_options(compute_cmd, compute.in);
  compute_cmd->add_option("--order", compute.order, "Trail order")
      ->check(CLI::IsMember({"dec", "inc"}))
      ->capture_default_str();
  compute_cmd->add_flag("--trail", compute.trail, "Include the witness trail");
  compute_cmd->add_flag("--labels", compute.labels, "Include the final vertex labels");
  compute_cmd->add_flag("--text", compute.text, "Human-readable output");

  OracleOptions oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force longest decreasing trails");
  add_input_options(oracle_cmd, oracle.in);
  oracle_cmd->add_option("--from", oracle.from, "List maximal decreasing trails from this vertex (1-based)");
  oracle_cmd->add_option("--cap", oracle.cap, "Maximum number of listed trails")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  oracle_cmd->add_flag("--text", oracle.text, "Human-readable output");

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Check lower bounds and oracle agreement");
  add_input_options(check_cmd, check.in);
  check_cmd->add_flag("--text", check.text, "Human-readable output");

  ExtremalCliOptions extremal;
  auto* extremal_cmd = app.add_subcommand("extremal", "Minimum longest trail over all weightings");
  auto* structure_group = extremal_cmd->add_option_group("structure");
  structure_group->add_option("--complete", extremal.complete, "Complete graph K_n")
      ->check(CLI::PositiveNumber);
  structure_group->add_option("--graph", extremal.graph_file, "Edge structure from an edge-list file");
  structure_group->require_option(1);
  auto* mode_group = extremal_cmd->add_option_group("search mode");
  mode_group->add_flag("--exhaustive", extremal.exhaustive, "Enumerate every weighting");
  mode_group->add_option("--sample", extremal.samples, "Evaluate this many random weightings")
      ->check(CLI::PositiveNumber);
  mode_group->require_option(1);
  extremal_cmd->add_option("--seed", extremal.seed, "Seed for sampled mode")->capture_default_str();
  extremal_cmd->add_flag("--reduce", extremal.reduce, "Quotient complete graphs by vertex relabelling");
  extremal_cmd->add_option("--jobs", extremal.jobs, "Worker threads")
      ->envname("TRAIL_JOBS")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  extremal_cmd->add_flag("--timing", extremal.timing, "Report elapsed wall-clock time");
  extremal_cmd->add_flag("--text", extremal.text, "Human-readable output");

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random strict graph as an edge list");
  gen_cmd->add_option("--vertices,-n", gen.vertices, "Vertex count")->required()->check(CLI::PositiveNumber);
  auto* gen_edges = gen_cmd->add_option("--edges,-m", gen.edges, "Edge count");
  auto* gen_complete = gen_cmd->add_flag("--complete", gen.complete, "Use every vertex pair");
  gen_edges->excludes(gen_complete);
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("--out,-o", gen.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (compute_cmd->parsed()) return run_compute(compute);
    if (oracle_cmd->parsed()) return run_oracle(oracle);
    if (check_cmd->parsed()) return run_check(check);
    if (extremal_cmd->parsed()) return run_extremal(extremal);
    if (gen_cmd->parsed()) return run_gen(gen);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
