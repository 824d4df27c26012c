// Batch command-line front end: find quasi-cliques, verify small instances
// exactly, run ablation variants, correlation sampling, and parameter sweeps.
// Results go to stdout (or --output); progress goes to stderr.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "edqc/ablation.hpp"
#include "edqc/analysis.hpp"
#include "edqc/driver.hpp"
#include "edqc/io.hpp"
#include "edqc/oracle.hpp"
#include "edqc/output.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct Options {
  std::string input_path;
  std::string gen_spec;
  std::string gamma_text;
  unsigned steps = 3;
  double theta = 0.001;
  std::uint64_t seed = 1;
  std::size_t runs = 1;
  double timeout = 60.0;
  unsigned workers = 1;
  std::string format = "json";
  std::string output;
  // subcommand-specific
  std::string variant = "all";
  std::size_t count = 1000;
  std::string steps_grid = "1,2,3";
  std::string theta_grid = "0.0001,0.0005,0.001,0.005,0.01";
  std::string graph_format = "mtx";
};

void add_input_flags(CLI::App* cmd, Options& o) {
  auto* input = cmd->add_option("--input", o.input_path, "edge-list or MatrixMarket file");
  auto* gen = cmd->add_option("--gen", o.gen_spec,
                              "generator spec: k<N>, k4me, path:<n>, er:<n>:<p>:<seed>, "
                              "planted:<n>:<p>:<k>:<seed>");
  input->excludes(gen);
  gen->excludes(input);
}

void add_run_flags(CLI::App* cmd, Options& o, bool with_runs = true) {
  cmd->add_option("--gamma", o.gamma_text, "density threshold, decimal with <= 6 fraction digits")
      ->required();
  cmd->add_option("--steps", o.steps, "diffusion rounds T");
  cmd->add_option("--theta", o.theta, "activation threshold");
  cmd->add_option("--seed", o.seed, "base RNG seed");
  if (with_runs) cmd->add_option("--runs", o.runs, "independent runs with consecutive seeds");
  cmd->add_option("--timeout", o.timeout, "wall-clock budget per run, seconds");
  cmd->add_option("--workers", o.workers, "parallel diffusion workers");
}

void add_output_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--output", o.output, "write results to a file instead of stdout");
}

edqc::Graph load_input(const Options& o) {
  if (!o.input_path.empty()) {
    edqc::Graph g = edqc::load_graph(o.input_path);
    std::cerr << "loaded " << o.input_path << ": n=" << g.vertex_count()
              << " m=" << g.edge_count() << "\n";
    return g;
  }
  if (!o.gen_spec.empty()) return edqc::graph_from_spec(o.gen_spec);
  throw CLI::RequiredError("--input or --gen");
}

edqc::RunConfig make_config(const Options& o) {
  edqc::RunConfig cfg;
  cfg.gamma = edqc::ExactGamma::parse(o.gamma_text);
  cfg.params.steps = o.steps;
  cfg.params.theta = o.theta;
  cfg.budget_seconds = o.timeout;
  cfg.seed = o.seed;
  cfg.workers = o.workers;
  cfg.validate();
  return cfg;
}

edqc::RunMetadata make_metadata(const std::string& command, const Options& o) {
  edqc::RunMetadata meta;
  meta.command = command;
  meta.input = !o.input_path.empty() ? o.input_path : o.gen_spec;
  meta.gamma = o.gamma_text;
  meta.steps = o.steps;
  meta.theta = o.theta;
  meta.timeout_seconds = o.timeout;
  meta.workers = o.workers;
  meta.seed = o.seed;
  meta.runs = o.runs;
  return meta;
}

void emit(const std::string& text, const Options& o) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw edqc::IoError("cannot write '" + o.output + "'");
  out << text;
}

template <typename T>
std::vector<T> parse_grid(const std::string& text) {
  std::vector<T> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if constexpr (std::is_same_v<T, unsigned>)
      values.push_back(static_cast<unsigned>(std::stoul(item)));
    else
      values.push_back(std::stod(item));
  }
  return values;
}

int cmd_find(const Options& o) {
  edqc::Graph g = load_input(o);
  edqc::RunConfig cfg = make_config(o);
  edqc::RunSummary summary = edqc::run_many(g, cfg, o.runs);
  emit(edqc::format_find_output(make_metadata("find", o), g, summary,
                                edqc::output_format_from_name(o.format)),
       o);
  return kExitOk;
}

int cmd_oracle(const Options& o) {
  edqc::Graph g = load_input(o);
  edqc::ExactGamma gamma = edqc::ExactGamma::parse(o.gamma_text);
  std::vector<edqc::VertexId> best = edqc::max_quasi_clique_bruteforce(g, gamma);
  emit(edqc::format_oracle_output(make_metadata("oracle", o), g, best,
                                  edqc::output_format_from_name(o.format)),
       o);
  return kExitOk;
}

int cmd_ablate(const Options& o) {
  edqc::Graph g = load_input(o);
  edqc::RunConfig cfg = make_config(o);
  std::vector<std::pair<edqc::Variant, edqc::RunSummary>> results;
  if (o.variant == "all") {
    for (edqc::Variant v : edqc::kAllVariants)
      results.emplace_back(v, edqc::run_variant_many(g, cfg, v, o.runs));
  } else {
    auto v = edqc::variant_from_name(o.variant);
    if (!v) throw std::invalid_argument("unknown variant: '" + o.variant + "'");
    results.emplace_back(*v, edqc::run_variant_many(g, cfg, *v, o.runs));
  }
  emit(edqc::format_ablate_output(make_metadata("ablate", o), results,
                                  edqc::output_format_from_name(o.format)),
       o);
  return kExitOk;
}

int cmd_correlate(const Options& o) {
  edqc::Graph g = load_input(o);
  edqc::RunConfig cfg = make_config(o);
  edqc::CorrelationReport report = edqc::energy_density_correlation(g, cfg, o.count);
  emit(edqc::format_correlate_output(make_metadata("correlate", o), g, report,
                                     edqc::output_format_from_name(o.format)),
       o);
  return kExitOk;
}

int cmd_sweep(const Options& o) {
  edqc::Graph g = load_input(o);
  edqc::RunConfig cfg = make_config(o);
  auto steps = parse_grid<unsigned>(o.steps_grid);
  auto thetas = parse_grid<double>(o.theta_grid);
  edqc::SweepTable table = edqc::parameter_sweep(g, cfg, steps, thetas, o.runs);
  emit(edqc::format_sweep_output(make_metadata("sweep", o), table,
                                 edqc::output_format_from_name(o.format)),
       o);
  return kExitOk;
}

int cmd_stats(const Options& o) {
  edqc::Graph g = load_input(o);
  Options echo = o;
  echo.gamma_text = "";
  emit(edqc::format_stats_output(make_metadata("stats", echo), g,
                                 edqc::output_format_from_name(o.format)),
       o);
  return kExitOk;
}

int cmd_gen(const Options& o) {
  if (o.gen_spec.empty()) throw CLI::RequiredError("--gen");
  edqc::Graph g = edqc::graph_from_spec(o.gen_spec);
  std::ostringstream text;
  if (o.graph_format == "mtx")
    edqc::write_matrix_market(g, text);
  else
    edqc::write_edge_list(g, text);
  emit(text.str(), o);
  std::cerr << "generated " << o.gen_spec << ": n=" << g.vertex_count()
            << " m=" << g.edge_count() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"energy-diffusion quasi-clique discovery"};
  app.require_subcommand(1);

  Options o;
  auto* find = app.add_subcommand("find", "run the full discovery pipeline");
  add_input_flags(find, o);
  add_run_flags(find, o);
  add_output_flags(find, o);

  auto* oracle = app.add_subcommand("oracle", "exact maximum quasi-clique (n <= 24)");
  add_input_flags(oracle, o);
  oracle->add_option("--gamma", o.gamma_text, "density threshold")->required();
  add_output_flags(oracle, o);

  auto* ablate = app.add_subcommand("ablate", "run ablation variants");
  add_input_flags(ablate, o);
  add_run_flags(ablate, o);
  ablate->add_option("--variant", o.variant,
                     "full, no-seed-ordering, no-activation-threshold, "
                     "no-spectral-breakpoint, or all");
  add_output_flags(ablate, o);

  auto* correlate = app.add_subcommand("correlate", "density vs retained-energy sampling");
  add_input_flags(correlate, o);
  add_run_flags(correlate, o, /*with_runs=*/false);
  correlate->add_option("--count", o.count, "number of sampled subsets");
  add_output_flags(correlate, o);

  auto* sweep = app.add_subcommand("sweep", "mean result size over a (T, theta) grid");
  add_input_flags(sweep, o);
  add_run_flags(sweep, o);
  sweep->add_option("--steps-grid", o.steps_grid, "comma-separated T values");
  sweep->add_option("--theta-grid", o.theta_grid, "comma-separated theta values");
  add_output_flags(sweep, o);

  auto* stats = app.add_subcommand("stats", "vertex/edge counts, max degree, density");
  add_input_flags(stats, o);
  add_output_flags(stats, o);

  auto* gen = app.add_subcommand("gen", "write a generated graph");
  gen->add_option("--gen", o.gen_spec, "generator spec")->required();
  gen->add_option("--graph-format", o.graph_format, "mtx (keeps isolated vertices) or edgelist")
      ->check(CLI::IsMember({"mtx", "edgelist"}));
  gen->add_option("--output", o.output, "write the graph to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(find)) return cmd_find(o);
    if (app.got_subcommand(oracle)) return cmd_oracle(o);
    if (app.got_subcommand(ablate)) return cmd_ablate(o);
    if (app.got_subcommand(correlate)) return cmd_correlate(o);
    if (app.got_subcommand(sweep)) return cmd_sweep(o);
    if (app.got_subcommand(stats)) return cmd_stats(o);
    if (app.got_subcommand(gen)) return cmd_gen(o);
  } catch (const edqc::SizeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const edqc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const edqc::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const CLI::RequiredError& e) {
    std::cerr << "error: " << e.get_name() << " is required\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
