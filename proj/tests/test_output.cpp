#include <sstream>

#include "doctest.h"
#include "edqc/analysis.hpp"
#include "edqc/output.hpp"
#include "json.hpp"
#include "test_helpers.hpp"

using namespace edqc;
using nlohmann::json;

namespace {

RunMetadata meta_for(const char* command, const char* gamma) {
  RunMetadata meta;
  meta.command = command;
  meta.input = "gen:test";
  meta.gamma = gamma;
  return meta;
}

}  // namespace

TEST_CASE("find output serializes losslessly with original labels") {
  // Labels 10/20/30 map to dense ids; the record must surface the originals.
  Graph g = Graph::from_edges({{10, 20}, {20, 30}, {10, 30}});
  RunConfig cfg;
  cfg.gamma = ExactGamma::parse("1");
  RunSummary summary = run_many(g, cfg, 2);
  RunMetadata meta = meta_for("find", "1");
  meta.runs = 2;

  std::string text = format_find_output(meta, g, summary, OutputFormat::Json);
  json j = json::parse(text);
  CHECK(j["command"] == "find");
  CHECK(j["gamma"] == "1");
  CHECK(j["runs"] == 2);
  REQUIRE(j["results"].size() == 2);
  CHECK(j["results"][0]["seed"] == 1);
  CHECK(j["results"][1]["seed"] == 2);
  CHECK(j["results"][0]["size"] == 3);
  CHECK(j["results"][0]["vertices"] == json::array({10, 20, 30}));
  CHECK(j["summary"]["mean_size"] == 3.0);

  std::string csv = format_find_output(meta, g, summary, OutputFormat::Csv);
  CHECK(csv.rfind("seed,size,density,internal_edges,source,elapsed_seconds,"
                  "sources_processed,vertices\n",
                  0) == 0);
  CHECK(csv.find("\"10 20 30\"") != std::string::npos);
}

TEST_CASE("stats output") {
  Graph g = gen_er(30, 0.1, 4);
  std::string text = format_stats_output(meta_for("stats", ""), g, OutputFormat::Json);
  json j = json::parse(text);
  CHECK(j["n"] == 30);
  CHECK(j["m"] == g.edge_count());
  CHECK(j["max_degree"] == g.max_degree());
  CHECK(j["density"] == doctest::Approx(make_density(g.edge_count(), 30).value()));
}

TEST_CASE("sweep CSV has the grid shape") {
  Graph g = edqc::testing::complete(5);
  RunConfig cfg;
  cfg.gamma = ExactGamma::parse("1");
  std::vector<unsigned> ts{1, 2, 3};
  std::vector<double> thetas{0.0001, 0.0005, 0.001, 0.005, 0.01};
  SweepTable table = parameter_sweep(g, cfg, ts, thetas, 1);
  std::string csv = format_sweep_output(meta_for("sweep", "1"), table, OutputFormat::Csv);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "T,0.0001,0.0005,0.001,0.005,0.01");
  int rows = 0;
  while (std::getline(lines, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 3);
}

TEST_CASE("correlate CSV is density,energy per row") {
  Graph g = gen_planted_clique(20, 0.05, 5, 11);
  RunConfig cfg;
  cfg.gamma = ExactGamma::parse("1");
  CorrelationReport rep = energy_density_correlation(g, cfg, 50);
  std::string csv =
      format_correlate_output(meta_for("correlate", "1"), g, rep, OutputFormat::Csv);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "density,energy");
  int rows = 0;
  while (std::getline(lines, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 50);
}
