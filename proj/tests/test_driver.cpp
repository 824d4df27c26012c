#include <cmath>

#include "doctest.h"
#include "edqc/analysis.hpp"
#include "edqc/driver.hpp"
#include "edqc/oracle.hpp"
#include "test_helpers.hpp"

using namespace edqc;
using edqc::testing::complete;

namespace {

RunConfig config(const char* gamma, std::uint64_t seed = 1) {
  RunConfig cfg;
  cfg.gamma = ExactGamma::parse(gamma);
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("config validation") {
  RunConfig cfg = config("1");
  cfg.budget_seconds = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = config("1");
  cfg.workers = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("complete graph is recovered whole") {
  Graph g = complete(5);
  QuasiCliqueResult r = edqc::edqc(g, config("1"));
  CHECK(r.size == 5);
  CHECK(r.vertices == std::vector<VertexId>{0, 1, 2, 3, 4});
  CHECK(r.density == Rational{1, 1});
  CHECK(r.sources_processed == 5);
  CHECK(r.source.has_value());
}

TEST_CASE("empty graph gives the empty result") {
  QuasiCliqueResult r = edqc::edqc(Graph{}, config("1"));
  CHECK(r.empty());
  CHECK(r.size == 0);
  CHECK(!r.source.has_value());
  CHECK(r.sources_processed == 0);
}

TEST_CASE("degree order is non-increasing with ties by id") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    Graph g = gen_er(50, 0.1, 200 + seed);
    auto order = degree_order(g);
    REQUIRE(order.size() == g.vertex_count());
    for (std::size_t i = 1; i < order.size(); ++i) {
      std::uint32_t prev = g.degree(order[i - 1]);
      std::uint32_t cur = g.degree(order[i]);
      CHECK(prev >= cur);
      if (prev == cur) CHECK(order[i - 1] < order[i]);
    }
  }
}

TEST_CASE("ties keep the earliest source in degree order") {
  // Two disjoint K4s: every vertex has degree 3, both cliques have size 4,
  // so the first-found rule must keep the lower-id clique.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t base : {0u, 4u})
    for (std::uint32_t u = base; u < base + 4; ++u)
      for (std::uint32_t v = u + 1; v < base + 4; ++v) edges.emplace_back(u, v);
  Graph g = Graph::from_edges_with_universe(8, edges);
  QuasiCliqueResult r = edqc::edqc(g, config("1"));
  CHECK(r.size == 4);
  CHECK(r.vertices == std::vector<VertexId>{0, 1, 2, 3});
  CHECK(*r.source == 0);
}

TEST_CASE("a near-zero budget stops between sources") {
  Graph g = gen_er(100, 0.05, 3);
  RunConfig cfg = config("1");
  cfg.budget_seconds = 1e-9;
  QuasiCliqueResult r = edqc::edqc(g, cfg);
  CHECK(r.sources_processed <= 1);
}

TEST_CASE("results are independent of the worker count") {
  Graph g = gen_planted_clique(60, 0.05, 8, 77);
  RunConfig cfg = config("1", 9);
  QuasiCliqueResult base = edqc::edqc(g, cfg);
  for (unsigned workers : {2u, 8u}) {
    cfg.workers = workers;
    QuasiCliqueResult r = edqc::edqc(g, cfg);
    CHECK(r.vertices == base.vertices);
    CHECK(r.source == base.source);
    CHECK(r.sources_processed == base.sources_processed);
  }
}

TEST_CASE("driver output always passes the exact feasibility check") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Graph g = gen_er(40, 0.15, 800 + seed);
    for (const char* gamma : {"0.7", "0.9", "1"}) {
      QuasiCliqueResult r = edqc::edqc(g, config(gamma, seed));
      if (!r.empty()) {
        CHECK(is_quasi_clique(g, r.vertices, ExactGamma::parse(gamma)));
        CHECK(r.size == r.vertices.size());
      }
    }
  }
}

TEST_CASE("planted clique at oracle scale: the driver matches the optimum") {
  // Small enough for exhaustive ground truth, large enough that the clique is
  // found by diffusion rather than enumeration luck.
  Graph g = gen_planted_clique(24, 0.05, 7, 42);
  auto optimal = max_quasi_clique_bruteforce(g, ExactGamma::parse("1"));
  REQUIRE(optimal.size() == 7);
  QuasiCliqueResult r = edqc::edqc(g, config("1", 1));
  CHECK(r.size <= optimal.size());
  CHECK(r.size == 7);
  CHECK(r.vertices == std::vector<VertexId>{0, 1, 2, 3, 4, 5, 6});
}

TEST_CASE("run_many summarizes sizes") {
  SUBCASE("complete graph is stable across seeds") {
    RunSummary s = run_many(complete(5), config("1"), 10);
    CHECK(s.mean_size == 5.0);
    CHECK(s.stddev_size == 0.0);
    CHECK(s.runs.size() == 10);
  }
  SUBCASE("one run equals the single result") {
    Graph g = gen_er(30, 0.2, 5);
    RunSummary s = run_many(g, config("0.8", 4), 1);
    QuasiCliqueResult direct = edqc::edqc(g, config("0.8", 4));
    REQUIRE(s.runs.size() == 1);
    CHECK(s.runs[0].vertices == direct.vertices);
    CHECK(s.mean_size == static_cast<double>(direct.size));
    CHECK(s.stddev_size == 0.0);
  }
  SUBCASE("stddev matches the hand formula") {
    Graph g = gen_planted_clique(50, 0.08, 6, 13);
    RunSummary s = run_many(g, config("0.9", 1), 8);
    double mean = 0.0;
    for (const auto& r : s.runs) mean += static_cast<double>(r.size);
    mean /= 8.0;
    double var = 0.0;
    for (const auto& r : s.runs) var += (r.size - mean) * (r.size - mean);
    CHECK(s.mean_size == doctest::Approx(mean).epsilon(1e-12));
    CHECK(s.stddev_size == doctest::Approx(std::sqrt(var / 8.0)).epsilon(1e-12));
    // consecutive seeds: rerunning run 3 alone reproduces it
    QuasiCliqueResult third = edqc::edqc(g, config("0.9", 3));
    CHECK(third.vertices == s.runs[2].vertices);
  }
}
