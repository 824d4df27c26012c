#include "edqc/driver.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace edqc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Candidate {
  std::size_t order_index = SIZE_MAX;
  ExtractionResult extraction;
  VertexId source = 0;

  // Strictly larger wins; equal sizes keep the earlier source in the order.
  bool beats(const Candidate& other) const {
    if (extraction.vertices.size() != other.extraction.vertices.size())
      return extraction.vertices.size() > other.extraction.vertices.size();
    return order_index < other.order_index;
  }
  bool found() const { return order_index != SIZE_MAX && !extraction.empty(); }
};

Candidate process_source(const RunConfig& cfg, ExtractionMode mode, DiffusionEngine& engine,
                         SubsetDensityTracker& tracker, std::size_t order_index, VertexId source) {
  RandomStream rng(derive_stream(cfg.seed, source));
  EnergyMap f = engine.run(source, cfg.params, rng);
  ExtractionResult r = mode == ExtractionMode::Spectral
                           ? extract_quasi_clique(f, cfg.gamma, cfg.params.theta, tracker)
                           : extract_greedy_prefix(f, cfg.gamma, cfg.params.theta, tracker);
  return {order_index, std::move(r), source};
}

}  // namespace

void RunConfig::validate() const {
  params.validate();
  if (!(budget_seconds > 0.0)) throw std::invalid_argument("budget must be positive");
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
}

std::vector<VertexId> degree_order(const Graph& g) {
  const std::uint32_t n = g.vertex_count();
  std::vector<std::uint32_t> bucket_start(g.max_degree() + 2, 0);
  for (VertexId v = 0; v < n; ++v) ++bucket_start[g.degree(v) + 1];
  // Offsets for descending degree: bucket d starts after all degrees > d.
  std::vector<std::uint32_t> offset(g.max_degree() + 1, 0);
  std::uint32_t acc = 0;
  for (std::uint32_t d = g.max_degree() + 1; d-- > 0;) {
    offset[d] = acc;
    acc += bucket_start[d + 1];
  }
  std::vector<VertexId> order(n);
  for (VertexId v = 0; v < n; ++v) order[offset[g.degree(v)]++] = v;
  return order;
}

QuasiCliqueResult run_over_sources(const Graph& g, const RunConfig& cfg,
                                   std::span<const VertexId> order, ExtractionMode mode) {
  cfg.validate();
  const auto start = Clock::now();

  Candidate best;
  std::size_t processed = 0;

  if (cfg.workers <= 1) {
    DiffusionEngine engine(g);
    SubsetDensityTracker tracker(g);
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (seconds_since(start) >= cfg.budget_seconds) break;
      Candidate c = process_source(cfg, mode, engine, tracker, i, order[i]);
      ++processed;
      if (c.found() && c.beats(best)) best = std::move(c);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> done{0};
    std::vector<Candidate> local_best(cfg.workers);
    std::vector<std::thread> pool;
    pool.reserve(cfg.workers);
    for (unsigned w = 0; w < cfg.workers; ++w) {
      pool.emplace_back([&, w] {
        DiffusionEngine engine(g);
        SubsetDensityTracker tracker(g);
        while (true) {
          std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
          if (i >= order.size()) break;
          if (seconds_since(start) >= cfg.budget_seconds) break;
          Candidate c = process_source(cfg, mode, engine, tracker, i, order[i]);
          done.fetch_add(1, std::memory_order_relaxed);
          if (c.found() && c.beats(local_best[w])) local_best[w] = std::move(c);
        }
      });
    }
    for (auto& t : pool) t.join();
    processed = done.load();
    // Deterministic reduction: replay the sequential tie-break on order index.
    for (auto& c : local_best)
      if (c.found() && c.beats(best)) best = std::move(c);
  }

  QuasiCliqueResult result;
  if (best.found()) {
    result.vertices = std::move(best.extraction.vertices);
    result.internal_edges = best.extraction.internal_edges;
    result.density = best.extraction.density;
    result.size = result.vertices.size();
    result.source = best.source;
  }
  result.elapsed_seconds = seconds_since(start);
  result.sources_processed = processed;
  return result;
}

QuasiCliqueResult edqc(const Graph& g, const RunConfig& cfg) {
  return run_over_sources(g, cfg, degree_order(g), ExtractionMode::Spectral);
}

RunSummary run_many(const Graph& g, const RunConfig& cfg, std::size_t runs) {
  if (runs < 1) throw std::invalid_argument("runs must be >= 1");
  RunSummary summary;
  summary.runs.reserve(runs);
  for (std::size_t i = 0; i < runs; ++i) {
    RunConfig run_cfg = cfg;
    run_cfg.seed = cfg.seed + i;
    summary.runs.push_back(edqc(g, run_cfg));
  }
  double mean = 0.0;
  for (const auto& r : summary.runs) mean += static_cast<double>(r.size);
  mean /= static_cast<double>(runs);
  double var = 0.0;
  for (const auto& r : summary.runs) {
    double d = static_cast<double>(r.size) - mean;
    var += d * d;
  }
  summary.mean_size = mean;
  summary.stddev_size = std::sqrt(var / static_cast<double>(runs));
  return summary;
}

}  // namespace edqc
