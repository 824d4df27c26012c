#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "edqc/diffusion.hpp"
#include "edqc/extraction.hpp"
#include "edqc/gamma.hpp"
#include "edqc/graph.hpp"

namespace edqc {

struct RunConfig {
  ExactGamma gamma;
  DiffusionParams params;
  double budget_seconds = 60.0;  // wall clock, checked between sources
  std::uint64_t seed = 1;
  unsigned workers = 1;

  void validate() const;
};

struct QuasiCliqueResult {
  std::vector<VertexId> vertices;  // ascending ids
  std::uint64_t internal_edges = 0;
  Rational density{1, 1};
  std::size_t size = 0;
  std::optional<VertexId> source;  // diffusion source that produced the set
  double elapsed_seconds = 0.0;
  std::size_t sources_processed = 0;

  bool empty() const { return vertices.empty(); }
};

struct RunSummary {
  double mean_size = 0.0;
  double stddev_size = 0.0;  // population standard deviation over run sizes
  std::vector<QuasiCliqueResult> runs;
};

// Non-increasing degree, ties by ascending id (counting sort).
std::vector<VertexId> degree_order(const Graph& g);

enum class ExtractionMode { Spectral, GreedyPrefix };

// The main loop: diffuse from each source in `order`, extract, and keep the
// first strictly larger result. Each source draws its own derived stream, so
// the outcome is independent of how sources are scheduled across workers as
// long as the budget does not cut the pass short.
QuasiCliqueResult run_over_sources(const Graph& g, const RunConfig& cfg,
                                   std::span<const VertexId> order, ExtractionMode mode);

QuasiCliqueResult edqc(const Graph& g, const RunConfig& cfg);

// Repeated runs with consecutive seeds (run i uses cfg.seed + i).
RunSummary run_many(const Graph& g, const RunConfig& cfg, std::size_t runs);

}  // namespace edqc
