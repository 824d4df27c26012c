#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "edqc/driver.hpp"

namespace edqc {

// Standard Pearson correlation; throws std::domain_error when either
// coordinate has zero variance (or fewer than two points).
double pearson(std::span<const double> xs, std::span<const double> ys);

struct CorrelationReport {
  std::vector<std::array<double, 2>> samples;  // (density, retained energy) per subset
  double pearson_r = 0.0;
  std::size_t subset_size = 0;
  std::array<double, 2> reference{};  // the driver-found quasi-clique's point
  VertexId source = 0;
};

// (density, retained energy) for `count` uniformly random k-subsets. Each
// sample draws its own derived stream, so the set of samples is deterministic
// per seed and safe to parallelize.
std::vector<std::array<double, 2>> sample_subset_stats(const Graph& g, const EnergyMap& f,
                                                       std::size_t k, std::size_t count,
                                                       std::uint64_t seed);

// Sampling plus the correlation statistic against a fixed energy map.
CorrelationReport subset_energy_density_samples(const Graph& g, const EnergyMap& f, std::size_t k,
                                                std::size_t count, std::uint64_t seed,
                                                std::span<const VertexId> reference = {});

// Full experiment: one driver run fixes the subset size k (the size of the
// found quasi-clique) and the diffusion source (the vertex that seeded it);
// the same derived stream reproduces that run's energy map exactly.
CorrelationReport energy_density_correlation(const Graph& g, const RunConfig& cfg,
                                             std::size_t count);

struct SweepTable {
  std::vector<unsigned> steps;
  std::vector<double> thetas;
  std::vector<std::vector<double>> mean_sizes;  // [steps index][theta index]
};

// Mean result size per (T, theta) grid cell, `runs` seeds per cell.
SweepTable parameter_sweep(const Graph& g, const RunConfig& base,
                           std::span<const unsigned> steps_grid, std::span<const double> theta_grid,
                           std::size_t runs);

// Erdos-Renyi G(n, p) via geometric edge skipping; O(n + m).
Graph gen_er(std::uint32_t n, double p, std::uint64_t seed);

// ER noise plus a clique on the first clique_size vertices.
Graph gen_planted_clique(std::uint32_t n, double p, std::uint32_t clique_size, std::uint64_t seed);

// Builders for the CLI's --gen specs: "k<N>", "k4me", "path:<n>",
// "er:<n>:<p>:<seed>", "planted:<n>:<p>:<k>:<seed>".
Graph graph_from_spec(const std::string& spec);

}  // namespace edqc
