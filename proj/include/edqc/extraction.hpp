#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "edqc/diffusion.hpp"
#include "edqc/gamma.hpp"
#include "edqc/graph.hpp"

namespace edqc {

struct ExtractionResult {
  std::vector<VertexId> vertices;  // ascending ids; empty when nothing feasible survives
  std::uint64_t internal_edges = 0;
  Rational density{1, 1};
  std::size_t breakpoint = 0;  // 1-based prefix index b; 0 when the active set was empty

  bool empty() const { return vertices.empty(); }
};

// Position of the largest drop in a non-increasing sequence, 1-based; ties go
// to the smallest index, a single element yields 1. Throws on empty input.
std::size_t spectral_breakpoint(std::span<const double> energies_desc);

// Energy-guided extraction: activate {f(v) >= theta} (non-strict), sort by
// descending energy (ties by ascending id), cut at the spectral breakpoint,
// shrink from the low-energy end while |S| > 3 and eta(G[S]) < gamma, give up
// if still infeasible, then greedily reinsert the remaining active vertices
// in energy order whenever the density stays >= gamma (single pass).
ExtractionResult extract_quasi_clique(const Graph& g, const EnergyMap& f, const ExactGamma& gamma,
                                      double theta);
// Same, reusing a caller-owned tracker (already bound to the graph).
ExtractionResult extract_quasi_clique(const EnergyMap& f, const ExactGamma& gamma, double theta,
                                      SubsetDensityTracker& tracker);

// Breakpoint-free replacement used by the ablation study: insert active
// vertices in descending energy order until the density constraint breaks,
// remove the last insertion, and stop.
ExtractionResult extract_greedy_prefix(const Graph& g, const EnergyMap& f, const ExactGamma& gamma,
                                       double theta);
ExtractionResult extract_greedy_prefix(const EnergyMap& f, const ExactGamma& gamma, double theta,
                                       SubsetDensityTracker& tracker);

}  // namespace edqc
