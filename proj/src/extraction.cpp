#include "edqc/extraction.hpp"

#include <algorithm>
#include <stdexcept>

namespace edqc {

namespace {

// Active vertices sorted by descending energy, ties by ascending id.
std::vector<std::pair<VertexId, double>> ranked_active(const EnergyMap& f, double theta) {
  std::vector<std::pair<VertexId, double>> ranked;
  for (const auto& [v, e] : f.entries())
    if (e >= theta) ranked.push_back({v, e});
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return ranked;
}

ExtractionResult finish(const SubsetDensityTracker& tracker, std::size_t breakpoint) {
  ExtractionResult res;
  res.vertices = tracker.members();
  std::sort(res.vertices.begin(), res.vertices.end());
  res.internal_edges = tracker.internal_edges();
  res.density = tracker.density();
  res.breakpoint = breakpoint;
  return res;
}

}  // namespace

std::size_t spectral_breakpoint(std::span<const double> energies_desc) {
  if (energies_desc.empty()) throw std::invalid_argument("spectral_breakpoint: empty sequence");
  std::size_t best = 1;
  double best_drop = energies_desc.size() > 1 ? energies_desc[0] - energies_desc[1] : 0.0;
  for (std::size_t i = 1; i + 1 < energies_desc.size(); ++i) {
    double drop = energies_desc[i] - energies_desc[i + 1];
    if (drop > best_drop) {
      best_drop = drop;
      best = i + 1;
    }
  }
  return best;
}

ExtractionResult extract_quasi_clique(const EnergyMap& f, const ExactGamma& gamma, double theta,
                                      SubsetDensityTracker& tracker) {
  auto ranked = ranked_active(f, theta);
  if (ranked.empty()) return {};

  std::vector<double> energies;
  energies.reserve(ranked.size());
  for (const auto& [v, e] : ranked) energies.push_back(e);
  std::size_t b = spectral_breakpoint(energies);

  tracker.clear();
  for (std::size_t i = 0; i < b; ++i) tracker.add(ranked[i].first);

  // Shrink from the low-energy end; members holds the ranked prefix in order.
  while (tracker.size() > 3 && !gamma.admits(tracker.internal_edges(), tracker.size()))
    tracker.remove(tracker.members().back());
  if (!gamma.admits(tracker.internal_edges(), tracker.size())) {
    ExtractionResult res;
    res.breakpoint = b;
    return res;
  }

  // One reinsertion pass over the rest of the ranking, which also re-probes
  // the vertices the shrink loop dropped.
  for (std::size_t i = tracker.size(); i < ranked.size(); ++i) {
    VertexId v = ranked[i].first;
    std::uint64_t joint = tracker.shared_neighbors(v);
    if (gamma.admits(tracker.internal_edges() + joint, tracker.size() + 1)) tracker.add(v);
  }
  return finish(tracker, b);
}

ExtractionResult extract_quasi_clique(const Graph& g, const EnergyMap& f, const ExactGamma& gamma,
                                      double theta) {
  SubsetDensityTracker tracker(g);
  return extract_quasi_clique(f, gamma, theta, tracker);
}

ExtractionResult extract_greedy_prefix(const EnergyMap& f, const ExactGamma& gamma, double theta,
                                       SubsetDensityTracker& tracker) {
  auto ranked = ranked_active(f, theta);
  if (ranked.empty()) return {};

  tracker.clear();
  for (const auto& [v, e] : ranked) {
    std::uint64_t joint = tracker.shared_neighbors(v);
    if (!gamma.admits(tracker.internal_edges() + joint, tracker.size() + 1)) break;
    tracker.add(v);
  }
  return finish(tracker, 0);
}

ExtractionResult extract_greedy_prefix(const Graph& g, const EnergyMap& f, const ExactGamma& gamma,
                                       double theta) {
  SubsetDensityTracker tracker(g);
  return extract_greedy_prefix(f, gamma, theta, tracker);
}

}  // namespace edqc
