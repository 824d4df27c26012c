#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "edqc/graph.hpp"
#include "edqc/rng.hpp"

namespace edqc {

struct DiffusionParams {
  unsigned steps = 3;    // rounds T
  double theta = 0.001;  // activation threshold
  // The retention factor is fixed at 1/2 and not configurable.

  void validate() const;
};

// Sparse vertex -> energy mapping. Entries are sorted by vertex id, all
// stored energies are > 0, and the total mass is 1 (within 1e-9).
class EnergyMap {
 public:
  EnergyMap() = default;
  explicit EnergyMap(std::vector<std::pair<VertexId, double>> entries)
      : entries_(std::move(entries)) {}

  double at(VertexId v) const;  // 0 when v carries no energy
  double total() const;
  std::size_t support_size() const { return entries_.size(); }
  const std::vector<std::pair<VertexId, double>>& entries() const { return entries_; }

  bool operator==(const EnergyMap&) const = default;

 private:
  std::vector<std::pair<VertexId, double>> entries_;
};

// Vertices with f(v) > theta (strict), ascending by id.
std::vector<VertexId> active_set(const EnergyMap& f, double theta);

// Draws `count` strictly positive weights and normalizes them to sum 1
// (within 1e-12). One draw per weight, in order.
void draw_normalized_weights(RandomStream& rng, std::size_t count, std::vector<double>& out);

// Reusable diffusion state for one worker. Buffers are dense but cleared via
// the touched list, so back-to-back runs from many sources stay O(work), not
// O(n) per source.
class DiffusionEngine {
 public:
  explicit DiffusionEngine(const Graph& g);

  // Full diffusion: unit mass on `source`, then `params.steps` rounds. After
  // each round the active set becomes {v : f(v) > theta}; once it empties the
  // remaining rounds are no-ops.
  EnergyMap run(VertexId source, const DiffusionParams& params, RandomStream& rng);

  // Stepwise interface used by tests and the round-level operation.
  void load(const EnergyMap& f);
  void load_point_mass(VertexId source);
  // One round: every u in `active` (the round-start snapshot, ascending ids)
  // draws fresh positive weights over N(u), sends half of its current energy
  // proportionally, and keeps the other half. Degree-0 vertices keep all of
  // their energy. Reads are live: energy received earlier in the round is
  // redistributed by vertices processed later.
  void round_once(std::span<const VertexId> active, RandomStream& rng);
  std::vector<VertexId> current_active(double theta) const;
  double current_total() const;
  EnergyMap export_and_clear();

 private:
  const Graph* g_;
  std::vector<double> energy_;
  std::vector<VertexId> touched_;
  std::vector<double> weights_;
};

// One diffusion round over an explicit active snapshot; mass is conserved.
EnergyMap diffusion_round(const Graph& g, const EnergyMap& f, std::span<const VertexId> active,
                          RandomStream& rng);

// Single-source stochastic diffusion. Deterministic given (graph, source,
// params, rng state); the seeded overload derives the per-source stream as
// derive_stream(base_seed, source), making results independent of the order
// in which sources are processed.
EnergyMap energy_diffusion(const Graph& g, VertexId source, const DiffusionParams& params,
                           RandomStream& rng);
EnergyMap energy_diffusion(const Graph& g, VertexId source, const DiffusionParams& params,
                           std::uint64_t base_seed);

}  // namespace edqc
