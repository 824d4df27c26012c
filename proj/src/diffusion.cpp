#include "edqc/diffusion.hpp"

#include <algorithm>
#include <stdexcept>

namespace edqc {

void DiffusionParams::validate() const {
  if (steps < 1) throw std::invalid_argument("diffusion steps must be >= 1");
  if (!(theta >= 0.0 && theta < 1.0)) throw std::invalid_argument("theta must lie in [0,1)");
}

double EnergyMap::at(VertexId v) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                             [](const auto& e, VertexId x) { return e.first < x; });
  return (it != entries_.end() && it->first == v) ? it->second : 0.0;
}

double EnergyMap::total() const {
  double sum = 0.0;
  for (const auto& [v, e] : entries_) sum += e;
  return sum;
}

std::vector<VertexId> active_set(const EnergyMap& f, double theta) {
  std::vector<VertexId> active;
  for (const auto& [v, e] : f.entries())
    if (e > theta) active.push_back(v);
  return active;  // entries are id-sorted already
}

DiffusionEngine::DiffusionEngine(const Graph& g) : g_(&g), energy_(g.vertex_count(), 0.0) {}

void DiffusionEngine::load(const EnergyMap& f) {
  for (const auto& [v, e] : f.entries()) {
    if (v >= energy_.size()) throw std::out_of_range("energy map vertex outside the graph");
    if (e <= 0.0) continue;
    if (energy_[v] == 0.0) touched_.push_back(v);
    energy_[v] += e;
  }
}

void DiffusionEngine::load_point_mass(VertexId source) {
  if (source >= energy_.size()) throw std::out_of_range("diffusion source outside the graph");
  energy_[source] = 1.0;
  touched_.push_back(source);
}

void draw_normalized_weights(RandomStream& rng, std::size_t count, std::vector<double>& out) {
  out.resize(count);
  double sum = 0.0;
  for (double& w : out) {
    w = rng.next_positive_unit();
    sum += w;
  }
  for (double& w : out) w /= sum;
}

void DiffusionEngine::round_once(std::span<const VertexId> active, RandomStream& rng) {
  for (VertexId u : active) {
    auto nbrs = g_->neighbors(u);
    if (nbrs.empty()) continue;  // no neighbors to normalize over; keep the energy
    draw_normalized_weights(rng, nbrs.size(), weights_);
    const double share = energy_[u] * 0.5;
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      VertexId w = nbrs[i];
      if (energy_[w] == 0.0) touched_.push_back(w);
      energy_[w] += share * weights_[i];
    }
    energy_[u] = share;
  }
}

std::vector<VertexId> DiffusionEngine::current_active(double theta) const {
  std::vector<VertexId> active;
  for (VertexId v : touched_)
    if (energy_[v] > theta) active.push_back(v);
  std::sort(active.begin(), active.end());
  return active;
}

double DiffusionEngine::current_total() const {
  double sum = 0.0;
  for (VertexId v : touched_) sum += energy_[v];
  return sum;
}

EnergyMap DiffusionEngine::export_and_clear() {
  std::sort(touched_.begin(), touched_.end());
  std::vector<std::pair<VertexId, double>> entries;
  entries.reserve(touched_.size());
  for (VertexId v : touched_) {
    entries.emplace_back(v, energy_[v]);
    energy_[v] = 0.0;
  }
  touched_.clear();
  return EnergyMap(std::move(entries));
}

EnergyMap DiffusionEngine::run(VertexId source, const DiffusionParams& params, RandomStream& rng) {
  params.validate();
  load_point_mass(source);
  std::vector<VertexId> active{source};
  for (unsigned t = 0; t < params.steps && !active.empty(); ++t) {
    round_once(active, rng);
    active = current_active(params.theta);
  }
  return export_and_clear();
}

EnergyMap diffusion_round(const Graph& g, const EnergyMap& f, std::span<const VertexId> active,
                          RandomStream& rng) {
  DiffusionEngine engine(g);
  engine.load(f);
  engine.round_once(active, rng);
  return engine.export_and_clear();
}

EnergyMap energy_diffusion(const Graph& g, VertexId source, const DiffusionParams& params,
                           RandomStream& rng) {
  DiffusionEngine engine(g);
  return engine.run(source, params, rng);
}

EnergyMap energy_diffusion(const Graph& g, VertexId source, const DiffusionParams& params,
                           std::uint64_t base_seed) {
  RandomStream rng(derive_stream(base_seed, source));
  return energy_diffusion(g, source, params, rng);
}

}  // namespace edqc
