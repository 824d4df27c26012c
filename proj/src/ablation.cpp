#include "edqc/ablation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace edqc {

namespace {

// Stream tag for the source permutation, kept apart from per-source streams.
constexpr std::uint64_t kOrderStreamTag = 0x6f72646572ull;

}  // namespace

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::Full: return "full";
    case Variant::NoSeedOrdering: return "no-seed-ordering";
    case Variant::NoActivationThreshold: return "no-activation-threshold";
    case Variant::NoSpectralBreakpoint: return "no-spectral-breakpoint";
  }
  return "unknown";
}

std::optional<Variant> variant_from_name(const std::string& name) {
  for (Variant v : kAllVariants)
    if (variant_name(v) == name) return v;
  return std::nullopt;
}

std::vector<VertexId> shuffled_order(const Graph& g, std::uint64_t seed) {
  std::vector<VertexId> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  RandomStream rng(derive_stream(seed, kOrderStreamTag));
  for (std::size_t i = order.size(); i > 1; --i)
    std::swap(order[i - 1], order[rng.next_below(i)]);
  return order;
}

QuasiCliqueResult run_variant(const Graph& g, const RunConfig& cfg, Variant variant) {
  switch (variant) {
    case Variant::Full:
      return edqc(g, cfg);
    case Variant::NoSeedOrdering:
      return run_over_sources(g, cfg, shuffled_order(g, cfg.seed), ExtractionMode::Spectral);
    case Variant::NoActivationThreshold: {
      RunConfig open = cfg;
      open.params.theta = 0.0;  // every energized vertex stays active
      return edqc(g, open);
    }
    case Variant::NoSpectralBreakpoint:
      return run_over_sources(g, cfg, degree_order(g), ExtractionMode::GreedyPrefix);
  }
  throw std::invalid_argument("unknown variant");
}

RunSummary run_variant_many(const Graph& g, const RunConfig& cfg, Variant variant,
                            std::size_t runs) {
  if (runs < 1) throw std::invalid_argument("runs must be >= 1");
  RunSummary summary;
  summary.runs.reserve(runs);
  for (std::size_t i = 0; i < runs; ++i) {
    RunConfig run_cfg = cfg;
    run_cfg.seed = cfg.seed + i;
    summary.runs.push_back(run_variant(g, run_cfg, variant));
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

AblationReport ablation_report(std::span<const AblationSetting> suite, const RunConfig& base,
                               std::size_t runs) {
  AblationReport report;
  for (const auto& setting : suite) {
    RunConfig cfg = base;
    cfg.gamma = setting.gamma;
    std::array<double, 4> means{};
    for (std::size_t k = 0; k < kAllVariants.size(); ++k)
      means[k] = run_variant_many(*setting.graph, cfg, kAllVariants[k], runs).mean_size;

    double best = *std::max_element(means.begin(), means.end());
    double worst = *std::min_element(means.begin(), means.end());
    std::size_t worst_holders = 0;
    for (double m : means)
      if (m == worst) ++worst_holders;
    for (std::size_t k = 0; k < means.size(); ++k) {
      if (means[k] == best) ++report.best_counts[k];
      if (means[k] == worst && worst_holders == 1 && best != worst)
        ++report.unique_worst_counts[k];
    }
    report.setting_names.push_back(setting.name);
    report.mean_sizes.push_back(means);
  }
  return report;
}

}  // namespace edqc
