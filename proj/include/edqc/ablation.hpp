#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>

#include "edqc/driver.hpp"

namespace edqc {

// The full pipeline and the three single-component removals studied against it.
enum class Variant {
  Full,
  NoSeedOrdering,         // sources in a seed-derived random permutation
  NoActivationThreshold,  // theta forced to 0 in diffusion and extraction
  NoSpectralBreakpoint,   // greedy insertion replaces breakpoint extraction
};

inline constexpr std::array<Variant, 4> kAllVariants = {
    Variant::Full, Variant::NoSeedOrdering, Variant::NoActivationThreshold,
    Variant::NoSpectralBreakpoint};

std::string variant_name(Variant v);
std::optional<Variant> variant_from_name(const std::string& name);

// Uniform random permutation of the vertices, deterministic per seed.
std::vector<VertexId> shuffled_order(const Graph& g, std::uint64_t seed);

QuasiCliqueResult run_variant(const Graph& g, const RunConfig& cfg, Variant variant);

// Repeated variant runs with consecutive seeds, like run_many.
RunSummary run_variant_many(const Graph& g, const RunConfig& cfg, Variant variant,
                            std::size_t runs);

struct AblationSetting {
  const Graph* graph = nullptr;
  ExactGamma gamma;
  std::string name;  // for reporting
};

struct AblationReport {
  std::vector<std::string> setting_names;
  std::vector<std::array<double, 4>> mean_sizes;      // per setting, kAllVariants order
  std::array<std::size_t, 4> best_counts{};           // settings where the variant is (co-)best
  std::array<std::size_t, 4> unique_worst_counts{};   // settings where it is strictly worst
};

// Runs every variant over every setting (gamma taken from the setting) and
// tallies (co-)best and strictly-worst counts of the per-setting mean sizes.
AblationReport ablation_report(std::span<const AblationSetting> suite, const RunConfig& base,
                               std::size_t runs);

}  // namespace edqc
