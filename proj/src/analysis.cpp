#include "edqc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace edqc {

namespace {

constexpr std::uint64_t kSampleStreamTag = 0x73616d70ull;

double retained_energy(const EnergyMap& f, std::span<const VertexId> s) {
  double sum = 0.0;
  for (VertexId v : s) sum += f.at(v);
  return sum;
}

// Floyd's algorithm: uniform k-subset of [0, n).
std::vector<VertexId> sample_subset(std::uint32_t n, std::size_t k, RandomStream& rng) {
  std::unordered_set<VertexId> chosen;
  std::vector<VertexId> subset;
  subset.reserve(k);
  for (std::uint64_t j = n - k; j < n; ++j) {
    VertexId t = static_cast<VertexId>(rng.next_below(j + 1));
    if (chosen.insert(t).second) {
      subset.push_back(t);
    } else {
      chosen.insert(static_cast<VertexId>(j));
      subset.push_back(static_cast<VertexId>(j));
    }
  }
  return subset;
}

}  // namespace

double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("pearson: length mismatch");
  if (xs.size() < 2) throw std::domain_error("pearson: need at least two points");
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double dx = xs[i] - mx;
    double dy = ys[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0)
    throw std::domain_error("pearson: correlation undefined under zero variance");
  return sxy / std::sqrt(sxx * syy);
}

std::vector<std::array<double, 2>> sample_subset_stats(const Graph& g, const EnergyMap& f,
                                                       std::size_t k, std::size_t count,
                                                       std::uint64_t seed) {
  if (k < 2 || k > g.vertex_count())
    throw std::invalid_argument("subset size must lie in [2, n]");
  std::vector<std::array<double, 2>> stats;
  stats.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    RandomStream rng(derive_stream(seed, s));
    auto subset = sample_subset(g.vertex_count(), k, rng);
    stats.push_back({subset_density(g, subset).value(), retained_energy(f, subset)});
  }
  return stats;
}

CorrelationReport subset_energy_density_samples(const Graph& g, const EnergyMap& f, std::size_t k,
                                                std::size_t count, std::uint64_t seed,
                                                std::span<const VertexId> reference) {
  if (count < 2) throw std::invalid_argument("need at least two samples");
  CorrelationReport report;
  report.subset_size = k;
  report.samples = sample_subset_stats(g, f, k, count, seed);
  std::vector<double> densities, energies;
  densities.reserve(count);
  energies.reserve(count);
  for (const auto& [d, e] : report.samples) {
    densities.push_back(d);
    energies.push_back(e);
  }
  report.pearson_r = pearson(densities, energies);
  if (!reference.empty())
    report.reference = {subset_density(g, reference).value(), retained_energy(f, reference)};
  return report;
}

CorrelationReport energy_density_correlation(const Graph& g, const RunConfig& cfg,
                                             std::size_t count) {
  QuasiCliqueResult found = edqc(g, cfg);
  if (found.size < 2)
    throw std::domain_error("driver found no quasi-clique of size >= 2 to fix the subset size");
  VertexId source = *found.source;
  EnergyMap f = energy_diffusion(g, source, cfg.params, cfg.seed);
  CorrelationReport report = subset_energy_density_samples(
      g, f, found.size, count, derive_stream(cfg.seed, kSampleStreamTag), found.vertices);
  report.source = source;
  return report;
}

SweepTable parameter_sweep(const Graph& g, const RunConfig& base,
                           std::span<const unsigned> steps_grid, std::span<const double> theta_grid,
                           std::size_t runs) {
  if (steps_grid.empty() || theta_grid.empty())
    throw std::invalid_argument("sweep grids must be non-empty");
  SweepTable table;
  table.steps.assign(steps_grid.begin(), steps_grid.end());
  table.thetas.assign(theta_grid.begin(), theta_grid.end());
  for (unsigned t : steps_grid) {
    std::vector<double> row;
    row.reserve(theta_grid.size());
    for (double theta : theta_grid) {
      RunConfig cfg = base;
      cfg.params.steps = t;
      cfg.params.theta = theta;
      row.push_back(run_many(g, cfg, runs).mean_size);
    }
    table.mean_sizes.push_back(std::move(row));
  }
  return table;
}

Graph gen_er(std::uint32_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0,1]");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  if (p > 0.0 && n > 1) {
    RandomStream rng(seed);
    const double log_q = std::log1p(-p);  // -inf when p == 1
    // Geometric skipping over the lower triangle (v > w).
    std::uint64_t v = 1, w = std::uint64_t(-1);
    while (v < n) {
      double skip = p >= 1.0 ? 0.0 : std::floor(std::log(rng.next_positive_unit()) / log_q);
      skip = std::min(skip, 1e18);  // cap far beyond any pair index to keep the cast defined
      w += 1 + static_cast<std::uint64_t>(skip);
      while (w >= v && v < n) {
        w -= v;
        ++v;
      }
      if (v < n)
        edges.emplace_back(static_cast<std::uint32_t>(v), static_cast<std::uint32_t>(w));
    }
  }
  return Graph::from_edges_with_universe(n, edges);
}

Graph gen_planted_clique(std::uint32_t n, double p, std::uint32_t clique_size,
                         std::uint64_t seed) {
  if (clique_size > n) throw std::invalid_argument("clique size exceeds n");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0,1]");
  Graph noise = gen_er(n, p, seed);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (VertexId u = 0; u < noise.vertex_count(); ++u)
    for (VertexId v : noise.neighbors(u))
      if (u < v) edges.emplace_back(u, v);
  for (std::uint32_t u = 0; u < clique_size; ++u)
    for (std::uint32_t v = u + 1; v < clique_size; ++v) edges.emplace_back(u, v);
  return Graph::from_edges_with_universe(n, edges);
}

Graph graph_from_spec(const std::string& spec) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t colon = spec.find(':', start);
    parts.push_back(spec.substr(start, colon == std::string::npos ? colon : colon - start));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  auto as_u64 = [&](const std::string& s) -> std::uint64_t {
    std::size_t used = 0;
    std::uint64_t v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad number in generator spec: " + s);
    return v;
  };
  auto as_double = [&](const std::string& s) -> double {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad number in generator spec: " + s);
    return v;
  };

  const std::string& kind = parts[0];
  if (kind == "k4me") {
    // K4 minus one edge
    return Graph::from_edges_with_universe(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  }
  if (kind.size() > 1 && kind[0] == 'k' && parts.size() == 1) {
    std::uint64_t n = as_u64(kind.substr(1));
    if (n > 4096) throw std::invalid_argument("complete graph spec limited to k4096");
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t u = 0; u < n; ++u)
      for (std::uint32_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges_with_universe(static_cast<std::uint32_t>(n), edges);
  }
  if (kind == "path" && parts.size() == 2) {
    std::uint64_t n = as_u64(parts[1]);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges_with_universe(static_cast<std::uint32_t>(n), edges);
  }
  if (kind == "er" && parts.size() == 4)
    return gen_er(static_cast<std::uint32_t>(as_u64(parts[1])), as_double(parts[2]),
                  as_u64(parts[3]));
  if (kind == "planted" && parts.size() == 5)
    return gen_planted_clique(static_cast<std::uint32_t>(as_u64(parts[1])), as_double(parts[2]),
                              static_cast<std::uint32_t>(as_u64(parts[3])), as_u64(parts[4]));
  throw std::invalid_argument("unknown generator spec: '" + spec + "'");
}

}  // namespace edqc
