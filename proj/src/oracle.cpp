#include "edqc/oracle.hpp"

#include <bit>
#include <cstdint>
#include <string>

namespace edqc {

bool is_quasi_clique(const Graph& g, std::span<const VertexId> s, const ExactGamma& gamma) {
  return gamma.admits(count_internal_edges(g, s), s.size());
}

std::vector<VertexId> max_quasi_clique_bruteforce(const Graph& g, const ExactGamma& gamma) {
  const std::uint32_t n = g.vertex_count();
  if (n > kBruteForceVertexLimit)
    throw SizeLimitError("brute force supports at most " +
                         std::to_string(kBruteForceVertexLimit) + " vertices, got " +
                         std::to_string(n));
  if (n == 0) return {};

  std::vector<std::uint32_t> adj(n, 0);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v : g.neighbors(u)) adj[u] |= std::uint32_t(1) << v;

  std::vector<VertexId> pick;
  for (std::uint32_t size = n; size >= 1; --size) {
    pick.resize(size);
    for (std::uint32_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::uint32_t mask = 0;
      for (VertexId v : pick) mask |= std::uint32_t(1) << v;
      std::uint64_t twice_edges = 0;
      for (VertexId v : pick) twice_edges += std::popcount(adj[v] & mask);
      if (gamma.admits(twice_edges / 2, size)) return pick;

      // Next combination in lexicographic order.
      std::int32_t i = static_cast<std::int32_t>(size) - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (std::uint32_t j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return {};  // unreachable for n >= 1: singletons are vacuously dense
}

}  // namespace edqc
