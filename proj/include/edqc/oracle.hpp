#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "edqc/gamma.hpp"
#include "edqc/graph.hpp"

namespace edqc {

class SizeLimitError : public std::runtime_error {
 public:
  explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Exact feasibility check: eta(G[S]) >= gamma with |S| <= 1 vacuously true.
bool is_quasi_clique(const Graph& g, std::span<const VertexId> s, const ExactGamma& gamma);

inline constexpr std::uint32_t kBruteForceVertexLimit = 24;

// Exhaustive maximum quasi-clique for ground truth on small instances.
// Enumerates subsets by decreasing size and, within a size, in lexicographic
// order of the sorted vertex list, so the returned maximum set is the
// lexicographically smallest one. Feasibility is checked independently per
// subset: quasi-cliques are not hereditary, so no subset-based pruning is
// sound. Throws SizeLimitError when n > kBruteForceVertexLimit.
std::vector<VertexId> max_quasi_clique_bruteforce(const Graph& g, const ExactGamma& gamma);

}  // namespace edqc
