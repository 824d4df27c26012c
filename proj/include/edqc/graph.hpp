#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "edqc/gamma.hpp"

namespace edqc {

using VertexId = std::uint32_t;

// Immutable undirected simple graph in compressed adjacency form.
// Neighbor lists are strictly ascending; construction drops self-loops and
// collapses duplicate edges. Immutable after construction, so any number of
// workers may read it concurrently.
class Graph {
 public:
  Graph() = default;

  // Vertices are the endpoints of surviving (non-loop) edges, relabeled to
  // dense ids in ascending label order. Labels that appear only in self-loops
  // are dropped along with the loops.
  static Graph from_edges(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges);

  // Fixed vertex universe [0, n): keeps isolated vertices as degree-0.
  // Endpoints must be < n; labels are the identity.
  static Graph from_edges_with_universe(std::uint32_t n,
                                        const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);

  std::uint32_t vertex_count() const { return n_; }
  std::uint64_t edge_count() const { return m_; }
  std::uint32_t max_degree() const { return max_degree_; }

  std::uint32_t degree(VertexId v) const {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }

  bool has_edge(VertexId u, VertexId v) const;

  std::uint64_t original_label(VertexId v) const { return labels_[v]; }
  const std::vector<std::uint64_t>& original_labels() const { return labels_; }

  // Each edge once, as (original label of u, original label of v) with u < v
  // in dense ids.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edge_list() const;

 private:
  static Graph build(std::uint32_t n, std::vector<std::pair<VertexId, VertexId>>&& canonical,
                     std::vector<std::uint64_t>&& labels);

  std::uint32_t n_ = 0;
  std::uint64_t m_ = 0;
  std::uint32_t max_degree_ = 0;
  std::vector<std::uint64_t> offsets_;  // n + 1
  std::vector<VertexId> adjacency_;     // 2m
  std::vector<std::uint64_t> labels_;   // dense id -> original label
};

// Exact count of edges with both endpoints in s (s holds distinct vertices).
std::uint64_t count_internal_edges(const Graph& g, std::span<const VertexId> s);

// Exact density e(S)/C(|S|,2); 1/1 for |S| <= 1.
Rational subset_density(const Graph& g, std::span<const VertexId> s);

// Incremental vertex-set + internal-edge-count state: membership bitmap plus
// the member list in insertion order. add/remove cost O(deg). Single-owner
// mutable state; never share one across workers.
class SubsetDensityTracker {
 public:
  explicit SubsetDensityTracker(const Graph& g);

  void add(VertexId v);     // throws std::invalid_argument if already a member
  void remove(VertexId v);  // throws std::invalid_argument if not a member

  // |N(v) ∩ members| without modifying the set.
  std::uint64_t shared_neighbors(VertexId v) const;

  bool contains(VertexId v) const { return in_[v] != 0; }
  std::size_t size() const { return members_.size(); }
  std::uint64_t internal_edges() const { return internal_edges_; }
  const std::vector<VertexId>& members() const { return members_; }
  Rational density() const { return make_density(internal_edges_, members_.size()); }

  void clear();

  // Adjacency probes performed so far; used by complexity smoke tests.
  std::uint64_t probe_count() const { return probes_; }

 private:
  const Graph* g_;
  std::vector<std::uint8_t> in_;
  std::vector<VertexId> members_;
  std::uint64_t internal_edges_ = 0;
  mutable std::uint64_t probes_ = 0;
};

}  // namespace edqc
