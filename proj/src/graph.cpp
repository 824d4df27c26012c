#include "edqc/graph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace edqc {

Graph Graph::build(std::uint32_t n, std::vector<std::pair<VertexId, VertexId>>&& canonical,
                   std::vector<std::uint64_t>&& labels) {
  std::sort(canonical.begin(), canonical.end());
  canonical.erase(std::unique(canonical.begin(), canonical.end()), canonical.end());

  Graph g;
  g.n_ = n;
  g.m_ = canonical.size();
  g.labels_ = std::move(labels);
  g.offsets_.assign(n + 1, 0);
  for (const auto& [u, v] : canonical) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (std::uint32_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];

  g.adjacency_.resize(2 * g.m_);
  std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Canonical pairs are sorted with u < v, so each per-vertex list fills in
  // ascending order: all smaller neighbors arrive before larger ones.
  for (const auto& [u, v] : canonical) {
    g.adjacency_[cursor[u]++] = v;
    g.adjacency_[cursor[v]++] = u;
  }
  for (std::uint32_t v = 0; v < n; ++v) g.max_degree_ = std::max(g.max_degree_, g.degree(v));
  return g;
}

Graph Graph::from_edges(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges) {
  std::vector<std::uint64_t> labels;
  labels.reserve(edges.size() * 2);
  for (const auto& [a, b] : edges) {
    if (a == b) continue;  // self-loop: dropped, endpoint not kept
    labels.push_back(a);
    labels.push_back(b);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.size() > std::numeric_limits<std::uint32_t>::max())
    throw std::invalid_argument("vertex count exceeds the supported id range");

  auto dense_id = [&](std::uint64_t label) {
    return static_cast<VertexId>(std::lower_bound(labels.begin(), labels.end(), label) -
                                 labels.begin());
  };
  std::vector<std::pair<VertexId, VertexId>> canonical;
  canonical.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a == b) continue;
    VertexId u = dense_id(a);
    VertexId v = dense_id(b);
    canonical.emplace_back(std::min(u, v), std::max(u, v));
  }
  return build(static_cast<std::uint32_t>(labels.size()), std::move(canonical), std::move(labels));
}

Graph Graph::from_edges_with_universe(
    std::uint32_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  std::vector<std::pair<VertexId, VertexId>> canonical;
  canonical.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n) throw std::invalid_argument("edge endpoint outside the vertex universe");
    if (a == b) continue;
    canonical.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::vector<std::uint64_t> labels(n);
  for (std::uint32_t v = 0; v < n; ++v) labels[v] = v;
  return build(n, std::move(canonical), std::move(labels));
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> Graph::edge_list() const {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  out.reserve(m_);
  for (VertexId u = 0; u < n_; ++u)
    for (VertexId v : neighbors(u))
      if (u < v) out.emplace_back(labels_[u], labels_[v]);
  return out;
}

std::uint64_t count_internal_edges(const Graph& g, std::span<const VertexId> s) {
  std::vector<VertexId> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  std::uint64_t count = 0;
  for (VertexId v : sorted)
    for (VertexId w : g.neighbors(v))
      if (w > v && std::binary_search(sorted.begin(), sorted.end(), w)) ++count;
  return count;
}

Rational subset_density(const Graph& g, std::span<const VertexId> s) {
  return make_density(count_internal_edges(g, s), s.size());
}

SubsetDensityTracker::SubsetDensityTracker(const Graph& g)
    : g_(&g), in_(g.vertex_count(), 0) {}

std::uint64_t SubsetDensityTracker::shared_neighbors(VertexId v) const {
  std::uint64_t count = 0;
  for (VertexId w : g_->neighbors(v)) {
    ++probes_;
    count += in_[w];
  }
  return count;
}

void SubsetDensityTracker::add(VertexId v) {
  if (in_[v]) throw std::invalid_argument("tracker: vertex is already a member");
  internal_edges_ += shared_neighbors(v);
  in_[v] = 1;
  members_.push_back(v);
}

void SubsetDensityTracker::remove(VertexId v) {
  if (!in_[v]) throw std::invalid_argument("tracker: vertex is not a member");
  in_[v] = 0;
  internal_edges_ -= shared_neighbors(v);
  // Removals almost always hit the most recent insertion; search from the back.
  for (auto it = members_.rbegin(); it != members_.rend(); ++it) {
    if (*it == v) {
      members_.erase(std::next(it).base());
      break;
    }
  }
}

void SubsetDensityTracker::clear() {
  for (VertexId v : members_) in_[v] = 0;
  members_.clear();
  internal_edges_ = 0;
  probes_ = 0;
}

}  // namespace edqc
