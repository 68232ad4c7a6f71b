#include "dmc/graph.hpp"

#include <algorithm>
#include <numeric>

#include "dmc/random.hpp"

namespace dmc {

NodeIndex Graph::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  return it == index_.end() ? num_nodes() : it->second;
}

bool Graph::has_label(std::string_view label) const {
  return index_.contains(std::string(label));
}

bool Graph::has_edge(NodeIndex u, NodeIndex v) const {
  return edge_weight(u, v) > 0.0;
}

double Graph::edge_weight(NodeIndex u, NodeIndex v) const {
  if (u >= num_nodes() || v >= num_nodes()) return 0.0;
  auto nbrs = neighbors(u);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v,
                             [](const Neighbor& n, NodeIndex x) { return n.node < x; });
  return (it != nbrs.end() && it->node == v) ? it->weight : 0.0;
}

NodeIndex GraphBuilder::add_node(std::string_view label) {
  auto [it, inserted] = index_.try_emplace(std::string(label), labels_.size());
  if (inserted) {
    labels_.emplace_back(label);
    adjacency_.emplace_back();
  }
  return it->second;
}

void GraphBuilder::add_nodes(std::size_t count) {
  const std::size_t start = labels_.size();
  for (std::size_t i = 0; i < count; ++i) add_node(std::to_string(start + i));
}

GraphBuilder::EdgeStatus GraphBuilder::add_edge(NodeIndex u, NodeIndex v, double weight) {
  if (u >= labels_.size() || v >= labels_.size())
    throw std::out_of_range("GraphBuilder::add_edge: node index out of range");
  if (u == v) {
    ++self_loops_;
    return EdgeStatus::self_loop;
  }
  const std::uint64_t key = (static_cast<std::uint64_t>(std::min(u, v)) << 32) | std::max(u, v);
  if (!edges_.insert(key).second) {
    ++duplicates_;
    return EdgeStatus::duplicate;
  }
  const double w = weighted_ ? weight : 1.0;
  adjacency_[u].push_back({v, w});
  adjacency_[v].push_back({u, w});
  ++edge_count_;
  return EdgeStatus::added;
}

GraphBuilder::EdgeStatus GraphBuilder::add_edge(std::string_view u, std::string_view v,
                                                double weight) {
  const NodeIndex iu = add_node(u);
  const NodeIndex iv = add_node(v);
  return add_edge(iu, iv, weight);
}

Graph GraphBuilder::build() && {
  Graph g;
  g.weighted_ = weighted_;
  g.edge_count_ = edge_count_;
  g.labels_ = std::move(labels_);
  g.index_ = std::move(index_);
  g.offsets_.assign(1, 0);
  g.offsets_.reserve(adjacency_.size() + 1);
  g.adjacency_.reserve(2 * edge_count_);
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
    g.adjacency_.insert(g.adjacency_.end(), nbrs.begin(), nbrs.end());
    g.offsets_.push_back(g.adjacency_.size());
  }
  adjacency_.clear();
  edges_.clear();
  return g;
}

std::size_t degree(const Graph& g, NodeIndex i) {
  if (i >= g.num_nodes())
    throw std::out_of_range("degree: node index " + std::to_string(i) + " out of range");
  return g.degree(i);
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  s.n = g.num_nodes();
  if (s.n == 0) return s;
  double sum = 0.0;
  for (NodeIndex i = 0; i < s.n; ++i) {
    sum += static_cast<double>(g.degree(i));
    s.max_degree = std::max(s.max_degree, g.degree(i));
  }
  s.mean = sum / static_cast<double>(s.n);
  double sq = 0.0;
  for (NodeIndex i = 0; i < s.n; ++i) {
    const double d = static_cast<double>(g.degree(i)) - s.mean;
    sq += d * d;
  }
  s.variance = sq / static_cast<double>(s.n);
  return s;
}

double average_clustering(const Graph& g) {
  const std::size_t n = g.num_nodes();
  if (n == 0) return 0.0;
  double total = 0.0;
  std::vector<char> mark(n, 0);
  for (NodeIndex v = 0; v < n; ++v) {
    const auto nbrs = g.neighbors(v);
    const std::size_t k = nbrs.size();
    if (k < 2) continue;
    for (const auto& a : nbrs) mark[a.node] = 1;
    std::size_t links = 0;
    for (const auto& a : nbrs)
      for (const auto& b : g.neighbors(a.node))
        if (mark[b.node]) ++links;
    for (const auto& a : nbrs) mark[a.node] = 0;
    // each triangle edge seen from both endpoints
    total += static_cast<double>(links) / static_cast<double>(k * (k - 1));
  }
  return total / static_cast<double>(n);
}

double density(const Graph& g) {
  const double n = static_cast<double>(g.num_nodes());
  if (g.num_nodes() < 2) return 0.0;
  return 2.0 * static_cast<double>(g.num_edges()) / (n * (n - 1.0));
}

Graph permute_nodes(const Graph& g, std::span<const NodeIndex> permutation) {
  const std::size_t n = g.num_nodes();
  if (permutation.size() != n) throw ParameterError("permute_nodes: permutation size mismatch");
  std::vector<NodeIndex> inverse(n, n);
  for (NodeIndex i = 0; i < n; ++i) {
    if (permutation[i] >= n || inverse[permutation[i]] != n)
      throw ParameterError("permute_nodes: not a permutation");
    inverse[permutation[i]] = i;
  }
  GraphBuilder b(g.weighted());
  for (NodeIndex k = 0; k < n; ++k) b.add_node(g.label(inverse[k]));
  for (NodeIndex k = 0; k < n; ++k)
    for (const auto& nb : g.neighbors(inverse[k]))
      if (permutation[nb.node] > k) b.add_edge(k, permutation[nb.node], nb.weight);
  return std::move(b).build();
}

ShuffledGraph relabel_shuffle(const Graph& g, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<NodeIndex> perm(g.num_nodes());
  std::iota(perm.begin(), perm.end(), NodeIndex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  Graph shuffled = permute_nodes(g, perm);
  return {std::move(shuffled), std::move(perm)};
}

Graph induced_subgraph(const Graph& g, std::span<const NodeIndex> nodes) {
  const std::size_t n = g.num_nodes();
  std::vector<NodeIndex> position(n, n);
  GraphBuilder b(g.weighted());
  for (NodeIndex k = 0; k < nodes.size(); ++k) {
    if (nodes[k] >= n) throw std::out_of_range("induced_subgraph: node index out of range");
    if (position[nodes[k]] != n) throw ParameterError("induced_subgraph: repeated node");
    position[nodes[k]] = k;
    b.add_node(g.label(nodes[k]));
  }
  for (NodeIndex k = 0; k < nodes.size(); ++k)
    for (const auto& nb : g.neighbors(nodes[k]))
      if (position[nb.node] != n && position[nb.node] > k)
        b.add_edge(k, position[nb.node], nb.weight);
  return std::move(b).build();
}

Graph with_unit_weights(const Graph& g) {
  GraphBuilder b(true);
  for (const auto& l : g.labels()) b.add_node(l);
  for (NodeIndex u = 0; u < g.num_nodes(); ++u)
    for (const auto& nb : g.neighbors(u))
      if (nb.node > u) b.add_edge(u, nb.node, 1.0);
  return std::move(b).build();
}

bool same_labelled_graph(const Graph& a, const Graph& b) {
  if (a.num_nodes() != b.num_nodes() || a.num_edges() != b.num_edges() ||
      a.weighted() != b.weighted())
    return false;
  for (NodeIndex u = 0; u < a.num_nodes(); ++u) {
    const NodeIndex bu = b.index_of(a.label(u));
    if (bu == b.num_nodes() || b.degree(bu) != a.degree(u)) return false;
    for (const auto& nb : a.neighbors(u)) {
      const NodeIndex bv = b.index_of(a.label(nb.node));
      if (bv == b.num_nodes() || b.edge_weight(bu, bv) != nb.weight) return false;
    }
  }
  return true;
}

}  // namespace dmc
