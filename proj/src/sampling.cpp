#include "dmc/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

namespace dmc {
namespace {

// True if some unvisited node is reachable from `start` through visited nodes.
bool component_has_unvisited(const Graph& g, NodeIndex start, const std::vector<char>& visited,
                             std::vector<char>& seen, std::vector<NodeIndex>& queue) {
  queue.clear();
  queue.push_back(start);
  seen[start] = 1;
  bool found = false;
  for (std::size_t head = 0; head < queue.size() && !found; ++head) {
    for (const auto& nb : g.neighbors(queue[head])) {
      if (!visited[nb.node]) {
        found = true;
        break;
      }
      if (!seen[nb.node]) {
        seen[nb.node] = 1;
        queue.push_back(nb.node);
      }
    }
  }
  for (NodeIndex v : queue) seen[v] = 0;
  return found;
}

std::size_t uniform_index(Rng& rng, std::size_t size) {
  return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
}

}  // namespace

std::vector<NodeIndex> random_walk_nodes(const Graph& g, std::size_t count, Rng& rng) {
  const std::size_t n = g.num_nodes();
  if (count > n)
    throw ParameterError("random walk: requested " + std::to_string(count) +
                         " nodes from a graph with " + std::to_string(n));
  std::vector<NodeIndex> order;
  order.reserve(count);
  if (count == 0) return order;

  std::vector<char> visited(n, 0), seen(n, 0);
  std::vector<NodeIndex> queue;
  // Unvisited nodes, kept as a swap-remove pool so restarts are O(1).
  std::vector<NodeIndex> pool(n), pool_pos(n);
  std::iota(pool.begin(), pool.end(), NodeIndex{0});
  std::iota(pool_pos.begin(), pool_pos.end(), NodeIndex{0});

  auto visit = [&](NodeIndex v) {
    visited[v] = 1;
    order.push_back(v);
    const NodeIndex last = pool.back();
    pool[pool_pos[v]] = last;
    pool_pos[last] = pool_pos[v];
    pool.pop_back();
  };

  NodeIndex current = pool[uniform_index(rng, pool.size())];
  visit(current);
  // Whether the current component is known to still hold unvisited nodes;
  // reset on every new visit.
  bool known_open = false;
  while (order.size() < count) {
    const auto nbrs = g.neighbors(current);
    const bool local_open = std::any_of(nbrs.begin(), nbrs.end(),
                                        [&](const Neighbor& nb) { return !visited[nb.node]; });
    if (!local_open && !known_open) {
      if (!component_has_unvisited(g, current, visited, seen, queue)) {
        current = pool[uniform_index(rng, pool.size())];
        visit(current);
        continue;
      }
      known_open = true;
    }
    current = nbrs[uniform_index(rng, nbrs.size())].node;
    if (!visited[current]) {
      visit(current);
      known_open = false;
    }
  }
  return order;
}

Graph random_walk_sample(const Graph& g, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  const auto nodes = random_walk_nodes(g, n, rng);
  return induced_subgraph(g, nodes);
}

std::size_t overlap_common_size(std::size_t n, double p) {
  if (!(p > 0.0 && p <= 1.0)) throw ParameterError("overlap p must lie in (0, 1]");
  auto common = static_cast<std::size_t>(std::llround(static_cast<double>(n) * p));
  common = std::min(common, n);
  if ((n - common) % 2 == 1) --common;
  if (common == 0)
    throw ParameterError("overlap: n * p leaves no common nodes for n = " + std::to_string(n));
  return common;
}

GraphPair overlap_pair(const Graph& sampled, double p, std::uint64_t seed) {
  const std::size_t n = sampled.num_nodes();
  const std::size_t common = overlap_common_size(n, p);

  Rng rng(derive_seed(seed, 0));
  const auto c_nodes = random_walk_nodes(sampled, common, rng);
  std::vector<char> in_c(n, 0);
  for (NodeIndex v : c_nodes) in_c[v] = 1;
  std::vector<NodeIndex> rest;
  rest.reserve(n - common);
  for (NodeIndex v = 0; v < n; ++v)
    if (!in_c[v]) rest.push_back(v);
  std::shuffle(rest.begin(), rest.end(), rng);
  const std::size_t half = rest.size() / 2;

  std::vector<NodeIndex> v1(c_nodes), v2(c_nodes);
  v1.insert(v1.end(), rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(half));
  v2.insert(v2.end(), rest.begin() + static_cast<std::ptrdiff_t>(half), rest.end());

  GraphPair pair;
  pair.g1 = relabel_shuffle(induced_subgraph(sampled, v1), derive_seed(seed, 1)).graph;
  pair.g2 = relabel_shuffle(induced_subgraph(sampled, v2), derive_seed(seed, 2)).graph;
  pair.common_labels.reserve(common);
  for (NodeIndex v : c_nodes) pair.common_labels.push_back(sampled.label(v));
  pair.params = {SamplerKind::random_walk, n, p, seed};
  return pair;
}

GraphPair edge_deletion_pair(const Graph& sampled, double p_d, std::uint64_t seed) {
  if (!(p_d >= 0.0 && p_d < 1.0)) throw ParameterError("deletion probability p_d must lie in [0, 1)");
  Rng rng(derive_seed(seed, 0));
  GraphBuilder b(sampled.weighted());
  for (const auto& l : sampled.labels()) b.add_node(l);
  for (NodeIndex u = 0; u < sampled.num_nodes(); ++u)
    for (const auto& nb : sampled.neighbors(u))
      if (nb.node > u && uniform01(rng) >= p_d) b.add_edge(u, nb.node, nb.weight);

  GraphPair pair;
  pair.g1 = sampled;
  pair.g2 = relabel_shuffle(std::move(b).build(), derive_seed(seed, 1)).graph;
  pair.common_labels = sampled.labels();
  pair.params = {SamplerKind::edge_deletion, sampled.num_nodes(), p_d, seed};
  return pair;
}

const char* to_string(SamplerKind kind) {
  return kind == SamplerKind::random_walk ? "random_walk" : "edge_deletion";
}

void save_pair(const GraphPair& pair, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  save_edge_list((fs::path(dir) / "g1.edges").string(), pair.g1);
  save_edge_list((fs::path(dir) / "g2.edges").string(), pair.g2);
  std::ofstream common(fs::path(dir) / "common.txt");
  for (const auto& l : pair.common_labels) common << l << '\n';
  std::ofstream params(fs::path(dir) / "params.txt");
  params << "sampler = " << to_string(pair.params.kind) << '\n'
         << "n = " << pair.params.n << '\n'
         << (pair.params.kind == SamplerKind::random_walk ? "p = " : "p_d = ")
         << pair.params.fraction << '\n'
         << "seed = " << pair.params.seed << '\n'
         << "weighted = " << (pair.g1.weighted() ? "true" : "false") << '\n';
}

GraphPair load_pair(const std::string& dir, bool weighted) {
  namespace fs = std::filesystem;
  GraphPair pair;
  EdgeListOptions opts;
  opts.weighted = weighted;
  pair.g1 = load_edge_list((fs::path(dir) / "g1.edges").string(), opts).graph;
  pair.g2 = load_edge_list((fs::path(dir) / "g2.edges").string(), opts).graph;
  std::ifstream common(fs::path(dir) / "common.txt");
  if (!common) throw std::runtime_error("cannot open '" + (fs::path(dir) / "common.txt").string() + "'");
  std::string line;
  while (std::getline(common, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) pair.common_labels.push_back(line);
  }
  std::ifstream params(fs::path(dir) / "params.txt");
  while (std::getline(params, line)) {
    std::istringstream ss(line);
    std::string key, eq, value;
    if (!(ss >> key >> eq >> value) || eq != "=") continue;
    if (key == "sampler")
      pair.params.kind = value == "edge_deletion" ? SamplerKind::edge_deletion : SamplerKind::random_walk;
    else if (key == "n")
      pair.params.n = std::stoull(value);
    else if (key == "p" || key == "p_d")
      pair.params.fraction = std::stod(value);
    else if (key == "seed")
      pair.params.seed = std::stoull(value);
  }
  return pair;
}

}  // namespace dmc
