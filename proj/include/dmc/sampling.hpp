#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dmc/graph.hpp"
#include "dmc/random.hpp"

namespace dmc {

enum class SamplerKind { random_walk, edge_deletion };

struct SamplerParams {
  SamplerKind kind = SamplerKind::random_walk;
  std::size_t n = 0;        // node count of the sampled graph
  double fraction = 1.0;    // overlap p (random walk) or deletion p_d (edge deletion)
  std::uint64_t seed = 0;
};

// Two graphs to align plus the ground-truth set of labels they share.
struct GraphPair {
  Graph g1;
  Graph g2;
  std::vector<std::string> common_labels;
  SamplerParams params;
};

/// Visits distinct nodes by random walk until `count` have been seen.
/// Restarts at a uniformly random unvisited node once the current component
/// has no unvisited node left. Returns node indices in first-visit order.
std::vector<NodeIndex> random_walk_nodes(const Graph& g, std::size_t count, Rng& rng);

/// Subgraph induced on `n` random-walk nodes, in visit order.
Graph random_walk_sample(const Graph& g, std::size_t n, std::uint64_t seed);

/// Number of common nodes used for an overlap pair on `n` nodes: round(n p),
/// reduced by one when needed so the remainder splits evenly.
std::size_t overlap_common_size(std::size_t n, double p);

/// Random-walk overlap pair: common set C from a walk on `sampled`, the other
/// nodes split evenly into H1 and H2, G1 = sampled[C + H1], G2 = sampled[C + H2],
/// each with an independently shuffled index order.
GraphPair overlap_pair(const Graph& sampled, double p, std::uint64_t seed);

/// Edge-deletion pair: G1 = sampled, G2 keeps each edge with probability
/// 1 - p_d and has its index order shuffled.
GraphPair edge_deletion_pair(const Graph& sampled, double p_d, std::uint64_t seed);

/// Writes g1.edges, g2.edges, common.txt and params.txt into `dir`.
void save_pair(const GraphPair& pair, const std::string& dir);
GraphPair load_pair(const std::string& dir, bool weighted = false);

const char* to_string(SamplerKind kind);

}  // namespace dmc
