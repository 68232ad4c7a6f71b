#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace dmc {

using NodeIndex = std::size_t;

/// Invalid argument supplied to a sampler, generator or solver.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed input text; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Well-formed input whose values violate a data invariant (e.g. w <= 0).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Neighbor {
  NodeIndex node;
  double weight;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

// Simple undirected graph. Nodes carry opaque string labels; every algorithm
// works on the dense indices [0, N). Immutable once built.
class Graph {
 public:
  Graph() = default;

  std::size_t num_nodes() const noexcept { return labels_.size(); }
  std::size_t num_edges() const noexcept { return edge_count_; }
  bool weighted() const noexcept { return weighted_; }

  const std::string& label(NodeIndex i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  // Returns num_nodes() when the label is unknown.
  NodeIndex index_of(std::string_view label) const;
  bool has_label(std::string_view label) const;

  /// Neighbors of `i`, sorted by neighbor index.
  std::span<const Neighbor> neighbors(NodeIndex i) const {
    return {adjacency_.data() + offsets_[i], adjacency_.data() + offsets_[i + 1]};
  }
  std::size_t degree(NodeIndex i) const noexcept { return offsets_[i + 1] - offsets_[i]; }

  bool has_edge(NodeIndex u, NodeIndex v) const;
  /// Weight of edge {u, v}; 0 when absent.
  double edge_weight(NodeIndex u, NodeIndex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;

  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeIndex> index_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> adjacency_;
  std::size_t edge_count_ = 0;
  bool weighted_ = false;
};

// Accumulates nodes and edges, then freezes them into a Graph. Self-loops and
// repeated edges are dropped (first weight wins) and counted.
class GraphBuilder {
 public:
  enum class EdgeStatus { added, duplicate, self_loop };

  explicit GraphBuilder(bool weighted = false) : weighted_(weighted) {}

  /// Index of `label`, inserting it at the end if new.
  NodeIndex add_node(std::string_view label);
  /// Adds `count` nodes labelled by their decimal index.
  void add_nodes(std::size_t count);

  EdgeStatus add_edge(NodeIndex u, NodeIndex v, double weight = 1.0);
  EdgeStatus add_edge(std::string_view u, std::string_view v, double weight = 1.0);

  std::size_t num_nodes() const noexcept { return labels_.size(); }
  std::size_t duplicates() const noexcept { return duplicates_; }
  std::size_t self_loops() const noexcept { return self_loops_; }

  Graph build() &&;

 private:
  bool weighted_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeIndex> index_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::unordered_set<std::uint64_t> edges_;  // packed (min, max) endpoint pairs
  std::size_t edge_count_ = 0;
  std::size_t duplicates_ = 0;
  std::size_t self_loops_ = 0;
};

/// Degree of node `i`; throws std::out_of_range for an invalid index.
std::size_t degree(const Graph& g, NodeIndex i);

struct DegreeStats {
  double mean = 0.0;
  double variance = 0.0;  // population variance
  std::size_t max_degree = 0;
  std::size_t n = 0;
};

DegreeStats degree_stats(const Graph& g);

/// Average local clustering coefficient; nodes of degree < 2 contribute 0.
double average_clustering(const Graph& g);

/// 2|E| / (N (N - 1)); zero for N < 2.
double density(const Graph& g);

struct ShuffledGraph {
  Graph graph;
  // permutation[old index] = new index
  std::vector<NodeIndex> permutation;
};

/// Isomorphic copy with a uniformly random index order. Labels travel with
/// their nodes.
ShuffledGraph relabel_shuffle(const Graph& g, std::uint64_t seed);

/// Copy of `g` with node `i` moved to index `permutation[i]`.
Graph permute_nodes(const Graph& g, std::span<const NodeIndex> permutation);

/// Subgraph induced on `nodes`; output index k is `nodes[k]`.
Graph induced_subgraph(const Graph& g, std::span<const NodeIndex> nodes);

/// Same topology flagged as weighted, every weight 1.0.
Graph with_unit_weights(const Graph& g);

/// True if both graphs have the same labels and the same labelled edges with
/// equal weights, regardless of index order.
bool same_labelled_graph(const Graph& a, const Graph& b);

// ---------------------------------------------------------------------------
// Edge-list text I/O

struct EdgeListLoad {
  Graph graph;
  std::size_t duplicates_collapsed = 0;
  std::size_t self_loops_dropped = 0;
};

struct EdgeListOptions {
  bool weighted = false;
  // '\0' means auto: any run of whitespace and/or commas separates tokens.
  char delimiter = '\0';
};

EdgeListLoad read_edge_list(std::istream& in, const EdgeListOptions& options = {});
EdgeListLoad load_edge_list(const std::string& path, const EdgeListOptions& options = {});

/// Writes one edge per line (`u v` or `u v w`). Isolated nodes are written as
/// single-token lines so that node sets survive a round trip.
void write_edge_list(std::ostream& out, const Graph& g);
void save_edge_list(const std::string& path, const Graph& g);

}  // namespace dmc
