#pragma once

#include <chrono>
#include <string>
#include <unordered_map>
#include <vector>

#include "dmc/assignment.hpp"
#include "dmc/graph.hpp"
#include "dmc/sampling.hpp"

namespace dmc {

enum class Method { dmc, greedy_dmc, weighted_dmc };

struct MethodSpec {
  Method method = Method::dmc;
  double epsilon = 0.0;  // used by greedy_dmc only

  void validate() const;
  friend bool operator==(const MethodSpec&, const MethodSpec&) = default;
};

/// Parses "dmc", "weighted_dmc", "greedy_dmc" or "greedy_dmc:<epsilon>".
MethodSpec parse_method(const std::string& text);
const char* to_string(Method method);
/// Inverse of parse_method.
std::string to_string(const MethodSpec& spec);

using LabelMap = std::unordered_map<std::string, std::string>;

struct AlignmentResult {
  LabelMap label_map;                 // G1 label -> G2 label
  std::vector<NodeIndex> node_map;    // G1 index -> G2 index
  double total_cost = 0.0;
  double score = 0.0;
  std::size_t fixed_pairs = 0;        // rows settled by the greedy prefilter
  std::chrono::duration<double, std::milli> wall{0};
};

/// Fraction of `common_labels` that `label_map` sends to themselves.
double score(const LabelMap& label_map, const std::vector<std::string>& common_labels);

/// Node mapping only: degree matrices, cost matrix, assignment.
Assignment align_nodes(const Graph& g1, const Graph& g2, const MethodSpec& spec);

AlignmentResult align(const Graph& g1, const Graph& g2,
                      const std::vector<std::string>& common_labels, const MethodSpec& spec);

inline AlignmentResult align(const GraphPair& pair, const MethodSpec& spec) {
  return align(pair.g1, pair.g2, pair.common_labels, spec);
}

}  // namespace dmc
