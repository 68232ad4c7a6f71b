#include "dmc/alignment.hpp"

#include <cmath>
#include <cstdio>

namespace dmc {

void MethodSpec::validate() const {
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon))
    throw ParameterError("epsilon must be a finite value >= 0");
  if (method != Method::greedy_dmc && epsilon != 0.0)
    throw ParameterError(std::string("epsilon applies to greedy_dmc only, not ") + to_string(method));
}

const char* to_string(Method method) {
  switch (method) {
    case Method::dmc: return "dmc";
    case Method::greedy_dmc: return "greedy_dmc";
    case Method::weighted_dmc: return "weighted_dmc";
  }
  return "?";
}

std::string to_string(const MethodSpec& spec) {
  if (spec.method != Method::greedy_dmc) return to_string(spec.method);
  char buf[64];
  std::snprintf(buf, sizeof buf, "greedy_dmc:%g", spec.epsilon);
  return buf;
}

MethodSpec parse_method(const std::string& text) {
  MethodSpec spec;
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  if (name == "dmc") {
    spec.method = Method::dmc;
  } else if (name == "weighted_dmc") {
    spec.method = Method::weighted_dmc;
  } else if (name == "greedy_dmc") {
    spec.method = Method::greedy_dmc;
  } else {
    throw ParameterError("unknown method '" + text + "'");
  }
  if (colon != std::string::npos) {
    if (spec.method != Method::greedy_dmc)
      throw ParameterError("only greedy_dmc takes an epsilon: '" + text + "'");
    const std::string eps = text.substr(colon + 1);
    char* end = nullptr;
    spec.epsilon = std::strtod(eps.c_str(), &end);
    if (eps.empty() || end != eps.c_str() + eps.size())
      throw ParameterError("invalid epsilon in '" + text + "'");
  }
  spec.validate();
  return spec;
}

double score(const LabelMap& label_map, const std::vector<std::string>& common_labels) {
  if (common_labels.empty()) throw ParameterError("score: empty common label set");
  std::size_t hits = 0;
  for (const auto& l : common_labels) {
    auto it = label_map.find(l);
    if (it != label_map.end() && it->second == l) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(common_labels.size());
}

Assignment align_nodes(const Graph& g1, const Graph& g2, const MethodSpec& spec) {
  spec.validate();
  const auto [m1, m2] = spec.method == Method::weighted_dmc
                            ? build_weighted_degree_matrices(g1, g2)
                            : build_degree_matrices(g1, g2);
  const CostMatrix cost = cost_matrix(m1, m2);
  Assignment rows = spec.method == Method::greedy_dmc ? greedy_hungarian(cost, spec.epsilon)
                                                      : hungarian(cost);
  // Translate row indices to node indices; identity unless rows were permuted.
  Assignment nodes;
  nodes.total_cost = rows.total_cost;
  nodes.mapping.resize(rows.mapping.size());
  for (std::size_t r = 0; r < rows.mapping.size(); ++r)
    nodes.mapping[m1.node_of_row[r]] =
        static_cast<Eigen::Index>(m2.node_of_row[static_cast<std::size_t>(rows.mapping[r])]);
  for (const auto& [r, c] : rows.fixed_pairs)
    nodes.fixed_pairs.emplace_back(m1.node_of_row[static_cast<std::size_t>(r)],
                                   m2.node_of_row[static_cast<std::size_t>(c)]);
  return nodes;
}

AlignmentResult align(const Graph& g1, const Graph& g2,
                      const std::vector<std::string>& common_labels, const MethodSpec& spec) {
  if (spec.method == Method::weighted_dmc && (!g1.weighted() || !g2.weighted()))
    throw ParameterError("weighted_dmc requires weighted graphs");
  const auto start = std::chrono::steady_clock::now();
  const Assignment a = align_nodes(g1, g2, spec);
  const auto stop = std::chrono::steady_clock::now();

  AlignmentResult result;
  result.total_cost = a.total_cost;
  result.fixed_pairs = a.fixed_pairs.size();
  result.node_map.reserve(a.mapping.size());
  result.label_map.reserve(a.mapping.size());
  for (std::size_t i = 0; i < a.mapping.size(); ++i) {
    const auto j = static_cast<NodeIndex>(a.mapping[i]);
    result.node_map.push_back(j);
    result.label_map.emplace(g1.label(i), g2.label(j));
  }
  result.score = score(result.label_map, common_labels);
  result.wall = stop - start;
  return result;
}

}  // namespace dmc
