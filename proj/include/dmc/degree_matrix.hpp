#pragma once

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "dmc/graph.hpp"

namespace dmc {

template <typename Scalar>
using RowMajorMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// N x m matrix whose row r lists, in ascending order, the degrees of the
// neighbors of node node_of_row[r], zero-padded on the right. In the weighted
// variant each entry is the neighbor degree times the incident edge weight.
template <typename Scalar = double>
struct DegreeMatrix {
  RowMajorMatrix<Scalar> rows;
  std::vector<NodeIndex> node_of_row;

  Eigen::Index num_rows() const noexcept { return rows.rows(); }
  Eigen::Index cols() const noexcept { return rows.cols(); }

  friend bool operator==(const DegreeMatrix& a, const DegreeMatrix& b) {
    return a.rows.rows() == b.rows.rows() && a.rows.cols() == b.rows.cols() &&
           a.rows == b.rows && a.node_of_row == b.node_of_row;
  }
};

namespace detail {

inline std::size_t max_degree(const Graph& g) {
  std::size_t m = 0;
  for (NodeIndex i = 0; i < g.num_nodes(); ++i) m = std::max(m, g.degree(i));
  return m;
}

template <typename Scalar, bool Weighted>
DegreeMatrix<Scalar> fill_degree_matrix(const Graph& g, Eigen::Index width) {
  const auto n = static_cast<Eigen::Index>(g.num_nodes());
  DegreeMatrix<Scalar> out;
  out.rows = RowMajorMatrix<Scalar>::Zero(n, width);
  out.node_of_row.resize(g.num_nodes());
  std::vector<Scalar> entries;
  for (Eigen::Index r = 0; r < n; ++r) {
    const auto v = static_cast<NodeIndex>(r);
    out.node_of_row[v] = v;
    entries.clear();
    for (const auto& nb : g.neighbors(v)) {
      if constexpr (Weighted)
        entries.push_back(static_cast<Scalar>(g.degree(nb.node)) * static_cast<Scalar>(nb.weight));
      else
        entries.push_back(static_cast<Scalar>(g.degree(nb.node)));
    }
    std::stable_sort(entries.begin(), entries.end());
    for (std::size_t c = 0; c < entries.size(); ++c)
      out.rows(r, static_cast<Eigen::Index>(c)) = entries[c];
  }
  return out;
}

inline Eigen::Index shared_width(const Graph& g1, const Graph& g2) {
  if (g1.num_nodes() != g2.num_nodes())
    throw ParameterError("degree matrices need graphs of equal order (" +
                         std::to_string(g1.num_nodes()) + " vs " +
                         std::to_string(g2.num_nodes()) + ")");
  return static_cast<Eigen::Index>(std::max(max_degree(g1), max_degree(g2)));
}

}  // namespace detail

/// Degree matrix of a single graph with an explicit column count (>= max degree).
template <typename Scalar = double>
DegreeMatrix<Scalar> degree_matrix(const Graph& g, Eigen::Index width) {
  if (width < static_cast<Eigen::Index>(detail::max_degree(g)))
    throw ParameterError("degree_matrix: width smaller than the maximum degree");
  return detail::fill_degree_matrix<Scalar, false>(g, width);
}

/// Degree matrices of a pair of equal-order graphs sharing the column count
/// m = max(max degree of g1, max degree of g2).
template <typename Scalar = double>
std::pair<DegreeMatrix<Scalar>, DegreeMatrix<Scalar>> build_degree_matrices(const Graph& g1,
                                                                             const Graph& g2) {
  const Eigen::Index m = detail::shared_width(g1, g2);
  return {detail::fill_degree_matrix<Scalar, false>(g1, m),
          detail::fill_degree_matrix<Scalar, false>(g2, m)};
}

/// Weighted variant: entry for neighbor u of v is deg(u) * w(v, u). The column
/// count is still set by the unweighted maximum degree.
template <typename Scalar = double>
std::pair<DegreeMatrix<Scalar>, DegreeMatrix<Scalar>> build_weighted_degree_matrices(
    const Graph& g1, const Graph& g2) {
  if (!g1.weighted() || !g2.weighted())
    throw ParameterError("weighted degree matrices need weighted graphs");
  const Eigen::Index m = detail::shared_width(g1, g2);
  return {detail::fill_degree_matrix<Scalar, true>(g1, m),
          detail::fill_degree_matrix<Scalar, true>(g2, m)};
}

/// Row r of the result is row perm[r] of `m`; node_of_row follows.
template <typename Scalar>
DegreeMatrix<Scalar> permute_rows(const DegreeMatrix<Scalar>& m, std::span<const NodeIndex> perm) {
  const auto n = static_cast<std::size_t>(m.num_rows());
  if (perm.size() != n) throw ParameterError("permute_rows: permutation size mismatch");
  std::vector<char> used(n, 0);
  for (NodeIndex p : perm) {
    if (p >= n || used[p]) throw ParameterError("permute_rows: not a permutation");
    used[p] = 1;
  }
  DegreeMatrix<Scalar> out;
  out.rows.resize(m.rows.rows(), m.rows.cols());
  out.node_of_row.resize(n);
  for (std::size_t r = 0; r < n; ++r) {
    out.rows.row(static_cast<Eigen::Index>(r)) = m.rows.row(static_cast<Eigen::Index>(perm[r]));
    out.node_of_row[r] = m.node_of_row[perm[r]];
  }
  return out;
}

/// Rows of `m` in lexicographic order: a canonical form for the row-swap
/// equivalence class.
template <typename Scalar>
std::vector<std::vector<Scalar>> sorted_rows(const DegreeMatrix<Scalar>& m) {
  std::vector<std::vector<Scalar>> rows(static_cast<std::size_t>(m.num_rows()));
  for (Eigen::Index r = 0; r < m.num_rows(); ++r)
    rows[static_cast<std::size_t>(r)].assign(m.rows.row(r).data(),
                                             m.rows.row(r).data() + m.cols());
  std::sort(rows.begin(), rows.end());
  return rows;
}

/// True if one matrix can be turned into the other by row swaps alone.
template <typename Scalar>
bool row_equivalent(const DegreeMatrix<Scalar>& a, const DegreeMatrix<Scalar>& b) {
  return a.num_rows() == b.num_rows() && a.cols() == b.cols() && sorted_rows(a) == sorted_rows(b);
}

}  // namespace dmc
