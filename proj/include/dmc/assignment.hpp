#pragma once

#include <type_traits>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "dmc/degree_matrix.hpp"

namespace dmc {

using CostMatrix = RowMajorMatrix<double>;

struct Assignment {
  // mapping[i] = column assigned to row i
  std::vector<Eigen::Index> mapping;
  double total_cost = 0.0;
  // Pairs settled by the greedy prefilter; empty for a plain Hungarian solve.
  std::vector<std::pair<Eigen::Index, Eigen::Index>> fixed_pairs;
};

/// Squared Euclidean distance between every row of `a` and every row of `b`.
/// Entry (i, j) compares row i of `a` with row j of `b` position by position,
/// zero padding included.
template <typename DerivedA, typename DerivedB>
CostMatrix squared_distance_cost(const Eigen::MatrixBase<DerivedA>& a,
                                 const Eigen::MatrixBase<DerivedB>& b) {
  if (a.cols() != b.cols() || a.rows() != b.rows())
    throw ParameterError("cost matrix: operand dimensions differ");
  const RowMajorMatrix<double> lhs = a.template cast<double>();
  const RowMajorMatrix<double> rhs = b.template cast<double>();
  CostMatrix cost(lhs.rows(), rhs.rows());
  for (Eigen::Index i = 0; i < lhs.rows(); ++i)
    cost.row(i) = (rhs.rowwise() - lhs.row(i)).rowwise().squaredNorm().transpose();
  return cost;
}

template <typename Scalar>
CostMatrix cost_matrix(const DegreeMatrix<Scalar>& m1, const DegreeMatrix<Scalar>& m2) {
  return squared_distance_cost(m1.rows, m2.rows);
}

/// Minimum-cost perfect matching on a square matrix (shortest augmenting
/// path, O(N^3) worst case). Deterministic: within each Dijkstra sweep
/// columns are scanned in ascending order; on equal reduced cost an unmatched
/// column beats a matched one, otherwise the lower column index wins.
/// Throws ParameterError for non-square or non-finite input.
Assignment solve_assignment(const CostMatrix& cost);

template <typename Derived>
Assignment hungarian(const Eigen::MatrixBase<Derived>& cost) {
  if constexpr (std::is_same_v<Derived, CostMatrix>)
    return solve_assignment(cost.derived());
  else
    return solve_assignment(CostMatrix(cost.template cast<double>()));
}

struct Prefilter {
  std::vector<std::pair<Eigen::Index, Eigen::Index>> fixed_pairs;
  std::vector<Eigen::Index> residual_rows;  // ascending
  std::vector<Eigen::Index> residual_cols;  // ascending
};

/// Greedy pass: repeatedly takes the unmatched row whose cheapest unmatched
/// column is cheapest overall and fixes that pair while its cost is <= epsilon.
/// With epsilon = 0 only identical rows are paired.
Prefilter greedy_prefilter(const CostMatrix& cost, double epsilon);

/// greedy_prefilter followed by an exact solve of the residual submatrix.
Assignment greedy_hungarian(const CostMatrix& cost, double epsilon);

/// Sum of cost(i, mapping[i]).
double assignment_cost(const CostMatrix& cost, const std::vector<Eigen::Index>& mapping);

}  // namespace dmc
