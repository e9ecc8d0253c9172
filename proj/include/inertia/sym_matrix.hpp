#pragma once

// Symmetric matrices over a scalar type, their zero patterns, and inertia:
// exact by congruence over the rationals, or by eigenvalue sign count.

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <cmath>
#include <ostream>

#include "inertia/errors.hpp"
#include "inertia/graph.hpp"

namespace inertia {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using SymMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RationalMatrix = SymMatrix<Rational>;

struct PartialInertia {
  int pos = 0;
  int neg = 0;
  int zero = 0;

  int rank() const { return pos + neg; }
  friend bool operator==(const PartialInertia&, const PartialInertia&) = default;
};

std::ostream& operator<<(std::ostream& os, const PartialInertia& p);

template <typename Derived>
bool is_symmetric_matrix(const Eigen::MatrixBase<Derived>& a) {
  if (a.rows() != a.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = i + 1; j < a.cols(); ++j)
      if (a(i, j) != a(j, i)) return false;
  return true;
}

// Off-diagonal support of a square matrix; |a_ij| <= tol counts as zero.
template <typename Derived>
Graph pattern_of(const Eigen::MatrixBase<Derived>& a, double tol = 0.0) {
  using Scalar = typename Derived::Scalar;
  using std::abs;
  if (a.rows() != a.cols()) throw InputError("pattern of a non-square matrix");
  std::vector<Edge> edges;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < a.cols(); ++j) {
      const Scalar v = a(i, j);
      const bool nonzero = tol == 0.0 ? v != Scalar(0) : abs(v) > Scalar(tol);
      if (nonzero) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return Graph(static_cast<int>(a.rows()), std::move(edges));
}

// Symmetric elimination with 1x1 pivots, and 2x2 pivots [[0,b],[b,0]]
// when the remaining diagonal is zero.
PartialInertia inertia_exact(const RationalMatrix& a);

// Sign count of eigenvalues; |lambda| <= tol counts as zero.
PartialInertia inertia_numeric(const Eigen::MatrixXd& a, double tol = 1e-9);
PartialInertia inertia_from_eigenvalues(const Eigen::VectorXd& eig, double tol = 1e-9);

Eigen::MatrixXd to_double(const RationalMatrix& a);

// Adjacency matrix of g with unit entries.
RationalMatrix adjacency_matrix(const Graph& g);

}  // namespace inertia
