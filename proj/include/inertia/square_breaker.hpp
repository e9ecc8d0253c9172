#pragma once

// From a PSD member of S(G) of rank k >= 2, a member of S(G) with fewer
// than k positive and fewer than k negative eigenvalues.

#include <Eigen/Dense>

#include "inertia/graph.hpp"
#include "inertia/sym_matrix.hpp"

namespace inertia {

struct SquareBreakOptions {
  double rank_tol = 1e-9;     // eigenvalues of M at or below this are zero
  double verify_tol = 1e-7;   // eigen count tolerance for M'
  double min_margin = 1e-6;   // distance of theta from every forbidden angle
};

struct SquareBreak {
  Eigen::MatrixXd result;
  int input_rank = 0;
  double theta = 0;
  double margin = 0;                 // distance of theta from the nearest forbidden angle
  double min_factor = 0;             // min |a1i a1j - a2i a2j| over nonzero columns
  double factorization_residual = 0; // max |B^T B - C^T C - result| entrywise
  PartialInertia inertia;
  bool pattern_preserved = false;
  bool ok() const { return pattern_preserved && inertia.pos < input_rank && inertia.neg < input_rank; }
};

// M' = B^T B - C^T C, stored as the Hadamard product
// (a1 a1^T - a2 a2^T) o M so that zeros of M stay exact zeros.
SquareBreak square_breaker(const Eigen::MatrixXd& m, SquareBreakOptions opts = {});

}  // namespace inertia
