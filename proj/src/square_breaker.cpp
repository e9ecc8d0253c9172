#include "inertia/square_breaker.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "inertia/errors.hpp"

namespace inertia {

namespace {

// Distance from x to the nearest multiple of pi.
double dist_mod_pi(double x) {
  double t = std::fmod(x, std::numbers::pi);
  if (t < 0) t += std::numbers::pi;
  return std::min(t, std::numbers::pi - t);
}

}  // namespace

SquareBreak square_breaker(const Eigen::MatrixXd& m, SquareBreakOptions opts) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n || !m.isApprox(m.transpose(), 0.0)) throw InputError("square breaker needs a symmetric matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  const Eigen::VectorXd& eig = solver.eigenvalues();
  const PartialInertia in = inertia_from_eigenvalues(eig, opts.rank_tol);
  if (in.neg != 0) throw InputError("square breaker needs a positive semidefinite matrix");
  const int k = in.pos;
  if (k < 2) throw InputError("square breaker needs rank at least 2");

  // M = A^T A from the top k eigenpairs (eigenvalues come sorted ascending).
  Eigen::MatrixXd a(k, n);
  for (int i = 0; i < k; ++i) {
    const Eigen::Index col = n - 1 - i;
    a.row(i) = std::sqrt(eig(col)) * solver.eigenvectors().col(col).transpose();
  }

  std::vector<Eigen::Index> live;
  const double col_tol = std::sqrt(opts.rank_tol);
  for (Eigen::Index j = 0; j < n; ++j)
    if (a.col(j).norm() > col_tol) live.push_back(j);

  // Rotating rows 1 and 2 by theta/2 turns each angle alpha_j into
  // alpha_j + theta/2. Forbidden: a zero in row 1 or 2, or
  // a1i a1j = a2i a2j, i.e. cos(alpha_i + alpha_j + theta) = 0.
  std::vector<double> alpha;
  for (Eigen::Index j : live) alpha.push_back(std::atan2(a(1, j), a(0, j)));
  std::vector<double> forbidden;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    forbidden.push_back(-2 * alpha[i]);
    for (std::size_t j = i; j < alpha.size(); ++j) forbidden.push_back(std::numbers::pi / 2 - alpha[i] - alpha[j]);
  }
  double gap = std::numbers::pi;
  for (double f : forbidden) {
    const double d = dist_mod_pi(f);
    if (d > 1e-12) gap = std::min(gap, d);
  }
  const double theta = gap / 3;
  double margin = std::numbers::pi;
  for (double f : forbidden) margin = std::min(margin, dist_mod_pi(theta - f));
  if (margin < opts.min_margin) throw VerificationError("no rotation puts the factor in general position");

  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  const Eigen::RowVectorXd r0 = c * a.row(0) - s * a.row(1);
  const Eigen::RowVectorXd r1 = s * a.row(0) + c * a.row(1);
  a.row(0) = r0;
  a.row(1) = r1;

  Eigen::MatrixXd b(k - 1, n), cm(k - 1, n);
  b.row(0) = a.row(0).array().square();
  cm.row(0) = a.row(1).array().square();
  for (int i = 1; i < k - 1; ++i) {
    b.row(i) = a.row(0).array() * a.row(i + 1).array();
    cm.row(i) = a.row(1).array() * a.row(i + 1).array();
  }
  const Eigen::MatrixXd direct = b.transpose() * b - cm.transpose() * cm;
  const Eigen::MatrixXd factor = a.row(0).transpose() * a.row(0) - a.row(1).transpose() * a.row(1);

  SquareBreak out;
  out.result = factor.cwiseProduct(m);
  out.input_rank = k;
  out.theta = theta;
  out.margin = margin;
  out.factorization_residual = (direct - out.result).cwiseAbs().maxCoeff();
  out.min_factor = std::numeric_limits<double>::infinity();
  for (Eigen::Index i : live)
    for (Eigen::Index j : live) out.min_factor = std::min(out.min_factor, std::abs(factor(i, j)));

  // Zeros of M are copied exactly; nonzeros survive because the factor
  // is bounded away from zero on live columns.
  out.pattern_preserved = pattern_of(out.result) == pattern_of(m) && out.min_factor > 0;
  for (Eigen::Index i = 0; i < n && out.pattern_preserved; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (i != j && (m(i, j) != 0.0) != (out.result(i, j) != 0.0)) out.pattern_preserved = false;
  out.inertia = inertia_numeric(out.result, opts.verify_tol);
  return out;
}

}  // namespace inertia
