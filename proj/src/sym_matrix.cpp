#include "inertia/sym_matrix.hpp"

namespace inertia {

std::ostream& operator<<(std::ostream& os, const PartialInertia& p) {
  return os << '(' << p.pos << ',' << p.neg << ',' << p.zero << ')';
}

namespace {

void swap_symmetric(RationalMatrix& w, Eigen::Index i, Eigen::Index j) {
  if (i == j) return;
  w.row(i).swap(w.row(j));
  w.col(i).swap(w.col(j));
}

}  // namespace

PartialInertia inertia_exact(const RationalMatrix& a) {
  if (!is_symmetric_matrix(a)) throw InputError("inertia of a non-symmetric matrix");
  const Rational zero(0);
  PartialInertia p;
  RationalMatrix w = a;
  while (w.rows() > 0) {
    const Eigen::Index m = w.rows();
    Eigen::Index piv = -1;
    for (Eigen::Index i = 0; i < m && piv < 0; ++i)
      if (w(i, i) != zero) piv = i;

    if (piv >= 0) {
      swap_symmetric(w, 0, piv);
      const Rational d = w(0, 0);
      (d > zero ? p.pos : p.neg)++;
      const RationalMatrix c = w.bottomLeftCorner(m - 1, 1);
      RationalMatrix next = w.bottomRightCorner(m - 1, m - 1) - c * c.transpose() / d;
      w = std::move(next);
      continue;
    }

    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index i = 0; i < m && pi < 0; ++i)
      for (Eigen::Index j = i + 1; j < m; ++j)
        if (w(i, j) != zero) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;

    swap_symmetric(w, 0, pi);
    swap_symmetric(w, 1, pj);
    const Rational b = w(0, 1);
    ++p.pos;
    ++p.neg;
    const RationalMatrix ci = w.col(0).tail(m - 2);
    const RationalMatrix cj = w.col(1).tail(m - 2);
    RationalMatrix next =
        w.bottomRightCorner(m - 2, m - 2) - (ci * cj.transpose() + cj * ci.transpose()) / b;
    w = std::move(next);
  }
  p.zero = static_cast<int>(a.rows()) - p.pos - p.neg;
  return p;
}

PartialInertia inertia_from_eigenvalues(const Eigen::VectorXd& eig, double tol) {
  PartialInertia p;
  for (double v : eig) {
    if (v > tol) {
      ++p.pos;
    } else if (v < -tol) {
      ++p.neg;
    } else {
      ++p.zero;
    }
  }
  return p;
}

PartialInertia inertia_numeric(const Eigen::MatrixXd& a, double tol) {
  if (a.rows() != a.cols()) throw InputError("inertia of a non-square matrix");
  if (a.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  return inertia_from_eigenvalues(solver.eigenvalues(), tol);
}

Eigen::MatrixXd to_double(const RationalMatrix& a) {
  Eigen::MatrixXd out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).convert_to<double>();
  return out;
}

RationalMatrix adjacency_matrix(const Graph& g) {
  RationalMatrix a = RationalMatrix::Zero(g.order(), g.order());
  for (const auto& [u, v] : g.edges()) a(u, v) = a(v, u) = Rational(1);
  return a;
}

}  // namespace inertia
