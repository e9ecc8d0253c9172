#include "inertia/sampling.hpp"

#include <Eigen/Dense>
#include <random>
#include <set>

#include "inertia/sym_matrix.hpp"

namespace inertia {

SampleReport sample_inertias(const Graph& g, SampleOptions opts) {
  const int n = g.order();
  std::set<Point> seen;
  SampleReport report;
  for (int trial = 0; trial < opts.trials; ++trial) {
    // Per-trial streams so that any split of the trials gives the same result.
    std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                      static_cast<std::uint32_t>(trial)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> mag(0.5, 1.5), diag(-2.0, 2.0);
    std::bernoulli_distribution flip(0.5);

    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [u, v] : g.edges()) a(u, v) = a(v, u) = flip(rng) ? mag(rng) : -mag(rng);
    for (int i = 0; i < n; ++i) a(i, i) = diag(rng);
    if (n == 0) {
      seen.insert({0, 0});
      continue;
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd eig = solver.eigenvalues();
    const PartialInertia p = inertia_from_eigenvalues(eig, opts.tol);
    seen.insert({p.pos, p.neg});
    ++report.matrices;
    if (!opts.eigen_shifts) continue;
    for (int i = 0; i < n; ++i) {
      const PartialInertia q = inertia_from_eigenvalues(eig.array() - eig(i), opts.tol);
      seen.insert({q.pos, q.neg});
      ++report.matrices;
    }
  }
  report.observed.assign(seen.begin(), seen.end());
  report.set = LatticeSet(report.observed, n);
  return report;
}

}  // namespace inertia
