#pragma once

// Empirical probe of I(G) from random floating-point members of S(G).

#include <cstdint>
#include <vector>

#include "inertia/graph.hpp"
#include "inertia/lattice_set.hpp"

namespace inertia {

struct SampleOptions {
  int trials = 10000;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  // Also record A - lambda I for every eigenvalue lambda of A.
  bool eigen_shifts = true;
};

struct SampleReport {
  std::vector<Point> observed;  // distinct, sorted
  LatticeSet set;               // northeast closure within n; a lower bound for I(G)
  int matrices = 0;
};

SampleReport sample_inertias(const Graph& g, SampleOptions opts = {});

}  // namespace inertia
