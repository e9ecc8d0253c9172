#pragma once

// The 13 cube-axis vectors, the orthogonality graphs G13 and G12, and the
// three (D, M) certificates for proper induced subgraphs of G13.

#include <string>
#include <vector>

#include "inertia/graph.hpp"
#include "inertia/lattice_set.hpp"
#include "inertia/sym_matrix.hpp"

namespace inertia::g12 {

// Vertex labels x, y, z, 1, ..., 10 in index order.
const std::vector<std::string>& labels();
int index_of(const std::string& label);

// 3 x 13 integer matrix whose columns are the cube axes.
RationalMatrix m13();
// Columns of m13 with the vertex labelled 10 removed.
RationalMatrix m12();

// i ~ j iff columns i and j are not orthogonal.
Graph orthogonality_graph(const RationalMatrix& columns);
Graph g13();
Graph g12();

// Line graph of K5, i.e. the complement of the Petersen graph.
Graph petersen_complement();

struct Certificate {
  std::string name;
  std::vector<std::string> deleted;
  RationalMatrix d;  // 3 x 3 diagonal
  RationalMatrix m;  // 3 x (13 - deleted) over the remaining columns
};

const std::vector<Certificate>& certificates();

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;
  // Northeast closure of the points established from below.
  LatticeSet lower_bound;
  Partition partition;
  bool all_passed() const;
};

Report run_suite();

}  // namespace inertia::g12
