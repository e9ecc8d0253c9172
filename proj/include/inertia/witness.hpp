#pragma once

// Exact rational matrices with a prescribed pattern and partial inertia.

#include <cstdint>
#include <string>

#include "inertia/graph.hpp"
#include "inertia/lattice_set.hpp"
#include "inertia/sym_matrix.hpp"
#include "inertia/tree_params.hpp"

namespace inertia {

// diag(r, ..., 1, -1, ..., -s) + A_G / (2n); requires r + s = n.
RationalMatrix witness_full_rank(const Graph& g, int r, int s);

// B^T W B with B the signed edge incidence matrix of a tree and W holding a
// entries +1 then b entries -1. Inertia (a, b, 1); requires a + b = n - 1.
RationalMatrix witness_tree_corank1(const Graph& tree, int a, int b);

// Star adjacencies at the vertices of s plus corank-1 blocks on the
// components of g - s, raised to (r, s_target). Tree components use the
// incidence construction; components with cycles add a small Laplacian.
RationalMatrix witness_stars_stripes(const Graph& g, const VertexSet& s, int r, int s_target);

// Raises the diagonal one entry at a time by +eps until pi = r, then by
// -eps until nu = s. Pattern is unchanged.
RationalMatrix northeast_perturb(const RationalMatrix& a, int r, int s);

struct Witness {
  RationalMatrix matrix;
  std::string method;
  bool constructive = true;  // false when found by random search
};

// Witness for (r, s) in S(g). Every elementary inertia gets an exact
// stars-and-stripes matrix, which covers all of I(F) for forests; other
// targets fall back to random search.
Witness find_witness(const Graph& g, int r, int s, SearchLimits limits = {}, std::uint64_t seed = 0);

struct WitnessCheck {
  bool pattern_ok = false;
  PartialInertia inertia;
  bool inertia_ok = false;
  bool ok() const { return pattern_ok && inertia_ok; }
};

WitnessCheck verify_witness(const Graph& g, const RationalMatrix& a, int r, int s);

}  // namespace inertia
