#pragma once

// Graph parameters that determine inertia sets: the edge-boundary function
// f_G(S), maximal disconnection MD_k, path cover number, the minimal optimal
// set size c(T) and the r-profile of a tree.

#include <vector>

#include "inertia/graph.hpp"

namespace inertia {

// Exhaustive subset searches refuse graphs above this many vertices.
struct SearchLimits {
  int max_vertices = 24;
};

// Number of edges incident to at least one vertex of s.
int edge_boundary_count(const Graph& g, const VertexSet& s);

// |E_G(S)| - 2|S| + 1.
int f_value(const Graph& g, const VertexSet& s);

// MD_0..MD_K with one maximising deletion set per entry.
struct MdProfile {
  std::vector<int> values;
  std::vector<VertexSet> witnesses;

  int max_k() const { return static_cast<int>(values.size()) - 1; }
  int operator[](int k) const { return values[k]; }
};

// One branch-and-bound pass over deletion sets of size <= max_k. Exact.
MdProfile md_profile(const Graph& g, int max_k, SearchLimits limits = {});
int md(const Graph& g, int k, SearchLimits limits = {});

// Path cover number of a forest by pendant reduction.
int path_cover_number(const Graph& forest);

// max over S of f_T(S), by enumeration. Requires a tree.
int path_cover_by_search(const Graph& tree, SearchLimits limits = {});

// Smallest k with MD_k - k = P(T); summed over components for forests.
int c_param(const Graph& forest, SearchLimits limits = {});

// r_k = MD_k + k - 1 for k = 0..c(T).
std::vector<int> r_profile(const Graph& tree, SearchLimits limits = {});

// max over 0 <= k <= K of MD_k - k.
int max_mult_bound(const Graph& g, int max_k, SearchLimits limits = {});

struct TreeParams {
  int n = 0;
  int path_cover = 0;
  int min_rank = 0;
  int c = 0;
  MdProfile md;           // MD_0..MD_c of the whole forest
  std::vector<int> r;     // r_0..r_c
  int mult_bound = 0;     // max_k (MD_k - k)
};

TreeParams tree_params(const Graph& forest, SearchLimits limits = {});

}  // namespace inertia
