#pragma once

// Elementary inertias E(G), computed from the MD profile and independently
// from bicolored spans, plus the v-deleting / v-keeping split.

#include <functional>
#include <vector>

#include "inertia/graph.hpp"
#include "inertia/lattice_set.hpp"
#include "inertia/tree_params.hpp"

namespace inertia {

// Union over k with MD_k >= k of the trapezoids
// k <= r, k <= s, n - MD_k + k <= r + s <= n.
LatticeSet elementary_set(const Graph& g, SearchLimits limits = {});

// (S, X, Y): S deleted, X and Y a two-colouring of a spanning forest of G - S.
// Edges are in the numbering of G.
struct BicoloredSpan {
  VertexSet deleted;
  std::vector<Edge> x;
  std::vector<Edge> y;

  Point color_vector() const {
    return {deleted.size() + static_cast<int>(x.size()), deleted.size() + static_cast<int>(y.size())};
  }
};

struct SpanOptions {
  int max_vertices = 12;
  // Every spanning forest and every colouring, instead of one forest per S
  // with the colourings collapsed to |X| = 0..f.
  bool full = false;
  int full_max_vertices = 8;
};

void enumerate_spans(const Graph& g, const std::function<void(const BicoloredSpan&)>& visit,
                     SpanOptions opts = {});

// Distinct colour vectors, sorted.
std::vector<Point> color_vectors(const Graph& g, SpanOptions opts = {});

// [C(G) + N^2]_n.
LatticeSet elementary_from_spans(const Graph& g, SpanOptions opts = {});

bool check_elementary_equals_spans(const Graph& g, SpanOptions opts = {}, SearchLimits limits = {});

struct EvSplit {
  LatticeSet deleting;
  LatticeSet keeping;
};

EvSplit ev_split(const Graph& g, Vertex v, SpanOptions opts = {});

}  // namespace inertia
