#pragma once

// Simple undirected graphs on dense vertex indices 0..n-1, the edge-list
// interchange format, and the structural queries the inertia machinery
// recurses over (components, induced subgraphs, cut vertices, vertex sums).

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace inertia {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Throws InputError on self-loops, duplicates or out-of-range endpoints.
  Graph(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }

  // Sorted, each pair with first < second.
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;
  bool has_edge(Vertex u, Vertex v) const;

  // Adjacency as bitmasks; requires order() <= 64.
  std::vector<std::uint64_t> adjacency_masks() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

// Sorted set of distinct vertices.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs);
  explicit VertexSet(std::vector<Vertex> vs);
  static VertexSet from_mask(std::uint64_t mask);

  bool contains(Vertex v) const;
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  const std::vector<Vertex>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  std::uint64_t mask() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

// Induced subgraph together with the index maps that relate it to its parent.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // new index -> old index
  std::vector<int> from_parent;   // old index -> new index, -1 if removed
};

// A graph with one distinguished vertex, the operand of a vertex sum.
struct RootedGraph {
  Graph graph;
  Vertex root = 0;
};

// One summand produced by split_at.
struct SplitPiece {
  Graph graph;
  std::vector<Vertex> to_parent;
  Vertex root = 0;  // position of the cut vertex inside `graph`
};

Graph parse_graph(std::string_view text);
std::string serialize(const Graph& g);

std::vector<VertexSet> components(const Graph& g);
int component_count(const Graph& g);

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);
InducedSubgraph delete_vertices(const Graph& g, const VertexSet& removed);
Graph delete_vertex(const Graph& g, Vertex v);

bool is_forest(const Graph& g);
bool is_tree(const Graph& g);
bool is_connected(const Graph& g);

std::vector<Vertex> cut_vertices(const Graph& g);

// Summands of g at cut vertex v, ordered by the smallest original index in
// each component of g - v. Throws InputError if v is not a cut vertex.
std::vector<SplitPiece> split_at(const Graph& g, Vertex v);

// Identifies the roots of all operands. The first operand keeps its
// numbering; later operands are appended in order, skipping their roots.
Graph vertex_sum(std::span<const RootedGraph> parts);

Graph disjoint_union(std::span<const Graph> parts);

// Degree-refined colour classes, invariant under isomorphism.
std::uint64_t invariant_hash(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

namespace graphs {
Graph empty(int n);
Graph path(int n);
Graph star(int n);  // centre 0
Graph complete(int n);
Graph cycle(int n);
// Cycle on 0..k-1 with pendant k+i attached to i.
Graph sun(int k);
// k copies of S4 glued at one leaf each; the shared vertex is 0 and the
// centres are 1, 4, 7, ...
Graph star_leaf_sum(int k);
// S4 (centre 0, leaves 1, 2, 3) with a P3 glued at leaf 3 by its centre.
Graph star_path_tree();
}  // namespace graphs

}  // namespace inertia
