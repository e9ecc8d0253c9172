#include "inertia/tree_params.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>

#include "inertia/errors.hpp"

namespace inertia {

namespace {

using Mask = std::uint64_t;

void check_limits(const Graph& g, const SearchLimits& limits) {
  if (g.order() > limits.max_vertices || g.order() > 63) {
    throw SearchTooLarge("search too large: " + std::to_string(g.order()) +
                         " vertices exceeds the cap of " +
                         std::to_string(std::min(limits.max_vertices, 63)));
  }
}

int count_components(const std::vector<Mask>& adj, Mask remaining) {
  int count = 0;
  while (remaining) {
    Mask comp = remaining & (~remaining + 1);
    Mask frontier = comp;
    while (frontier) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const Mask fresh = adj[v] & remaining & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    remaining &= ~comp;
    ++count;
  }
  return count;
}

class MdSearch {
 public:
  MdSearch(const Graph& g, int max_k)
      : n_(g.order()),
        max_k_(max_k),
        adj_(g.adjacency_masks()),
        all_(n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1),
        best_(max_k + 1, -1),
        witness_(max_k + 1, 0) {}

  void run() { visit(0, 0, 0); }

  MdProfile profile() const {
    MdProfile p;
    p.values = best_;
    for (Mask m : witness_) p.witnesses.push_back(VertexSet::from_mask(m));
    return p;
  }

 private:
  void visit(int start, Mask removed, int size) {
    const Mask remaining = all_ & ~removed;
    const int comps = count_components(adj_, remaining);
    if (comps > best_[size]) {
      best_[size] = comps;
      witness_[size] = removed;
    }
    if (size == max_k_ || start >= n_) return;

    // Deleting w changes the component count by at most deg(w) - 1, and
    // later deletions can only see smaller degrees.
    int reach = 0;
    for (int w = start; w < n_; ++w) {
      if (remaining >> w & 1) reach = std::max(reach, std::popcount(adj_[w] & remaining));
    }
    const int gain = std::max(reach - 1, 0);
    const int candidates = std::popcount(remaining >> start);
    bool promising = false;
    for (int j = size + 1; j <= max_k_ && j - size <= candidates; ++j) {
      if (comps + (j - size) * gain > best_[j]) {
        promising = true;
        break;
      }
    }
    if (!promising) return;

    for (int v = start; v < n_; ++v) visit(v + 1, removed | (Mask{1} << v), size + 1);
  }

  int n_;
  int max_k_;
  std::vector<Mask> adj_;
  Mask all_;
  std::vector<int> best_;
  std::vector<Mask> witness_;
};

// Pendant reduction on one tree, with live adjacency sets.
int path_cover_of_tree(const Graph& tree) {
  const int n = tree.order();
  if (n <= 2) return 1;
  std::vector<std::set<Vertex>> adj(n);
  for (const auto& [u, v] : tree.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<bool> alive(n, true);
  int alive_count = n;
  int p = 0;

  auto remove = [&](Vertex u) {
    for (Vertex w : adj[u]) adj[w].erase(u);
    adj[u].clear();
    alive[u] = false;
    --alive_count;
  };
  auto deg = [&](Vertex u) { return static_cast<int>(adj[u].size()); };

  for (;;) {
    // Strip pendant vertices hanging off degree-2 vertices.
    bool stripped = true;
    while (stripped) {
      stripped = false;
      for (Vertex u = 0; u < n; ++u) {
        if (alive[u] && deg(u) == 1 && deg(*adj[u].begin()) == 2) {
          remove(u);
          stripped = true;
          break;
        }
      }
    }
    if (alive_count <= 2) return p + 1;

    // Star on m + 1 vertices.
    for (Vertex c = 0; c < n; ++c) {
      if (alive[c] && deg(c) == alive_count - 1) {
        bool leaves = std::all_of(adj[c].begin(), adj[c].end(), [&](Vertex w) { return deg(w) == 1; });
        if (leaves) return p + (alive_count - 1) - 1;
      }
    }

    // Smallest v with m >= 2 pendant neighbours and exactly one other neighbour.
    Vertex chosen = -1;
    for (Vertex v = 0; v < n && chosen < 0; ++v) {
      if (!alive[v]) continue;
      int pendants = 0, others = 0;
      for (Vertex w : adj[v]) (deg(w) == 1 ? pendants : others)++;
      if (pendants >= 2 && others == 1) chosen = v;
    }
    if (chosen < 0) throw std::logic_error("path cover reduction found no removable branch");
    std::vector<Vertex> doomed;
    for (Vertex w : adj[chosen]) {
      if (deg(w) == 1) doomed.push_back(w);
    }
    p += static_cast<int>(doomed.size()) - 1;
    for (Vertex w : doomed) remove(w);
    remove(chosen);
  }
}

std::vector<Graph> component_graphs(const Graph& g) {
  std::vector<Graph> out;
  for (const auto& comp : components(g)) out.push_back(induced_subgraph(g, comp).graph);
  return out;
}

int c_of_tree(const Graph& tree, SearchLimits limits) {
  const int n = tree.order();
  if (n <= 2) return 0;
  const int p = path_cover_of_tree(tree);
  // c(T) <= (n - 1) / 3, so one profile up to that bound always suffices.
  int bound = std::min(n, (n - 1) / 3 + 1);
  for (;;) {
    const auto prof = md_profile(tree, bound, limits);
    for (int k = 0; k <= bound; ++k) {
      if (prof[k] - k == p) return k;
    }
    if (bound == n) throw std::logic_error("no k with MD_k - k = P(T)");
    bound = n;
  }
}

}  // namespace

int edge_boundary_count(const Graph& g, const VertexSet& s) {
  int count = 0;
  for (const auto& [u, v] : g.edges()) {
    if (s.contains(u) || s.contains(v)) ++count;
  }
  return count;
}

int f_value(const Graph& g, const VertexSet& s) {
  return edge_boundary_count(g, s) - 2 * s.size() + 1;
}

MdProfile md_profile(const Graph& g, int max_k, SearchLimits limits) {
  if (max_k < 0 || max_k > g.order()) throw InputError("MD index must lie in 0..n");
  check_limits(g, limits);
  MdSearch search(g, max_k);
  search.run();
  return search.profile();
}

int md(const Graph& g, int k, SearchLimits limits) { return md_profile(g, k, limits)[k]; }

int path_cover_number(const Graph& forest) {
  if (!is_forest(forest)) throw NotAForest("path cover number needs a forest");
  int total = 0;
  for (const auto& tree : component_graphs(forest)) total += path_cover_of_tree(tree);
  return total;
}

int path_cover_by_search(const Graph& tree, SearchLimits limits) {
  if (!is_forest(tree)) throw NotAForest("path cover search needs a tree");
  if (!is_tree(tree)) throw InputError("path cover search needs a connected tree");
  check_limits(tree, limits);
  const int n = tree.order();
  const auto adj = tree.adjacency_masks();
  int best = std::numeric_limits<int>::min();
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    int degree_sum = 0, inner = 0;
    for (Mask rest = s; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      degree_sum += std::popcount(adj[v]);
      inner += std::popcount(adj[v] & s);
    }
    const int boundary = degree_sum - inner / 2;
    best = std::max(best, boundary - 2 * std::popcount(s) + 1);
  }
  return best;
}

int c_param(const Graph& forest, SearchLimits limits) {
  if (!is_forest(forest)) throw NotAForest("c(T) needs a forest");
  int total = 0;
  for (const auto& tree : component_graphs(forest)) total += c_of_tree(tree, limits);
  return total;
}

std::vector<int> r_profile(const Graph& tree, SearchLimits limits) {
  if (!is_forest(tree)) throw NotAForest("r-profile needs a tree");
  if (!is_tree(tree)) throw InputError("r-profile needs a connected tree");
  const int c = c_param(tree, limits);
  const auto prof = md_profile(tree, c, limits);
  std::vector<int> r;
  for (int k = 0; k <= c; ++k) r.push_back(prof[k] + k - 1);
  return r;
}

int max_mult_bound(const Graph& g, int max_k, SearchLimits limits) {
  const auto prof = md_profile(g, max_k, limits);
  int best = std::numeric_limits<int>::min();
  for (int k = 0; k <= max_k; ++k) best = std::max(best, prof[k] - k);
  return best;
}

TreeParams tree_params(const Graph& forest, SearchLimits limits) {
  if (!is_forest(forest)) throw NotAForest("tree parameters need a forest");
  TreeParams t;
  t.n = forest.order();
  t.path_cover = path_cover_number(forest);
  t.min_rank = t.n - t.path_cover;
  t.c = c_param(forest, limits);
  t.md = md_profile(forest, t.c, limits);
  t.mult_bound = std::numeric_limits<int>::min();
  for (int k = 0; k <= t.c; ++k) {
    t.r.push_back(t.md[k] + k - 1);
    t.mult_bound = std::max(t.mult_bound, t.md[k] - k);
  }
  return t;
}

}  // namespace inertia
