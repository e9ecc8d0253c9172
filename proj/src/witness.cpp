#include "inertia/witness.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "inertia/errors.hpp"

namespace inertia {

namespace {

std::string point_text(int r, int s) {
  std::ostringstream out;
  out << '(' << r << ',' << s << ')';
  return out.str();
}

void check_target(const Graph& g, int r, int s) {
  if (r < 0 || s < 0 || r + s > g.order()) {
    throw InputError("target " + point_text(r, s) + " is outside N^2 capped at " + std::to_string(g.order()));
  }
}

Rational halving_eps(const RationalMatrix& a, int sign, const PartialInertia& base) {
  const auto n = a.rows();
  Rational eps(1);
  for (int iter = 0; iter < 256; ++iter) {
    const RationalMatrix shifted = a + RationalMatrix::Identity(n, n) * (eps * sign);
    const PartialInertia p = inertia_exact(shifted);
    const bool kept = sign > 0 ? p.neg == base.neg : p.pos == base.pos;
    if (p.zero == 0 && kept) return eps;
    eps /= 2;
  }
  throw std::logic_error("no admissible diagonal shift found");
}

// Corank-1 block on a connected graph: the spanning-tree witness plus eps
// times the Laplacian of the remaining edges. The all-ones vector stays in
// the kernel, and for small eps the other eigenvalues keep their signs.
RationalMatrix corank1_block(const Graph& g, int a, int b) {
  if (is_tree(g)) return witness_tree_corank1(g, a, b);
  const int n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<Edge> tree_edges, extra;
  std::vector<Vertex> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (seen[w]) continue;
      seen[w] = true;
      tree_edges.emplace_back(std::min(u, w), std::max(u, w));
      stack.push_back(w);
    }
  }
  std::sort(tree_edges.begin(), tree_edges.end());
  for (const auto& e : g.edges()) {
    if (!std::binary_search(tree_edges.begin(), tree_edges.end(), e)) extra.push_back(e);
  }
  const RationalMatrix base = witness_tree_corank1(Graph(n, tree_edges), a, b);
  RationalMatrix lap = RationalMatrix::Zero(n, n);
  for (const auto& [u, v] : extra) {
    lap(u, u) += 1;
    lap(v, v) += 1;
    lap(u, v) -= 1;
    lap(v, u) -= 1;
  }
  Rational eps(1);
  for (int iter = 0; iter < 256; ++iter) {
    const RationalMatrix m = base + lap * eps;
    const PartialInertia p = inertia_exact(m);
    if (p.pos == a && p.neg == b && pattern_of(m) == g) return m;
    eps /= 2;
  }
  throw std::logic_error("no admissible Laplacian weight found");
}

}  // namespace

RationalMatrix witness_full_rank(const Graph& g, int r, int s) {
  const int n = g.order();
  if (r < 0 || s < 0 || r + s != n) throw InputError("full-rank witness needs r + s = n");
  RationalMatrix b = adjacency_matrix(g) / Rational(2 * n);
  for (int i = 0; i < n; ++i) b(i, i) = i < r ? Rational(r - i) : Rational(-(i - r + 1));
  return b;
}

RationalMatrix witness_tree_corank1(const Graph& tree, int a, int b) {
  if (!is_forest(tree)) throw NotAForest();
  if (!is_tree(tree)) throw InputError("corank-1 witness needs a connected tree");
  const int n = tree.order();
  if (a < 0 || b < 0 || a + b != n - 1) throw InputError("corank-1 witness needs a + b = n - 1");
  RationalMatrix inc = RationalMatrix::Zero(n - 1, n);
  RationalMatrix w = RationalMatrix::Zero(n - 1, n - 1);
  int row = 0;
  for (const auto& [u, v] : tree.edges()) {
    inc(row, u) = 1;
    inc(row, v) = -1;
    w(row, row) = row < a ? 1 : -1;
    ++row;
  }
  return inc.transpose() * w * inc;
}

RationalMatrix witness_stars_stripes(const Graph& g, const VertexSet& s, int r, int s_target) {
  const int n = g.order();
  const int k = s.size();
  for (Vertex v : s) {
    if (v < 0 || v >= n) throw InputError("deletion set vertex out of range");
  }
  check_target(g, r, s_target);
  const InducedSubgraph rest = delete_vertices(g, s);
  const auto comps = components(rest.graph);
  const int m = static_cast<int>(comps.size());
  const int rank = n - m + k;
  if (r < k || s_target < k || r + s_target < rank) {
    throw InputError("target " + point_text(r, s_target) + " is not above the stripe of rank " +
                     std::to_string(rank) + " for this deletion set");
  }

  RationalMatrix out = RationalMatrix::Zero(n, n);
  for (Vertex v : s) {
    for (Vertex w : g.neighbors(v)) {
      out(v, w) += 1;
      out(w, v) += 1;
    }
  }

  const int x = std::max(k, rank - s_target);
  int left_pos = x - k;
  for (const auto& comp : comps) {
    const InducedSubgraph tree = induced_subgraph(rest.graph, comp);
    const int edges = tree.graph.order() - 1;
    const int a = std::min(left_pos, edges);
    left_pos -= a;
    const RationalMatrix block = corank1_block(tree.graph, a, edges - a);
    for (int i = 0; i < tree.graph.order(); ++i) {
      for (int j = 0; j < tree.graph.order(); ++j) {
        const Vertex pi = rest.to_parent[tree.to_parent[i]];
        const Vertex pj = rest.to_parent[tree.to_parent[j]];
        out(pi, pj) += block(i, j);
      }
    }
  }
  return northeast_perturb(out, r, s_target);
}

RationalMatrix northeast_perturb(const RationalMatrix& a, int r, int s) {
  const auto n = static_cast<int>(a.rows());
  const PartialInertia start = inertia_exact(a);
  if (r + s > n || r < start.pos || s < start.neg) {
    std::ostringstream msg;
    msg << "target " << point_text(r, s) << " is not northeast of " << point_text(start.pos, start.neg)
        << " within rank " << n;
    throw InputError(msg.str());
  }

  RationalMatrix cur = a;
  PartialInertia p = start;
  if (p.pos < r) {
    const Rational eps = halving_eps(cur, 1, p);
    for (int i = 0; i < n && p.pos < r; ++i) {
      cur(i, i) += eps;
      p = inertia_exact(cur);
    }
  }
  if (p.neg < s) {
    const Rational eps = halving_eps(cur, -1, p);
    for (int i = 0; i < n && p.neg < s; ++i) {
      cur(i, i) -= eps;
      p = inertia_exact(cur);
    }
  }
  if (p.pos != r || p.neg != s) throw std::logic_error("northeast walk missed its target");
  return cur;
}

Witness find_witness(const Graph& g, int r, int s, SearchLimits limits, std::uint64_t seed) {
  check_target(g, r, s);
  const int n = g.order();
  if (r + s == n) return {witness_full_rank(g, r, s), "gershgorin"};

  // Every elementary inertia lies over the trapezoid of some MD-optimal set.
  const auto prof = md_profile(g, n, limits);
  for (int k = 0; k <= n; ++k) {
    if (prof[k] < k || k > r || k > s || r + s < n - prof[k] + k) continue;
    return {witness_stars_stripes(g, prof.witnesses[k], r, s), "stars-and-stripes k=" + std::to_string(k)};
  }
  if (is_forest(g)) {
    throw InputError("target " + point_text(r, s) + " is not in the inertia set of this forest");
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> off(1, 3), diag(-3, 3), sign(0, 1);
  for (int trial = 0; trial < 2000; ++trial) {
    RationalMatrix a = RationalMatrix::Zero(n, n);
    for (const auto& [u, v] : g.edges()) a(u, v) = a(v, u) = Rational(sign(rng) ? off(rng) : -off(rng));
    for (int i = 0; i < n; ++i) a(i, i) = Rational(diag(rng));
    const PartialInertia p = inertia_exact(a);
    if (p.pos <= r && p.neg <= s) return {northeast_perturb(a, r, s), "random search", false};
  }
  throw VerificationError("no witness found for " + point_text(r, s));
}

WitnessCheck verify_witness(const Graph& g, const RationalMatrix& a, int r, int s) {
  WitnessCheck c;
  if (a.rows() != g.order() || a.cols() != g.order()) return c;
  if (!is_symmetric_matrix(a)) return c;
  c.pattern_ok = pattern_of(a) == g;
  c.inertia = inertia_exact(a);
  c.inertia_ok = c.inertia.pos == r && c.inertia.neg == s;
  return c;
}

}  // namespace inertia
