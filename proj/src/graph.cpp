#include "inertia/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "inertia/errors.hpp"

namespace inertia {

namespace {

std::string at_line(int line, const std::string& msg) {
  return "line " + std::to_string(line) + ": " + msg;
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  // splitmix64 finaliser over a running combination
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebULL;
  h ^= h >> 31;
  return h;
}

std::vector<std::uint64_t> refined_colours(const Graph& g) {
  const int n = g.order();
  std::vector<std::uint64_t> colour(n);
  for (Vertex v = 0; v < n; ++v) colour[v] = mix(0, static_cast<std::uint64_t>(g.degree(v)));
  std::size_t classes = std::set<std::uint64_t>(colour.begin(), colour.end()).size();
  for (int round = 0; round < n; ++round) {
    std::vector<std::uint64_t> next(n);
    for (Vertex v = 0; v < n; ++v) {
      std::vector<std::uint64_t> around;
      around.reserve(g.degree(v));
      for (Vertex w : g.neighbors(v)) around.push_back(colour[w]);
      std::sort(around.begin(), around.end());
      std::uint64_t h = mix(colour[v], around.size());
      for (auto c : around) h = mix(h, c);
      next[v] = h;
    }
    const std::size_t next_classes = std::set<std::uint64_t>(next.begin(), next.end()).size();
    colour = std::move(next);
    if (next_classes == classes) break;
    classes = next_classes;
  }
  return colour;
}

}  // namespace

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
  if (n < 0) throw InputError("negative vertex count");
}

Graph::Graph(int n, std::vector<Edge> edges) : Graph(n) {
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw InputError("duplicate edge (" + std::to_string(dup->first) + "," +
                     std::to_string(dup->second) + ")");
  }
  edges_ = std::move(edges);
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& list : adj_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
  if (n_ > 64) throw SearchTooLarge("bitmask adjacency needs at most 64 vertices");
  std::vector<std::uint64_t> masks(n_, 0);
  for (const auto& [u, v] : edges_) {
    masks[u] |= std::uint64_t{1} << v;
    masks[v] |= std::uint64_t{1} << u;
  }
  return masks;
}

VertexSet::VertexSet(std::initializer_list<Vertex> vs) : VertexSet(std::vector<Vertex>(vs)) {}

VertexSet::VertexSet(std::vector<Vertex> vs) : members_(std::move(vs)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
  std::vector<Vertex> vs;
  for (Vertex v = 0; mask != 0; ++v, mask >>= 1) {
    if (mask & 1) vs.push_back(v);
  }
  VertexSet s;
  s.members_ = std::move(vs);
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::uint64_t VertexSet::mask() const {
  std::uint64_t m = 0;
  for (Vertex v : members_) {
    if (v >= 64) throw SearchTooLarge("vertex set mask needs indices below 64");
    m |= std::uint64_t{1} << v;
  }
  return m;
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  bool have_header = false;
  int n = 0;
  long long m = 0;
  std::vector<Edge> edges;
  std::set<Edge> seen;

  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) throw InputError(at_line(line_no, "expected two integers"));

    long long a = 0, b = 0;
    try {
      std::size_t pa = 0, pb = 0;
      a = std::stoll(tokens[0], &pa);
      b = std::stoll(tokens[1], &pb);
      if (pa != tokens[0].size() || pb != tokens[1].size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw InputError(at_line(line_no, "malformed integer"));
    }

    if (!have_header) {
      if (a < 0 || b < 0) throw InputError(at_line(line_no, "negative header value"));
      if (a > 1'000'000) throw InputError(at_line(line_no, "vertex count too large"));
      n = static_cast<int>(a);
      m = b;
      have_header = true;
      continue;
    }
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw InputError(at_line(line_no, "vertex index out of range 0.." + std::to_string(n - 1)));
    }
    if (a == b) throw InputError(at_line(line_no, "self-loop"));
    Edge e{static_cast<Vertex>(std::min(a, b)), static_cast<Vertex>(std::max(a, b))};
    if (!seen.insert(e).second) throw InputError(at_line(line_no, "duplicate edge"));
    if (static_cast<long long>(edges.size()) >= m) {
      throw InputError(at_line(line_no, "more edges than declared in header"));
    }
    edges.push_back(e);
  }
  if (!have_header) throw InputError("line 1: missing \"n m\" header");
  if (static_cast<long long>(edges.size()) != m) {
    throw InputError("line " + std::to_string(line_no) + ": expected " + std::to_string(m) +
                     " edges, found " + std::to_string(edges.size()));
  }
  return Graph(n, std::move(edges));
}

std::string serialize(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::vector<VertexSet> components(const Graph& g) {
  const int n = g.order();
  std::vector<int> label(n, -1);
  std::vector<VertexSet> result;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    const int id = static_cast<int>(result.size());
    std::vector<Vertex> members;
    label[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (label[w] < 0) {
          label[w] = id;
          stack.push_back(w);
        }
      }
    }
    result.emplace_back(std::move(members));
  }
  return result;
}

int component_count(const Graph& g) { return static_cast<int>(components(g).size()); }

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  InducedSubgraph sub;
  sub.from_parent.assign(g.order(), -1);
  for (Vertex v : keep) {
    if (v < 0 || v >= g.order()) throw InputError("vertex " + std::to_string(v) + " out of range");
    sub.from_parent[v] = static_cast<int>(sub.to_parent.size());
    sub.to_parent.push_back(v);
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    if (sub.from_parent[u] >= 0 && sub.from_parent[v] >= 0) {
      edges.emplace_back(sub.from_parent[u], sub.from_parent[v]);
    }
  }
  sub.graph = Graph(static_cast<int>(sub.to_parent.size()), std::move(edges));
  return sub;
}

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& removed) {
  std::vector<Vertex> keep;
  for (Vertex v : removed) {
    if (v < 0 || v >= g.order()) throw InputError("vertex " + std::to_string(v) + " out of range");
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!removed.contains(v)) keep.push_back(v);
  }
  return induced_subgraph(g, VertexSet(std::move(keep)));
}

Graph delete_vertex(const Graph& g, Vertex v) { return delete_vertices(g, VertexSet{v}).graph; }

bool is_forest(const Graph& g) { return g.size() + component_count(g) == g.order(); }

bool is_connected(const Graph& g) { return g.order() > 0 && component_count(g) == 1; }

bool is_tree(const Graph& g) { return is_connected(g) && g.size() == g.order() - 1; }

std::vector<Vertex> cut_vertices(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<bool> cut(n, false);
  int timer = 0;

  // Iterative Hopcroft-Tarjan to keep deep paths off the call stack.
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
    int children;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<Frame> stack{{root, -1, 0, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        Vertex w = nbrs[f.next++];
        if (w == f.parent) continue;
        if (disc[w] >= 0) {
          low[f.v] = std::min(low[f.v], disc[w]);
        } else {
          disc[w] = low[w] = timer++;
          ++f.children;
          stack.push_back({w, f.v, 0, 0});
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        Frame& up = stack.back();
        low[up.v] = std::min(low[up.v], low[done.v]);
        if (up.parent >= 0 && low[done.v] >= disc[up.v]) cut[up.v] = true;
      } else if (done.children >= 2) {
        cut[done.v] = true;
      }
    }
  }
  std::vector<Vertex> result;
  for (Vertex v = 0; v < n; ++v) {
    if (cut[v]) result.push_back(v);
  }
  return result;
}

std::vector<SplitPiece> split_at(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) throw InputError("vertex " + std::to_string(v) + " out of range");
  const auto rest = delete_vertices(g, VertexSet{v});
  const auto parts = components(rest.graph);
  const int before = component_count(g);
  // v itself being an isolated vertex does not make it a cut vertex.
  if (static_cast<int>(parts.size()) <= before || g.degree(v) == 0) {
    throw InputError("vertex " + std::to_string(v) + " is not a cut vertex");
  }
  // The summands live inside v's own component.
  std::vector<SplitPiece> pieces;
  for (const auto& part : parts) {
    std::vector<Vertex> members;
    bool touches_v = false;
    for (Vertex w : part) {
      const Vertex old = rest.to_parent[w];
      members.push_back(old);
      touches_v = touches_v || g.has_edge(old, v);
    }
    if (!touches_v) continue;
    members.push_back(v);
    auto sub = induced_subgraph(g, VertexSet(members));
    pieces.push_back({std::move(sub.graph), sub.to_parent, sub.from_parent[v]});
  }
  if (pieces.size() < 2) throw InputError("vertex " + std::to_string(v) + " is not a cut vertex");
  auto smallest_other = [v](const SplitPiece& p) {
    for (Vertex w : p.to_parent) {
      if (w != v) return w;
    }
    return v;
  };
  std::stable_sort(pieces.begin(), pieces.end(), [&](const SplitPiece& a, const SplitPiece& b) {
    return smallest_other(a) < smallest_other(b);
  });
  return pieces;
}

Graph vertex_sum(std::span<const RootedGraph> parts) {
  if (parts.empty()) return Graph();
  std::vector<Edge> edges = parts[0].graph.edges();
  const Vertex root = parts[0].root;
  int next = parts[0].graph.order();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const auto& part = parts[i];
    std::vector<Vertex> map(part.graph.order());
    for (Vertex w = 0; w < part.graph.order(); ++w) map[w] = (w == part.root) ? root : next++;
    for (const auto& [a, b] : part.graph.edges()) edges.emplace_back(map[a], map[b]);
  }
  return Graph(next, std::move(edges));
}

Graph disjoint_union(std::span<const Graph> parts) {
  std::vector<Edge> edges;
  int offset = 0;
  for (const auto& g : parts) {
    for (const auto& [a, b] : g.edges()) edges.emplace_back(a + offset, b + offset);
    offset += g.order();
  }
  return Graph(offset, std::move(edges));
}

std::uint64_t invariant_hash(const Graph& g) {
  auto colour = refined_colours(g);
  std::sort(colour.begin(), colour.end());
  std::uint64_t h = mix(static_cast<std::uint64_t>(g.order()), static_cast<std::uint64_t>(g.size()));
  for (auto c : colour) h = mix(h, c);
  return h;
}

bool isomorphic(const Graph& a, const Graph& b) {
  const int n = a.order();
  if (n != b.order() || a.size() != b.size()) return false;
  const auto ca = refined_colours(a);
  const auto cb = refined_colours(b);
  {
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  // Map vertices of a in an order that keeps each new vertex adjacent to
  // already-mapped ones where possible, so adjacency checks prune early.
  std::vector<Vertex> order;
  std::vector<bool> placed(n, false);
  for (Vertex s = 0; s < n; ++s) {
    if (placed[s]) continue;
    std::vector<Vertex> queue{s};
    placed[s] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      order.push_back(queue[i]);
      for (Vertex w : a.neighbors(queue[i])) {
        if (!placed[w]) {
          placed[w] = true;
          queue.push_back(w);
        }
      }
    }
  }
  std::vector<Vertex> image(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
    if (depth == order.size()) return true;
    const Vertex u = order[depth];
    for (Vertex cand = 0; cand < n; ++cand) {
      if (used[cand] || cb[cand] != ca[u]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < depth && ok; ++j) {
        const Vertex prev = order[j];
        ok = a.has_edge(u, prev) == b.has_edge(cand, image[prev]);
      }
      if (!ok) continue;
      image[u] = cand;
      used[cand] = true;
      if (extend(depth + 1)) return true;
      used[cand] = false;
      image[u] = -1;
    }
    return false;
  };
  return extend(0);
}

namespace graphs {

Graph empty(int n) { return Graph(n); }

Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

Graph star(int n) {
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.emplace_back(0, i);
  return Graph(n, std::move(e));
}

Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

Graph cycle(int n) {
  if (n < 3) throw InputError("a cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(e));
}

Graph sun(int k) {
  if (k < 3) throw InputError("a sun needs a cycle of length at least 3");
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i) {
    e.emplace_back(i, (i + 1) % k);
    e.emplace_back(i, k + i);
  }
  return Graph(2 * k, std::move(e));
}

Graph star_leaf_sum(int k) {
  if (k < 1) throw InputError("need at least one star");
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i) {
    const int c = 1 + 3 * i;
    e.emplace_back(0, c);
    e.emplace_back(c, c + 1);
    e.emplace_back(c, c + 2);
  }
  return Graph(1 + 3 * k, std::move(e));
}

Graph star_path_tree() { return Graph(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {3, 5}}); }

}  // namespace graphs

}  // namespace inertia
