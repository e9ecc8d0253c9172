#include "inertia/elementary.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "inertia/errors.hpp"

namespace inertia {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

std::vector<Edge> surviving_edges(const Graph& g, std::uint64_t deleted) {
  std::vector<Edge> out;
  for (const auto& e : g.edges()) {
    if (!(deleted >> e.first & 1) && !(deleted >> e.second & 1)) out.push_back(e);
  }
  return out;
}

// All acyclic subsets of `edges` with exactly `need` members.
void forests_of_size(const std::vector<Edge>& edges, std::size_t next, int need,
                     std::vector<Edge>& chosen, const UnionFind& uf,
                     const std::function<void(const std::vector<Edge>&)>& emit) {
  if (need == 0) {
    emit(chosen);
    return;
  }
  if (edges.size() - next < static_cast<std::size_t>(need)) return;
  const Edge e = edges[next];
  UnionFind with = uf;
  if (with.unite(e.first, e.second)) {
    chosen.push_back(e);
    forests_of_size(edges, next + 1, need - 1, chosen, with, emit);
    chosen.pop_back();
  }
  forests_of_size(edges, next + 1, need, chosen, uf, emit);
}

void check_span_limits(const Graph& g, const SpanOptions& opts) {
  const int limit = opts.full ? std::min(opts.full_max_vertices, opts.max_vertices) : opts.max_vertices;
  if (g.order() > limit || g.order() > 63) {
    throw SearchTooLarge("span enumeration too large: " + std::to_string(g.order()) +
                         " vertices exceeds the cap of " + std::to_string(limit));
  }
}

}  // namespace

LatticeSet elementary_set(const Graph& g, SearchLimits limits) {
  const int n = g.order();
  const auto prof = md_profile(g, n, limits);
  std::vector<Point> corners;
  for (int k = 0; k <= n; ++k) {
    if (prof[k] < k) continue;
    const int rank = n - prof[k] + k;
    for (int x = k; x <= rank - k; ++x) corners.push_back({x, rank - x});
  }
  return LatticeSet(std::move(corners), n);
}

void enumerate_spans(const Graph& g, const std::function<void(const BicoloredSpan&)>& visit,
                     SpanOptions opts) {
  check_span_limits(g, opts);
  const int n = g.order();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    BicoloredSpan span;
    span.deleted = VertexSet::from_mask(s);
    const auto edges = surviving_edges(g, s);
    UnionFind uf(n);
    int forest_size = 0;
    std::vector<Edge> forest;
    for (const auto& e : edges) {
      if (uf.unite(e.first, e.second)) {
        forest.push_back(e);
        ++forest_size;
      }
    }

    if (!opts.full) {
      for (int x = 0; x <= forest_size; ++x) {
        span.x.assign(forest.begin(), forest.begin() + x);
        span.y.assign(forest.begin() + x, forest.end());
        visit(span);
      }
      continue;
    }

    std::vector<Edge> chosen;
    forests_of_size(edges, 0, forest_size, chosen, UnionFind(n), [&](const std::vector<Edge>& f) {
      const int m = static_cast<int>(f.size());
      for (std::uint64_t colour = 0; colour < (std::uint64_t{1} << m); ++colour) {
        span.x.clear();
        span.y.clear();
        for (int i = 0; i < m; ++i) (colour >> i & 1 ? span.x : span.y).push_back(f[i]);
        visit(span);
      }
    });
  }
}

std::vector<Point> color_vectors(const Graph& g, SpanOptions opts) {
  std::set<Point> seen;
  enumerate_spans(g, [&](const BicoloredSpan& span) { seen.insert(span.color_vector()); }, opts);
  return {seen.begin(), seen.end()};
}

LatticeSet elementary_from_spans(const Graph& g, SpanOptions opts) {
  const auto pts = color_vectors(g, opts);
  return truncate(ne_expand(pts), g.order());
}

bool check_elementary_equals_spans(const Graph& g, SpanOptions opts, SearchLimits limits) {
  return elementary_set(g, limits) == elementary_from_spans(g, opts);
}

EvSplit ev_split(const Graph& g, Vertex v, SpanOptions opts) {
  if (v < 0 || v >= g.order()) throw InputError("vertex out of range");
  std::set<Point> del, keep;
  enumerate_spans(
      g, [&](const BicoloredSpan& span) {
        (span.deleted.contains(v) ? del : keep).insert(span.color_vector());
      },
      opts);
  const int n = g.order();
  return {LatticeSet({del.begin(), del.end()}, n), LatticeSet({keep.begin(), keep.end()}, n)};
}

}  // namespace inertia
