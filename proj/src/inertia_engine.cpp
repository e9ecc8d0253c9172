#include "inertia/inertia_engine.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

#include "inertia/errors.hpp"

namespace inertia {

namespace {

LatticeSet star_set(int n) { return LatticeSet({{n - 1, 0}, {1, 1}, {0, n - 1}}, n); }

bool is_complete(const Graph& g) {
  const long long n = g.order();
  return g.size() == n * (n - 1) / 2;
}

bool is_path(const Graph& g) { return is_tree(g) && g.max_degree() <= 2; }

bool is_star(const Graph& g) { return is_tree(g) && g.order() >= 2 && g.max_degree() == g.order() - 1; }

std::string describe_block(const Graph& g) {
  std::ostringstream out;
  out << g.order() << " vertices, edges";
  for (const auto& [u, v] : g.edges()) out << ' ' << u << '-' << v;
  if (g.size() == g.order() && g.max_degree() == 2 && is_connected(g)) out << " (cycle C" << g.order() << ")";
  return out.str();
}

std::vector<Graph> component_graphs(const Graph& g) {
  std::vector<Graph> out;
  for (const auto& comp : components(g)) out.push_back(induced_subgraph(g, comp).graph);
  return out;
}

LatticeSet tree_inertia(const Graph& tree, SearchLimits limits) {
  const TreeParams t = tree_params(tree, limits);
  const int n = t.n;
  std::vector<Point> corners;
  for (int k = 0; k < t.c; ++k) {
    corners.push_back({n - t.md[k], k});
    corners.push_back({k, n - t.md[k]});
  }
  for (int r = t.c; r <= t.min_rank - t.c; ++r) corners.push_back({r, t.min_rank - r});
  return LatticeSet(std::move(corners), n);
}

}  // namespace

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::ForestFormula: return "forest-formula";
    case Provenance::CutVertexRecursion: return "cut-vertex-recursion";
    case Provenance::Registry: return "registry";
    case Provenance::EmpiricalLowerBound: return "empirical-lower-bound";
  }
  return "unknown";
}

std::optional<Graph> family_graph(const std::string& name) {
  static const std::regex pattern("([CKPS])([0-9]+)");
  std::smatch m;
  if (!std::regex_match(name, m, pattern)) return std::nullopt;
  const int n = std::stoi(m[2]);
  switch (m[1].str()[0]) {
    case 'C':
      if (n < 3) throw InputError("cycle needs at least 3 vertices: " + name);
      return graphs::cycle(n);
    case 'K':
      if (n < 1) throw InputError("complete graph needs a vertex: " + name);
      return graphs::complete(n);
    case 'P':
      if (n < 1) throw InputError("path needs a vertex: " + name);
      return graphs::path(n);
    default:
      if (n < 1) throw InputError("star needs a vertex: " + name);
      return graphs::star(n);
  }
}

void BaseRegistry::add(RegistryEntry entry) {
  const int n = entry.graph.order();
  if (entry.set.cap() != n) {
    throw InputError("registry entry " + entry.name + " must be capped at its order " + std::to_string(n));
  }
  if (!is_symmetric(entry.set)) throw InputError("registry entry " + entry.name + " is not symmetric");
  std::erase_if(user_, [&](const RegistryEntry& e) { return isomorphic(e.graph, entry.graph); });
  user_.push_back(std::move(entry));
}

void BaseRegistry::load(const nlohmann::json& entries) {
  if (!entries.is_array()) throw InputError("registry must be a JSON array");
  try {
    for (const auto& item : entries) {
      RegistryEntry e;
      e.name = item.at("name").get<std::string>();
      const int n = item.at("n").get<int>();
      if (item.contains("edges")) {
        std::vector<Edge> edges;
        for (const auto& pair : item.at("edges")) edges.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());
        e.graph = Graph(n, std::move(edges));
      } else if (auto g = family_graph(e.name)) {
        e.graph = *g;
      } else {
        throw InputError("registry entry " + e.name + " names no known family and lists no edges");
      }
      if (e.graph.order() != n) throw InputError("registry entry " + e.name + " has the wrong order");
      nlohmann::json set_json{{"cap", n}, {"corners", item.at("corners")}};
      e.set = lattice_set_from_json(set_json);
      e.note = item.value("note", "");
      e.verified = false;
      add(std::move(e));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("malformed registry: ") + ex.what());
  }
}

void BaseRegistry::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read registry file " + path.string());
  try {
    load(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& ex) {
    throw InputError("registry file " + path.string() + " is not valid JSON: " + ex.what());
  }
}

std::optional<RegistryHit> BaseRegistry::lookup(const Graph& g) const {
  for (const auto& e : user_) {
    if (isomorphic(e.graph, g)) return RegistryHit{e.name, e.set, e.verified};
  }
  const int n = g.order();
  if (n == 0) return RegistryHit{"K0", LatticeSet({{0, 0}}, 0)};
  if (!is_connected(g)) return std::nullopt;
  if (n == 1) return RegistryHit{"K1", make_region(0, 1, 1)};
  if (is_complete(g)) return RegistryHit{"K" + std::to_string(n), make_region(1, n, n)};
  if (is_path(g)) return RegistryHit{"P" + std::to_string(n), make_region(n - 1, n, n)};
  if (is_star(g)) return RegistryHit{"S" + std::to_string(n), star_set(n)};
  return std::nullopt;
}

InertiaResult inertia_forest(const Graph& forest, SearchLimits limits) {
  if (!is_forest(forest)) throw NotAForest();
  std::vector<LatticeSet> parts;
  for (const auto& tree : component_graphs(forest)) parts.push_back(tree_inertia(tree, limits));
  return {truncate(minkowski_sum(parts), forest.order()), Provenance::ForestFormula};
}

std::size_t CutRecursion::memo_size() const {
  std::size_t total = 0;
  for (const auto& [key, bucket] : memo_) total += bucket.size();
  return total;
}

InertiaResult CutRecursion::run(const Graph& g) {
  unverified_ = false;
  LatticeSet set = solve(g);
  return {std::move(set), Provenance::CutVertexRecursion, unverified_};
}

LatticeSet CutRecursion::solve(const Graph& g) {
  if (g.order() == 0 || is_connected(g)) return solve_connected(g);
  std::vector<LatticeSet> parts;
  for (const auto& comp : component_graphs(g)) parts.push_back(solve_connected(comp));
  return truncate(minkowski_sum(parts), g.order());
}

LatticeSet CutRecursion::solve_connected(const Graph& g) {
  const std::uint64_t key = invariant_hash(g);
  auto& bucket = memo_[key];
  for (const auto& e : bucket) {
    if (isomorphic(e.graph, g)) {
      ++hits_;
      return e.set;
    }
  }

  LatticeSet result;
  if (auto hit = registry_.lookup(g)) {
    if (!hit->verified) unverified_ = true;
    result = hit->set;
  } else {
    const auto cuts = cut_vertices(g);
    if (cuts.empty()) throw UnknownBlock("unknown block: " + describe_block(g));
    const Vertex v = *std::max_element(cuts.begin(), cuts.end(), [&](Vertex a, Vertex b) {
      return g.degree(a) < g.degree(b) || (g.degree(a) == g.degree(b) && a > b);
    });
    const int n = g.order();
    const auto pieces = split_at(g, v);
    std::vector<LatticeSet> kept, deleted;
    for (const auto& piece : pieces) kept.push_back(solve(piece.graph));
    result = truncate(minkowski_sum(kept), n);
    if (!(opts_.degree_two_shortcut && g.degree(v) == 2)) {
      for (const auto& piece : pieces) deleted.push_back(solve(delete_vertex(piece.graph, piece.root)));
      deleted.push_back(singleton({1, 1}));
      result = set_union(result, truncate(minkowski_sum(deleted), n));
    }
  }
  bucket.push_back({g, result});
  return result;
}

InertiaResult inertia_cut_recursive(const Graph& g, const BaseRegistry& registry, CutOptions opts) {
  CutRecursion rec(registry, opts);
  return rec.run(g);
}

std::vector<int> pi_profile(const Graph& tree, SearchLimits limits) {
  if (!is_forest(tree)) throw NotAForest();
  if (!is_tree(tree)) throw InputError("pi profile needs a connected tree");
  const TreeParams t = tree_params(tree, limits);
  std::vector<int> pi;
  for (int k = 0; k <= t.c; ++k) {
    pi.push_back(t.n - t.md[k]);
    if (k > 0 && pi[k] >= pi[k - 1]) throw std::logic_error("pi profile is not strictly decreasing");
  }
  return pi;
}

Stripe l_stripe(const Graph& tree, SearchLimits limits) {
  if (!is_forest(tree)) throw NotAForest();
  if (!is_tree(tree)) throw InputError("minimum-rank stripe needs a connected tree");
  const TreeParams t = tree_params(tree, limits);
  Stripe st{t.min_rank, {}};
  for (int r = t.c; r <= t.min_rank - t.c; ++r) st.r_values.push_back(r);
  return st;
}

int msr_from_inertia(const LatticeSet& q) {
  for (const Point& c : q.corners()) {
    if (c.s == 0) return c.r;
  }
  throw std::logic_error("inertia set has no point on the r axis");
}

}  // namespace inertia
