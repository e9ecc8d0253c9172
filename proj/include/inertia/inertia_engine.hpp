#pragma once

// Inertia sets I(G): a closed form for forests and a cut-vertex recursion
// over a registry of known blocks for everything else.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "inertia/graph.hpp"
#include "inertia/lattice_set.hpp"
#include "inertia/tree_params.hpp"

namespace inertia {

enum class Provenance { ForestFormula, CutVertexRecursion, Registry, EmpiricalLowerBound };

std::string to_string(Provenance p);

struct InertiaResult {
  LatticeSet set;
  Provenance provenance = Provenance::ForestFormula;
  // Set when some registry entry used along the way came from a user file.
  bool unverified = false;
};

struct RegistryEntry {
  std::string name;
  Graph graph;
  LatticeSet set;
  std::string note;
  bool verified = false;
};

struct RegistryHit {
  std::string name;
  LatticeSet set;
  bool verified = true;
};

// Known inertia sets of atomic blocks. Complete graphs, paths and stars are
// recognised structurally; user entries are matched up to isomorphism and
// take precedence.
class BaseRegistry {
 public:
  // Built-in families only. Shared, so a CutRecursion may hold on to it.
  static const BaseRegistry& defaults() {
    static const BaseRegistry instance;
    return instance;
  }

  // JSON array of {"name", "n", "corners", "note"} with an optional
  // "edges" list; names C<n>, K<n>, P<n>, S<n> imply the graph.
  void load(const nlohmann::json& entries);
  void load_file(const std::filesystem::path& path);
  void add(RegistryEntry entry);

  std::optional<RegistryHit> lookup(const Graph& g) const;
  const std::vector<RegistryEntry>& user_entries() const { return user_; }

 private:
  std::vector<RegistryEntry> user_;
};

// Graph of a named family: C<n>, K<n>, P<n>, S<n>.
std::optional<Graph> family_graph(const std::string& name);

InertiaResult inertia_forest(const Graph& forest, SearchLimits limits = {});

struct CutOptions {
  // Drop the deletion term at cut vertices of degree 2.
  bool degree_two_shortcut = true;
  SearchLimits limits;
};

class CutRecursion {
 public:
  explicit CutRecursion(const BaseRegistry& registry, CutOptions opts = {})
      : registry_(registry), opts_(opts) {}
  CutRecursion(BaseRegistry&&, CutOptions = {}) = delete;

  InertiaResult run(const Graph& g);

  std::size_t memo_hits() const { return hits_; }
  std::size_t memo_size() const;

 private:
  struct Entry {
    Graph graph;
    LatticeSet set;
  };

  LatticeSet solve(const Graph& g);
  LatticeSet solve_connected(const Graph& g);

  const BaseRegistry& registry_;
  CutOptions opts_;
  std::map<std::uint64_t, std::vector<Entry>> memo_;
  std::size_t hits_ = 0;
  bool unverified_ = false;
};

InertiaResult inertia_cut_recursive(const Graph& g, const BaseRegistry& registry, CutOptions opts = {});

// pi_k = n - MD_k for k = 0..c(T); throws if the sequence fails to drop strictly.
std::vector<int> pi_profile(const Graph& tree, SearchLimits limits = {});

// Minimum-rank stripe {(r, s) : r + s = mr(T), r >= c, s >= c}.
Stripe l_stripe(const Graph& tree, SearchLimits limits = {});

// Smallest k with (k, 0) in Q.
int msr_from_inertia(const LatticeSet& q);

}  // namespace inertia
