#include <gtest/gtest.h>

#include <fstream>

#include "inertia/elementary.hpp"
#include "inertia/errors.hpp"
#include "inertia/inertia_engine.hpp"
#include "oracles.hpp"

using namespace inertia;

namespace {

LatticeSet star_set(int n) {
  // {(n-1,0),(0,n-1)} plus every point with r, s >= 1.
  return LatticeSet({{n - 1, 0}, {1, 1}, {0, n - 1}}, n);
}

LatticeSet cut_set(const Graph& g, bool shortcut = true) {
  CutOptions opts;
  opts.degree_two_shortcut = shortcut;
  return inertia_cut_recursive(g, BaseRegistry::defaults(), opts).set;
}

}  // namespace

TEST(Registry, Families) {
  const auto& reg = BaseRegistry::defaults();
  EXPECT_EQ(reg.lookup(graphs::empty(1))->set, make_region(0, 1, 1));
  EXPECT_EQ(reg.lookup(graphs::path(2))->set, make_region(1, 2, 2));
  EXPECT_EQ(reg.lookup(graphs::complete(6))->set, make_region(1, 6, 6));
  EXPECT_EQ(reg.lookup(graphs::path(7))->set, make_region(6, 7, 7));
  EXPECT_EQ(reg.lookup(graphs::star(6))->set, star_set(6));
  EXPECT_FALSE(reg.lookup(graphs::cycle(5)).has_value());
  EXPECT_FALSE(reg.lookup(graphs::sun(3)).has_value());
}

TEST(Registry, FamilyNames) {
  EXPECT_TRUE(isomorphic(*family_graph("C5"), graphs::cycle(5)));
  EXPECT_TRUE(isomorphic(*family_graph("S4"), graphs::star(4)));
  EXPECT_FALSE(family_graph("Q3").has_value());
  EXPECT_THROW(family_graph("C2"), InputError);
}

TEST(Registry, LoadUserEntries) {
  BaseRegistry reg;
  reg.load_file(DATA_DIR "/registry_example.json");
  ASSERT_EQ(reg.user_entries().size(), 1u);
  const auto hit = reg.lookup(graphs::cycle(4));
  ASSERT_TRUE(hit.has_value());
  EXPECT_FALSE(hit->verified);
  EXPECT_EQ(hit->set.corners(), (std::vector<Point>{{0, 2}, {1, 1}, {2, 0}}));

  // An explicit edge list is matched up to isomorphism.
  reg.load(nlohmann::json::parse(R"([{"name": "bowtie", "n": 5,
      "edges": [[0,1],[0,2],[1,2],[0,3],[0,4],[3,4]], "corners": [[1,0],[0,1]]}])"));
  const Graph relabeled(5, {{0, 4}, {1, 4}, {0, 1}, {2, 4}, {3, 4}, {2, 3}});
  EXPECT_TRUE(reg.lookup(relabeled).has_value());
}

TEST(Registry, RejectsMalformedEntries) {
  BaseRegistry reg;
  EXPECT_THROW(reg.load(nlohmann::json::parse(R"({"name": "C4"})")), InputError);
  EXPECT_THROW(reg.load(nlohmann::json::parse(R"([{"name": "C4", "n": 5, "corners": [[1,1]]}])")), InputError);
  EXPECT_THROW(reg.load(nlohmann::json::parse(R"([{"name": "C4", "n": 4, "corners": [[2,0]]}])")), InputError);
  EXPECT_THROW(reg.load(nlohmann::json::parse(R"([{"name": "blob", "n": 4, "corners": [[1,1]]}])")), InputError);
  EXPECT_THROW(reg.load_file("/nonexistent/registry.json"), InputError);
}

TEST(Registry, UserEntryOverridesBuiltIn) {
  BaseRegistry reg;
  reg.load_file(TEST_DATA_DIR "/corrupt_registry.json");
  EXPECT_EQ(reg.lookup(graphs::star(4))->set.corners(), (std::vector<Point>{{0, 2}, {1, 1}, {2, 0}}));
}

TEST(Forest, StarSet) {
  const auto got = inertia_forest(graphs::star(4));
  EXPECT_EQ(got.provenance, Provenance::ForestFormula);
  oracle::PointSet expect{{3, 0}, {4, 0}, {0, 3}, {0, 4}};
  for (int r = 1; r <= 3; ++r)
    for (int s = 1; r + s <= 4; ++s) expect.insert({r, s});
  EXPECT_EQ(oracle::members(got.set), expect);
}

TEST(Forest, StarPathTree) {
  const auto q = inertia_forest(graphs::star_path_tree()).set;
  EXPECT_EQ(q.cap(), 6);
  EXPECT_EQ(q.corners(), (std::vector<Point>{{0, 5}, {1, 3}, {2, 2}, {3, 1}, {5, 0}}));
  EXPECT_EQ(q.count(), 16u);
}

TEST(Forest, FourStars) {
  const Graph t = graphs::star_leaf_sum(4);
  const auto q = inertia_forest(t).set;
  EXPECT_EQ(q.cap(), 13);
  EXPECT_EQ(pi_profile(t), (std::vector<int>{12, 9, 8, 6, 4}));
  EXPECT_EQ(l_stripe(t).points(), (std::vector<Point>{{4, 4}}));
  std::vector<Point> expect{{0, 12}, {1, 9}, {2, 8}, {3, 6}, {4, 4}, {6, 3}, {8, 2}, {9, 1}, {12, 0}};
  EXPECT_EQ(q.corners(), expect);
}

TEST(Forest, FiveStarsNonConvexPair) {
  const auto q = inertia_forest(graphs::star_leaf_sum(5)).set;
  EXPECT_TRUE(q.contains(11, 1));
  EXPECT_TRUE(q.contains(5, 5));
  EXPECT_FALSE(q.contains(8, 3));
}

TEST(Forest, RejectsCycles) { EXPECT_THROW(inertia_forest(graphs::cycle(5)), NotAForest); }

TEST(Forest, PiAndStripes) {
  EXPECT_EQ(pi_profile(graphs::star_path_tree()), (std::vector<int>{5, 3}));
  EXPECT_EQ(l_stripe(graphs::star_path_tree()).points(), (std::vector<Point>{{1, 3}, {2, 2}, {3, 1}}));
  for (int n = 2; n <= 8; ++n) {
    EXPECT_EQ(pi_profile(graphs::path(n)), (std::vector<int>{n - 1}));
    EXPECT_EQ(l_stripe(graphs::path(n)).r_values.size(), static_cast<std::size_t>(n));
  }
  EXPECT_THROW(pi_profile(graphs::empty(2)), InputError);
}

TEST(Forest, MsrFromInertia) {
  const auto& reg = BaseRegistry::defaults();
  for (int n = 2; n <= 8; ++n) {
    EXPECT_EQ(msr_from_inertia(reg.lookup(graphs::star(n))->set), n - 1);
    EXPECT_EQ(msr_from_inertia(reg.lookup(graphs::complete(n))->set), 1);
  }
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& f : oracle::forests(n)) {
      EXPECT_EQ(msr_from_inertia(inertia_forest(f).set), n - component_count(f));
    }
  }
}

TEST(Forest, ShapeInvariants) {
  for (int n = 1; n <= 9; ++n) {
    for (const Graph& t : oracle::trees(n)) {
      const auto q = inertia_forest(t).set;
      EXPECT_TRUE(is_symmetric(q));
      EXPECT_TRUE(stripes_convex(q));
      EXPECT_TRUE(is_subset(make_region(n - 1, n, n), q));
      const auto tp = tree_params(t);
      const auto l = l_stripe(t);
      EXPECT_EQ(l, stripe_slice(q, tp.min_rank));
      for (const Point& p : l.points()) EXPECT_TRUE(q.contains(p));
      EXPECT_TRUE(to_partition(q).symmetric());
    }
  }
}

TEST(Forest, ComponentsAdd) {
  for (int n = 2; n <= 8; ++n) {
    for (const Graph& f : oracle::forests(n)) {
      LatticeSet acc({{0, 0}}, 0);
      for (const auto& comp : components(f)) acc = minkowski_sum(acc, inertia_forest(induced_subgraph(f, comp).graph).set);
      EXPECT_EQ(inertia_forest(f).set, acc);
    }
  }
}

TEST(Cut, StarPathTreeBothBranches) {
  const Graph t = graphs::star_path_tree();
  const auto expect = inertia_forest(t).set;
  EXPECT_EQ(cut_set(t, true), expect);
  EXPECT_EQ(cut_set(t, false), expect);
  const auto res = inertia_cut_recursive(t, BaseRegistry::defaults());
  EXPECT_EQ(res.provenance, Provenance::CutVertexRecursion);
  EXPECT_FALSE(res.unverified);
}

TEST(Cut, DegreeTwoShortcut) {
  const Graph t = graphs::star_leaf_sum(2);
  const auto fast = cut_set(t, true);
  EXPECT_EQ(fast, cut_set(t, false));
  EXPECT_EQ(fast.cap(), 7);
  EXPECT_EQ(fast.corners(), (std::vector<Point>{{0, 6}, {1, 4}, {2, 2}, {4, 1}, {6, 0}}));
  EXPECT_EQ(stripe_slice(fast, 4).points(), (std::vector<Point>{{2, 2}}));
}

TEST(Cut, MatchesForestFormulaOnAllSmallTrees) {
  for (int n = 1; n <= 9; ++n) {
    for (const Graph& t : oracle::trees(n)) EXPECT_EQ(cut_set(t), inertia_forest(t).set) << serialize(t);
  }
}

TEST(Cut, MemoReusesIsomorphicBranches) {
  CutRecursion rec(BaseRegistry::defaults());
  const auto res = rec.run(graphs::star_leaf_sum(4));
  EXPECT_EQ(res.set, inertia_forest(graphs::star_leaf_sum(4)).set);
  EXPECT_GT(rec.memo_hits(), 0u);
}

TEST(Cut, CompleteBlocksGlued) {
  // Two triangles sharing a vertex: a cut vertex of degree 4 over K3 blocks.
  const Graph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
  const auto q = cut_set(bowtie);
  EXPECT_TRUE(is_symmetric(q));
  EXPECT_EQ(q.cap(), 5);
  // Sum of K3 pieces gives rank >= 2; deleting the centre gives 2 K2 plus (1,1).
  EXPECT_EQ(q.corners(), (std::vector<Point>{{0, 2}, {1, 1}, {2, 0}}));
}

TEST(Cut, UnknownBlockIsNamed) {
  try {
    cut_set(graphs::cycle(5));
    FAIL() << "expected UnknownBlock";
  } catch (const UnknownBlock& e) {
    EXPECT_NE(std::string(e.what()).find("cycle C5"), std::string::npos);
  }
  // A pendant on C4 still reaches the cycle.
  const Graph tadpole(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}});
  EXPECT_THROW(cut_set(tadpole), UnknownBlock);
}

TEST(Cut, UserBlockMarksResultUnverified) {
  BaseRegistry reg;
  reg.load_file(DATA_DIR "/registry_example.json");
  const Graph tadpole(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}});
  const auto res = inertia_cut_recursive(tadpole, reg);
  EXPECT_TRUE(res.unverified);
  EXPECT_TRUE(is_symmetric(res.set));
  EXPECT_EQ(res.set.cap(), 5);
}

TEST(Cut, DisconnectedInputsAdd) {
  const Graph g = disjoint_union(std::vector<Graph>{graphs::complete(3), graphs::star(4)});
  const auto q = cut_set(g);
  EXPECT_EQ(q, minkowski_sum(make_region(1, 3, 3), star_set(4)));
}

TEST(Sandwich, VertexDeletion) {
  for (int n = 2; n <= 9; ++n) {
    for (const Graph& t : oracle::trees(n)) {
      const auto q = inertia_forest(t).set;
      for (Vertex v = 0; v < n; ++v) {
        const auto minus = inertia_forest(delete_vertex(t, v)).set;
        EXPECT_TRUE(is_subset(truncate(q, n - 1), minus));
        EXPECT_TRUE(is_subset(minkowski_sum(truncate(minus, n - 2), singleton({1, 1})), q));
      }
    }
  }
}

TEST(Sandwich, PendantGrowth) {
  for (int n = 2; n <= 9; ++n) {
    for (const Graph& t : oracle::trees(n)) {
      const auto q = inertia_forest(t).set;
      for (Vertex v = 0; v < n; ++v) {
        if (t.degree(v) != 1) continue;
        for (const Point& p : inertia_forest(delete_vertex(t, v)).set.members()) {
          EXPECT_TRUE(q.contains(p.r + 1, p.s));
          EXPECT_TRUE(q.contains(p.r, p.s + 1));
        }
      }
    }
  }
}
