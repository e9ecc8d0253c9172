#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "inertia/elementary.hpp"
#include "inertia/errors.hpp"
#include "inertia/g12.hpp"
#include "inertia/inertia_engine.hpp"
#include "inertia/matrix_io.hpp"
#include "inertia/sampling.hpp"
#include "inertia/square_breaker.hpp"
#include "inertia/sym_matrix.hpp"
#include "inertia/witness.hpp"
#include "oracles.hpp"

using namespace inertia;

namespace {

RationalMatrix random_rational(int n, std::mt19937& rng, double density = 0.6) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  std::bernoulli_distribution keep(density);
  RationalMatrix a = RationalMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (!keep(rng)) continue;
      a(i, j) = a(j, i) = Rational(num(rng)) / den(rng);
    }
  }
  return a;
}

// Low-rank integer product, so that zero diagonals and 2x2 pivots are common.
RationalMatrix random_low_rank(int n, int rank, std::mt19937& rng) {
  std::uniform_int_distribution<int> entry(-2, 2);
  RationalMatrix b(rank, n), w = RationalMatrix::Zero(rank, rank);
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < n; ++j) b(i, j) = entry(rng);
    w(i, i) = entry(rng);
  }
  return b.transpose() * w * b;
}

PartialInertia negated(PartialInertia p) { return {p.neg, p.pos, p.zero}; }

}  // namespace

TEST(Inertia, KnownMatrices) {
  for (int n = 1; n <= 6; ++n) {
    const RationalMatrix j = RationalMatrix::Constant(n, n, Rational(1));
    EXPECT_EQ(inertia_exact(j), (PartialInertia{1, 0, n - 1}));
    EXPECT_EQ(inertia_exact(RationalMatrix(-j)), (PartialInertia{0, 1, n - 1}));
  }
  for (int n = 2; n <= 7; ++n) EXPECT_EQ(inertia_exact(adjacency_matrix(graphs::star(n))), (PartialInertia{1, 1, n - 2}));
  const RationalMatrix m = g12::m13();
  EXPECT_EQ(inertia_exact(RationalMatrix(m.transpose() * m)), (PartialInertia{3, 0, 10}));
}

TEST(Inertia, ZeroDiagonalNeedsTwoByTwoPivot) {
  RationalMatrix a = RationalMatrix::Zero(2, 2);
  a(0, 1) = a(1, 0) = 3;
  EXPECT_EQ(inertia_exact(a), (PartialInertia{1, 1, 0}));
  EXPECT_EQ(inertia_exact(adjacency_matrix(graphs::cycle(4))), (PartialInertia{1, 1, 2}));
  EXPECT_EQ(inertia_exact(adjacency_matrix(graphs::complete(4))), (PartialInertia{1, 3, 0}));
}

TEST(Inertia, ExactAgreesWithEigenvalues) {
  std::mt19937 rng(1);
  int compared = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + trial % 7;
    const RationalMatrix a = trial % 3 == 0 ? random_low_rank(n, 1 + trial % n, rng) : random_rational(n, rng);
    const Eigen::MatrixXd d = to_double(a);
    const Eigen::VectorXd eig = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(d).eigenvalues();
    // Skip the badly conditioned ones where a float count is not trustworthy.
    bool clear = true;
    for (double v : eig) clear = clear && (std::abs(v) > 1e-6 || std::abs(v) < 1e-11);
    if (!clear) continue;
    ++compared;
    EXPECT_EQ(inertia_exact(a), inertia_from_eigenvalues(eig, 1e-9));
  }
  EXPECT_GT(compared, 900);
}

TEST(Inertia, InterlacingUnderPrincipalDeletion) {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + trial % 6;
    const RationalMatrix a = trial % 2 ? random_low_rank(n, 1 + trial % n, rng) : random_rational(n, rng);
    const PartialInertia full = inertia_exact(a);
    const int drop = trial % n;
    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
      if (i != drop) keep.push_back(i);
    RationalMatrix sub(n - 1, n - 1);
    for (int i = 0; i < n - 1; ++i)
      for (int j = 0; j < n - 1; ++j) sub(i, j) = a(keep[i], keep[j]);
    const PartialInertia p = inertia_exact(sub);
    EXPECT_LE(p.pos, full.pos);
    EXPECT_LE(p.neg, full.neg);
    EXPECT_GE(p.pos, full.pos - 1);
    EXPECT_GE(p.neg, full.neg - 1);
  }
}

TEST(Inertia, SubadditiveRankOneAndNegation) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 6;
    const RationalMatrix a = random_rational(n, rng), b = random_low_rank(n, 2, rng);
    const auto pa = inertia_exact(a), pb = inertia_exact(b), pc = inertia_exact(RationalMatrix(a + b));
    EXPECT_LE(pc.pos, pa.pos + pb.pos);
    EXPECT_LE(pc.neg, pa.neg + pb.neg);

    RationalMatrix x(n, 1);
    for (int i = 0; i < n; ++i) x(i, 0) = entry(rng);
    const int c = entry(rng);
    const auto pr = inertia_exact(RationalMatrix(a + x * x.transpose() * Rational(c)));
    EXPECT_LE(pr.pos, pa.pos + (c > 0));
    EXPECT_LE(pr.neg, pa.neg + (c < 0));

    EXPECT_EQ(inertia_exact(RationalMatrix(-a)), negated(pa));
  }
}

TEST(Inertia, PatternOf) {
  const RationalMatrix a = adjacency_matrix(graphs::sun(4));
  EXPECT_EQ(pattern_of(a), graphs::sun(4));
  Eigen::MatrixXd d = Eigen::MatrixXd::Identity(3, 3);
  d(0, 2) = d(2, 0) = 1e-12;
  EXPECT_EQ(pattern_of(d, 1e-9).size(), 0);
  EXPECT_EQ(pattern_of(d).size(), 1);
  EXPECT_THROW(pattern_of(Eigen::MatrixXd(2, 3)), InputError);
}

TEST(Witness, FullRank) {
  const auto k3 = witness_full_rank(graphs::complete(3), 3, 0);
  EXPECT_TRUE(verify_witness(graphs::complete(3), k3, 3, 0).ok());
  const auto p5 = witness_full_rank(graphs::path(5), 2, 3);
  EXPECT_TRUE(verify_witness(graphs::path(5), p5, 2, 3).ok());
  for (unsigned seed = 0; seed < 20; ++seed) {
    const Graph g = oracle::random_graph(7, 0.5, seed);
    const auto pos = witness_full_rank(g, 7, 0), neg = witness_full_rank(g, 0, 7);
    EXPECT_TRUE(verify_witness(g, pos, 7, 0).ok());
    EXPECT_TRUE(verify_witness(g, neg, 0, 7).ok());
    EXPECT_EQ(inertia_exact(RationalMatrix(-pos)), inertia_exact(neg));
  }
  EXPECT_THROW(witness_full_rank(graphs::path(3), 1, 1), InputError);
}

TEST(Witness, TreeCorankOne) {
  const auto p2 = witness_tree_corank1(graphs::path(2), 1, 0);
  EXPECT_EQ(inertia_exact(p2), (PartialInertia{1, 0, 1}));
  EXPECT_NE(p2(0, 1), Rational(0));
  EXPECT_TRUE(verify_witness(graphs::star(4), witness_tree_corank1(graphs::star(4), 2, 1), 2, 1).ok());
  EXPECT_TRUE(verify_witness(graphs::path(5), witness_tree_corank1(graphs::path(5), 0, 4), 0, 4).ok());
  for (int n = 2; n <= 8; ++n) {
    for (const Graph& t : oracle::trees(n)) {
      for (int a = 0; a < n; ++a) EXPECT_TRUE(verify_witness(t, witness_tree_corank1(t, a, n - 1 - a), a, n - 1 - a).ok());
    }
  }
  EXPECT_THROW(witness_tree_corank1(graphs::empty(2), 0, 1), InputError);
  EXPECT_THROW(witness_tree_corank1(graphs::cycle(3), 1, 1), NotAForest);
}

TEST(Witness, StarsAndStripes) {
  const Graph s4 = graphs::star(4);
  EXPECT_TRUE(verify_witness(s4, witness_stars_stripes(s4, VertexSet{0}, 1, 1), 1, 1).ok());

  const Graph t = graphs::star_path_tree();
  EXPECT_TRUE(verify_witness(t, witness_stars_stripes(t, VertexSet{3}, 3, 1), 3, 1).ok());

  const Graph four = graphs::star_leaf_sum(4);
  const auto w = witness_stars_stripes(four, VertexSet{1, 4, 7, 10}, 4, 4);
  const auto check = verify_witness(four, w, 4, 4);
  EXPECT_TRUE(check.ok());
  EXPECT_EQ(check.inertia.rank(), 8);

  EXPECT_THROW(witness_stars_stripes(s4, VertexSet{0}, 1, 0), InputError);
  EXPECT_THROW(witness_stars_stripes(graphs::cycle(4), VertexSet{}, 1, 1), InputError);
  // A cycle left after deletion gets a Laplacian-corrected block.
  const Graph c4 = graphs::cycle(4);
  for (int a = 0; a <= 3; ++a) {
    EXPECT_TRUE(verify_witness(c4, witness_stars_stripes(c4, VertexSet{}, a, 3 - a), a, 3 - a).ok());
  }
}

TEST(Witness, NortheastPerturb) {
  const RationalMatrix zero = RationalMatrix::Zero(4, 4);
  const auto d = northeast_perturb(zero, 2, 1);
  EXPECT_EQ(inertia_exact(d), (PartialInertia{2, 1, 1}));
  EXPECT_EQ(pattern_of(d).size(), 0);

  const auto star = northeast_perturb(adjacency_matrix(graphs::star(4)), 2, 1);
  EXPECT_TRUE(verify_witness(graphs::star(4), star, 2, 1).ok());

  const Graph pair = graphs::star_leaf_sum(2);
  const auto w22 = find_witness(pair, 2, 2).matrix;
  EXPECT_TRUE(verify_witness(pair, w22, 2, 2).ok());
  EXPECT_TRUE(verify_witness(pair, northeast_perturb(w22, 3, 3), 3, 3).ok());

  EXPECT_THROW(northeast_perturb(adjacency_matrix(graphs::star(4)), 0, 1), InputError);
  EXPECT_THROW(northeast_perturb(zero, 3, 2), InputError);
}

TEST(Witness, FindOnForestCorners) {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& f : oracle::forests(n)) {
      const auto q = inertia_forest(f).set;
      for (const Point& c : q.corners()) {
        const auto w = find_witness(f, c.r, c.s);
        EXPECT_TRUE(w.constructive);
        EXPECT_TRUE(verify_witness(f, w.matrix, c.r, c.s).ok()) << serialize(f) << c;
      }
    }
  }
  EXPECT_THROW(find_witness(graphs::star(4), 2, 0), InputError);
  EXPECT_THROW(find_witness(graphs::star(4), 3, 2), InputError);
}

TEST(Witness, FindOnGraphsWithCycles) {
  for (unsigned seed = 0; seed < 12; ++seed) {
    const Graph g = oracle::random_graph(6, 0.5, seed);
    const auto e = elementary_set(g);
    for (const Point& c : e.corners()) {
      const auto w = find_witness(g, c.r, c.s);
      EXPECT_TRUE(w.constructive);
      EXPECT_TRUE(verify_witness(g, w.matrix, c.r, c.s).ok()) << serialize(g) << c;
    }
  }
}

TEST(Witness, VerifyRejectsWrongPattern) {
  const auto w = witness_full_rank(graphs::path(3), 3, 0);
  const auto c = verify_witness(graphs::complete(3), w, 3, 0);
  EXPECT_FALSE(c.pattern_ok);
  EXPECT_TRUE(c.inertia_ok);
  EXPECT_FALSE(verify_witness(graphs::path(3), w, 2, 1).ok());
  EXPECT_FALSE(verify_witness(graphs::path(4), w, 3, 0).ok());
}

TEST(Sampling, PathsStayInTopStripes) {
  for (int n = 2; n <= 6; ++n) {
    const auto rep = sample_inertias(graphs::path(n), SampleOptions{.trials = 500});
    for (const Point& p : rep.observed) EXPECT_GE(p.r + p.s, n - 1);
  }
}

TEST(Sampling, TriangleReachesLowRank) {
  const auto rep = sample_inertias(graphs::complete(3), SampleOptions{.trials = 2000});
  EXPECT_TRUE(rep.set.contains(1, 1));
  EXPECT_TRUE(rep.set.contains(2, 1));
  EXPECT_TRUE(rep.set.contains(1, 0) || rep.set.contains(0, 1) || rep.set.contains(2, 0));
}

TEST(Sampling, DeterministicForSeed) {
  const Graph g = oracle::random_graph(6, 0.5, 4);
  const auto a = sample_inertias(g, SampleOptions{.trials = 300, .seed = 42});
  const auto b = sample_inertias(g, SampleOptions{.trials = 300, .seed = 42});
  EXPECT_EQ(a.observed, b.observed);
  EXPECT_EQ(a.matrices, b.matrices);
}

TEST(Sampling, ObservedInsideElementaryForForests) {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& f : oracle::forests(n)) {
      const auto e = elementary_set(f);
      for (const Point& p : sample_inertias(f, SampleOptions{.trials = 300}).observed) EXPECT_TRUE(e.contains(p));
    }
  }
}

TEST(SquareBreaker, PathGram) {
  Eigen::MatrixXd v(2, 3);
  v << 1, 1, 0, 0, 1, 1;
  const Eigen::MatrixXd m = v.transpose() * v;
  const auto br = square_breaker(m);
  EXPECT_EQ(br.input_rank, 2);
  EXPECT_TRUE(br.pattern_preserved);
  EXPECT_LE(br.inertia.pos, 1);
  EXPECT_LE(br.inertia.neg, 1);
  EXPECT_EQ(pattern_of(br.result), graphs::path(3));
}

TEST(SquareBreaker, CubeAxes) {
  for (const RationalMatrix& cols : {g12::m12(), g12::m13()}) {
    const Eigen::MatrixXd m = to_double(RationalMatrix(cols.transpose() * cols));
    const auto br = square_breaker(m);
    EXPECT_TRUE(br.ok());
    EXPECT_EQ(pattern_of(br.result), pattern_of(m));
    EXPECT_LE(br.inertia.pos, 2);
    EXPECT_LE(br.inertia.neg, 2);
    EXPECT_GE(br.margin, 1e-6);
    EXPECT_LT(br.factorization_residual, 1e-9);
  }
}

TEST(SquareBreaker, RejectsBadInput) {
  EXPECT_THROW(square_breaker(Eigen::MatrixXd::Identity(3, 3) * -1.0), InputError);
  Eigen::MatrixXd rank1 = Eigen::MatrixXd::Ones(3, 3);
  EXPECT_THROW(square_breaker(rank1), InputError);
}

TEST(G12, Structure) {
  EXPECT_EQ(g12::labels().size(), 13u);
  EXPECT_EQ(g12::g12().order(), 12);
  EXPECT_EQ(inertia_exact(RationalMatrix(g12::m12().transpose() * g12::m12())), (PartialInertia{3, 0, 9}));
  std::vector<Vertex> ten;
  for (int i = 1; i <= 10; ++i) ten.push_back(g12::index_of(std::to_string(i)));
  const Graph sub = induced_subgraph(g12::g13(), VertexSet(ten)).graph;
  EXPECT_TRUE(isomorphic(sub, g12::petersen_complement()));
  EXPECT_EQ(g12::petersen_complement().size(), 30);
}

TEST(G12, Certificates) {
  ASSERT_EQ(g12::certificates().size(), 3u);
  for (const auto& cert : g12::certificates()) {
    std::vector<Vertex> gone;
    for (const auto& l : cert.deleted) gone.push_back(g12::index_of(l));
    const Graph target = delete_vertices(g12::g13(), VertexSet(gone)).graph;
    const RationalMatrix a = cert.m.transpose() * cert.d * cert.m;
    EXPECT_TRUE(verify_witness(target, a, 2, 1).ok()) << cert.name;
  }
}

TEST(G12, Suite) {
  const auto rep = g12::run_suite();
  EXPECT_TRUE(rep.all_passed());
  EXPECT_EQ(rep.partition.parts, (std::vector<int>{3, 3, 2}));
  EXPECT_TRUE(rep.lower_bound.contains(2, 2));
  EXPECT_FALSE(rep.lower_bound.contains(2, 1));
}

TEST(MatrixIo, Rationals) {
  EXPECT_EQ(parse_rational("-3/6"), Rational(-1) / 2);
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("abc"), InputError);
}

TEST(MatrixIo, JsonRoundTrip) {
  std::mt19937 rng(8);
  const RationalMatrix a = random_rational(5, rng);
  EXPECT_EQ(matrix_from_json(matrix_to_json(a)), a);
  EXPECT_THROW(matrix_from_json(nlohmann::json::parse(R"({"n": 2, "entries": ["1","2","3","4"]})")), InputError);
  EXPECT_THROW(matrix_from_json(nlohmann::json::parse(R"({"n": 2, "entries": ["1","2"]})")), InputError);
  const auto m = matrix_from_json(nlohmann::json::parse(R"({"n": 2, "entries": [1, "1/2", "1/2", 0]})"));
  EXPECT_EQ(m(0, 1), Rational(1) / 2);

  const auto path = std::filesystem::temp_directory_path() / "inertia_matrix_io.json";
  write_matrix(path, a);
  EXPECT_EQ(read_matrix(path), a);
  std::filesystem::remove(path);
}

TEST(MatrixIo, ShippedData) {
  const Graph g = read_graph(DATA_DIR "/g12/g12.txt");
  EXPECT_TRUE(isomorphic(g, g12::g12()));
  const auto m = read_matrix(DATA_DIR "/g12/m12_gram.json");
  EXPECT_TRUE(verify_witness(g, m, 3, 0).ok());
}
