#include "inertia/g12.hpp"

#include <algorithm>
#include <sstream>

#include "inertia/errors.hpp"
#include "inertia/square_breaker.hpp"

namespace inertia::g12 {

namespace {

RationalMatrix from_rows(int cols, std::initializer_list<std::initializer_list<int>> rows) {
  RationalMatrix out(static_cast<Eigen::Index>(rows.size()), cols);
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (int v : row) out(i, j++) = Rational(v);
    ++i;
  }
  return out;
}

std::string text(const PartialInertia& p) {
  std::ostringstream out;
  out << p;
  return out.str();
}

}  // namespace

const std::vector<std::string>& labels() {
  static const std::vector<std::string> names = {"x", "y", "z", "1", "2", "3", "4",
                                                 "5", "6", "7", "8", "9", "10"};
  return names;
}

int index_of(const std::string& label) {
  const auto& names = labels();
  const auto it = std::find(names.begin(), names.end(), label);
  if (it == names.end()) throw InputError("unknown G13 vertex label " + label);
  return static_cast<int>(it - names.begin());
}

RationalMatrix m13() {
  return from_rows(13, {{1, 0, 0, 0, 1, 1, 0, -1, 1, 1, -1, -1, 1},
                        {0, 1, 0, 1, 0, 1, 1, 0, -1, -1, 1, -1, 1},
                        {0, 0, 1, 1, 1, 0, -1, 1, 0, -1, -1, 1, 1}});
}

RationalMatrix m12() { return m13().leftCols(12); }

Graph orthogonality_graph(const RationalMatrix& columns) {
  const RationalMatrix gram = columns.transpose() * columns;
  return pattern_of(gram);
}

Graph g13() { return orthogonality_graph(m13()); }

Graph g12() { return delete_vertex(g13(), index_of("10")); }

Graph petersen_complement() {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
  std::vector<Edge> edges;
  for (int i = 0; i < 10; ++i) {
    for (int j = i + 1; j < 10; ++j) {
      const auto [a, b] = pairs[i];
      const auto [c, d] = pairs[j];
      if (a == c || a == d || b == c || b == d) edges.emplace_back(i, j);
    }
  }
  return Graph(10, std::move(edges));
}

const std::vector<Certificate>& certificates() {
  static const std::vector<Certificate> certs = [] {
    std::vector<Certificate> out;
    out.push_back({"G13 - x",
                   {"x"},
                   from_rows(3, {{3, 0, 0}, {0, 1, 0}, {0, 0, -2}}),
                   from_rows(12, {{0, 2, -1, 1, 1, -1, 0, 1, 0, 1, 0, 1},
                                  {1, 0, 1, 0, -1, -1, 0, 1, -2, 3, 2, -3},
                                  {0, 3, 1, 0, 1, 1, 1, 1, 1, 0, 1, 0}})});
    out.push_back({"G13 - 3",
                   {"3"},
                   from_rows(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}),
                   from_rows(12, {{1, 0, 0, 0, 2, 0, 1, -1, 1, 4, 1, 2},
                                  {0, 1, 0, 2, 0, 1, 0, 1, 4, 1, 1, 2},
                                  {0, 0, 1, 1, 1, 2, 2, 0, 2, 2, 2, 1}})});
    out.push_back({"G13 - {7,8}",
                   {"7", "8"},
                   from_rows(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}),
                   from_rows(11, {{1, 0, 0, 0, 2, 1, 0, 1, -1, 1, 2},
                                  {0, 1, 0, 2, 0, 1, 1, 0, 1, 1, 2},
                                  {0, 0, 1, 1, 1, 0, 2, 2, 0, 2, 1}})});
    return out;
  }();
  return certs;
}

bool Report::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

Report run_suite() {
  Report rep;

  const RationalMatrix gram12 = m12().transpose() * m12();
  const PartialInertia p12 = inertia_exact(gram12);
  rep.checks.push_back({"pin(M12^T M12) = (3,0,9)", p12 == PartialInertia{3, 0, 9}, text(p12)});

  const RationalMatrix gram13 = m13().transpose() * m13();
  const PartialInertia p13 = inertia_exact(gram13);
  rep.checks.push_back({"pin(M13^T M13) = (3,0,10)", p13 == PartialInertia{3, 0, 10}, text(p13)});

  std::vector<Vertex> cube_vertices;
  for (int i = 1; i <= 10; ++i) cube_vertices.push_back(index_of(std::to_string(i)));
  const Graph sub = induced_subgraph(g13(), VertexSet(cube_vertices)).graph;
  rep.checks.push_back({"vertices 1-10 of G13 induce the Petersen complement",
                        isomorphic(sub, petersen_complement()),
                        std::to_string(sub.size()) + " edges"});

  for (const auto& cert : certificates()) {
    std::vector<Vertex> gone;
    for (const auto& label : cert.deleted) gone.push_back(index_of(label));
    const Graph target = delete_vertices(g13(), VertexSet(gone)).graph;
    const RationalMatrix a = cert.m.transpose() * cert.d * cert.m;
    const PartialInertia p = inertia_exact(a);
    const bool pattern_ok = pattern_of(a) == target;
    const bool pin_ok = p.pos == 2 && p.neg == 1;
    rep.checks.push_back({"certificate " + cert.name, pattern_ok && pin_ok,
                          std::string("pattern ") + (pattern_ok ? "matches" : "differs") + ", pin " + text(p)});
  }

  const SquareBreak sb = square_breaker(to_double(gram12));
  rep.checks.push_back({"square breaker on M12^T M12", sb.ok(), "pin " + text(sb.inertia)});

  // (3,0) from the Gram matrix, (0,3) by negation, (2,2) by northeast
  // perturbation of the square breaker output.
  std::vector<Point> found = {{3, 0}, {0, 3}};
  if (sb.ok()) found.push_back({2, 2});
  rep.lower_bound = LatticeSet(found, 12);
  rep.partition = to_partition(rep.lower_bound);
  std::ostringstream part;
  part << rep.partition;
  rep.checks.push_back({"lower bound has partition (3,3,2)", rep.partition == Partition{{3, 3, 2}}, part.str()});
  return rep;
}

}  // namespace inertia::g12
