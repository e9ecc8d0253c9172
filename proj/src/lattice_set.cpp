#include "inertia/lattice_set.hpp"

#include <algorithm>
#include <sstream>

#include "inertia/errors.hpp"

namespace inertia {

namespace {

int add_caps(int a, int b) {
  if (a == LatticeSet::kUncapped || b == LatticeSet::kUncapped) return LatticeSet::kUncapped;
  return a + b;
}

// Minimal antichain of `pts`, sorted by increasing r (hence decreasing s).
std::vector<Point> minimize(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  std::vector<Point> out;
  int best_s = std::numeric_limits<int>::max();
  for (const Point& p : pts) {
    if (p.s < best_s) {
      out.push_back(p);
      best_s = p.s;
    }
  }
  return out;
}

}  // namespace

std::ostream& operator<<(std::ostream& os, Point p) { return os << '(' << p.r << ',' << p.s << ')'; }

LatticeSet::LatticeSet(std::vector<Point> generators, int cap) : cap_(cap) {
  if (cap < 0) throw InputError("negative rank cap");
  std::erase_if(generators, [cap](Point p) {
    if (p.r < 0 || p.s < 0) throw InputError("lattice points must be non-negative");
    return cap != kUncapped && static_cast<long long>(p.r) + p.s > cap;
  });
  corners_ = minimize(std::move(generators));
}

bool LatticeSet::contains(Point p) const {
  if (p.r < 0 || p.s < 0) return false;
  if (capped() && static_cast<long long>(p.r) + p.s > cap_) return false;
  return std::any_of(corners_.begin(), corners_.end(), [p](Point c) { return dominates(p, c); });
}

std::vector<Point> LatticeSet::members() const {
  if (!capped()) throw InputError("cannot list the members of an uncapped set");
  std::vector<Point> out;
  for (int s = 0; s <= cap_; ++s)
    for (int r = 0; r + s <= cap_; ++r)
      if (contains(r, s)) out.push_back({r, s});
  return out;
}

std::size_t LatticeSet::count() const { return members().size(); }

bool operator==(const LatticeSet& a, const LatticeSet& b) {
  if (a.empty() && b.empty()) return true;
  return a.cap_ == b.cap_ && a.corners_ == b.corners_;
}

std::ostream& operator<<(std::ostream& os, const LatticeSet& q) {
  os << "{cap ";
  if (q.capped()) {
    os << q.cap();
  } else {
    os << "inf";
  }
  os << ":";
  for (const auto& c : q.corners()) os << ' ' << c;
  return os << '}';
}

LatticeSet make_region(int i, int j, int n) {
  if (i < 0 || i > j || j > n) {
    throw InputError("region bounds must satisfy 0 <= i <= j <= n");
  }
  std::vector<Point> corners;
  for (int a = 0; a <= i; ++a) corners.push_back({a, i - a});
  return LatticeSet(std::move(corners), j);
}

LatticeSet region_at_most(int k) { return LatticeSet({{0, 0}}, k); }

LatticeSet region_at_least(int k) {
  std::vector<Point> corners;
  for (int a = 0; a <= k; ++a) corners.push_back({a, k - a});
  return LatticeSet(std::move(corners), LatticeSet::kUncapped);
}

LatticeSet singleton(Point p) { return LatticeSet({p}, p.r + p.s); }

LatticeSet minkowski_sum(const LatticeSet& q, const LatticeSet& r) {
  const int cap = add_caps(q.cap(), r.cap());
  if (q.empty() || r.empty()) return LatticeSet({}, cap);
  std::vector<Point> sums;
  sums.reserve(q.corners().size() * r.corners().size());
  for (const Point& a : q.corners())
    for (const Point& b : r.corners()) sums.push_back({a.r + b.r, a.s + b.s});
  return LatticeSet(std::move(sums), cap);
}

LatticeSet minkowski_sum(std::span<const LatticeSet> sets) {
  LatticeSet acc({{0, 0}}, 0);
  for (const auto& s : sets) acc = minkowski_sum(acc, s);
  return acc;
}

LatticeSet truncate(const LatticeSet& q, int n) {
  return LatticeSet(q.corners(), std::min(q.cap(), n));
}

LatticeSet set_union(const LatticeSet& a, const LatticeSet& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.cap() != b.cap()) {
    throw InputError("union of lattice sets with different caps is not upward-closed");
  }
  std::vector<Point> pts = a.corners();
  pts.insert(pts.end(), b.corners().begin(), b.corners().end());
  return LatticeSet(std::move(pts), a.cap());
}

bool is_subset(const LatticeSet& a, const LatticeSet& b) {
  if (a.empty()) return true;
  if (a.cap() > b.cap()) return false;
  return std::all_of(a.corners().begin(), a.corners().end(),
                     [&](Point c) { return b.contains(c); });
}

LatticeSet ne_expand(const LatticeSet& q, int cap) { return LatticeSet(q.corners(), cap); }

LatticeSet ne_expand(std::span<const Point> points, int cap) {
  return LatticeSet(std::vector<Point>(points.begin(), points.end()), cap);
}

bool ne_equivalent(const LatticeSet& a, const LatticeSet& b) { return a.corners() == b.corners(); }

LatticeSet reflect(const LatticeSet& q) {
  std::vector<Point> pts;
  for (const Point& c : q.corners()) pts.push_back({c.s, c.r});
  return LatticeSet(std::move(pts), q.cap());
}

bool is_symmetric(const LatticeSet& q) { return reflect(q) == q; }

bool Stripe::symmetric() const {
  std::vector<int> mirrored;
  for (int r : r_values) mirrored.push_back(rank - r);
  std::sort(mirrored.begin(), mirrored.end());
  return mirrored == r_values;
}

bool Stripe::convex() const {
  for (std::size_t i = 1; i < r_values.size(); ++i) {
    if (r_values[i] != r_values[i - 1] + 1) return false;
  }
  return true;
}

std::vector<Point> Stripe::points() const {
  std::vector<Point> out;
  for (int r : r_values) out.push_back({r, rank - r});
  return out;
}

Stripe stripe_slice(const LatticeSet& q, int m) {
  Stripe st{m, {}};
  for (int r = 0; r <= m; ++r) {
    if (q.contains(r, m - r)) st.r_values.push_back(r);
  }
  return st;
}

bool stripes_convex(const LatticeSet& q) {
  if (!q.capped()) throw InputError("stripe convexity needs a finite cap");
  for (int m = 0; m <= q.cap(); ++m) {
    if (!stripe_slice(q, m).convex()) return false;
  }
  return true;
}

bool Partition::symmetric() const { return conjugate(*this) == *this; }

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  os << '(';
  for (std::size_t i = 0; i < p.parts.size(); ++i) os << (i ? "," : "") << p.parts[i];
  return os << ')';
}

Partition to_partition(const LatticeSet& q) {
  if (!q.capped()) throw InputError("inertial partition needs a finite cap");
  auto row_min = [&](int s) -> int {
    for (int r = 0; r + s <= q.cap(); ++r) {
      if (q.contains(r, s)) return r;
    }
    return -1;
  };
  Partition p;
  const int k = row_min(0);
  // Rows are read until a row is empty or would break monotonicity, which
  // only happens for sets that did not come from a graph.
  for (int i = 0; i < k; ++i) {
    const int v = row_min(i);
    if (v <= 0) break;
    if (!p.parts.empty() && v > p.parts.back()) break;
    p.parts.push_back(v);
  }
  return p;
}

Partition conjugate(const Partition& p) {
  Partition out;
  for (int col = 0; col < p.width(); ++col) {
    int boxes = 0;
    for (int v : p.parts) boxes += (v >= col + 1) ? 1 : 0;
    out.parts.push_back(boxes);
  }
  return out;
}

namespace {

std::string pad(const std::string& s, std::size_t w) {
  return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
}

std::string render_ascii(const LatticeSet& q) {
  const int cap = q.cap();
  const std::size_t w = std::to_string(cap).size();
  std::ostringstream out;
  out << pad("s", w) << '\n';
  for (int s = cap; s >= 0; --s) {
    out << pad(std::to_string(s), w) << " |";
    if (!q.empty()) {
      for (int r = 0; r + s <= cap; ++r) {
        out << ' ' << std::string(w - 1, ' ') << (q.contains(r, s) ? "●" : "·");
      }
    }
    out << '\n';
  }
  out << pad("", w) << " +";
  for (int r = 0; r <= cap; ++r) out << std::string(w + 1, '-');
  out << '\n' << pad("", w) << "  ";
  for (int r = 0; r <= cap; ++r) out << ' ' << pad(std::to_string(r), w);
  out << "  r\n";
  return out.str();
}

std::string render_svg(const LatticeSet& q) {
  constexpr int kStep = 11;
  const int cap = q.cap();
  const int margin = 2 * kStep;
  const int size = margin * 2 + cap * kStep;
  auto x = [&](int r) { return margin + r * kStep; };
  auto y = [&](int s) { return size - margin - s * kStep; };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  out << "  <line x1=\"" << x(0) << "\" y1=\"" << y(0) << "\" x2=\"" << x(cap) + kStep
      << "\" y2=\"" << y(0) << "\" stroke=\"black\"/>\n";
  out << "  <line x1=\"" << x(0) << "\" y1=\"" << y(0) << "\" x2=\"" << x(0) << "\" y2=\""
      << y(cap) - kStep << "\" stroke=\"black\"/>\n";
  for (int t = 1; t <= cap; ++t) {
    out << "  <line x1=\"" << x(t) << "\" y1=\"" << y(0) - 2 << "\" x2=\"" << x(t) << "\" y2=\""
        << y(0) + 2 << "\" stroke=\"black\"/>\n";
    out << "  <line x1=\"" << x(0) - 2 << "\" y1=\"" << y(t) << "\" x2=\"" << x(0) + 2
        << "\" y2=\"" << y(t) << "\" stroke=\"black\"/>\n";
  }
  if (!q.empty()) {
    for (const Point& p : q.members()) {
      out << "  <circle cx=\"" << x(p.r) << "\" cy=\"" << y(p.s) << "\" r=\"3\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string render(const LatticeSet& q, RenderStyle style) {
  if (!q.capped()) throw InputError("cannot render an uncapped set");
  return style == RenderStyle::Ascii ? render_ascii(q) : render_svg(q);
}

nlohmann::json to_json(const LatticeSet& q) {
  nlohmann::json corners = nlohmann::json::array();
  for (const Point& c : q.corners()) corners.push_back({c.r, c.s});
  nlohmann::json j;
  j["cap"] = q.capped() ? nlohmann::json(q.cap()) : nlohmann::json(nullptr);
  j["corners"] = std::move(corners);
  return j;
}

LatticeSet lattice_set_from_json(const nlohmann::json& j) {
  try {
    const int cap = j.at("cap").is_null() ? LatticeSet::kUncapped : j.at("cap").get<int>();
    std::vector<Point> pts;
    for (const auto& c : j.at("corners")) {
      if (!c.is_array() || c.size() != 2) throw InputError("corner must be a pair [r,s]");
      pts.push_back({c[0].get<int>(), c[1].get<int>()});
    }
    return LatticeSet(std::move(pts), cap);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed lattice set JSON: ") + e.what());
  }
}

}  // namespace inertia
