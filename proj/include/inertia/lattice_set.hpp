#pragma once

// Capped upward-closed subsets of N^2, the representation used for inertia
// sets. A set is stored as its minimal staircase corners together with a rank
// cap: (r, s) is a member iff r + s <= cap and (r, s) dominates some corner.

#include <compare>
#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace inertia {

struct Point {
  int r = 0;
  int s = 0;
  friend auto operator<=>(const Point&, const Point&) = default;
  friend bool operator==(const Point&, const Point&) = default;
};

inline bool dominates(Point a, Point b) { return a.r >= b.r && a.s >= b.s; }

std::ostream& operator<<(std::ostream& os, Point p);

class LatticeSet {
 public:
  static constexpr int kUncapped = std::numeric_limits<int>::max();

  // The empty set.
  LatticeSet() = default;

  // Upward closure of `generators` within `cap`. Generators above the cap
  // are dropped and dominated ones are discarded.
  LatticeSet(std::vector<Point> generators, int cap);

  int cap() const { return cap_; }
  bool capped() const { return cap_ != kUncapped; }
  bool empty() const { return corners_.empty(); }

  // Minimal antichain sorted by increasing r.
  const std::vector<Point>& corners() const { return corners_; }

  bool contains(Point p) const;
  bool contains(int r, int s) const { return contains(Point{r, s}); }

  // All members in (s, r) order; requires a finite cap.
  std::vector<Point> members() const;
  std::size_t count() const;

  // Equality of membership: empty sets compare equal whatever their caps.
  friend bool operator==(const LatticeSet& a, const LatticeSet& b);

 private:
  int cap_ = 0;
  std::vector<Point> corners_;
};

std::ostream& operator<<(std::ostream& os, const LatticeSet& q);

// N^2_{[i,j]}: points with i <= r + s <= j.
LatticeSet make_region(int i, int j, int n);
// N^2_{<= k}.
LatticeSet region_at_most(int k);
// N^2_{>= k} with no cap.
LatticeSet region_at_least(int k);
// The single point p, capped at its own rank.
LatticeSet singleton(Point p);

LatticeSet minkowski_sum(const LatticeSet& q, const LatticeSet& r);
LatticeSet minkowski_sum(std::span<const LatticeSet> sets);
LatticeSet truncate(const LatticeSet& q, int n);

// Union of two sets; requires equal caps unless one side is empty.
LatticeSet set_union(const LatticeSet& a, const LatticeSet& b);
bool is_subset(const LatticeSet& a, const LatticeSet& b);

// Q + N^2, recapped at `cap` (uncapped by default).
LatticeSet ne_expand(const LatticeSet& q, int cap = LatticeSet::kUncapped);
LatticeSet ne_expand(std::span<const Point> points, int cap = LatticeSet::kUncapped);
bool ne_equivalent(const LatticeSet& a, const LatticeSet& b);

LatticeSet reflect(const LatticeSet& q);
bool is_symmetric(const LatticeSet& q);

// Members of constant rank m, described by their r values.
struct Stripe {
  int rank = 0;
  std::vector<int> r_values;  // increasing

  bool empty() const { return r_values.empty(); }
  bool symmetric() const;
  bool convex() const;
  std::vector<Point> points() const;
  friend bool operator==(const Stripe&, const Stripe&) = default;
};

Stripe stripe_slice(const LatticeSet& q, int m);
bool stripes_convex(const LatticeSet& q);

// Weakly decreasing positive integers; the box diagram of the southwest
// complement of an inertia set.
struct Partition {
  std::vector<int> parts;

  int height() const { return static_cast<int>(parts.size()); }
  int width() const { return parts.empty() ? 0 : parts.front(); }
  bool symmetric() const;
  friend bool operator==(const Partition&, const Partition&) = default;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

// (pi_0, ..., pi_{k-1}) with k = pi_0 and pi_i = min{r : (r, i) in Q}.
Partition to_partition(const LatticeSet& q);
Partition conjugate(const Partition& p);

enum class RenderStyle { Ascii, Svg };
std::string render(const LatticeSet& q, RenderStyle style);

// {"cap": n, "corners": [[r,s],...]}; an uncapped set writes cap as null.
nlohmann::json to_json(const LatticeSet& q);
LatticeSet lattice_set_from_json(const nlohmann::json& j);

}  // namespace inertia
