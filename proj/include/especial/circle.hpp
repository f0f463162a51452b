#pragma once

// Exact model of the oriented circle as the one-point compactification of Q.
// Finite parameters run in numeric order, INF sits between the largest and the
// smallest. Every predicate here is exact.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "especial/errors.hpp"
#include "especial/rational.hpp"

namespace especial {

class CirclePoint {
 public:
  CirclePoint(Rational value) : value_(std::move(value)) { value_.canonicalize(); }
  CirclePoint(long value) : value_(value) {}
  CirclePoint(int value) : value_(value) {}

  static CirclePoint infinity() { return CirclePoint(); }

  bool is_infinite() const noexcept { return infinite_; }
  /// Only meaningful when !is_infinite().
  const Rational& value() const noexcept { return value_; }

  /// Anchor order: finite values ascending, INF last. This is the linear order
  /// obtained by cutting the circle just before the smallest finite value.
  friend std::strong_ordering operator<=>(const CirclePoint& a, const CirclePoint& b);
  friend bool operator==(const CirclePoint& a, const CirclePoint& b);

 private:
  CirclePoint() : infinite_(true) {}

  bool infinite_ = false;
  Rational value_;
};

/// "inf", "n" or "p/q".
CirclePoint parse_point(std::string_view text);
std::string to_string(const CirclePoint& p);

enum class Orientation { Positive, Negative, Degenerate };

/// Positive iff going around positively from a reaches b strictly before c.
/// Degenerate iff two arguments coincide.
Orientation cyclic_order(const CirclePoint& a, const CirclePoint& b, const CirclePoint& c);

/// Positively oriented interval from a to b. With a == b the open interval is
/// the circle minus a; any closed flag turns it into the whole circle.
struct OrientedInterval {
  CirclePoint a;
  CirclePoint b;
  bool closed_a = false;
  bool closed_b = false;

  friend bool operator==(const OrientedInterval&, const OrientedInterval&) = default;
};

bool in_interval(const CirclePoint& x, const OrientedInterval& interval);

/// Finite nonempty set of circle points, sorted in anchor order.
class CircleSet {
 public:
  /// Throws std::invalid_argument when empty or when a point repeats.
  explicit CircleSet(std::vector<CirclePoint> points);
  CircleSet(std::initializer_list<CirclePoint> points)
      : CircleSet(std::vector<CirclePoint>(points)) {}

  std::size_t size() const noexcept { return points_.size(); }
  const CirclePoint& operator[](std::size_t k) const { return points_[k]; }
  const std::vector<CirclePoint>& points() const noexcept { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  bool contains(const CirclePoint& x) const;

  /// Where x sits relative to this set: on point `index`, or inside the
  /// complementary interval `index` (interval k runs from point k to point k+1,
  /// the last one wraps back to point 0).
  struct Position {
    bool on_point;
    std::size_t index;
    friend bool operator==(const Position&, const Position&) = default;
  };
  Position locate(const CirclePoint& x) const;

  /// Number of points strictly less than x in anchor order.
  std::size_t rank(const CirclePoint& x) const;

  friend bool operator==(const CircleSet&, const CircleSet&) = default;
  friend auto operator<=>(const CircleSet& a, const CircleSet& b) {
    return a.points_ <=> b.points_;
  }

 private:
  std::vector<CirclePoint> points_;
};

std::string to_string(const CircleSet& s);

/// Open arcs between cyclically consecutive points, in cyclic order from the anchor.
std::vector<OrientedInterval> complementary_intervals(const CircleSet& set);

std::vector<CirclePoint> intersection(const CircleSet& a, const CircleSet& b);
bool disjoint(const CircleSet& a, const CircleSet& b);

/// Some pair of a separates some pair of b (all four points distinct).
bool linked(const CircleSet& a, const CircleSet& b);

class NotDisjoint : public Error {
 public:
  explicit NotDisjoint(const std::string& what) : Error("NotDisjoint", what) {}
};

/// Four interval counts that agree for disjoint sets, computed separately.
struct LinkCounts {
  std::size_t a_intervals_meeting_b = 0;  // complementary intervals of A meeting B
  std::size_t b_intervals_meeting_a = 0;  // complementary intervals of B meeting A
  std::size_t ab_gaps = 0;                // gaps (a, b) of A u B
  std::size_t ba_gaps = 0;                // gaps (b, a) of A u B

  bool consistent() const {
    return a_intervals_meeting_b == b_intervals_meeting_a &&
           a_intervals_meeting_b == ab_gaps && a_intervals_meeting_b == ba_gaps;
  }
};

/// Throws NotDisjoint when a and b share a point.
LinkCounts link_counts(const CircleSet& a, const CircleSet& b);

/// n such that a and b are n-linked (n == 1 iff unlinked). Throws NotDisjoint.
/// A disagreement among the four counts is an internal error (std::logic_error).
std::size_t link_number(const CircleSet& a, const CircleSet& b);

/// Complementary interval of `outer` containing all of `inner`, if there is one.
/// Requires disjoint arguments.
std::optional<std::size_t> enclosing_interval(const CircleSet& outer, const CircleSet& inner);

/// b separates a from c: each of a and c lies inside a single complementary
/// interval of b, and those intervals differ. Throws NotDisjoint unless the
/// three sets are pairwise disjoint.
bool separates(const CircleSet& b, const CircleSet& a, const CircleSet& c);

}  // namespace especial
