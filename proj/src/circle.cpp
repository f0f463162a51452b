#include "especial/circle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace especial {

std::strong_ordering operator<=>(const CirclePoint& a, const CirclePoint& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  const int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

bool operator==(const CirclePoint& a, const CirclePoint& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

CirclePoint parse_point(std::string_view text) {
  if (text == "inf") return CirclePoint::infinity();
  return CirclePoint(parse_rational(text));
}

std::string to_string(const CirclePoint& p) {
  return p.is_infinite() ? std::string("inf") : to_string(p.value());
}

Orientation cyclic_order(const CirclePoint& a, const CirclePoint& b, const CirclePoint& c) {
  if (a == b || b == c || a == c) return Orientation::Degenerate;
  // Exactly one of the three cyclic rotations is increasing in anchor order
  // when the triple is positively ordered.
  const bool ab = a < b, bc = b < c, ca = c < a;
  const bool positive = (ab && bc) || (bc && ca) || (ca && ab);
  return positive ? Orientation::Positive : Orientation::Negative;
}

bool in_interval(const CirclePoint& x, const OrientedInterval& interval) {
  if (interval.a == interval.b) {
    if (interval.closed_a || interval.closed_b) return true;
    return x != interval.a;
  }
  if (x == interval.a) return interval.closed_a;
  if (x == interval.b) return interval.closed_b;
  return cyclic_order(interval.a, x, interval.b) == Orientation::Positive;
}

CircleSet::CircleSet(std::vector<CirclePoint> points) : points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("circle set must be nonempty");
  std::sort(points_.begin(), points_.end());
  const auto dup = std::adjacent_find(points_.begin(), points_.end());
  if (dup != points_.end()) {
    throw std::invalid_argument("duplicate point " + to_string(*dup) + " in circle set");
  }
}

bool CircleSet::contains(const CirclePoint& x) const {
  return std::binary_search(points_.begin(), points_.end(), x);
}

std::size_t CircleSet::rank(const CirclePoint& x) const {
  return static_cast<std::size_t>(std::lower_bound(points_.begin(), points_.end(), x) -
                                  points_.begin());
}

CircleSet::Position CircleSet::locate(const CirclePoint& x) const {
  const std::size_t r = rank(x);
  if (r < points_.size() && points_[r] == x) return {true, r};
  // Points below the first or above the last fall in the wrapping interval.
  if (r == 0 || r == points_.size()) return {false, points_.size() - 1};
  return {false, r - 1};
}

std::string to_string(const CircleSet& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ",";
    out += to_string(s[k]);
  }
  return out + "}";
}

std::vector<OrientedInterval> complementary_intervals(const CircleSet& set) {
  std::vector<OrientedInterval> out;
  out.reserve(set.size());
  for (std::size_t k = 0; k < set.size(); ++k) {
    out.push_back({set[k], set[(k + 1) % set.size()]});
  }
  return out;
}

std::vector<CirclePoint> intersection(const CircleSet& a, const CircleSet& b) {
  std::vector<CirclePoint> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool disjoint(const CircleSet& a, const CircleSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i; else ++j;
  }
  return true;
}

namespace {

// Points of `set` in the open positive arc (x, y), x != y.
std::size_t count_in_open_arc(const CircleSet& set, const CirclePoint& x, const CirclePoint& y) {
  const std::size_t rx = set.rank(x), ry = set.rank(y);
  const std::size_t x_in = set.contains(x) ? 1 : 0;
  if (x < y) return ry - rx - x_in;
  // Wrapping arc: everything outside [y, x].
  return set.size() - (rx - ry + x_in);
}

std::size_t intervals_met(const CircleSet& outer, const CircleSet& inner) {
  std::set<std::size_t> met;
  for (const auto& p : inner) met.insert(outer.locate(p).index);
  return met.size();
}

}  // namespace

bool linked(const CircleSet& a, const CircleSet& b) {
  if (disjoint(a, b)) return intervals_met(a, b) >= 2;
  // With shared points: look for b, b' in B whose two open arcs both contain
  // points of A. Such points are automatically distinct from b and b'.
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      if (count_in_open_arc(a, b[i], b[j]) > 0 && count_in_open_arc(a, b[j], b[i]) > 0) {
        return true;
      }
    }
  }
  return false;
}

LinkCounts link_counts(const CircleSet& a, const CircleSet& b) {
  if (!disjoint(a, b)) {
    throw NotDisjoint("link number needs disjoint sets: " + to_string(a) + " and " + to_string(b));
  }
  LinkCounts counts;
  counts.a_intervals_meeting_b = intervals_met(a, b);
  counts.b_intervals_meeting_a = intervals_met(b, a);

  // Walk A u B in anchor order; gaps come from cyclically consecutive pairs.
  std::vector<std::pair<CirclePoint, bool>> merged;  // (point, from A)
  merged.reserve(a.size() + b.size());
  for (const auto& p : a) merged.emplace_back(p, true);
  for (const auto& p : b) merged.emplace_back(p, false);
  std::sort(merged.begin(), merged.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (std::size_t k = 0; k < merged.size(); ++k) {
    const bool from = merged[k].second;
    const bool to = merged[(k + 1) % merged.size()].second;
    if (from && !to) ++counts.ab_gaps;
    if (!from && to) ++counts.ba_gaps;
  }
  return counts;
}

std::size_t link_number(const CircleSet& a, const CircleSet& b) {
  const LinkCounts counts = link_counts(a, b);
  if (!counts.consistent()) {
    throw std::logic_error("finite linking counts disagree for " + to_string(a) + " and " +
                           to_string(b));
  }
  return counts.a_intervals_meeting_b;
}

std::optional<std::size_t> enclosing_interval(const CircleSet& outer, const CircleSet& inner) {
  std::optional<std::size_t> index;
  for (const auto& p : inner) {
    const auto pos = outer.locate(p);
    if (pos.on_point) return std::nullopt;
    if (index && *index != pos.index) return std::nullopt;
    index = pos.index;
  }
  return index;
}

bool separates(const CircleSet& b, const CircleSet& a, const CircleSet& c) {
  if (!disjoint(a, b) || !disjoint(b, c) || !disjoint(a, c)) {
    throw NotDisjoint("separation needs pairwise disjoint sets");
  }
  const auto ia = enclosing_interval(b, a);
  if (!ia) return false;
  const auto ic = enclosing_interval(b, c);
  return ic && *ia != *ic;
}

}  // namespace especial
