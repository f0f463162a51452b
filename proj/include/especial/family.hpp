#pragma once

// Validated finite family pairs (truncations of especial pairs), pair
// classification, the especial disc Z with its fibers, separation intervals,
// prong counts, and nesting-defect reporting.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "especial/circle.hpp"

namespace especial {

enum class Side { Plus, Minus };

std::string_view to_string(Side side);
inline Side opposite(Side side) { return side == Side::Plus ? Side::Minus : Side::Plus; }

struct Violation {
  enum class Kind {
    EmptyFamily,
    WithinFamilyOverlap,
    WithinFamilyLinked,
    CrossIntersectionTooBig,
    EmptyElement,    // raised by input parsing; element i of `family` has no points
    DuplicatePoint,  // raised by input parsing; witness repeats inside element i
  };

  Kind kind;
  Side family = Side::Plus;  // unused for CrossIntersectionTooBig
  std::size_t i = 0;         // plus index for cross violations
  std::size_t j = 0;         // minus index for cross violations
  std::vector<CirclePoint> witness;
};

std::string_view to_string(Violation::Kind kind);

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

class FamilyPair;

/// Every violated clause with the offending indices; empty means valid.
std::vector<Violation> find_violations(const std::vector<CircleSet>& plus,
                                       const std::vector<CircleSet>& minus);

struct Labels {
  std::vector<std::string> plus;
  std::vector<std::string> minus;
};

/// Throws ValidationError listing every violation.
FamilyPair validate(std::vector<CircleSet> plus, std::vector<CircleSet> minus, Labels labels = {});

/// Two families of circle sets: pairwise disjoint and unlinked within a family,
/// at most one shared point across families. Only `validate` builds these.
class FamilyPair {
 public:
  const std::vector<CircleSet>& plus() const noexcept { return plus_; }
  const std::vector<CircleSet>& minus() const noexcept { return minus_; }
  const std::vector<CircleSet>& family(Side side) const noexcept {
    return side == Side::Plus ? plus_ : minus_;
  }
  /// Element names; empty when the input carried none.
  const std::vector<std::string>& labels(Side side) const noexcept {
    return side == Side::Plus ? labels_.plus : labels_.minus;
  }
  const CircleSet& element(Side side, std::size_t index) const;

 private:
  friend FamilyPair validate(std::vector<CircleSet>, std::vector<CircleSet>, Labels);
  FamilyPair(std::vector<CircleSet> plus, std::vector<CircleSet> minus, Labels labels)
      : plus_(std::move(plus)), minus_(std::move(minus)), labels_(std::move(labels)) {}

  std::vector<CircleSet> plus_;
  std::vector<CircleSet> minus_;
  Labels labels_;
};

struct IntersectingAt {
  CirclePoint point;
  friend bool operator==(const IntersectingAt&, const IntersectingAt&) = default;
};
struct DisjointUnlinked {
  friend bool operator==(const DisjointUnlinked&, const DisjointUnlinked&) = default;
};
struct DisjointLinked {
  std::size_t link;  // >= 2
  friend bool operator==(const DisjointLinked&, const DisjointLinked&) = default;
};
using PairClass = std::variant<IntersectingAt, DisjointUnlinked, DisjointLinked>;

PairClass classify_pair(const FamilyPair& fp, std::size_t plus_index, std::size_t minus_index);

/// A point of the especial disc, named by its defining cross pair.
struct ZPoint {
  std::size_t plus;
  std::size_t minus;
  friend auto operator<=>(const ZPoint&, const ZPoint&) = default;
};

struct InteriorPoint {
  std::size_t plus;
  std::size_t minus;
  std::size_t link;
  ZPoint z() const { return {plus, minus}; }
  friend bool operator==(const InteriorPoint&, const InteriorPoint&) = default;
};

struct BoundaryPoint {
  std::size_t plus;
  std::size_t minus;
  CirclePoint point;
  ZPoint z() const { return {plus, minus}; }
  friend bool operator==(const BoundaryPoint&, const BoundaryPoint&) = default;
};

/// Cross pairs that link (interior) or intersect (boundary), ordered by plus
/// index then minus index.
class EspecialDisc {
 public:
  EspecialDisc(std::size_t plus_count, std::size_t minus_count,
               std::vector<InteriorPoint> interior, std::vector<BoundaryPoint> boundary);

  const std::vector<InteriorPoint>& interior() const noexcept { return interior_; }
  const std::vector<BoundaryPoint>& boundary() const noexcept { return boundary_; }
  std::size_t plus_count() const noexcept { return plus_count_; }
  std::size_t minus_count() const noexcept { return minus_count_; }
  std::size_t count(Side side) const noexcept {
    return side == Side::Plus ? plus_count_ : minus_count_;
  }

  const InteriorPoint* find_interior(ZPoint z) const;
  const BoundaryPoint* find_boundary(ZPoint z) const;
  bool contains(ZPoint z) const { return find_interior(z) || find_boundary(z); }

  /// Z-points whose `side` component is `index`, ordered by the other index.
  const std::vector<ZPoint>& fiber(Side side, std::size_t index) const;

  friend bool operator==(const EspecialDisc& a, const EspecialDisc& b) {
    return a.plus_count_ == b.plus_count_ && a.minus_count_ == b.minus_count_ &&
           a.interior_ == b.interior_ && a.boundary_ == b.boundary_;
  }

 private:
  std::size_t plus_count_;
  std::size_t minus_count_;
  std::vector<InteriorPoint> interior_;
  std::vector<BoundaryPoint> boundary_;
  std::vector<std::vector<ZPoint>> plus_fibers_;
  std::vector<std::vector<ZPoint>> minus_fibers_;
};

/// Classifies all |plus| * |minus| pairs. `threads` only affects speed.
EspecialDisc especial_disc(const FamilyPair& fp, unsigned threads = 1);

const std::vector<ZPoint>& fiber_plus(const EspecialDisc& z, std::size_t plus_index);
const std::vector<ZPoint>& fiber_minus(const EspecialDisc& z, std::size_t minus_index);

class NotLinearlyOrdered : public Error {
 public:
  NotLinearlyOrdered(std::size_t a, std::size_t b, std::size_t c);
  std::size_t witness[3];
};

/// Orders `members` outward from `end`: each element separates the ones before
/// it (and `end`) from the ones after. All sets must be pairwise disjoint and
/// unlinked. Returns indices into `members`; throws NotLinearlyOrdered with
/// indices into `members` (end is reported as members.size()).
std::vector<std::size_t> order_by_separation(const CircleSet& end,
                                             const std::vector<const CircleSet*>& members);

/// [i, ..., j]: i, the same-family elements separating i from j in order, then j.
std::vector<std::size_t> separation_interval(const FamilyPair& fp, Side side, std::size_t i,
                                             std::size_t j);

class NotInterior : public Error {
 public:
  explicit NotInterior(const std::string& what) : Error("NotInterior", what) {}
};

/// Gaps of a u b whose two ends come from different sets (the sectors).
std::size_t mixed_gap_count(const CircleSet& a, const CircleSet& b);

/// 2n for an n-linked interior point; the direct sector count is checked against it.
std::size_t prong_count(const FamilyPair& fp, ZPoint z);

struct NestingEntry {
  Side family;
  std::size_t element;
  std::size_t interval;
  OrientedInterval arc;
  /// Element inside `arc` separating `element` from `witness`, both same family.
  std::optional<std::size_t> separator;
  std::optional<std::size_t> witness;
};

struct NestingReport {
  std::vector<NestingEntry> entries;
  std::size_t defect = 0;  // entries without a separator
};

NestingReport nesting_report(const FamilyPair& fp);

}  // namespace especial
