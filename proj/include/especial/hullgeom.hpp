#pragma once

// Exact rational realization of circle sets in the closed unit disc: the
// tangent half-angle embedding, convex hulls, hull intersections, point
// location and the linked-region cells.

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "especial/family.hpp"
#include "especial/rational.hpp"

namespace especial {

struct PlanePoint {
  Rational x;
  Rational y;

  friend bool operator==(const PlanePoint& a, const PlanePoint& b) {
    return a.x == b.x && a.y == b.y;
  }
  /// Lexicographic (x, then y).
  friend std::strong_ordering operator<=>(const PlanePoint& a, const PlanePoint& b);
};

/// Parses "x,y" where both coordinates are rationals.
PlanePoint parse_plane_point(std::string_view text);

/// Sign of the cross product (b - a) x (c - a): +1 counterclockwise.
int orientation(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c);

/// x^2 + y^2 compared with 1: -1 inside, 0 on the circle, +1 outside.
int compare_to_unit_circle(const PlanePoint& p);

/// Closed half-plane a*x + b*y + c >= 0.
struct HalfPlane {
  Rational a, b, c;
  int side(const PlanePoint& p) const { return sgn(a * p.x + b * p.y + c); }
};

/// Convex region of dimension 0 (point), 1 (segment) or 2 (polygon) inside the
/// closed unit disc. Vertices run counterclockwise from the lexicographically
/// smallest one, with no redundant collinear vertices.
class ConvexCell {
 public:
  /// Convex hull of the given points. Throws std::invalid_argument on an empty
  /// input or a point outside the closed unit disc.
  static ConvexCell hull_of(std::vector<PlanePoint> points);

  int dim() const noexcept {
    return vertices_.size() >= 3 ? 2 : static_cast<int>(vertices_.size()) - 1;
  }
  const std::vector<PlanePoint>& vertices() const noexcept { return vertices_; }

  /// Half-planes whose intersection is exactly this cell.
  std::vector<HalfPlane> constraints() const;
  bool contains(const PlanePoint& p) const;

  /// Exact average of the vertices.
  PlanePoint barycenter() const;

  friend bool operator==(const ConvexCell& a, const ConvexCell& b) {
    return a.vertices_ == b.vertices_;
  }

 private:
  explicit ConvexCell(std::vector<PlanePoint> vertices);

  std::vector<PlanePoint> vertices_;
  Rational min_x_, max_x_, min_y_, max_y_;
};

/// u -> ((1 - u^2) / (1 + u^2), 2u / (1 + u^2)), INF -> (-1, 0).
PlanePoint param_to_point(const CirclePoint& u);

/// Inverse of param_to_point on the unit circle: (x, y) -> y / (1 + x), (-1, 0) -> INF.
/// Requires p on the unit circle.
CirclePoint point_to_param(const PlanePoint& p);

ConvexCell hull(const CircleSet& set);

/// Exact intersection for every dimension combination; nullopt when empty.
std::optional<ConvexCell> cell_intersection(const ConvexCell& p, const ConvexCell& q);

class OutsideDisc : public Error {
 public:
  explicit OutsideDisc(const std::string& what) : Error("OutsideDisc", what) {}
};

struct Location {
  std::optional<std::size_t> plus;
  std::optional<std::size_t> minus;
  friend bool operator==(const Location&, const Location&) = default;
};

/// Hulls of every element of a family pair, computed once.
class HullRealization {
 public:
  explicit HullRealization(const FamilyPair& fp);

  const std::vector<ConvexCell>& hulls(Side side) const noexcept {
    return side == Side::Plus ? plus_ : minus_;
  }

  /// Throws OutsideDisc for points outside the closed unit disc, and
  /// std::logic_error if two hulls of one family contain p.
  Location locate(const PlanePoint& p) const;

 private:
  std::optional<std::size_t> locate_in(const std::vector<ConvexCell>& cells,
                                       const PlanePoint& p) const;
  std::vector<ConvexCell> plus_;
  std::vector<ConvexCell> minus_;
};

Location locate(const FamilyPair& fp, const PlanePoint& p);

class EmptyLinkedCell : public Error {
 public:
  explicit EmptyLinkedCell(ZPoint z);
  ZPoint z;
};

struct LinkedCell {
  ZPoint z;
  ConvexCell cell;
};

/// hull(plus_i) n hull(minus_j) for every interior point (i, j) of `disc`, in
/// disc order. The union of the cells is the linked region.
std::vector<LinkedCell> linked_cells(const FamilyPair& fp, const EspecialDisc& disc,
                                     unsigned threads = 1);
std::vector<LinkedCell> linked_cells(const FamilyPair& fp);

}  // namespace especial
