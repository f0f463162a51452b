#pragma once

// The straightening map on the linked region, the straightened disc (a layout
// of Z), and leaf graphs over the fibers of Z.

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "especial/family.hpp"
#include "especial/hullgeom.hpp"

namespace especial {

struct MappedTo {
  ZPoint z;
  friend bool operator==(const MappedTo&, const MappedTo&) = default;
};
struct OnBoundary {
  CirclePoint point;
  friend bool operator==(const OnBoundary&, const OnBoundary&) = default;
};
struct NotInDomain {
  friend bool operator==(const NotInDomain&, const NotInDomain&) = default;
};
using StraightenResult = std::variant<MappedTo, OnBoundary, NotInDomain>;

/// Evaluates the straightening map for one family pair; hulls and the disc
/// are computed once.
class Straightener {
 public:
  explicit Straightener(const FamilyPair& fp, unsigned threads = 1);
  Straightener(const FamilyPair& fp, EspecialDisc disc);

  /// Throws OutsideDisc.
  StraightenResult operator()(const PlanePoint& p) const;

  const EspecialDisc& disc() const noexcept { return disc_; }
  const HullRealization& hulls() const noexcept { return hulls_; }

 private:
  HullRealization hulls_;
  EspecialDisc disc_;
};

StraightenResult straighten_point(const FamilyPair& fp, const PlanePoint& p);

/// Vertex of a leaf graph: a Z-point, or a virtual branch vertex standing in
/// for a singular point the truncation does not contain.
struct LeafVertex {
  bool is_virtual = false;
  ZPoint z{0, 0};  // meaningful when !is_virtual
};

struct LeafGraph {
  Side family = Side::Plus;
  std::size_t element = 0;
  std::vector<LeafVertex> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  bool is_tree() const;
  std::size_t virtual_count() const;
};

class GroupOrderNotTotal : public Error {
 public:
  GroupOrderNotTotal(Side side, std::size_t element, ZPoint a, ZPoint b, ZPoint c);
  ZPoint witness[3];
};

/// Fiber points grouped by which points and complementary intervals of the
/// element the opposite element meets; each group is a path in separation
/// order, and several groups hang off one branch vertex.
LeafGraph leaf_graph(const FamilyPair& fp, const EspecialDisc& disc, Side side,
                     std::size_t index);
LeafGraph leaf_graph(const FamilyPair& fp, Side side, std::size_t index);

struct LeafEdgeRef {
  Side family;
  std::size_t element;
  std::size_t edge;
  friend bool operator==(const LeafEdgeRef&, const LeafEdgeRef&) = default;
};

/// Two leaf edges of distinct leaves meeting somewhere other than a shared vertex.
struct Crossing {
  LeafEdgeRef a;
  LeafEdgeRef b;
};

struct StraightenedDisc {
  EspecialDisc disc;
  std::vector<PlanePoint> interior_layout;  // parallel to disc.interior()
  std::vector<PlanePoint> boundary_layout;  // parallel to disc.boundary()
  std::vector<LeafGraph> leaves_plus;
  std::vector<LeafGraph> leaves_minus;
  struct VirtualVertex {
    Side family;
    std::size_t element;
    PlanePoint position;
  };
  /// Virtual branch vertices sit at the barycenter of their element's hull.
  std::vector<VirtualVertex> virtual_layout;
  std::vector<Crossing> crossings;

  const std::vector<LeafGraph>& leaves(Side side) const {
    return side == Side::Plus ? leaves_plus : leaves_minus;
  }
  const PlanePoint& position(ZPoint z) const;
  /// Position of vertex `v` of leaf `leaf`.
  const PlanePoint& position(const LeafGraph& leaf, std::size_t v) const;
};

/// Interior points at the barycenter of their linked cell, boundary points on
/// the circle, leaf graphs for every element, and a crossing report.
StraightenedDisc layout(const FamilyPair& fp, unsigned threads = 1);

std::vector<Crossing> find_crossings(const StraightenedDisc& sd);

struct QuotientReport {
  bool constancy = true;     // each linked cell maps to one Z-point
  bool injectivity = true;   // distinct cells map to distinct Z-points
  bool surjectivity = true;  // every interior Z-point is hit
  std::size_t cells = 0;
  std::size_t samples = 0;
  std::vector<std::string> failures;

  bool passed() const { return constancy && injectivity && surjectivity; }
};

QuotientReport quotient_check(const FamilyPair& fp);

}  // namespace especial
