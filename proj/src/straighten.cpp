#include "especial/straighten.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace especial {

Straightener::Straightener(const FamilyPair& fp, unsigned threads)
    : hulls_(fp), disc_(especial_disc(fp, threads)) {}

Straightener::Straightener(const FamilyPair& fp, EspecialDisc disc)
    : hulls_(fp), disc_(std::move(disc)) {}

StraightenResult Straightener::operator()(const PlanePoint& p) const {
  const Location loc = hulls_.locate(p);
  if (!loc.plus || !loc.minus) return NotInDomain{};
  const ZPoint z{*loc.plus, *loc.minus};
  if (disc_.find_interior(z)) return MappedTo{z};
  if (const BoundaryPoint* b = disc_.find_boundary(z)) {
    if (param_to_point(b->point) == p) return OnBoundary{b->point};
  }
  return NotInDomain{};
}

StraightenResult straighten_point(const FamilyPair& fp, const PlanePoint& p) {
  return Straightener(fp)(p);
}

bool LeafGraph::is_tree() const {
  if (vertices.empty()) return edges.empty();
  if (edges.size() + 1 != vertices.size()) return false;
  std::vector<std::vector<std::size_t>> adj(vertices.size());
  for (const auto& [a, b] : edges) {
    if (a >= vertices.size() || b >= vertices.size() || a == b) return false;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(vertices.size(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  return reached == vertices.size();
}

std::size_t LeafGraph::virtual_count() const {
  return static_cast<std::size_t>(std::count_if(
      vertices.begin(), vertices.end(), [](const LeafVertex& v) { return v.is_virtual; }));
}

namespace {

std::string z_name(ZPoint z) {
  return "(" + std::to_string(z.plus) + "," + std::to_string(z.minus) + ")";
}

// Slots of `element`: point k is 2k, complementary interval k is 2k + 1.
std::vector<std::size_t> sector_signature(const CircleSet& element, const CircleSet& other) {
  std::vector<std::size_t> slots;
  for (const auto& p : other) {
    const auto pos = element.locate(p);
    slots.push_back(2 * pos.index + (pos.on_point ? 0 : 1));
  }
  std::sort(slots.begin(), slots.end());
  slots.erase(std::unique(slots.begin(), slots.end()), slots.end());
  return slots;
}

}  // namespace

GroupOrderNotTotal::GroupOrderNotTotal(Side side, std::size_t element, ZPoint a, ZPoint b, ZPoint c)
    : Error("GroupOrderNotTotal", "leaf " + std::string(to_string(side)) + "[" +
                                      std::to_string(element) + "]: " + z_name(a) + ", " +
                                      z_name(b) + ", " + z_name(c) + " are not linearly ordered"),
      witness{a, b, c} {}

LeafGraph leaf_graph(const FamilyPair& fp, const EspecialDisc& disc, Side side,
                     std::size_t index) {
  const CircleSet& element = fp.element(side, index);
  const std::vector<ZPoint>& fiber = disc.fiber(side, index);
  const Side other = opposite(side);
  auto opposite_index = [&](ZPoint z) { return side == Side::Plus ? z.minus : z.plus; };
  auto opposite_set = [&](ZPoint z) -> const CircleSet& {
    return fp.family(other)[opposite_index(z)];
  };

  LeafGraph graph;
  graph.family = side;
  graph.element = index;
  if (fiber.empty()) return graph;

  // Groups in order of first appearance along the fiber.
  std::map<std::vector<std::size_t>, std::size_t> group_of;
  std::vector<std::vector<ZPoint>> groups;
  for (const ZPoint& z : fiber) {
    auto [it, fresh] = group_of.try_emplace(sector_signature(element, opposite_set(z)), groups.size());
    if (fresh) groups.emplace_back();
    groups[it->second].push_back(z);
  }

  for (auto& group : groups) {
    if (group.size() < 2) continue;
    // Find one end of the group's line, then order outward from it.
    std::size_t lo = 0, hi = 0;
    for (std::size_t k = 1; k < group.size(); ++k) {
      const CircleSet& y = opposite_set(group[k]);
      if (lo == hi) {
        hi = k;
      } else if (separates(opposite_set(group[lo]), y, opposite_set(group[hi]))) {
        lo = k;
      } else if (separates(opposite_set(group[hi]), opposite_set(group[lo]), y)) {
        hi = k;
      }
    }
    std::vector<ZPoint> rest;
    std::vector<const CircleSet*> sets;
    for (std::size_t k = 0; k < group.size(); ++k) {
      if (k == lo) continue;
      rest.push_back(group[k]);
      sets.push_back(&opposite_set(group[k]));
    }
    std::vector<std::size_t> order;
    try {
      order = order_by_separation(opposite_set(group[lo]), sets);
    } catch (const NotLinearlyOrdered& e) {
      auto name = [&](std::size_t id) { return id == rest.size() ? group[lo] : rest[id]; };
      throw GroupOrderNotTotal(side, index, name(e.witness[0]), name(e.witness[1]),
                               name(e.witness[2]));
    }
    std::vector<ZPoint> sorted{group[lo]};
    for (std::size_t id : order) sorted.push_back(rest[id]);
    group = std::move(sorted);
  }

  std::vector<std::pair<std::size_t, std::size_t>> span;  // vertex range per group
  for (const auto& group : groups) {
    const std::size_t first = graph.vertices.size();
    for (std::size_t k = 0; k < group.size(); ++k) {
      graph.vertices.push_back({false, group[k]});
      if (k > 0) graph.edges.emplace_back(first + k - 1, first + k);
    }
    span.emplace_back(first, graph.vertices.size() - 1);
  }

  if (groups.size() >= 2) {
    // A lone singular point of the fiber is the branch vertex itself.
    std::optional<std::size_t> hub_group;
    std::size_t singular = 0;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      for (const ZPoint& z : groups[g]) {
        const InteriorPoint* p = disc.find_interior(z);
        if (p && p->link >= 3) {
          ++singular;
          if (groups[g].size() == 1) hub_group = g;
        }
      }
    }
    if (singular != 1) hub_group.reset();

    std::size_t hub;
    if (hub_group) {
      hub = span[*hub_group].first;
    } else {
      hub = graph.vertices.size();
      graph.vertices.push_back({true, {0, 0}});
    }
    for (std::size_t g = 0; g < groups.size(); ++g) {
      if (hub_group && g == *hub_group) continue;
      std::size_t attach = span[g].first;
      if (groups[g].size() > 1) {
        const ZPoint toward = hub_group ? groups[*hub_group].front()
                                        : groups[g == 0 ? 1 : 0].front();
        if (separates(opposite_set(groups[g].back()), opposite_set(groups[g].front()),
                      opposite_set(toward))) {
          attach = span[g].second;
        }
      }
      graph.edges.emplace_back(hub, attach);
    }
  }

  if (!graph.is_tree()) {
    throw std::logic_error("leaf graph of " + std::string(to_string(side)) + "[" +
                           std::to_string(index) + "] is not a tree");
  }
  return graph;
}

LeafGraph leaf_graph(const FamilyPair& fp, Side side, std::size_t index) {
  fp.element(side, index);
  return leaf_graph(fp, especial_disc(fp), side, index);
}

const PlanePoint& StraightenedDisc::position(ZPoint z) const {
  if (const InteriorPoint* p = disc.find_interior(z)) {
    return interior_layout[static_cast<std::size_t>(p - disc.interior().data())];
  }
  if (const BoundaryPoint* b = disc.find_boundary(z)) {
    return boundary_layout[static_cast<std::size_t>(b - disc.boundary().data())];
  }
  throw IndexOutOfRange(z_name(z) + " is not a point of the especial disc");
}

const PlanePoint& StraightenedDisc::position(const LeafGraph& leaf, std::size_t v) const {
  const LeafVertex& vertex = leaf.vertices.at(v);
  if (!vertex.is_virtual) return position(vertex.z);
  for (const auto& vv : virtual_layout) {
    if (vv.family == leaf.family && vv.element == leaf.element) return vv.position;
  }
  throw std::logic_error("virtual vertex without a position");
}

namespace {

bool on_segment(const PlanePoint& a, const PlanePoint& b, const PlanePoint& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

enum class Meet { None, Point, Overlap };

Meet segments_meet(const PlanePoint& p1, const PlanePoint& p2, const PlanePoint& q1,
                   const PlanePoint& q2) {
  const int o1 = orientation(p1, p2, q1), o2 = orientation(p1, p2, q2);
  const int o3 = orientation(q1, q2, p1), o4 = orientation(q1, q2, p2);
  if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
    // Collinear: compare the projections on the dominant axis.
    const bool use_x = p1.x != p2.x || q1.x != q2.x;
    auto coord = [&](const PlanePoint& p) -> const Rational& { return use_x ? p.x : p.y; };
    const Rational lo = std::max(std::min(coord(p1), coord(p2)), std::min(coord(q1), coord(q2)));
    const Rational hi = std::min(std::max(coord(p1), coord(p2)), std::max(coord(q1), coord(q2)));
    if (lo > hi) return Meet::None;
    return lo == hi ? Meet::Point : Meet::Overlap;
  }
  if (o1 * o2 < 0 && o3 * o4 < 0) return Meet::Point;
  if ((o1 == 0 && on_segment(p1, p2, q1)) || (o2 == 0 && on_segment(p1, p2, q2)) ||
      (o3 == 0 && on_segment(q1, q2, p1)) || (o4 == 0 && on_segment(q1, q2, p2))) {
    return Meet::Point;
  }
  return Meet::None;
}

struct EdgeRecord {
  LeafEdgeRef ref;
  std::tuple<int, std::size_t, std::size_t> ends[2];  // vertex identities
  const PlanePoint* p;
  const PlanePoint* q;
  double dp[2];
  double dq[2];
};

std::tuple<int, std::size_t, std::size_t> vertex_key(const LeafGraph& leaf, std::size_t v) {
  const LeafVertex& vertex = leaf.vertices[v];
  if (vertex.is_virtual) return {1, leaf.family == Side::Plus ? 0 : 1, leaf.element};
  return {0, vertex.z.plus, vertex.z.minus};
}

// Bounding box in doubles, padded outward well beyond the conversion error of
// coordinates in [-1, 1], so box overlap is a superset of exact overlap.
struct Box {
  double x0, y0, x1, y1;
};

Box box_of(const EdgeRecord& e) {
  constexpr double kPad = 1e-12;
  const double px = e.dp[0], py = e.dp[1], qx = e.dq[0], qy = e.dq[1];
  return {std::min(px, qx) - kPad, std::min(py, qy) - kPad, std::max(px, qx) + kPad,
          std::max(py, qy) + kPad};
}

// Rigorous floating-point filter for disjointness. Coordinates lie in [-1, 1]
// and convert with absolute error <= 2^-53, so each coordinate difference is
// off by at most e = 4.5e-16; `cross_bound` is twice the resulting worst-case
// error of a cross product. Pairs sharing a vertex only need the collinearity
// test, since a single touch there is allowed.
struct Signed {
  double value;
  double bound;
  bool positive() const { return value > bound; }
  bool negative() const { return value < -bound; }
  bool nonzero() const { return positive() || negative(); }
};

Signed cross(const double* o, const double* p, const double* q) {
  constexpr double e = 4.5e-16;
  const double ux = p[0] - o[0], uy = p[1] - o[1], vx = q[0] - o[0], vy = q[1] - o[1];
  const double t1 = ux * vy, t2 = uy * vx;
  const double bound = 2 * (e * (std::abs(ux) + std::abs(uy) + std::abs(vx) + std::abs(vy)) +
                            2 * e * e + 2.3e-16 * (std::abs(t1) + std::abs(t2)));
  return {t1 - t2, bound};
}

bool certainly_apart(const EdgeRecord& a, const EdgeRecord& b) {
  int shared = 0;
  for (const auto& ea : a.ends) {
    for (const auto& eb : b.ends) shared += ea == eb;
  }
  if (shared == 1) {
    // Both edges leave the common vertex; they overlap only if collinear.
    return cross(a.dp, a.dq, b.dp).nonzero() || cross(a.dp, a.dq, b.dq).nonzero();
  }
  if (shared) return false;
  auto one_side = [](Signed d1, Signed d2) {
    return (d1.positive() && d2.positive()) || (d1.negative() && d2.negative());
  };
  return one_side(cross(a.dp, a.dq, b.dp), cross(a.dp, a.dq, b.dq)) ||
         one_side(cross(b.dp, b.dq, a.dp), cross(b.dp, b.dq, a.dq));
}

// Sort-and-sweep along x. Only the broad phase is approximate; every candidate
// is decided by exact predicates.
std::vector<std::pair<std::size_t, std::size_t>> candidate_pairs(
    const std::vector<EdgeRecord>& edges) {
  std::vector<Box> boxes;
  boxes.reserve(edges.size());
  for (const auto& e : edges) boxes.push_back(box_of(e));
  std::vector<std::size_t> order(edges.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(boxes[a].x0, a) < std::tie(boxes[b].x0, b);
  });
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::vector<std::size_t> active;
  for (std::size_t k : order) {
    const Box& b = boxes[k];
    std::erase_if(active, [&](std::size_t a) { return boxes[a].x1 < b.x0; });
    for (std::size_t a : active) {
      if (boxes[a].y1 < b.y0 || b.y1 < boxes[a].y0) continue;
      const auto& ra = edges[a].ref;
      const auto& rb = edges[k].ref;
      if (ra.family == rb.family && ra.element == rb.element) continue;
      out.emplace_back(std::min(a, k), std::max(a, k));
    }
    active.push_back(k);
  }
  return out;
}

}  // namespace

std::vector<Crossing> find_crossings(const StraightenedDisc& sd) {
  std::vector<EdgeRecord> edges;
  for (Side side : {Side::Plus, Side::Minus}) {
    for (const LeafGraph& leaf : sd.leaves(side)) {
      for (std::size_t e = 0; e < leaf.edges.size(); ++e) {
        const auto [a, b] = leaf.edges[e];
        const PlanePoint& p = sd.position(leaf, a);
        const PlanePoint& q = sd.position(leaf, b);
        edges.push_back({{side, leaf.element, e},
                         {vertex_key(leaf, a), vertex_key(leaf, b)},
                         &p,
                         &q,
                         {p.x.get_d(), p.y.get_d()},
                         {q.x.get_d(), q.y.get_d()}});
      }
    }
  }

  auto candidates = candidate_pairs(edges);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<Crossing> out;
  for (const auto& [i, j] : candidates) {
    const EdgeRecord& a = edges[i];
    const EdgeRecord& b = edges[j];
    if (certainly_apart(a, b)) continue;
    const Meet meet = segments_meet(*a.p, *a.q, *b.p, *b.q);
    if (meet == Meet::None) continue;
    const bool share = a.ends[0] == b.ends[0] || a.ends[0] == b.ends[1] ||
                       a.ends[1] == b.ends[0] || a.ends[1] == b.ends[1];
    if (meet == Meet::Point && share) continue;
    out.push_back({a.ref, b.ref});
  }
  return out;
}

StraightenedDisc layout(const FamilyPair& fp, unsigned threads) {
  StraightenedDisc sd{especial_disc(fp, threads), {}, {}, {}, {}, {}, {}};
  const auto cells = linked_cells(fp, sd.disc, threads);
  sd.interior_layout.reserve(cells.size());
  for (const auto& c : cells) sd.interior_layout.push_back(c.cell.barycenter());
  for (const auto& b : sd.disc.boundary()) sd.boundary_layout.push_back(param_to_point(b.point));

  for (Side side : {Side::Plus, Side::Minus}) {
    auto& leaves = side == Side::Plus ? sd.leaves_plus : sd.leaves_minus;
    for (std::size_t i = 0; i < fp.family(side).size(); ++i) {
      leaves.push_back(leaf_graph(fp, sd.disc, side, i));
      if (leaves.back().virtual_count() > 0) {
        sd.virtual_layout.push_back({side, i, hull(fp.family(side)[i]).barycenter()});
      }
    }
  }
  sd.crossings = find_crossings(sd);
  return sd;
}

QuotientReport quotient_check(const FamilyPair& fp) {
  QuotientReport report;
  const Straightener straighten(fp);
  const auto cells = linked_cells(fp, straighten.disc());
  report.cells = cells.size();

  std::map<ZPoint, ZPoint> hit;  // image -> cell
  for (const auto& c : cells) {
    std::vector<PlanePoint> samples = c.cell.vertices();
    samples.push_back(c.cell.barycenter());
    report.samples += samples.size();

    std::optional<ZPoint> image;
    bool constant = true;
    for (const auto& p : samples) {
      const StraightenResult r = straighten(p);
      const auto* m = std::get_if<MappedTo>(&r);
      if (!m || (image && m->z != *image)) {
        constant = false;
        break;
      }
      image = m->z;
    }
    if (!constant || !image) {
      report.constancy = false;
      report.failures.push_back("cell " + z_name(c.z) + " does not map to a single Z-point");
      continue;
    }
    auto [it, fresh] = hit.emplace(*image, c.z);
    if (!fresh) {
      report.injectivity = false;
      report.failures.push_back("cells " + z_name(it->second) + " and " + z_name(c.z) +
                                " both map to " + z_name(*image));
    }
  }
  for (const auto& p : straighten.disc().interior()) {
    if (!hit.count(p.z())) {
      report.surjectivity = false;
      report.failures.push_back("interior point " + z_name(p.z()) + " is not hit");
    }
  }
  return report;
}

}  // namespace especial
