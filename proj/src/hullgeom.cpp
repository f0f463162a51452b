#include "especial/hullgeom.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <thread>

namespace especial {

std::strong_ordering operator<=>(const PlanePoint& a, const PlanePoint& b) {
  int c = cmp(a.x, b.x);
  if (c == 0) c = cmp(a.y, b.y);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

PlanePoint parse_plane_point(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    throw std::invalid_argument("expected \"x,y\", got \"" + std::string(text) + "\"");
  }
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  return {parse_rational(trim(text.substr(0, comma))), parse_rational(trim(text.substr(comma + 1)))};
}

int orientation(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c) {
  const Rational cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return sgn(cross);
}

int compare_to_unit_circle(const PlanePoint& p) {
  const Rational r = p.x * p.x + p.y * p.y;
  return cmp(r, 1);
}

ConvexCell::ConvexCell(std::vector<PlanePoint> vertices) : vertices_(std::move(vertices)) {
  min_x_ = max_x_ = vertices_.front().x;
  min_y_ = max_y_ = vertices_.front().y;
  for (const auto& v : vertices_) {
    if (v.x < min_x_) min_x_ = v.x;
    if (v.x > max_x_) max_x_ = v.x;
    if (v.y < min_y_) min_y_ = v.y;
    if (v.y > max_y_) max_y_ = v.y;
  }
}

ConvexCell ConvexCell::hull_of(std::vector<PlanePoint> points) {
  if (points.empty()) throw std::invalid_argument("convex cell needs at least one point");
  for (const auto& p : points) {
    if (compare_to_unit_circle(p) > 0) {
      throw std::invalid_argument("convex cell vertex outside the closed unit disc");
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() <= 2) return ConvexCell(std::move(points));

  // Monotone chain; collinear points are dropped.
  std::vector<PlanePoint> chain(2 * points.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    while (k >= 2 && orientation(chain[k - 2], chain[k - 1], points[i]) <= 0) --k;
    chain[k++] = points[i];
  }
  for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && orientation(chain[k - 2], chain[k - 1], points[i]) <= 0) --k;
    chain[k++] = points[i];
  }
  chain.resize(k - 1);
  if (chain.size() == 2) {
    // All input points were collinear: keep the extreme ones.
    return ConvexCell({points.front(), points.back()});
  }
  return ConvexCell(std::move(chain));
}

std::vector<HalfPlane> ConvexCell::constraints() const {
  std::vector<HalfPlane> out;
  const auto& v = vertices_;
  if (v.size() == 1) {
    out.push_back({1, 0, -v[0].x});
    out.push_back({-1, 0, v[0].x});
    out.push_back({0, 1, -v[0].y});
    out.push_back({0, -1, v[0].y});
  } else if (v.size() == 2) {
    const Rational dx = v[1].x - v[0].x, dy = v[1].y - v[0].y;
    const Rational line_c = dy * v[0].x - dx * v[0].y;
    out.push_back({-dy, dx, line_c});
    out.push_back({dy, -dx, -line_c});
    out.push_back({dx, dy, -(dx * v[0].x + dy * v[0].y)});
    out.push_back({-dx, -dy, dx * v[1].x + dy * v[1].y});
  } else {
    for (std::size_t k = 0; k < v.size(); ++k) {
      const PlanePoint& a = v[k];
      const PlanePoint& b = v[(k + 1) % v.size()];
      const Rational dx = b.x - a.x, dy = b.y - a.y;
      out.push_back({-dy, dx, dy * a.x - dx * a.y});
    }
  }
  return out;
}

bool ConvexCell::contains(const PlanePoint& p) const {
  if (p.x < min_x_ || p.x > max_x_ || p.y < min_y_ || p.y > max_y_) return false;
  if (vertices_.size() >= 3) {
    for (std::size_t k = 0; k < vertices_.size(); ++k) {
      if (orientation(vertices_[k], vertices_[(k + 1) % vertices_.size()], p) < 0) return false;
    }
    return true;
  }
  for (const auto& h : constraints()) {
    if (h.side(p) < 0) return false;
  }
  return true;
}

PlanePoint ConvexCell::barycenter() const {
  Rational sx = 0, sy = 0;
  for (const auto& v : vertices_) {
    sx += v.x;
    sy += v.y;
  }
  const Rational n = static_cast<long>(vertices_.size());
  return {sx / n, sy / n};
}

PlanePoint param_to_point(const CirclePoint& u) {
  if (u.is_infinite()) return {Rational(-1), Rational(0)};
  const Rational& t = u.value();
  const Rational sq = t * t;
  const Rational den = 1 + sq;
  return {Rational((1 - sq) / den), Rational(2 * t / den)};
}

CirclePoint point_to_param(const PlanePoint& p) {
  if (compare_to_unit_circle(p) != 0) throw std::invalid_argument("point not on the unit circle");
  if (p.x == -1) return CirclePoint::infinity();
  return CirclePoint(Rational(p.y / (1 + p.x)));
}

ConvexCell hull(const CircleSet& set) {
  std::vector<PlanePoint> pts;
  pts.reserve(set.size());
  for (const auto& u : set) pts.push_back(param_to_point(u));
  return ConvexCell::hull_of(std::move(pts));
}

namespace {

// Sutherland-Hodgman step against one closed half-plane. Works unchanged on
// the degenerate cycles of points and segments.
std::vector<PlanePoint> clip(const std::vector<PlanePoint>& cycle, const HalfPlane& h) {
  std::vector<PlanePoint> out;
  const std::size_t n = cycle.size();
  std::vector<Rational> value(n);
  for (std::size_t k = 0; k < n; ++k) value[k] = h.a * cycle[k].x + h.b * cycle[k].y + h.c;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t next = (k + 1) % n;
    const int sc = sgn(value[k]), sn = sgn(value[next]);
    if (sc >= 0) out.push_back(cycle[k]);
    if ((sc > 0 && sn < 0) || (sc < 0 && sn > 0)) {
      const Rational t = value[k] / (value[k] - value[next]);
      out.push_back({cycle[k].x + t * (cycle[next].x - cycle[k].x),
                     cycle[k].y + t * (cycle[next].y - cycle[k].y)});
    }
  }
  return out;
}

}  // namespace

std::optional<ConvexCell> cell_intersection(const ConvexCell& p, const ConvexCell& q) {
  // Clip the lower-dimensional cell by the other one's constraints; the
  // canonical hull makes the result independent of that choice.
  const ConvexCell& subject = p.dim() <= q.dim() ? p : q;
  const ConvexCell& clipper = p.dim() <= q.dim() ? q : p;
  std::vector<PlanePoint> cycle = subject.vertices();
  for (const HalfPlane& h : clipper.constraints()) {
    cycle = clip(cycle, h);
    if (cycle.empty()) return std::nullopt;
    cycle = ConvexCell::hull_of(std::move(cycle)).vertices();
  }
  return ConvexCell::hull_of(std::move(cycle));
}

HullRealization::HullRealization(const FamilyPair& fp) {
  plus_.reserve(fp.plus().size());
  minus_.reserve(fp.minus().size());
  for (const auto& s : fp.plus()) plus_.push_back(hull(s));
  for (const auto& s : fp.minus()) minus_.push_back(hull(s));
}

std::optional<std::size_t> HullRealization::locate_in(const std::vector<ConvexCell>& cells,
                                                      const PlanePoint& p) const {
  std::optional<std::size_t> found;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (!cells[k].contains(p)) continue;
    if (found) throw std::logic_error("two hulls of one family overlap");
    found = k;
  }
  return found;
}

Location HullRealization::locate(const PlanePoint& p) const {
  if (compare_to_unit_circle(p) > 0) {
    throw OutsideDisc("point (" + to_string(p.x) + "," + to_string(p.y) +
                      ") lies outside the closed unit disc");
  }
  return {locate_in(plus_, p), locate_in(minus_, p)};
}

Location locate(const FamilyPair& fp, const PlanePoint& p) {
  return HullRealization(fp).locate(p);
}

EmptyLinkedCell::EmptyLinkedCell(ZPoint z_)
    : Error("EmptyLinkedCell", "linked pair (" + std::to_string(z_.plus) + "," +
                                   std::to_string(z_.minus) + ") has empty hull intersection"),
      z(z_) {}

std::vector<LinkedCell> linked_cells(const FamilyPair& fp, const EspecialDisc& disc,
                                     unsigned threads) {
  const HullRealization hulls(fp);
  const auto& interior = disc.interior();
  std::vector<std::optional<ConvexCell>> cells(interior.size());

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      cells[k] = cell_intersection(hulls.hulls(Side::Plus)[interior[k].plus],
                                   hulls.hulls(Side::Minus)[interior[k].minus]);
    }
  };
  const std::size_t n = interior.size();
  threads = std::max(1u, threads);
  if (threads == 1 || n < 2) {
    work(0, n);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (n + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t begin = std::min(n, t * chunk), end = std::min(n, begin + chunk);
      pool.emplace_back(work, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  std::vector<LinkedCell> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (!cells[k]) throw EmptyLinkedCell(interior[k].z());
    out.push_back({interior[k].z(), std::move(*cells[k])});
  }
  return out;
}

std::vector<LinkedCell> linked_cells(const FamilyPair& fp) {
  return linked_cells(fp, especial_disc(fp));
}

}  // namespace especial
