#include "especial/symmetry.hpp"

#include <map>
#include <stdexcept>

#include "especial/straighten.hpp"

namespace especial {

CircleMap::CircleMap(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (sgn(determinant()) <= 0) {
    throw std::invalid_argument("circle map needs a positive determinant");
  }
}

CirclePoint CircleMap::operator()(const CirclePoint& u) const {
  if (u.is_infinite()) {
    if (c_ == 0) return CirclePoint::infinity();
    return CirclePoint(Rational(a_ / c_));
  }
  const Rational den = c_ * u.value() + d_;
  if (den == 0) return CirclePoint::infinity();
  return CirclePoint(Rational((a_ * u.value() + b_) / den));
}

CircleMap CircleMap::compose(const CircleMap& h) const {
  return CircleMap(a_ * h.a_ + b_ * h.c_, a_ * h.b_ + b_ * h.d_, c_ * h.a_ + d_ * h.c_,
                   c_ * h.b_ + d_ * h.d_);
}

CircleMap CircleMap::inverse() const {
  // The adjugate acts like the inverse projectively and keeps the determinant.
  return CircleMap(d_, -b_, -c_, a_);
}

CircleMap CircleMap::power(unsigned n) const {
  CircleMap out = identity();
  for (unsigned k = 0; k < n; ++k) out = compose(out);
  return out;
}

CircleSet apply(const CircleMap& g, const CircleSet& set) {
  std::vector<CirclePoint> image;
  image.reserve(set.size());
  for (const auto& p : set) image.push_back(g(p));
  return CircleSet(std::move(image));
}

FamilyPair apply(const CircleMap& g, const FamilyPair& fp) {
  std::vector<CircleSet> plus, minus;
  for (const auto& s : fp.plus()) plus.push_back(apply(g, s));
  for (const auto& s : fp.minus()) minus.push_back(apply(g, s));
  return validate(std::move(plus), std::move(minus),
                  Labels{fp.labels(Side::Plus), fp.labels(Side::Minus)});
}

PlanePoint apply_to_disc(const CircleMap& g, const PlanePoint& p) {
  // Symmetric square of g acting on (t^2 - s^2, 2st, t^2 + s^2), u = s / t.
  const Rational &a = g.a(), &b = g.b(), &c = g.c(), &d = g.d();
  const Rational aa = a * a, bb = b * b, cc = c * c, dd = d * d;
  const Rational x = p.x, y = p.y;
  const Rational X = x * ((aa - cc + dd - bb) / 2) + y * (c * d - a * b) + (cc - aa + dd - bb) / 2;
  const Rational Y = x * (b * d - a * c) + y * (a * d + b * c) + (a * c + b * d);
  const Rational W = x * ((dd + bb - cc - aa) / 2) + y * (c * d + a * b) + (cc + aa + dd + bb) / 2;
  if (W == 0) throw std::logic_error("disc extension hit the line at infinity");
  return {Rational(X / W), Rational(Y / W)};
}

NotInvariant::NotInvariant(Side family_, std::size_t element_, CircleSet image_)
    : Error("NotInvariant", std::string(to_string(family_)) + "[" + std::to_string(element_) +
                                "] maps to " + to_string(image_) + ", which is not an element"),
      family(family_),
      element(element_),
      image(std::move(image_)) {}

Permutation induced_permutation(const FamilyPair& fp, const CircleMap& g) {
  Permutation perm;
  for (Side side : {Side::Plus, Side::Minus}) {
    const auto& family = fp.family(side);
    std::map<CircleSet, std::size_t> index;
    for (std::size_t k = 0; k < family.size(); ++k) index.emplace(family[k], k);
    auto& out = side == Side::Plus ? perm.plus : perm.minus;
    for (std::size_t k = 0; k < family.size(); ++k) {
      CircleSet image = apply(g, family[k]);
      const auto it = index.find(image);
      if (it == index.end()) throw NotInvariant(side, k, std::move(image));
      out.push_back(it->second);
    }
  }
  return perm;
}

namespace {

std::string z_name(ZPoint z) {
  return "(" + std::to_string(z.plus) + "," + std::to_string(z.minus) + ")";
}

}  // namespace

EquivarianceReport check_equivariance(const FamilyPair& fp, const CircleMap& g) {
  EquivarianceReport report;
  try {
    report.permutation = induced_permutation(fp, g);
  } catch (const NotInvariant& e) {
    report.not_invariant = e;
    report.failures.push_back(e.what());
    return report;
  }
  report.invariant = true;
  const Permutation& perm = report.permutation;
  auto moved = [&](ZPoint z) { return ZPoint{perm.plus[z.plus], perm.minus[z.minus]}; };

  const Straightener straighten(fp);
  const EspecialDisc& disc = straighten.disc();
  const EspecialDisc image_disc = especial_disc(apply(g, fp));

  // (a) Z(g fp) carries the same classes with g-moved boundary points, and the
  // permutation maps Z onto itself.
  report.disc = image_disc.interior() == disc.interior() &&
                image_disc.boundary().size() == disc.boundary().size();
  if (report.disc) {
    for (std::size_t k = 0; k < disc.boundary().size(); ++k) {
      const auto& b = disc.boundary()[k];
      const auto& gb = image_disc.boundary()[k];
      if (gb.z() != b.z() || gb.point != g(b.point)) report.disc = false;
    }
  }
  if (!report.disc) report.failures.push_back("especial disc of g.fp differs from g.Z");
  for (const auto& p : disc.interior()) {
    const InteriorPoint* q = disc.find_interior(moved(p.z()));
    if (!q || q->link != p.link) {
      report.disc = false;
      report.failures.push_back("interior point " + z_name(p.z()) + " is not carried into Z");
    }
  }
  for (const auto& b : disc.boundary()) {
    const BoundaryPoint* q = disc.find_boundary(moved(b.z()));
    if (!q || q->point != g(b.point)) {
      report.disc = false;
      report.failures.push_back("boundary point " + z_name(b.z()) + " is not carried into Z");
    }
  }

  // (b) straightening commutes with g on cell samples and boundary points.
  report.straighten = true;
  for (const auto& cell : linked_cells(fp, disc)) {
    std::vector<PlanePoint> samples = cell.cell.vertices();
    samples.push_back(cell.cell.barycenter());
    for (const auto& p : samples) {
      ++report.samples;
      const StraightenResult before = straighten(p);
      const StraightenResult after = straighten(apply_to_disc(g, p));
      const auto* m = std::get_if<MappedTo>(&before);
      const auto* gm = std::get_if<MappedTo>(&after);
      if (!m || !gm || gm->z != moved(m->z)) {
        report.straighten = false;
        report.failures.push_back("straightening is not equivariant on cell " + z_name(cell.z));
        break;
      }
    }
  }
  for (const auto& b : disc.boundary()) {
    ++report.samples;
    const StraightenResult after = straighten(apply_to_disc(g, param_to_point(b.point)));
    const auto* ob = std::get_if<OnBoundary>(&after);
    if (!ob || ob->point != g(b.point)) {
      report.straighten = false;
      report.failures.push_back("boundary point " + z_name(b.z()) + " is not carried by g");
    }
  }

  // (c) prong counts.
  report.prongs = true;
  for (const auto& p : disc.interior()) {
    if (prong_count(fp, p.z()) != prong_count(fp, moved(p.z()))) {
      report.prongs = false;
      report.failures.push_back("prong count changes at " + z_name(p.z()));
    }
  }
  return report;
}

}  // namespace especial
