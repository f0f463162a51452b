#include "especial/family.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace especial {

std::string_view to_string(Side side) { return side == Side::Plus ? "plus" : "minus"; }

std::string_view to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::EmptyFamily: return "EmptyFamily";
    case Violation::Kind::WithinFamilyOverlap: return "WithinFamilyOverlap";
    case Violation::Kind::WithinFamilyLinked: return "WithinFamilyLinked";
    case Violation::Kind::CrossIntersectionTooBig: return "CrossIntersectionTooBig";
    case Violation::Kind::EmptyElement: return "EmptyElement";
    case Violation::Kind::DuplicatePoint: return "DuplicatePoint";
  }
  return "?";
}

namespace {

std::string describe(const std::vector<Violation>& violations) {
  std::string out = "invalid family pair:";
  for (const auto& v : violations) {
    out += " ";
    out += to_string(v.kind);
    if (v.kind == Violation::Kind::CrossIntersectionTooBig) {
      out += "(" + std::to_string(v.i) + "," + std::to_string(v.j) + ")";
    } else if (v.kind != Violation::Kind::EmptyFamily) {
      out += "(" + std::to_string(v.i) + "," + std::to_string(v.j) + "," +
             std::string(to_string(v.family)) + ")";
    } else {
      out += "(" + std::string(to_string(v.family)) + ")";
    }
  }
  return out;
}

void check_family(const std::vector<CircleSet>& family, Side side, std::vector<Violation>& out) {
  if (family.empty()) {
    out.push_back({Violation::Kind::EmptyFamily, side, 0, 0, {}});
    return;
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      auto shared = intersection(family[i], family[j]);
      if (!shared.empty()) {
        out.push_back({Violation::Kind::WithinFamilyOverlap, side, i, j, std::move(shared)});
      } else if (linked(family[i], family[j])) {
        out.push_back({Violation::Kind::WithinFamilyLinked, side, i, j, {}});
      }
    }
  }
}

void check_range(const std::vector<CircleSet>& family, Side side, std::size_t index) {
  if (index >= family.size()) {
    throw IndexOutOfRange(std::string(to_string(side)) + " index " + std::to_string(index) +
                          " out of range (size " + std::to_string(family.size()) + ")");
  }
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error("ValidationError", describe(violations)), violations_(std::move(violations)) {}

std::vector<Violation> find_violations(const std::vector<CircleSet>& plus,
                                       const std::vector<CircleSet>& minus) {
  std::vector<Violation> out;
  check_family(plus, Side::Plus, out);
  check_family(minus, Side::Minus, out);
  for (std::size_t i = 0; i < plus.size(); ++i) {
    for (std::size_t j = 0; j < minus.size(); ++j) {
      auto shared = intersection(plus[i], minus[j]);
      if (shared.size() > 1) {
        out.push_back({Violation::Kind::CrossIntersectionTooBig, Side::Plus, i, j, std::move(shared)});
      }
    }
  }
  return out;
}

FamilyPair validate(std::vector<CircleSet> plus, std::vector<CircleSet> minus, Labels labels) {
  if ((!labels.plus.empty() && labels.plus.size() != plus.size()) ||
      (!labels.minus.empty() && labels.minus.size() != minus.size())) {
    throw std::invalid_argument("label count does not match family size");
  }
  auto violations = find_violations(plus, minus);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return FamilyPair(std::move(plus), std::move(minus), std::move(labels));
}

const CircleSet& FamilyPair::element(Side side, std::size_t index) const {
  const auto& f = family(side);
  check_range(f, side, index);
  return f[index];
}

PairClass classify_pair(const FamilyPair& fp, std::size_t plus_index, std::size_t minus_index) {
  const CircleSet& a = fp.element(Side::Plus, plus_index);
  const CircleSet& b = fp.element(Side::Minus, minus_index);
  const auto shared = intersection(a, b);
  if (!shared.empty()) return IntersectingAt{shared.front()};
  const std::size_t n = link_number(a, b);
  if (n >= 2) return DisjointLinked{n};
  return DisjointUnlinked{};
}

EspecialDisc::EspecialDisc(std::size_t plus_count, std::size_t minus_count,
                           std::vector<InteriorPoint> interior, std::vector<BoundaryPoint> boundary)
    : plus_count_(plus_count),
      minus_count_(minus_count),
      interior_(std::move(interior)),
      boundary_(std::move(boundary)),
      plus_fibers_(plus_count),
      minus_fibers_(minus_count) {
  auto by_z = [](const auto& x, const auto& y) { return x.z() < y.z(); };
  std::sort(interior_.begin(), interior_.end(), by_z);
  std::sort(boundary_.begin(), boundary_.end(), by_z);

  std::vector<ZPoint> all;
  all.reserve(interior_.size() + boundary_.size());
  for (const auto& p : interior_) all.push_back(p.z());
  for (const auto& p : boundary_) all.push_back(p.z());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw std::logic_error("cross pair listed twice in especial disc");
  }
  for (const ZPoint& z : all) {
    if (z.plus >= plus_count || z.minus >= minus_count) {
      throw std::logic_error("especial disc point out of range");
    }
    plus_fibers_[z.plus].push_back(z);
  }
  std::sort(all.begin(), all.end(), [](const ZPoint& x, const ZPoint& y) {
    return std::tie(x.minus, x.plus) < std::tie(y.minus, y.plus);
  });
  for (const ZPoint& z : all) minus_fibers_[z.minus].push_back(z);
}

const InteriorPoint* EspecialDisc::find_interior(ZPoint z) const {
  auto it = std::lower_bound(interior_.begin(), interior_.end(), z,
                             [](const InteriorPoint& p, const ZPoint& q) { return p.z() < q; });
  return it != interior_.end() && it->z() == z ? &*it : nullptr;
}

const BoundaryPoint* EspecialDisc::find_boundary(ZPoint z) const {
  auto it = std::lower_bound(boundary_.begin(), boundary_.end(), z,
                             [](const BoundaryPoint& p, const ZPoint& q) { return p.z() < q; });
  return it != boundary_.end() && it->z() == z ? &*it : nullptr;
}

const std::vector<ZPoint>& EspecialDisc::fiber(Side side, std::size_t index) const {
  const auto& fibers = side == Side::Plus ? plus_fibers_ : minus_fibers_;
  if (index >= fibers.size()) {
    throw IndexOutOfRange(std::string(to_string(side)) + " index " + std::to_string(index) +
                          " out of range for especial disc");
  }
  return fibers[index];
}

EspecialDisc especial_disc(const FamilyPair& fp, unsigned threads) {
  const std::size_t n = fp.plus().size(), m = fp.minus().size();
  std::vector<std::vector<InteriorPoint>> interior(n);
  std::vector<std::vector<BoundaryPoint>> boundary(n);

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        const PairClass c = classify_pair(fp, i, j);
        if (const auto* l = std::get_if<DisjointLinked>(&c)) {
          interior[i].push_back({i, j, l->link});
        } else if (const auto* s = std::get_if<IntersectingAt>(&c)) {
          boundary[i].push_back({i, j, s->point});
        }
      }
    }
  };

  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (threads == 1) {
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

  std::vector<InteriorPoint> all_interior;
  std::vector<BoundaryPoint> all_boundary;
  for (std::size_t i = 0; i < n; ++i) {
    all_interior.insert(all_interior.end(), interior[i].begin(), interior[i].end());
    all_boundary.insert(all_boundary.end(), boundary[i].begin(), boundary[i].end());
  }
  return EspecialDisc(n, m, std::move(all_interior), std::move(all_boundary));
}

const std::vector<ZPoint>& fiber_plus(const EspecialDisc& z, std::size_t plus_index) {
  return z.fiber(Side::Plus, plus_index);
}

const std::vector<ZPoint>& fiber_minus(const EspecialDisc& z, std::size_t minus_index) {
  return z.fiber(Side::Minus, minus_index);
}

NotLinearlyOrdered::NotLinearlyOrdered(std::size_t a, std::size_t b, std::size_t c)
    : Error("NotLinearlyOrdered", "elements " + std::to_string(a) + ", " + std::to_string(b) +
                                      ", " + std::to_string(c) + " are not linearly ordered"),
      witness{a, b, c} {}

std::vector<std::size_t> order_by_separation(const CircleSet& end,
                                             const std::vector<const CircleSet*>& members) {
  const std::size_t end_id = members.size();
  // Each member has a complementary interval holding `end`; those arcs are
  // nested and grow with distance from `end`, so read positively from `end`
  // their start points come in reverse order of distance.
  const CirclePoint& ref = end[0];
  struct Keyed {
    bool wrapped;
    CirclePoint start;
    std::size_t id;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(members.size());
  for (std::size_t k = 0; k < members.size(); ++k) {
    const auto arc = enclosing_interval(*members[k], end);
    if (!arc) throw NotLinearlyOrdered(end_id, k, k);
    const CirclePoint& start = (*members[k])[*arc];
    keyed.push_back({start < ref, start, k});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& x, const Keyed& y) {
    if (x.wrapped != y.wrapped) return x.wrapped;
    return y.start < x.start;
  });

  std::vector<std::size_t> order;
  order.reserve(keyed.size());
  for (const auto& k : keyed) order.push_back(k.id);

  auto set_of = [&](std::size_t id) -> const CircleSet& {
    return id == end_id ? end : *members[id];
  };
  std::vector<std::size_t> chain{end_id};
  chain.insert(chain.end(), order.begin(), order.end());
  for (std::size_t k = 1; k + 1 < chain.size(); ++k) {
    if (!separates(set_of(chain[k]), set_of(chain[k - 1]), set_of(chain[k + 1]))) {
      throw NotLinearlyOrdered(chain[k - 1], chain[k], chain[k + 1]);
    }
  }
  return order;
}

std::vector<std::size_t> separation_interval(const FamilyPair& fp, Side side, std::size_t i,
                                             std::size_t j) {
  const CircleSet& first = fp.element(side, i);
  const CircleSet& last = fp.element(side, j);
  if (i == j) throw std::invalid_argument("separation interval needs distinct elements");
  const auto& family = fp.family(side);

  std::vector<std::size_t> middle;
  std::vector<const CircleSet*> sets;
  for (std::size_t k = 0; k < family.size(); ++k) {
    if (k == i || k == j) continue;
    if (separates(family[k], first, last)) {
      middle.push_back(k);
      sets.push_back(&family[k]);
    }
  }
  sets.push_back(&last);

  std::vector<std::size_t> order;
  try {
    order = order_by_separation(first, sets);
  } catch (const NotLinearlyOrdered& e) {
    auto name = [&](std::size_t id) {
      if (id == sets.size()) return i;
      return id + 1 == sets.size() ? j : middle[id];
    };
    throw NotLinearlyOrdered(name(e.witness[0]), name(e.witness[1]), name(e.witness[2]));
  }
  // `last` is separated from `first` by every middle element, so it must sort last.
  if (order.back() != sets.size() - 1) {
    throw NotLinearlyOrdered(i, middle[order.back()], j);
  }
  std::vector<std::size_t> out{i};
  for (std::size_t k = 0; k + 1 < order.size(); ++k) out.push_back(middle[order[k]]);
  out.push_back(j);
  return out;
}

std::size_t mixed_gap_count(const CircleSet& a, const CircleSet& b) {
  const LinkCounts counts = link_counts(a, b);
  return counts.ab_gaps + counts.ba_gaps;
}

std::size_t prong_count(const FamilyPair& fp, ZPoint z) {
  const PairClass c = classify_pair(fp, z.plus, z.minus);
  const auto* l = std::get_if<DisjointLinked>(&c);
  if (!l) {
    throw NotInterior("(" + std::to_string(z.plus) + "," + std::to_string(z.minus) +
                      ") is not an interior point of the especial disc");
  }
  const std::size_t direct = mixed_gap_count(fp.plus()[z.plus], fp.minus()[z.minus]);
  if (direct != 2 * l->link) throw std::logic_error("sector count disagrees with link number");
  return direct;
}

namespace {

void nest_family(const std::vector<CircleSet>& family, Side side, NestingReport& report) {
  const std::size_t n = family.size();
  // where[a][b]: complementary interval of element a holding element b.
  std::vector<std::vector<std::size_t>> where(n, std::vector<std::size_t>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      const auto arc = enclosing_interval(family[a], family[b]);
      if (!arc) throw std::logic_error("validated family elements must be unlinked");
      where[a][b] = *arc;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    const auto arcs = complementary_intervals(family[k]);
    for (std::size_t m = 0; m < arcs.size(); ++m) {
      std::vector<std::size_t> inside;
      for (std::size_t b = 0; b < n; ++b) {
        if (b != k && where[k][b] == m) inside.push_back(b);
      }
      NestingEntry entry{side, k, m, arcs[m], std::nullopt, std::nullopt};
      for (std::size_t s : inside) {
        for (std::size_t w : inside) {
          if (w != s && where[s][w] != where[s][k]) {
            entry.separator = s;
            entry.witness = w;
            break;
          }
        }
        if (entry.separator) break;
      }
      if (!entry.separator) ++report.defect;
      report.entries.push_back(std::move(entry));
    }
  }
}

}  // namespace

NestingReport nesting_report(const FamilyPair& fp) {
  NestingReport report;
  nest_family(fp.plus(), Side::Plus, report);
  nest_family(fp.minus(), Side::Minus, report);
  return report;
}

}  // namespace especial
