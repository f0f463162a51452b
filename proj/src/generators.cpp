#include "especial/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace especial {

FamilyPair gen_grid(std::size_t n) {
  if (n < 1) throw std::invalid_argument("grid size must be at least 1");
  const long m = static_cast<long>(n);
  std::vector<CircleSet> plus, minus;
  for (long k = 0; k < m; ++k) {
    plus.push_back(CircleSet{CirclePoint((4 * m - k) % (4 * m)), CirclePoint(m + 1 + k)});
    minus.push_back(CircleSet{CirclePoint(m - k), CirclePoint(2 * m + 1 + k)});
  }
  return validate(std::move(plus), std::move(minus));
}

FamilyPair gen_star(std::size_t k) {
  if (k < 3) throw std::invalid_argument("star arity must be at least 3");
  std::vector<CirclePoint> even, odd;
  for (long i = 0; i < static_cast<long>(k); ++i) {
    even.emplace_back(2 * i);
    odd.emplace_back(2 * i + 1);
  }
  return validate({CircleSet(std::move(even))}, {CircleSet(std::move(odd))});
}

FamilyPair gen_tripod() { return gen_star(3); }

namespace {

struct Slot {
  Rational from;
  Rational to;
};

Rational wrap_unit(Rational t) {
  while (t >= 1) t -= 1;
  while (t < 0) t += 1;
  return t;
}

CircleSet chord(const Rational& p, const Rational& q, const Rational& offset) {
  return CircleSet{CirclePoint(wrap_unit(p + offset)), CirclePoint(wrap_unit(q + offset))};
}

}  // namespace

std::vector<CircleSet> gen_nested(unsigned depth, std::uint64_t seed, const Rational& offset) {
  Rng rng(seed);
  std::vector<CircleSet> out;
  // Work in t in [0, 1) with wrap-around; the root splits the circle in half.
  const Rational a = ratio(rng.between(1, 15), 32);
  const Rational b = a + Rational(1, 2);
  out.push_back(chord(a, b, offset));
  std::vector<Slot> slots{{a, b}, {b, a + 1}};
  for (unsigned level = 1; level <= depth; ++level) {
    std::vector<Slot> next;
    for (const Slot& s : slots) {
      // Endpoints near the middle of the slot, never on its ends.
      const Rational width = s.to - s.from;
      const Rational p = s.from + width * ratio(rng.between(2, 7), 16);
      const Rational q = s.from + width * ratio(rng.between(9, 14), 16);
      out.push_back(chord(p, q, offset));
      next.push_back({s.from, p});
      next.push_back({q, s.to});
    }
    slots = std::move(next);
  }
  return out;
}

FamilyPair gen_nested_pair(unsigned depth, std::uint64_t seed) {
  return validate(gen_nested(depth, seed), gen_nested(depth, seed ^ 0x9e3779b97f4a7c15ULL,
                                                      Rational(1, 3)));
}

SymmetricFixture gen_symmetric() {
  return {validate({CircleSet{CirclePoint(1), CirclePoint(-1)}},
                   {CircleSet{CirclePoint(0), CirclePoint::infinity()}}),
          CircleMap(0, -1, 1, 0)};
}

namespace {

// Random non-crossing partition of points[lo, hi) into blocks of <= 4 points.
void partition(const std::vector<CirclePoint>& points, std::size_t lo, std::size_t hi, Rng& rng,
               std::vector<CircleSet>& out) {
  if (lo >= hi) return;
  const std::size_t available = hi - lo;
  std::size_t size = 1;
  const auto roll = rng.between(0, 9);
  if (roll >= 2) size = 2;
  if (roll >= 7) size = 3;
  if (roll >= 9) size = 4;
  size = std::min(size, available);

  std::vector<std::size_t> picks{lo};
  std::set<std::size_t> rest;
  while (rest.size() + 1 < size) rest.insert(static_cast<std::size_t>(rng.between(
      static_cast<std::int64_t>(lo + 1), static_cast<std::int64_t>(hi - 1))));
  picks.insert(picks.end(), rest.begin(), rest.end());

  std::vector<CirclePoint> block;
  for (std::size_t k : picks) block.push_back(points[k]);
  out.emplace_back(std::move(block));
  for (std::size_t k = 0; k < picks.size(); ++k) {
    const std::size_t gap_end = k + 1 < picks.size() ? picks[k + 1] : hi;
    partition(points, picks[k] + 1, gap_end, rng, out);
  }
}

}  // namespace

FamilyPair gen_random(std::size_t size, std::uint64_t seed) {
  if (size < 2) throw std::invalid_argument("random family size must be at least 2");
  Rng rng(seed);
  std::set<CirclePoint> pool;
  while (pool.size() < size) {
    pool.insert(CirclePoint(ratio(rng.between(-60, 60), rng.between(1, 7))));
  }
  std::vector<CirclePoint> plus_points, minus_points;
  for (const auto& p : pool) {
    const auto roll = rng.between(0, 19);
    if (roll == 0) {
      plus_points.push_back(p);
      minus_points.push_back(p);
    } else if (roll % 2) {
      plus_points.push_back(p);
    } else {
      minus_points.push_back(p);
    }
  }
  if (plus_points.empty()) plus_points.push_back(*pool.begin());
  if (minus_points.empty()) minus_points.push_back(*pool.rbegin());

  std::vector<CircleSet> plus, minus;
  partition(plus_points, 0, plus_points.size(), rng, plus);
  partition(minus_points, 0, minus_points.size(), rng, minus);

  // Efficient intersection: drop minus elements sharing two points with a plus one.
  std::vector<CircleSet> kept;
  for (auto& m : minus) {
    const bool ok = std::all_of(plus.begin(), plus.end(), [&](const CircleSet& p) {
      return intersection(p, m).size() <= 1;
    });
    if (ok) kept.push_back(std::move(m));
  }
  if (kept.empty()) {
    // Fall back to a point no plus element uses.
    for (const auto& p : pool) {
      if (std::none_of(plus.begin(), plus.end(), [&](const CircleSet& s) { return s.contains(p); })) {
        kept.push_back(CircleSet{p});
        break;
      }
    }
    if (kept.empty()) kept.push_back(CircleSet{CirclePoint::infinity()});
  }
  return validate(std::move(plus), std::move(kept));
}

FamilyPair compose_disjoint(const FamilyPair& a, const FamilyPair& b) {
  std::optional<Rational> a_max, b_min;
  for (Side side : {Side::Plus, Side::Minus}) {
    for (const auto& s : a.family(side)) {
      for (const auto& p : s) {
        if (p.is_infinite()) throw std::invalid_argument("compose_disjoint needs finite points");
        if (!a_max || p.value() > *a_max) a_max = p.value();
      }
    }
    for (const auto& s : b.family(side)) {
      for (const auto& p : s) {
        if (p.is_infinite()) throw std::invalid_argument("compose_disjoint needs finite points");
        if (!b_min || p.value() < *b_min) b_min = p.value();
      }
    }
  }
  const Rational shift = *a_max + 1 - *b_min;
  auto shifted = [&](const std::vector<CircleSet>& family) {
    std::vector<CircleSet> out;
    for (const auto& s : family) {
      std::vector<CirclePoint> pts;
      for (const auto& p : s) pts.emplace_back(Rational(p.value() + shift));
      out.emplace_back(std::move(pts));
    }
    return out;
  };
  std::vector<CircleSet> plus = a.plus(), minus = a.minus();
  for (auto& s : shifted(b.plus())) plus.push_back(std::move(s));
  for (auto& s : shifted(b.minus())) minus.push_back(std::move(s));
  return validate(std::move(plus), std::move(minus));
}

FamilyPair gen_figure(std::size_t n) { return compose_disjoint(gen_grid(n), gen_tripod()); }

std::optional<GenSpec::Kind> parse_gen_kind(std::string_view name) {
  using K = GenSpec::Kind;
  if (name == "grid") return K::Grid;
  if (name == "star") return K::Star;
  if (name == "tripod") return K::Tripod;
  if (name == "nested") return K::Nested;
  if (name == "symmetric") return K::Symmetric;
  if (name == "figure") return K::Figure;
  if (name == "random") return K::Random;
  return std::nullopt;
}

Generated generate(const GenSpec& spec) {
  using K = GenSpec::Kind;
  switch (spec.kind) {
    case K::Grid: return {gen_grid(spec.n), std::nullopt};
    case K::Star: return {gen_star(spec.n), std::nullopt};
    case K::Tripod: return {gen_tripod(), std::nullopt};
    case K::Nested: return {gen_nested_pair(static_cast<unsigned>(spec.n), spec.seed), std::nullopt};
    case K::Symmetric: {
      auto s = gen_symmetric();
      return {std::move(s.pair), std::move(s.map)};
    }
    case K::Figure: return {gen_figure(spec.n), std::nullopt};
    case K::Random: return {gen_random(spec.n, spec.seed), std::nullopt};
  }
  throw std::invalid_argument("unknown generator kind");
}

}  // namespace especial
