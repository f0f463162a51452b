#pragma once

// Test-only helpers: seeded random inputs and brute-force oracles written
// without the library's circle predicates (plain sorting of tagged points).

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "especial/circle.hpp"
#include "especial/generators.hpp"

namespace especial::testing {

inline CirclePoint random_point(Rng& rng, int spread = 40, int max_den = 6) {
  if (rng.between(0, 29) == 0) return CirclePoint::infinity();
  return CirclePoint(ratio(rng.between(-spread, spread), rng.between(1, max_den)));
}

inline CircleSet random_set(Rng& rng, std::size_t size, const std::set<CirclePoint>& avoid = {}) {
  std::set<CirclePoint> pts;
  while (pts.size() < size) {
    const CirclePoint p = random_point(rng);
    if (!avoid.count(p)) pts.insert(p);
  }
  return CircleSet(std::vector<CirclePoint>(pts.begin(), pts.end()));
}

/// Disjoint random pair with sizes drawn from [1, max_size].
inline std::pair<CircleSet, CircleSet> random_disjoint_pair(Rng& rng, std::size_t max_size = 8) {
  const CircleSet a = random_set(rng, static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(max_size))));
  const std::set<CirclePoint> used(a.begin(), a.end());
  const CircleSet b = random_set(rng, static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(max_size))), used);
  return {a, b};
}

// Sort key placing INF after every finite value, independent of CirclePoint's <=>.
struct Key {
  bool inf;
  Rational v;
  bool operator<(const Key& o) const {
    if (inf != o.inf) return !inf;
    return !inf && v < o.v;
  }
};

inline Key key_of(const CirclePoint& p) { return {p.is_infinite(), p.is_infinite() ? Rational(0) : p.value()}; }

/// Tags of the merged cyclic sequence of labelled point sets.
inline std::vector<int> merged_tags(const std::vector<const CircleSet*>& sets) {
  std::vector<std::pair<Key, int>> all;
  for (int t = 0; t < static_cast<int>(sets.size()); ++t) {
    for (const auto& p : *sets[t]) all.push_back({key_of(p), t});
  }
  std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<int> tags;
  for (const auto& [k, t] : all) tags.push_back(t);
  return tags;
}

/// Number of maximal cyclic runs of A in the merged sequence of disjoint A, B:
/// the linking multiplicity (1 when unlinked).
inline std::size_t oracle_link_number(const CircleSet& a, const CircleSet& b) {
  const auto tags = merged_tags({&a, &b});
  std::size_t changes = 0;
  for (std::size_t k = 0; k < tags.size(); ++k) changes += tags[k] != tags[(k + 1) % tags.size()];
  return std::max<std::size_t>(1, changes / 2);
}

inline bool oracle_in_open_arc(const Key& from, const Key& to, const Key& x) {
  if (from < to) return from < x && x < to;
  return to < from ? (from < x || x < to) : false;
}

/// Quadruple search straight from the definition: distinct a, a' in A and
/// distinct b, b' in B, neither b on {a, a'}, with exactly one b in (a, a').
inline bool oracle_linked(const CircleSet& a, const CircleSet& b) {
  for (const auto& a0 : a)
    for (const auto& a1 : a) {
      if (a0 == a1) continue;
      for (const auto& b0 : b)
        for (const auto& b1 : b) {
          if (b0 == b1 || b0 == a0 || b0 == a1 || b1 == a0 || b1 == a1) continue;
          const bool in0 = oracle_in_open_arc(key_of(a0), key_of(a1), key_of(b0));
          const bool in1 = oracle_in_open_arc(key_of(a0), key_of(a1), key_of(b1));
          if (in0 != in1) return true;
        }
    }
  return false;
}

/// Index of the gap of B (numbered by the B point preceding it) holding x.
inline std::size_t oracle_gap(const CircleSet& b, const CirclePoint& x) {
  const Key kx = key_of(x);
  std::size_t below = 0;
  for (const auto& p : b) below += key_of(p) < kx;
  return below == 0 ? b.size() - 1 : below - 1;
}

/// A and C each inside one gap of B, and the gaps differ.
inline bool oracle_separates(const CircleSet& b, const CircleSet& a, const CircleSet& c) {
  if (b.size() < 2) return false;
  std::set<std::size_t> ga, gc;
  for (const auto& p : a) ga.insert(oracle_gap(b, p));
  for (const auto& p : c) gc.insert(oracle_gap(b, p));
  return ga.size() == 1 && gc.size() == 1 && *ga.begin() != *gc.begin();
}

}  // namespace especial::testing
