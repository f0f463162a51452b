#pragma once

// Deterministic fixtures and seeded random families.
//
// Randomness comes from std::mt19937_64, whose output sequence is fixed by the
// C++ standard. Bounded draws use `next() % range` (the bias is irrelevant at
// the ranges used) so corpora are reproducible across platforms and languages.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "especial/family.hpp"
#include "especial/symmetry.hpp"

namespace especial {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform-ish integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool chance(unsigned percent) { return next() % 100 < percent; }

 private:
  std::mt19937_64 engine_;
};

/// n parallel plus chords crossing n parallel minus chords on the marked
/// points 0 .. 4n-1: plus_k = {-k mod 4n, n+1+k}, minus_k = {n-k, 2n+1+k}.
FamilyPair gen_grid(std::size_t n);

/// plus = {0, 2, ..., 2k-2}, minus = {1, 3, ..., 2k-1}: one k-linked pair.
FamilyPair gen_star(std::size_t k);
FamilyPair gen_tripod();

/// Binary bracket family with 2^(depth+1) - 1 pairwise unlinked chords. Every
/// point lies in (0, 1) + offset, taken mod 1.
std::vector<CircleSet> gen_nested(unsigned depth, std::uint64_t seed, const Rational& offset = 0);

/// Two nested families; the minus one is shifted by 1/3 so no point is shared.
FamilyPair gen_nested_pair(unsigned depth, std::uint64_t seed);

struct SymmetricFixture {
  FamilyPair pair;
  CircleMap map;
};

/// plus = [{1, -1}], minus = [{0, inf}] with g = u -> -1/u.
SymmetricFixture gen_symmetric();

/// Random non-crossing families of points, 2-, 3- and 4-gons, with occasional
/// shared points across families. `size` bounds the number of marked points.
FamilyPair gen_random(std::size_t size, std::uint64_t seed);

/// Parameters of `b` shifted past those of `a`; families concatenated.
/// Both inputs must avoid INF.
FamilyPair compose_disjoint(const FamilyPair& a, const FamilyPair& b);

/// gen_grid(n) next to a disjoint tripod: n^2 + 1 interior points.
FamilyPair gen_figure(std::size_t n);

struct GenSpec {
  enum class Kind { Grid, Star, Tripod, Nested, Symmetric, Figure, Random };
  Kind kind = Kind::Grid;
  std::size_t n = 2;  // grid size, star arity, nesting depth, figure grid size, random size
  std::uint64_t seed = 0;
};

std::optional<GenSpec::Kind> parse_gen_kind(std::string_view name);

struct Generated {
  FamilyPair pair;
  std::optional<CircleMap> map;
};

Generated generate(const GenSpec& spec);

}  // namespace especial
