#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "especial/generators.hpp"
#include "especial/json_io.hpp"

using namespace especial;

namespace {
CirclePoint q(long n, long d = 1) { return CirclePoint(ratio(n, d)); }
CircleSet set_of(std::initializer_list<long> values) {
  std::vector<CirclePoint> pts;
  for (long v : values) pts.emplace_back(v);
  return CircleSet(pts);
}
}  // namespace

TEST_CASE("grid fixture") {
  const FamilyPair g = gen_grid(2);
  CHECK(g.plus() == std::vector<CircleSet>{set_of({0, 3}), set_of({4, 7})});
  CHECK(g.minus() == std::vector<CircleSet>{set_of({2, 5}), set_of({6, 1})});
  CHECK(especial_disc(gen_grid(1)).interior().size() == 1);
  CHECK_THROWS_AS(gen_grid(0), std::invalid_argument);
}

TEST_CASE("grids have n^2 regular interior points") {
  for (std::size_t n = 1; n <= 20; ++n) {
    const FamilyPair g = gen_grid(n);
    const EspecialDisc z = especial_disc(g);
    CHECK(z.interior().size() == n * n);
    CHECK(z.boundary().empty());
    for (const auto& p : z.interior()) CHECK(prong_count(g, p.z()) == 4);
  }
}

TEST_CASE("stars") {
  CHECK(gen_tripod().plus() == std::vector<CircleSet>{set_of({0, 2, 4})});
  for (std::size_t k = 3; k <= 8; ++k) {
    const FamilyPair s = gen_star(k);
    const EspecialDisc z = especial_disc(s);
    REQUIRE(z.interior().size() == 1);
    CHECK(prong_count(s, z.interior()[0].z()) == 2 * k);
  }
  CHECK_THROWS_AS(gen_star(2), std::invalid_argument);
}

TEST_CASE("figure composes a tripod with a grid block") {
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(especial_disc(gen_figure(n)).interior().size() == 1 + n * n);
  }
}

TEST_CASE("nested families") {
  CHECK(gen_nested(0, 5).size() == 1);
  const auto one = gen_nested(1, 5);
  REQUIRE(one.size() == 3);
  CHECK(separates(one[0], one[1], one[2]));
  for (unsigned d = 0; d <= 6; ++d) CHECK(gen_nested(d, 9).size() == (std::size_t{2} << d) - 1);
  CHECK(gen_nested(3, 17) == gen_nested(3, 17));
  CHECK_FALSE(gen_nested(3, 17) == gen_nested(3, 18));
  // Every point lies in [0, 1) after the offset is applied.
  for (const auto& s : gen_nested(4, 2, Rational(1, 3)))
    for (const auto& p : s) CHECK((p.value() >= 0 && p.value() < 1));
}

TEST_CASE("nested pairs validate for many seeds") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    CHECK_NOTHROW(gen_nested_pair(static_cast<unsigned>(seed % 5), seed));
  }
}

TEST_CASE("random families validate for all sizes up to 50") {
  for (std::size_t size = 2; size <= 50; ++size) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) CHECK_NOTHROW(gen_random(size, seed * 131 + size));
  }
}

TEST_CASE("symmetric fixture") {
  const auto s = gen_symmetric();
  CHECK(s.pair.plus() == std::vector<CircleSet>{CircleSet{q(1), q(-1)}});
  CHECK(s.pair.minus() == std::vector<CircleSet>{CircleSet{q(0), CirclePoint::infinity()}});
  CHECK(s.map.power(2).is_projective_identity());
  CHECK(especial_disc(s.pair).interior().size() == 1);
}

TEST_CASE("identical specs give byte-identical JSON") {
  using K = GenSpec::Kind;
  for (K kind : {K::Grid, K::Star, K::Tripod, K::Nested, K::Symmetric, K::Figure, K::Random}) {
    const GenSpec spec{kind, 4, 99};
    CHECK(to_json(generate(spec).pair).dump() == to_json(generate(spec).pair).dump());
  }
  CHECK(parse_gen_kind("nested") == GenSpec::Kind::Nested);
  CHECK_FALSE(parse_gen_kind("spiral").has_value());
}

TEST_CASE("random stream is frozen") {
  // mt19937_64 is fully specified by the standard: its 10000th output from the
  // default seed is fixed.
  std::mt19937_64 reference;
  reference.discard(9999);
  CHECK(reference() == 9981545732273789042ULL);
  Rng rng(5489);
  CHECK(rng.next() == 14514284786278117030ULL);
}
