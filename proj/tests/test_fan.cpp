#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "delzant/constructions.hpp"
#include "delzant/fan.hpp"
#include "delzant/moduli.hpp"
#include "delzant/secondary.hpp"

using namespace delzant;

namespace {

LatticeVector lv(std::initializer_list<long> xs) {
  LatticeVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

RationalVector qv(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(BigInt(x));
  return v;
}

Fan square_fan() {
  return Fan(2, {lv({1, 0}), lv({0, 1}), lv({-1, 0}), lv({0, -1})},
             {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

/// Random Delzant polygon: a chopped triangle or trapezoid.
Polytope random_delzant_polygon(std::mt19937& rng, int max_chops = 3) {
  std::uniform_int_distribution<long> size(1, 4);
  std::uniform_int_distribution<int> kind(0, 1);
  Polytope P = kind(rng) == 0
                   ? delzant_triangle(Rational(BigInt(size(rng))))
                   : hirzebruch_trapezoid(Rational(BigInt(size(rng) + 2)),
                                          Rational(BigInt(size(rng))), BigInt(kind(rng)));
  std::uniform_int_distribution<int> chops(0, max_chops);
  int count = chops(rng);
  for (int i = 0; i < count; ++i) {
    std::uniform_int_distribution<size_t> pick(0, P.vertices().size() - 1);
    size_t v = pick(rng);
    Rational shortest;
    bool first = true;
    for (size_t u : P.adjacent_vertices(v)) {
      Rational len = rational_length(P.vertices()[v], P.vertices()[u]);
      if (first || len < shortest) shortest = len;
      first = false;
    }
    P = corner_chop(P, P.vertices()[v], shortest / Rational(3));
  }
  return P;
}

}  // namespace

TEST_CASE("fan validation") {
  CHECK_THROWS_AS(Fan(2, {lv({2, 0}), lv({0, 1})}, {{0, 1}}), Error);  // not primitive
  CHECK_THROWS_AS(Fan(2, {lv({1, 0}), lv({1, 0})}, {{0, 1}}), Error);  // duplicate
  CHECK_THROWS_AS(Fan(2, {lv({1, 0}), lv({0, 1})}, {{0}}), Error);     // unused ray
}

TEST_CASE("fan properties of the Hirzebruch fan") {
  for (long k = 0; k <= 4; ++k) {
    Fan f = hirzebruch_fan(BigInt(k));
    auto props = fan_properties(f);
    CHECK(props.rational);
    CHECK(props.pointed);
    CHECK(props.simplicial);
    CHECK(props.complete);
    CHECK(props.unimodular);
    CHECK(f.rays().size() == 4);
    for (size_t v : props.valency) CHECK(v == 2);
  }
}

TEST_CASE("incomplete fan detected") {
  // three quadrants of the plane
  Fan f(2, {lv({1, 0}), lv({0, 1}), lv({-1, 0}), lv({0, -1})}, {{0, 1}, {1, 2}, {2, 3}});
  auto props = fan_properties(f);
  CHECK(props.simplicial);
  CHECK(!props.complete);
}

TEST_CASE("improper intersection detected") {
  // two overlapping 2D cones
  Fan f(2, {lv({1, 0}), lv({0, 1}), lv({1, 1}), lv({-1, 0}), lv({0, -1}), lv({-1, -1})},
        {{0, 1}, {2, 3}, {3, 4}, {4, 0}, {1, 5}});
  CHECK_THROWS_AS(fan_properties(f, true), Error);
}

TEST_CASE("normal fans") {
  Polytope h = hirzebruch_trapezoid(Rational(3), Rational(2), BigInt(1));
  CHECK(normal_fan(h) == hirzebruch_fan(BigInt(1)));

  Fan tri = normal_fan(delzant_triangle(Rational(2)));
  Fan expected(2, {lv({-1, 0}), lv({0, -1}), lv({1, 1})}, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(tri == expected);

  Fan cube_fan = normal_fan(cube(3));
  CHECK(cube_fan.rays().size() == 6);
  CHECK(cube_fan.maximal_cones().size() == 8);
  CHECK(fan_properties(cube_fan).unimodular);
}

TEST_CASE("refinement relation") {
  Fan h1 = hirzebruch_fan(BigInt(1));
  CHECK(refines(h1, h1));

  Fan blown = blow_up(square_fan(), {0, 1});
  CHECK(refines(blown, square_fan()));
  CHECK(!refines(square_fan(), blown));

  // N(P1 + P2) refines N(P1)
  Polytope t = delzant_triangle(Rational(1));
  Polytope h = hirzebruch_trapezoid(Rational(3), Rational(2), BigInt(1));
  Polytope sum = minkowski_combine(Rational(1), t, Rational(1), h);
  CHECK(refines(normal_fan(sum), normal_fan(t)));
  CHECK(refines(normal_fan(sum), normal_fan(h)));
}

TEST_CASE("common refinement") {
  Fan sq = square_fan();
  CHECK(common_refinement(sq, sq) == sq);

  Polytope t = delzant_triangle(Rational(1));
  Polytope r = Polytope::from_vertices(2, {qv({0, 0}), qv({-1, 0}), qv({0, 1})});
  Fan cr = common_refinement(normal_fan(t), normal_fan(r));
  CHECK(cr.rays().size() == 5);
  Polytope pentagon = minkowski_combine(Rational(1), t, Rational(1), r);
  CHECK(cr == normal_fan(pentagon));

  // against N(P+Q) on random Delzant polygons
  std::mt19937 rng(43);
  for (int trial = 0; trial < 12; ++trial) {
    Polytope a = random_delzant_polygon(rng);
    Polytope b = random_delzant_polygon(rng);
    Fan lhs = common_refinement(normal_fan(a), normal_fan(b));
    Fan rhs = normal_fan(minkowski_combine(Rational(1), a, Rational(1), b));
    CHECK(lhs == rhs);
    CHECK(refines(lhs, normal_fan(a)));
    CHECK(refines(lhs, normal_fan(b)));
  }
}

TEST_CASE("stellar subdivision") {
  Fan sq = square_fan();
  // gamma on an existing ray: unchanged
  CHECK(stellar_subdivision(sq, lv({2, 0})) == sq);

  // interior of a 2D cone: cone replaced by two
  Fan split = stellar_subdivision(sq, lv({1, 1}));
  CHECK(split.rays().size() == 5);
  CHECK(split.maximal_cones().size() == 5);

  CHECK_THROWS_AS(
      stellar_subdivision(Fan(2, {lv({1, 0}), lv({0, 1})}, {{0, 1}}), lv({-1, -1})), Error);

  // moae: inserting (1,1,1) splits the determinant-two cone into three
  Fan base = moae_fan(false);
  Fan split3 = stellar_subdivision(base, lv({1, 1, 1}));
  CHECK(split3.rays().size() == 7);
  CHECK(split3.maximal_cones().size() == 10);
  CHECK(split3 == moae_fan(true));
}

TEST_CASE("blow-up") {
  Fan sq = square_fan();
  Fan blown = blow_up(sq, {0, 1});
  CHECK(blown.rays().size() == 5);
  CHECK(blown.maximal_cones().size() == 5);
  REQUIRE(blown.ray_index(lv({1, 1})).has_value());
  CHECK(fan_properties(blown).unimodular);

  // blowing up a non-unimodular cone is rejected
  Fan skew(2, {lv({1, 0}), lv({1, 2}), lv({-1, -1})}, {{0, 1}, {1, 2}, {2, 0}});
  CHECK_THROWS_AS(blow_up(skew, {0, 1}), Error);

  // unimodularity is preserved on random blow-ups
  std::mt19937 rng(47);
  for (int trial = 0; trial < 50; ++trial) {
    Polytope P = random_delzant_polygon(rng);
    Fan f = normal_fan(P);
    std::uniform_int_distribution<size_t> pick(0, f.maximal_cones().size() - 1);
    Fan g = blow_up(f, f.maximal_cones()[pick(rng)]);
    CHECK(fan_properties(g).unimodular);
    CHECK(fan_properties(g).complete);
    CHECK(refines(g, f));
  }
}

TEST_CASE("blow-down detection and reconstruction") {
  // chopped triangle: exactly one blow-down, recovering the triangle fan
  Polytope t = delzant_triangle(Rational(1));
  Polytope chopped = corner_chop(t, qv({0, 0}), Rational(1, 4));
  Fan f = normal_fan(chopped);
  auto candidates = find_blow_downs(f);
  REQUIRE(candidates.size() == 1);
  Fan back = apply_blow_down(f, candidates[0]);
  CHECK(back == normal_fan(t));
  std::vector<size_t> remapped;
  for (size_t i : candidates[0].target) remapped.push_back(*back.ray_index(f.rays()[i]));
  CHECK(blow_up(back, remapped) == f);

  // square fan has no blow-downs
  CHECK(find_blow_downs(square_fan()).empty());

  // blow-down of a 3D corner chop includes a full-dimensional target
  Polytope c = cube(3);
  Polytope chopped3 = corner_chop(c, qv({0, 0, 0}), Rational(1, 3));
  auto candidates3 = find_blow_downs(normal_fan(chopped3));
  REQUIRE(candidates3.size() == 1);
  CHECK(candidates3[0].target.size() == 3);
  CHECK(apply_blow_down(normal_fan(chopped3), candidates3[0]) == normal_fan(c));

  // blow-up then blow-down is the identity, full-dimensional and ridge targets
  Fan cf = normal_fan(c);
  for (std::vector<size_t> target : {std::vector<size_t>{0, 1, 2}, std::vector<size_t>{0, 1}}) {
    // pick indices forming a cone of the fan
    const auto& cone = cf.maximal_cones()[0];
    std::vector<size_t> t2(cone.begin(), cone.begin() + target.size());
    Fan up = blow_up(cf, t2);
    auto downs = find_blow_downs(up);
    bool recovered = false;
    for (const auto& cand : downs)
      if (apply_blow_down(up, cand) == cf) recovered = true;
    CHECK(recovered);
  }
}

TEST_CASE("cancellation token") {
  std::atomic<bool> flag{true};
  CancellationToken token{&flag};
  Polytope c = cube(3);
  CHECK_THROWS_AS(find_blow_downs(normal_fan(c), token), Error);
}

TEST_CASE("non-pointed cones are reported") {
  Fan half_line(2, {lv({1, 0}), lv({-1, 0}), lv({0, 1})}, {{0, 1, 2}});
  auto props = fan_properties(half_line, false);
  CHECK(!props.pointed);
  CHECK(!props.simplicial);
}
