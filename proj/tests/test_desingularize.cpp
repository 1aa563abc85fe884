#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "delzant/constructions.hpp"
#include "delzant/desingularize.hpp"
#include "delzant/moduli.hpp"
#include "delzant/secondary.hpp"
#include "delzant/lp.hpp"

using namespace delzant;

namespace {

LatticeVector lv(std::initializer_list<long> xs) {
  LatticeVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Brute-force Hilbert basis oracle: lattice points of bounded norm inside
// the cone, keeping those that are not sums of two nonzero cone points.
std::vector<LatticeVector> hilbert_oracle(const LatticeVector& u, const LatticeVector& v,
                                          long radius) {
  std::vector<LatticeVector> gens = {u, v};
  std::set<std::pair<long, long>> in_cone;
  for (long x = -radius; x <= radius; ++x) {
    for (long y = -radius; y <= radius; ++y) {
      if (x == 0 && y == 0) continue;
      auto coeff = simplicial_coefficients(gens, RationalVector{Rational(BigInt(x)), Rational(BigInt(y))});
      if (!coeff || (*coeff)[0].sign() < 0 || (*coeff)[1].sign() < 0) continue;
      in_cone.insert({x, y});
    }
  }
  std::vector<LatticeVector> basis;
  for (auto [x, y] : in_cone) {
    bool reducible = false;
    for (auto [px, py] : in_cone) {
      if (in_cone.count({x - px, y - py})) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(lv({x, y}));
  }
  std::sort(basis.begin(), basis.end(),
            [](const LatticeVector& a, const LatticeVector& b) { return lex_compare(a, b) < 0; });
  return basis;
}

/// Complete 2D fan containing Cone(u, v) with |det| > 1 plus a filler.
Fan skew_fan() {
  return Fan(2, {lv({1, 0}), lv({1, 2}), lv({-1, -1})}, {{0, 1}, {1, 2}, {2, 0}});
}

Fan octahedron_normal_fan() {
  // Cones over the facets of the cube: non-simplicial.
  std::vector<LatticeVector> rays;
  for (int x : {-1, 1})
    for (int y : {-1, 1})
      for (int z : {-1, 1}) rays.push_back(lv({x, y, z}));
  auto idx = [&](int x, int y, int z) {
    return static_cast<size_t>(((x + 1) / 2) * 4 + ((y + 1) / 2) * 2 + (z + 1) / 2);
  };
  std::vector<std::vector<size_t>> cones;
  for (int s : {-1, 1}) {
    cones.push_back({idx(s, -1, -1), idx(s, -1, 1), idx(s, 1, -1), idx(s, 1, 1)});
    cones.push_back({idx(-1, s, -1), idx(-1, s, 1), idx(1, s, -1), idx(1, s, 1)});
    cones.push_back({idx(-1, -1, s), idx(-1, 1, s), idx(1, -1, s), idx(1, 1, s)});
  }
  return Fan(3, std::move(rays), std::move(cones));
}

}  // namespace

TEST_CASE("hilbert basis of 2D cones") {
  CHECK(hilbert_basis_2d(lv({1, 0}), lv({0, 1})) ==
        std::vector<LatticeVector>{lv({0, 1}), lv({1, 0})});
  CHECK(hilbert_basis_2d(lv({1, 0}), lv({1, 2})) ==
        std::vector<LatticeVector>{lv({1, 0}), lv({1, 1}), lv({1, 2})});
  CHECK(hilbert_basis_2d(lv({1, 0}), lv({1, 3})) ==
        std::vector<LatticeVector>{lv({1, 0}), lv({1, 1}), lv({1, 2}), lv({1, 3})});
  CHECK_THROWS_AS(hilbert_basis_2d(lv({1, 1}), lv({2, 2})), Error);
  CHECK_THROWS_AS(hilbert_basis_2d(lv({1, 1}), lv({-1, -1})), Error);

  std::mt19937 rng(59);
  std::uniform_int_distribution<long> d(-4, 4);
  int done = 0;
  while (done < 40) {
    LatticeVector u = lv({d(rng), d(rng)});
    LatticeVector v = lv({d(rng), d(rng)});
    if (is_zero(u) || is_zero(v)) continue;
    u = primitive_vector(u);
    v = primitive_vector(v);
    if (u[0] * v[1] - u[1] * v[0] == 0) continue;
    ++done;
    auto basis = hilbert_basis_2d(u, v);
    CHECK(basis == hilbert_oracle(u, v, 10));
    // non-generator count bounded by the multiplicity
    BigInt mult = cone_multiplicity({u, v});
    CHECK(BigInt(basis.size()) - 2 <= mult);
  }
}

TEST_CASE("simplicialize") {
  // already simplicial: unchanged with empty trace
  Fan h = hirzebruch_fan(BigInt(2));
  auto [sh, trace_h] = simplicialize(h);
  CHECK(sh == h);
  CHECK(trace_h.steps.empty());

  // octahedron normal fan: cones over cube facets are non-simplicial
  Fan oct = octahedron_normal_fan();
  CHECK(!fan_properties(oct, false).simplicial);
  auto [soct, trace_oct] = simplicialize(oct);
  auto props = fan_properties(soct);
  CHECK(props.simplicial);
  CHECK(props.complete);
  CHECK(refines(soct, oct));
  CHECK(trace_oct.steps.size() == 6);  // one insertion per square cone
  CHECK(replay_trace(oct, trace_oct) == soct);
}

TEST_CASE("desingularize the skew 2D fan") {
  Fan f = skew_fan();
  auto [uni, trace] = desingularize(f);
  auto props = fan_properties(uni);
  CHECK(props.unimodular);
  CHECK(props.complete);
  CHECK(refines(uni, f));
  // Cone((1,0),(1,2)) has multiplicity two; (1,1) is the inserted vector
  bool inserted = false;
  for (const auto& step : trace.steps)
    if (step.gamma == lv({1, 1})) inserted = true;
  CHECK(inserted);
  CHECK(uni.ray_index(lv({1, 1})).has_value());
  CHECK(replay_trace(f, trace) == uni);
}

TEST_CASE("desingularize is the identity on unimodular fans") {
  Fan h = hirzebruch_fan(BigInt(3));
  auto [uni, trace] = desingularize(h);
  CHECK(uni == h);
  CHECK(trace.steps.empty());
}

TEST_CASE("moae pipeline") {
  Fan base = moae_fan(false);
  auto [uni, trace] = desingularize(base);
  REQUIRE(trace.steps.size() == 1);
  CHECK(trace.steps[0].gamma == lv({1, 1, 1}));
  CHECK(uni.rays().size() == 7);
  CHECK(uni.maximal_cones().size() == 10);
  auto props = fan_properties(uni);
  CHECK(props.unimodular);
  CHECK(props.complete);
  CHECK(refines(uni, base));
  CHECK(uni == moae_fan(true));
}

TEST_CASE("monotone multiplicity along the trace") {
  Fan f = skew_fan();
  auto [uni, trace] = desingularize(f);
  Fan current = f;
  BigInt prev_max = 0;
  for (const auto& cone : current.maximal_cones()) {
    std::vector<LatticeVector> gens;
    for (size_t i : cone) gens.push_back(current.rays()[i]);
    prev_max = std::max(prev_max, cone_multiplicity(gens));
  }
  for (const auto& step : trace.steps) {
    current = stellar_subdivision(current, step.gamma);
    BigInt max = 0;
    for (const auto& cone : current.maximal_cones()) {
      std::vector<LatticeVector> gens;
      for (size_t i : cone) gens.push_back(current.rays()[i]);
      max = std::max(max, cone_multiplicity(gens));
    }
    CHECK(max <= prev_max);
    prev_max = max;
  }
  CHECK(prev_max == 1);
}

TEST_CASE("2D desingularization inserts exactly the Hilbert basis rays") {
  std::mt19937 rng(61);
  std::uniform_int_distribution<long> d(-5, 5);
  int done = 0;
  while (done < 30) {
    // random complete 2D fan from 4-6 primitive rays
    std::set<LatticeVector, LexLess> rayset;
    std::uniform_int_distribution<int> count(4, 6);
    int want = count(rng);
    while (static_cast<int>(rayset.size()) < want) {
      LatticeVector r = lv({d(rng), d(rng)});
      if (is_zero(r)) continue;
      rayset.insert(primitive_vector(r));
    }
    std::vector<LatticeVector> rays(rayset.begin(), rayset.end());
    if (!positively_spans(rays, 2)) continue;
    // cyclic order by angle
    std::sort(rays.begin(), rays.end(), [](const LatticeVector& a, const LatticeVector& b) {
      auto half = [](const LatticeVector& w) { return w[1] > 0 || (w[1] == 0 && w[0] > 0) ? 0 : 1; };
      if (half(a) != half(b)) return half(a) < half(b);
      return a[0] * b[1] - a[1] * b[0] > 0;
    });
    std::vector<std::vector<size_t>> cones;
    for (size_t i = 0; i < rays.size(); ++i) cones.push_back({i, (i + 1) % rays.size()});
    Fan f(2, rays, cones);
    ++done;

    auto [uni, trace] = desingularize(f);
    CHECK(fan_properties(uni).unimodular);
    CHECK(refines(uni, f));

    // inserted rays inside each original cone = non-generator Hilbert basis
    for (size_t i = 0; i < rays.size(); ++i) {
      const LatticeVector& u = rays[i];
      const LatticeVector& v = rays[(i + 1) % rays.size()];
      std::set<LatticeVector, LexLess> expected;
      for (const auto& h : hilbert_basis_2d(u, v))
        if (h != u && h != v) expected.insert(h);
      std::set<LatticeVector, LexLess> inserted;
      for (const auto& ray : uni.rays()) {
        if (ray == u || ray == v) continue;
        auto coeff = simplicial_coefficients({u, v}, to_rational(ray));
        if (coeff && (*coeff)[0].sign() > 0 && (*coeff)[1].sign() > 0) inserted.insert(ray);
      }
      CHECK(inserted == expected);
    }
  }
}

TEST_CASE("polytopal input stays polytopal") {
  Polytope pent = delzant_pentagon();
  Polytope tri = delzant_triangle(Rational(2));
  Fan cr = common_refinement(normal_fan(pent), normal_fan(tri));
  auto [uni, trace] = desingularize(cr);
  CHECK(fan_properties(uni).unimodular);
  CHECK(is_polytopal(uni));
}
