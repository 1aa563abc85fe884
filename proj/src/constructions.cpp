#include "delzant/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "delzant/desingularize.hpp"
#include "delzant/metrics.hpp"
#include "delzant/moduli.hpp"
#include "delzant/secondary.hpp"

namespace delzant {

Polytope delzant_triangle(const Rational& lambda) {
  if (lambda.sign() <= 0)
    throw Error(ErrorCode::UnsupportedInput, "triangle size must be positive");
  std::vector<Facet> rows = {
      Facet{{BigInt(-1), BigInt(0)}, Rational(0)},
      Facet{{BigInt(0), BigInt(-1)}, Rational(0)},
      Facet{{BigInt(1), BigInt(1)}, lambda},
  };
  return Polytope::from_halfspaces(2, rows);
}

Polytope hirzebruch_trapezoid(const Rational& a, const Rational& b, const BigInt& k) {
  if (a.sign() <= 0 || b.sign() <= 0 || k < 0)
    throw Error(ErrorCode::UnsupportedInput, "trapezoid parameters out of range");
  if (!(Rational(2) * a > b * Rational(k)))
    throw Error(ErrorCode::UnsupportedInput, "trapezoid requires 2a > bk");
  Rational half_b = b / Rational(2);
  std::vector<Facet> rows = {
      Facet{{BigInt(0), BigInt(-1)}, half_b},
      Facet{{BigInt(0), BigInt(1)}, half_b},
      Facet{{BigInt(-1), BigInt(0)}, Rational(0)},
      Facet{{BigInt(1), k}, a},
  };
  return Polytope::from_halfspaces(2, rows);
}

Fan hirzebruch_fan(const BigInt& k) {
  if (k < 0) throw Error(ErrorCode::UnsupportedInput, "fan parameter must be nonnegative");
  std::vector<LatticeVector> rays = {
      {BigInt(0), BigInt(-1)}, {BigInt(0), BigInt(1)}, {BigInt(-1), BigInt(0)}, {BigInt(1), k}};
  std::vector<std::vector<size_t>> cones = {{0, 2}, {2, 1}, {1, 3}, {3, 0}};
  return Fan(2, std::move(rays), std::move(cones));
}

Polytope cube(size_t n) {
  if (n == 0) throw Error(ErrorCode::UnsupportedInput, "cube dimension must be positive");
  std::vector<Facet> rows;
  for (size_t i = 0; i < n; ++i) {
    LatticeVector neg(n, BigInt(0)), pos(n, BigInt(0));
    neg[i] = -1;
    pos[i] = 1;
    rows.push_back(Facet{neg, Rational(0)});
    rows.push_back(Facet{pos, Rational(1)});
  }
  return Polytope::from_halfspaces(n, rows);
}

Polytope prism(const Polytope& polygon) {
  if (polygon.dim() != 2)
    throw Error(ErrorCode::UnsupportedInput, "prism base must be a polygon");
  std::vector<Facet> rows;
  for (const auto& f : polygon.facets())
    rows.push_back(Facet{{f.normal[0], f.normal[1], BigInt(0)}, f.rhs});
  rows.push_back(Facet{{BigInt(0), BigInt(0), BigInt(-1)}, Rational(0)});
  rows.push_back(Facet{{BigInt(0), BigInt(0), BigInt(1)}, Rational(1)});
  return Polytope::from_halfspaces(3, rows);
}

Polytope delzant_pentagon() {
  Polytope square = cube(2);
  std::vector<Facet> rows = square.facets();
  rows.push_back(Facet{{BigInt(1), BigInt(1)}, Rational(3, 2)});
  return Polytope::from_halfspaces(2, rows);
}

Fan moae_fan(bool unimodular) {
  // Rays: -e_1, -e_2, -e_3, a_1, a_2, a_3 with a_i = (1,1,1) - e_i.
  std::vector<LatticeVector> rays = {
      {BigInt(-1), BigInt(0), BigInt(0)}, {BigInt(0), BigInt(-1), BigInt(0)},
      {BigInt(0), BigInt(0), BigInt(-1)}, {BigInt(0), BigInt(1), BigInt(1)},
      {BigInt(1), BigInt(0), BigInt(1)}, {BigInt(1), BigInt(1), BigInt(0)},
  };
  // Boundary triangulation of the prism with cyclic diagonals
  // (-e_1)a_2, (-e_2)a_3, (-e_3)a_1.
  std::vector<std::vector<size_t>> cones = {
      {0, 1, 2},  // bottom triangle
      {3, 4, 5},  // top triangle, determinant two
      {0, 1, 4}, {0, 3, 4},  // quad between -e_1, -e_2 split by (-e_1)a_2
      {1, 2, 5}, {1, 4, 5},  // quad between -e_2, -e_3 split by (-e_2)a_3
      {2, 0, 3}, {2, 5, 3},  // quad between -e_3, -e_1 split by (-e_3)a_1
  };
  Fan base(3, std::move(rays), std::move(cones));
  if (!unimodular) return base;
  return stellar_subdivision(base, {BigInt(1), BigInt(1), BigInt(1)});
}

Fan cubocta_fan(bool rescaled) {
  auto v = [](int x, int y, int z) { return LatticeVector{BigInt(x), BigInt(y), BigInt(z)}; };
  std::vector<LatticeVector> rays = {
      v(1, 1, 0),  v(1, -1, 0),  v(-1, 1, 0),  v(-1, -1, 0),   // 0..3  (x,y,0)
      v(1, 0, 1),  v(1, 0, -1),  v(-1, 0, 1),  v(-1, 0, -1),   // 4..7  (x,0,z)
      v(0, 1, 1),  v(0, 1, -1),  v(0, -1, 1),  v(0, -1, -1),   // 8..11 (0,y,z)
  };
  std::vector<std::vector<size_t>> cones;
  // Eight octant triangles.
  for (int sx : {1, -1}) {
    for (int sy : {1, -1}) {
      for (int sz : {1, -1}) {
        size_t xy = (sx > 0 ? 0u : 2u) + (sy > 0 ? 0u : 1u);
        size_t xz = (sx > 0 ? 4u : 6u) + (sz > 0 ? 0u : 1u);
        size_t yz = (sy > 0 ? 8u : 10u) + (sz > 0 ? 0u : 1u);
        cones.push_back({xy, xz, yz});
      }
    }
  }
  // Six squares, two triangles each; diagonals chosen cyclically so every
  // vertex is used exactly once (x-faces get y-diagonals, y-faces
  // z-diagonals, z-faces x-diagonals).
  cones.push_back({0, 1, 4});
  cones.push_back({0, 1, 5});  // x = +1, diagonal (1,1,0)-(1,-1,0)
  cones.push_back({2, 3, 6});
  cones.push_back({2, 3, 7});  // x = -1
  cones.push_back({8, 9, 0});
  cones.push_back({8, 9, 2});  // y = +1, diagonal (0,1,1)-(0,1,-1)
  cones.push_back({10, 11, 1});
  cones.push_back({10, 11, 3});  // y = -1
  cones.push_back({4, 6, 8});
  cones.push_back({4, 6, 10});  // z = +1, diagonal (1,0,1)-(-1,0,1)
  cones.push_back({5, 7, 9});
  cones.push_back({5, 7, 11});  // z = -1

  if (rescaled) {
    // Map the index-two sublattice {x+y+z even} onto Z^3.
    std::vector<RationalVector> basis_cols = {
        {Rational(1), Rational(1), Rational(0)},
        {Rational(0), Rational(1), Rational(1)},
        {Rational(0), Rational(0), Rational(2)},
    };
    QMatrix basis = QMatrix::from_columns(basis_cols);
    for (auto& ray : rays) {
      auto sol = solve_linear_system(basis, to_rational(ray));
      if (!sol) throw Error(ErrorCode::InternalInconsistency, "sublattice basis is singular");
      for (size_t i = 0; i < 3; ++i) {
        if (!(*sol)[i].is_integer())
          throw Error(ErrorCode::InternalInconsistency, "ray outside the even sublattice");
        ray[i] = (*sol)[i].numerator();
      }
    }
  }
  return Fan(3, std::move(rays), std::move(cones));
}

Fan isolated_fan(size_t k) {
  if (k < 1) throw Error(ErrorCode::UnsupportedInput, "isolated fan needs k >= 1");
  if (k == 1) {
    // The k >= 2 family below degenerates at k = 1: an exhaustive search
    // shows every complete unimodular fan on its 7-ray set admits a
    // blow-down (alpha_2 = alpha_1 + beta_1 there). This member is a
    // twisted P^1-bundle fan over the five-ray polygon fan instead; the
    // twist breaks the base's blow-down relation.
    std::vector<LatticeVector> rays = {
        {BigInt(1), BigInt(0), BigInt(0)},  {BigInt(0), BigInt(1), BigInt(0)},
        {BigInt(-1), BigInt(0), BigInt(0)}, {BigInt(0), BigInt(-1), BigInt(0)},
        {BigInt(1), BigInt(1), BigInt(2)},  {BigInt(0), BigInt(0), BigInt(1)},
        {BigInt(0), BigInt(0), BigInt(-1)},
    };
    std::vector<std::vector<size_t>> cones;
    std::vector<std::pair<size_t, size_t>> base = {{0, 4}, {4, 1}, {1, 2}, {2, 3}, {3, 0}};
    for (auto [i, j] : base) {
      cones.push_back({i, j, 5});
      cones.push_back({i, j, 6});
    }
    return Fan(3, std::move(rays), std::move(cones));
  }

  // Rays: alpha_1 = -e_3, alpha_2 = (1,1,0), alpha_3 = (k-1,k,1),
  // alpha_4 = (k,k-1,1), beta_i = (i,i,1) for i = -1..k. The beta chain up
  // to k-1 lies inside the triangle spanned by beta_-1, alpha_3, alpha_4 in
  // the plane z = 1; beta_k sits just beyond its (alpha_3, alpha_4) edge.
  long kk = static_cast<long>(k);
  std::vector<LatticeVector> rays;
  rays.push_back({BigInt(0), BigInt(0), BigInt(-1)});     // 0: alpha_1
  rays.push_back({BigInt(1), BigInt(1), BigInt(0)});      // 1: alpha_2
  rays.push_back({BigInt(kk - 1), BigInt(kk), BigInt(1)});  // 2: alpha_3
  rays.push_back({BigInt(kk), BigInt(kk - 1), BigInt(1)});  // 3: alpha_4
  for (long i = -1; i <= kk; ++i)                          // 4..k+5: beta_i
    rays.push_back({BigInt(i), BigInt(i), BigInt(1)});
  auto beta = [](long i) { return static_cast<size_t>(5 + i); };

  std::vector<std::vector<size_t>> cones = {
      {beta(-1), 0, 2},     // beta_-1, alpha_1, alpha_3
      {0, 1, 2},            // alpha_1, alpha_2, alpha_3
      {beta(-1), 0, 3},     // beta_-1, alpha_1, alpha_4
      {0, 1, 3},            // alpha_1, alpha_2, alpha_4
      {1, 2, beta(kk)},     // alpha_2, alpha_3, beta_k
      {1, 3, beta(kk)},     // alpha_2, alpha_4, beta_k
      {2, 3, beta(kk - 1)},  // alpha_3, alpha_4, beta_{k-1}
      {2, 3, beta(kk)},     // alpha_3, alpha_4, beta_k
  };
  for (long i = 0; i <= kk - 1; ++i) {
    cones.push_back({beta(i - 1), beta(i), 2});
    cones.push_back({beta(i - 1), beta(i), 3});
  }
  return Fan(3, std::move(rays), std::move(cones));
}

Fan harden_3fan(const Fan& input) {
  if (input.dim() != 3)
    throw Error(ErrorCode::DimensionMismatch, "hardening applies to three-dimensional fans");
  auto props = fan_properties(input, false);
  if (!props.unimodular || !props.complete)
    throw Error(ErrorCode::UnsupportedInput, "hardening requires a complete unimodular fan");

  // Blow up every maximal cone; original rays then have valency >= 6.
  Fan fan = input;
  for (const auto& cone : input.maximal_cones()) fan = blow_up(fan, cone);

  // Split every maximal cone (a1,a2,a3) of the intermediate fan into six:
  //   (a_i, a_ij, a_ik) for each i   and   (a_123, a_ij, a_ik) for each pair,
  // with a_ij = a_i + a_j and a_123 = a_1 + a_2 + a_3. This midpoint-style
  // subdivision is not a stellar sequence (stellar insertion of the a_ij
  // would leave them with valency four, which still admits a blow-down);
  // the cones are assembled directly.
  std::vector<LatticeVector> rays = fan.rays();
  std::map<LatticeVector, size_t, LexLess> index;
  for (size_t i = 0; i < rays.size(); ++i) index[rays[i]] = i;
  auto intern = [&](const LatticeVector& v) {
    auto it = index.find(v);
    if (it != index.end()) return it->second;
    rays.push_back(v);
    index[v] = rays.size() - 1;
    return rays.size() - 1;
  };

  std::vector<std::vector<size_t>> cones;
  for (const auto& cone : fan.maximal_cones()) {
    const LatticeVector& a1 = fan.rays()[cone[0]];
    const LatticeVector& a2 = fan.rays()[cone[1]];
    const LatticeVector& a3 = fan.rays()[cone[2]];
    size_t i1 = cone[0], i2 = cone[1], i3 = cone[2];
    size_t i12 = intern(add(a1, a2));
    size_t i13 = intern(add(a1, a3));
    size_t i23 = intern(add(a2, a3));
    size_t i123 = intern(add(add(a1, a2), a3));
    cones.push_back({i1, i12, i13});
    cones.push_back({i2, i12, i23});
    cones.push_back({i3, i13, i23});
    cones.push_back({i123, i12, i13});
    cones.push_back({i123, i12, i23});
    cones.push_back({i123, i13, i23});
  }
  return Fan(3, std::move(rays), std::move(cones));
}

NonlocalSequence nonlocal_sequence(size_t k) {
  if (k < 1) throw Error(ErrorCode::UnsupportedInput, "perturbation needs k >= 1");
  long kl = static_cast<long>(k);
  std::vector<RationalVector> simplex = {
      {Rational(0), Rational(0), Rational(0)},
      {Rational(1), Rational(0), Rational(0)},
      {Rational(0), Rational(1), Rational(0)},
      {Rational(0), Rational(0), Rational(1)},
  };
  std::vector<RationalVector> moved = {
      {Rational(0), Rational(0), Rational(0)},
      {Rational(1), Rational(1, static_cast<int>(kl + 1)), Rational(-1, static_cast<int>(kl))},
      {Rational(0), Rational(1), Rational(0)},
      {Rational(0), Rational(0), Rational(1)},
  };
  return NonlocalSequence{Polytope::from_vertices(3, simplex), Polytope::from_vertices(3, moved),
                          {BigInt(-1), BigInt(0), BigInt(-kl)},
                          {BigInt(1), BigInt(-kl - 1), BigInt(0)}};
}

namespace {

struct CorpusRecorder {
  std::vector<CorpusCheck> rows;
  std::string current;
  void operator()(const std::string& check, bool pass) {
    rows.push_back(CorpusCheck{current, check, pass});
  }
};

bool verify_non_polytopal(const Fan& fan) {
  auto realized = realize_polytopal(fan);
  if (!std::holds_alternative<NotPolytopal>(realized)) return false;
  const auto& cert = std::get<NotPolytopal>(realized).certificate;
  SecondaryCone sc = secondary_cone(fan);
  if (cert.size() != sc.inequalities.size()) return false;
  RationalVector combo(sc.ambient, Rational(0));
  bool nonzero = false;
  for (size_t i = 0; i < cert.size(); ++i) {
    if (cert[i].sign() < 0) return false;
    if (cert[i].sign() > 0) nonzero = true;
    for (size_t j = 0; j < sc.ambient; ++j)
      combo[j] += cert[i] * sc.inequalities[i].coeffs[j];
  }
  return nonzero && is_zero(combo);
}

}  // namespace

std::vector<CorpusCheck> run_corpus(uint64_t seed) {
  CorpusRecorder rec;
  (void)seed;  // the corpus checklist is fully deterministic

  rec.current = "delzant_triangle(2)";
  {
    Polytope t = delzant_triangle(Rational(2));
    rec("three facets", t.facets().size() == 3);
    rec("area 2", t.volume() == Rational(2));
    rec("delzant", is_delzant(t).delzant);
    rec("perimeter 6", rational_perimeter(t) == Rational(6));
    rec("lower bound", check_lower_bound(t).holds);
    rec("area bound", check_polygon_area_bound(t).holds);
  }

  rec.current = "hirzebruch_trapezoid(3,2,1)";
  {
    Polytope h = hirzebruch_trapezoid(Rational(3), Rational(2), BigInt(1));
    rec("four facets", h.facets().size() == 4);
    rec("delzant", is_delzant(h).delzant);
    rec("normal fan is hirzebruch_fan(1)", normal_fan(h) == hirzebruch_fan(BigInt(1)));
    Polytope chopped = corner_chop(delzant_triangle(Rational(4)),
                                   {Rational(0), Rational(0)}, Rational(2));
    rec("congruent to chopped triangle", agl_congruent(chopped, h).has_value());
    rec("lower bound", check_lower_bound(h).holds);
    rec("area bound", check_polygon_area_bound(h).holds);
  }

  rec.current = "cube(3)";
  {
    Polytope c = cube(3);
    rec("delzant", is_delzant(c).delzant);
    rec("volume 1", c.volume() == Rational(1));
    auto lbt = check_lower_bound(c);
    rec("lower bound 8 attained", lbt.holds && lbt.bound == 8 && lbt.vertices == 8);
    rec("stratum (6,3)", stratum_info(normal_fan(c)).dimension == 6 &&
                             stratum_info(normal_fan(c)).lineality == 3);
  }

  rec.current = "prism(pentagon)";
  {
    Polytope p = prism(delzant_pentagon());
    rec("delzant", is_delzant(p).delzant);
    rec("seven facets", p.facets().size() == 7);
    bool no_triangle = true;
    for (size_t f = 0; f < p.facets().size(); ++f) {
      size_t count = 0;
      for (size_t v = 0; v < p.vertices().size(); ++v) {
        const auto& inc = p.vertex_facets(v);
        if (std::find(inc.begin(), inc.end(), f) != inc.end()) ++count;
      }
      if (count == 3) no_triangle = false;
    }
    rec("no triangular facet", no_triangle);
    rec("lower bound", check_lower_bound(p).holds);
  }

  rec.current = "moae_fan";
  {
    Fan base = moae_fan(false);
    auto props = fan_properties(base);
    rec("six rays eight cones", base.rays().size() == 6 && base.maximal_cones().size() == 8);
    rec("complete", props.complete);
    size_t twos = 0, ones = 0;
    for (const auto& m : props.multiplicities) {
      if (m == 2) ++twos;
      if (m == 1) ++ones;
    }
    rec("exactly one multiplicity-2 cone", twos == 1 && ones == 7);
    Fan uni = moae_fan(true);
    auto uprops = fan_properties(uni);
    rec("unimodular variant 7 rays 10 cones",
        uni.rays().size() == 7 && uni.maximal_cones().size() == 10);
    rec("unimodular and complete", uprops.unimodular && uprops.complete);
    rec("refines base", refines(uni, base));
    rec("not polytopal with certificate", verify_non_polytopal(uni));
  }

  rec.current = "cubocta_fan";
  {
    Fan f = cubocta_fan(false);
    auto props = fan_properties(f);
    rec("12 rays 20 cones", f.rays().size() == 12 && f.maximal_cones().size() == 20);
    rec("complete", props.complete);
    bool all_two = true;
    for (const auto& m : props.multiplicities) all_two = all_two && m == 2;
    rec("all determinants 2", all_two);
    Fan r = cubocta_fan(true);
    auto rprops = fan_properties(r);
    rec("rescaled unimodular complete", rprops.unimodular && rprops.complete);
    rec("rescaled not polytopal", verify_non_polytopal(r));
  }

  rec.current = "isolated_fan";
  {
    for (size_t k = 1; k <= 3; ++k) {
      Fan f = isolated_fan(k);
      auto props = fan_properties(f);
      std::string tag = "k=" + std::to_string(k) + " ";
      rec(tag + "counts", f.rays().size() == k + 6 && f.maximal_cones().size() == 2 * k + 8);
      rec(tag + "unimodular complete", props.unimodular && props.complete);
      rec(tag + "polytopal", is_polytopal(f));
      rec(tag + "no blow-downs", find_blow_downs(f).empty());
    }
    rec("deterministic", isolated_fan(2) == isolated_fan(2));
  }

  rec.current = "harden_3fan";
  {
    std::vector<LatticeVector> rays = {{BigInt(1), BigInt(0), BigInt(0)},
                                       {BigInt(0), BigInt(1), BigInt(0)},
                                       {BigInt(0), BigInt(0), BigInt(1)},
                                       {BigInt(-1), BigInt(-1), BigInt(-1)}};
    Fan simplex_fan(3, rays, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    Fan hardened = harden_3fan(simplex_fan);
    auto props = fan_properties(hardened, false);
    rec("unimodular complete", props.unimodular && props.complete);
    rec("refines input", refines(hardened, simplex_fan));
    rec("regression counts",
        hardened.rays().size() == 38 && hardened.maximal_cones().size() == 72);
    rec("no blow-downs", find_blow_downs(hardened).empty());
  }

  rec.current = "nonlocal_sequence";
  {
    for (size_t k = 1; k <= 3; ++k) {
      auto seq = nonlocal_sequence(k);
      std::string tag = "k=" + std::to_string(k) + " ";
      auto d = hausdorff_distance(seq.tetrahedron, seq.perturbed);
      rec(tag + "hausdorff < 2/k",
          d.exact_squared < Rational(4) / Rational(BigInt(static_cast<long>(k * k))));
      Fan nf = normal_fan(seq.perturbed);
      bool has_a = nf.ray_index(seq.cone_ray_a).has_value();
      bool has_b = nf.ray_index(seq.cone_ray_b).has_value();
      rec(tag + "cone rays in fan", has_a && has_b);
      rec(tag + "cone multiplicity 1",
          cone_multiplicity({seq.cone_ray_a, seq.cone_ray_b}) == 1);
      rec(tag + "does not refine simplex fan",
          !refines(nf, normal_fan(seq.tetrahedron)));
    }
  }

  return rec.rows;
}

}  // namespace delzant
