#include "delzant/secondary.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "delzant/lp.hpp"

namespace delzant {

namespace {

/// Scales a rational row to a primitive integer vector, preserving sign.
RationalVector primitive_row(const RationalVector& row) {
  BigInt lcm = 1;
  for (const auto& e : row)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.denominator().get_mpz_t());
  LatticeVector scaled(row.size());
  for (size_t i = 0; i < row.size(); ++i)
    scaled[i] = row[i].numerator() * (lcm / row[i].denominator());
  BigInt g = content(scaled);
  RationalVector out(row.size());
  for (size_t i = 0; i < row.size(); ++i) out[i] = g == 0 ? Rational(0) : Rational(scaled[i] / g);
  return out;
}

/// Closed version of the cone as LP rows: <c, b> >= 0 for every row.
LPProblem closure_lp(const SecondaryCone& cone) {
  LPProblem lp;
  lp.num_vars = cone.ambient;
  for (const auto& eq : cone.equalities) lp.add_equality(eq, Rational(0));
  for (const auto& row : cone.inequalities) {
    RationalVector neg(row.coeffs.size());
    for (size_t i = 0; i < row.coeffs.size(); ++i) neg[i] = -row.coeffs[i];
    lp.add(std::move(neg), Rational(0), false);
  }
  return lp;
}

}  // namespace

bool SecondaryCone::satisfied_by(const RationalVector& b) const {
  if (b.size() != ambient)
    throw Error(ErrorCode::DimensionMismatch, "b-vector has wrong length");
  for (const auto& eq : equalities)
    if (!dot(eq, b).is_zero()) return false;
  for (const auto& row : inequalities) {
    int s = dot(row.coeffs, b).sign();
    if (row.strict ? s <= 0 : s < 0) return false;
  }
  return true;
}

bool SecondaryCone::implies(const RationalVector& coeffs) const {
  LPProblem lp = closure_lp(*this);
  lp.add(coeffs, Rational(-1), false);  // <coeffs, b> <= -1 somewhere?
  return !solve_rational_lp(lp).feasible;
}

bool SecondaryCone::equals(const SecondaryCone& other) const {
  if (ambient != other.ambient) return false;
  auto one_way = [](const SecondaryCone& a, const SecondaryCone& b) {
    for (const auto& row : b.inequalities)
      if (!a.implies(row.coeffs)) return false;
    for (const auto& eq : b.equalities) {
      RationalVector neg(eq.size());
      for (size_t i = 0; i < eq.size(); ++i) neg[i] = -eq[i];
      if (!a.implies(eq) || !a.implies(neg)) return false;
    }
    return true;
  };
  return one_way(*this, other) && one_way(other, *this);
}

SecondaryCone SecondaryCone::reduced() const {
  SecondaryCone out;
  out.ambient = ambient;
  out.equalities = equalities;
  std::vector<SecondaryRow> rows = inequalities;
  std::sort(rows.begin(), rows.end(), [](const SecondaryRow& a, const SecondaryRow& b) {
    return lex_compare(a.coeffs, b.coeffs) < 0;
  });
  rows.erase(std::unique(rows.begin(), rows.end(),
                         [](const SecondaryRow& a, const SecondaryRow& b) {
                           return a.coeffs == b.coeffs;
                         }),
             rows.end());
  std::vector<bool> keep(rows.size(), true);
  for (size_t i = 0; i < rows.size(); ++i) {
    SecondaryCone rest;
    rest.ambient = ambient;
    rest.equalities = equalities;
    for (size_t j = 0; j < rows.size(); ++j)
      if (j != i && keep[j]) rest.inequalities.push_back(rows[j]);
    if (rest.implies(rows[i].coeffs)) keep[i] = false;
  }
  for (size_t i = 0; i < rows.size(); ++i)
    if (keep[i]) out.inequalities.push_back(rows[i]);
  return out;
}

size_t SecondaryCone::lineality_dim() const {
  std::vector<RationalVector> rows = equalities;
  for (const auto& r : inequalities) rows.push_back(r.coeffs);
  if (rows.empty()) return ambient;
  return ambient - rank(rows);
}

SecondaryCone config_cone(const std::vector<LatticeVector>& rays) {
  if (rays.empty()) throw Error(ErrorCode::NotSpanning, "empty configuration");
  size_t n = rays[0].size();
  for (const auto& r : rays) {
    if (r.size() != n) throw Error(ErrorCode::DimensionMismatch, "mixed dimensions");
    if (is_zero(r) || content(r) != 1)
      throw Error(ErrorCode::UnsupportedInput, "configuration vectors must be primitive");
  }
  if (!positively_spans(rays, n))
    throw Error(ErrorCode::NotSpanning, "configuration does not positively span");

  size_t m = rays.size();
  std::set<RationalVector, LexLess> seen;
  SecondaryCone cone;
  cone.ambient = m;

  for (size_t size = 2; size <= std::min(m, n + 1); ++size) {
    for_each_subset(m, size, [&](const std::vector<size_t>& idx) {
      // A circuit is a minimally dependent subset: rank one less than size
      // and a dependence with full support.
      std::vector<RationalVector> coord_rows(n, RationalVector(size));
      for (size_t j = 0; j < size; ++j)
        for (size_t coord = 0; coord < n; ++coord)
          coord_rows[coord][j] = Rational(rays[idx[j]][coord]);
      std::vector<LatticeVector> sub;
      for (size_t j = 0; j < size; ++j) sub.push_back(rays[idx[j]]);
      if (rank(sub) != size - 1) return;
      auto lambda = kernel_vector(coord_rows);
      if (!lambda) return;
      size_t pos = 0, neg = 0;
      for (const auto& l : *lambda) {
        if (l.sign() > 0) ++pos;
        if (l.sign() < 0) ++neg;
      }
      if (pos + neg != size) return;  // zero entry: not a circuit
      bool type1 = (neg == 0 || pos == 0);
      bool type2 = (neg == 1 && pos >= 1) || (pos == 1 && neg >= 1);
      if (!type1 && !type2) return;
      // Normalize: type 1 all-positive; type 2 majority positive.
      bool flip = type1 ? (*lambda)[0].sign() < 0 : pos < neg;
      RationalVector row(m, Rational(0));
      for (size_t j = 0; j < size; ++j)
        row[idx[j]] = flip ? -(*lambda)[j] : (*lambda)[j];
      row = primitive_row(row);
      if (seen.insert(row).second)
        cone.inequalities.push_back(SecondaryRow{row, false});
    });
  }
  return cone;
}

SecondaryCone secondary_cone(const Fan& fan) {
  auto props = fan_properties(fan, false);
  if (!props.simplicial)
    throw Error(ErrorCode::UnsupportedInput, "secondary cone requires a simplicial fan");
  if (!props.complete)
    throw Error(ErrorCode::UnsupportedInput, "secondary cone requires a complete fan");

  size_t n = fan.dim();
  size_t m = fan.rays().size();
  const auto& cones = fan.maximal_cones();

  std::map<std::vector<size_t>, std::vector<size_t>> ridge_cones;
  for (size_t c = 0; c < cones.size(); ++c) {
    for_each_subset(cones[c].size(), n - 1, [&](const std::vector<size_t>& idx) {
      std::vector<size_t> ridge;
      for (size_t p : idx) ridge.push_back(cones[c][p]);
      ridge_cones[ridge].push_back(c);
    });
  }

  std::set<RationalVector, LexLess> seen;
  SecondaryCone out;
  out.ambient = m;
  for (const auto& [ridge, adj] : ridge_cones) {
    if (adj.size() != 2)
      throw Error(ErrorCode::InvalidFan, "ridge not shared by exactly two cones");
    std::set<size_t> support(ridge.begin(), ridge.end());
    size_t u = SIZE_MAX, v = SIZE_MAX;
    for (size_t i : cones[adj[0]])
      if (!support.count(i)) u = i;
    for (size_t i : cones[adj[1]])
      if (!support.count(i)) v = i;
    std::vector<size_t> T(ridge);
    T.push_back(u);
    T.push_back(v);
    std::sort(T.begin(), T.end());

    std::vector<RationalVector> coord_rows(n, RationalVector(T.size()));
    for (size_t j = 0; j < T.size(); ++j)
      for (size_t coord = 0; coord < n; ++coord)
        coord_rows[coord][j] = Rational(fan.rays()[T[j]][coord]);
    auto lambda = kernel_vector(coord_rows);
    if (!lambda)
      throw Error(ErrorCode::InternalInconsistency, "wall rays have no dependence");
    size_t pos_u = std::find(T.begin(), T.end(), u) - T.begin();
    size_t pos_v = std::find(T.begin(), T.end(), v) - T.begin();
    int su = (*lambda)[pos_u].sign();
    int sv = (*lambda)[pos_v].sign();
    if (su == 0 || sv == 0 || su != sv)
      throw Error(ErrorCode::InvalidFan, "wall relation has inconsistent signs");
    RationalVector row(m, Rational(0));
    for (size_t j = 0; j < T.size(); ++j)
      row[T[j]] = su < 0 ? -(*lambda)[j] : (*lambda)[j];
    row = primitive_row(row);
    if (seen.insert(row).second) out.inequalities.push_back(SecondaryRow{row, true});
  }
  return out;
}

std::variant<Polytope, NotPolytopal> realize_polytopal(const Fan& fan) {
  SecondaryCone sc = secondary_cone(fan);
  LPProblem lp;
  lp.num_vars = sc.ambient;
  for (const auto& row : sc.inequalities) {
    RationalVector neg(row.coeffs.size());
    for (size_t i = 0; i < row.coeffs.size(); ++i) neg[i] = -row.coeffs[i];
    lp.add(std::move(neg), Rational(0), true);
  }
  LPOutcome outcome = solve_rational_lp(lp);
  if (!outcome.feasible) return NotPolytopal{outcome.certificate};

  std::vector<Facet> rows;
  for (size_t i = 0; i < fan.rays().size(); ++i)
    rows.push_back(Facet{fan.rays()[i], outcome.witness[i]});
  Polytope P = Polytope::from_halfspaces(fan.dim(), rows);
  if (!(normal_fan(P) == fan))
    throw Error(ErrorCode::InternalInconsistency,
                "realized polytope does not have the requested normal fan");
  return P;
}

bool is_polytopal(const Fan& fan) {
  return std::holds_alternative<Polytope>(realize_polytopal(fan));
}

StratumInfo stratum_info(const Fan& fan) {
  auto realized = realize_polytopal(fan);
  if (!std::holds_alternative<Polytope>(realized))
    throw Error(ErrorCode::UnsupportedInput, "stratum of a non-polytopal fan");
  SecondaryCone sc = secondary_cone(fan);
  size_t m = fan.rays().size();
  size_t n = fan.dim();
  if (sc.lineality_dim() != n)
    throw Error(ErrorCode::InternalInconsistency, "wall system lineality is not n");
  return StratumInfo{m, n};
}

RationalVector support_vector(const Polytope& P, const Fan& fan) {
  RationalVector b(fan.rays().size());
  for (size_t i = 0; i < fan.rays().size(); ++i) b[i] = P.support_value(fan.rays()[i]);
  return b;
}

}  // namespace delzant
