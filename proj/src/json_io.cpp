#include "delzant/json_io.hpp"

#include <algorithm>

namespace delzant {

namespace {

const BigInt kSafeLimit = BigInt(1) << 53;

}  // namespace

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const BigInt& z) {
  if (::abs(z) < kSafeLimit) return static_cast<int64_t>(z.get_si());
  return z.get_str();
}

Json to_json(const LatticeVector& v) {
  Json arr = Json::array();
  for (const auto& e : v) arr.push_back(to_json(e));
  return arr;
}

Json to_json(const RationalVector& v) {
  Json arr = Json::array();
  for (const auto& e : v) arr.push_back(to_json(e));
  return arr;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(BigInt(static_cast<long>(j.get<int64_t>())));
  throw Error(ErrorCode::ParseError, "expected rational as string or integer");
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<int64_t>()));
  throw Error(ErrorCode::ParseError, "expected integer as number or string");
}

LatticeVector lattice_vector_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected array of integers");
  LatticeVector v;
  for (const auto& e : j) v.push_back(bigint_from_json(e));
  return v;
}

RationalVector rational_vector_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected array of rationals");
  RationalVector v;
  for (const auto& e : j) v.push_back(rational_from_json(e));
  return v;
}

Json to_json(const Polytope& P) {
  Json facets = Json::array();
  for (const auto& f : P.facets())
    facets.push_back(Json{{"normal", to_json(f.normal)}, {"rhs", to_json(f.rhs)}});
  Json vertices = Json::array();
  for (const auto& v : P.vertices()) vertices.push_back(to_json(v));
  return Json{{"dim", P.dim()}, {"facets", facets}, {"vertices", vertices}};
}

Polytope polytope_from_json(const Json& j) {
  if (!j.contains("dim")) throw Error(ErrorCode::ParseError, "polytope needs \"dim\"");
  size_t dim = j.at("dim").get<size_t>();
  if (j.contains("facets")) {
    std::vector<Facet> rows;
    for (const auto& f : j.at("facets"))
      rows.push_back(
          Facet{lattice_vector_from_json(f.at("normal")), rational_from_json(f.at("rhs"))});
    Polytope P = Polytope::from_halfspaces(dim, rows);
    if (j.contains("vertices")) {
      std::vector<RationalVector> given;
      for (const auto& v : j.at("vertices")) given.push_back(rational_vector_from_json(v));
      std::sort(given.begin(), given.end(),
                [](const RationalVector& a, const RationalVector& b) {
                  return lex_compare(a, b) < 0;
                });
      if (given != P.vertices())
        throw Error(ErrorCode::ParseError, "vertex list inconsistent with facet system");
    }
    return P;
  }
  if (j.contains("vertices")) {
    std::vector<RationalVector> pts;
    for (const auto& v : j.at("vertices")) pts.push_back(rational_vector_from_json(v));
    return Polytope::from_vertices(dim, pts);
  }
  throw Error(ErrorCode::ParseError, "polytope needs \"facets\" or \"vertices\"");
}

Json to_json(const Fan& fan) {
  Json rays = Json::array();
  for (const auto& r : fan.rays()) rays.push_back(to_json(r));
  Json cones = Json::array();
  for (const auto& c : fan.maximal_cones()) cones.push_back(c);
  return Json{{"dim", fan.dim()}, {"rays", rays}, {"maximal_cones", cones}};
}

Fan fan_from_json(const Json& j) {
  if (!j.contains("dim") || !j.contains("rays") || !j.contains("maximal_cones"))
    throw Error(ErrorCode::ParseError, "fan needs \"dim\", \"rays\", \"maximal_cones\"");
  size_t dim = j.at("dim").get<size_t>();
  std::vector<LatticeVector> rays;
  for (const auto& r : j.at("rays")) rays.push_back(lattice_vector_from_json(r));
  std::vector<std::vector<size_t>> cones;
  for (const auto& c : j.at("maximal_cones")) cones.push_back(c.get<std::vector<size_t>>());
  return Fan(dim, std::move(rays), std::move(cones));
}

Json to_json(const SecondaryCone& cone) {
  Json eq = Json::array();
  for (const auto& e : cone.equalities) eq.push_back(Json{{"coeffs", to_json(e)}});
  Json ineq = Json::array();
  for (const auto& row : cone.inequalities)
    ineq.push_back(Json{{"coeffs", to_json(row.coeffs)}, {"strict", row.strict}});
  return Json{{"ambient", cone.ambient}, {"equalities", eq}, {"inequalities", ineq}};
}

SecondaryCone secondary_cone_from_json(const Json& j) {
  SecondaryCone cone;
  cone.ambient = j.at("ambient").get<size_t>();
  if (j.contains("equalities"))
    for (const auto& e : j.at("equalities"))
      cone.equalities.push_back(rational_vector_from_json(e.at("coeffs")));
  for (const auto& row : j.at("inequalities"))
    cone.inequalities.push_back(SecondaryRow{rational_vector_from_json(row.at("coeffs")),
                                             row.at("strict").get<bool>()});
  return cone;
}

Json to_json(const RefinementTrace& trace) {
  Json arr = Json::array();
  for (const auto& step : trace.steps)
    arr.push_back(Json{{"gamma", to_json(step.gamma)}, {"cone", step.cone_rays}});
  return arr;
}

RefinementTrace trace_from_json(const Json& j) {
  RefinementTrace trace;
  for (const auto& step : j)
    trace.steps.push_back(TraceStep{lattice_vector_from_json(step.at("gamma")),
                                    step.at("cone").get<std::vector<size_t>>()});
  return trace;
}

Json to_json(const AffineUnimodularMap& map) {
  Json rows = Json::array();
  for (const auto& r : map.matrix) rows.push_back(to_json(r));
  return Json{{"A", rows}, {"c", to_json(map.translation)}};
}

Json to_json(const PolygonClassification& cls) {
  Json base;
  if (std::holds_alternative<TriangleBase>(cls.base)) {
    base = Json{{"type", "triangle"},
                {"params", Json{{"lambda", to_json(std::get<TriangleBase>(cls.base).lambda)}}}};
  } else {
    const auto& h = std::get<HirzebruchBase>(cls.base);
    base = Json{{"type", "hirzebruch"},
                {"params", Json{{"a", to_json(h.a)}, {"b", to_json(h.b)}, {"k", to_json(h.k)}}}};
  }
  Json chops = Json::array();
  for (const auto& chop : cls.chops)
    chops.push_back(Json{{"vertex", to_json(chop.vertex)}, {"eps", to_json(chop.eps)}});
  return Json{{"base", base}, {"chops", chops}, {"map", to_json(cls.map)}};
}

Json to_json(const DistanceResult& result, const std::string& metric) {
  return Json{{"metric", metric},
              {"value", result.value},
              {"squared_exact", result.exact_squared.to_string()}};
}

}  // namespace delzant
