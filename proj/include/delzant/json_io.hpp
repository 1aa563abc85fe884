#pragma once

#include <json.hpp>

#include "delzant/desingularize.hpp"
#include "delzant/fan.hpp"
#include "delzant/metrics.hpp"
#include "delzant/moduli.hpp"
#include "delzant/polytope.hpp"
#include "delzant/secondary.hpp"

namespace delzant {

using Json = nlohmann::json;

// Rationals serialize as "p/q" ("p" when q = 1); integers as JSON numbers
// while |value| < 2^53 and as strings beyond.

Json to_json(const Rational& r);
Json to_json(const BigInt& z);
Json to_json(const LatticeVector& v);
Json to_json(const RationalVector& v);

Rational rational_from_json(const Json& j);
BigInt bigint_from_json(const Json& j);
LatticeVector lattice_vector_from_json(const Json& j);
RationalVector rational_vector_from_json(const Json& j);

/// {"dim": n, "facets": [{"normal": [...], "rhs": "p/q"}], "vertices": [[...]]}
/// On input either key may be omitted; both are emitted.
Json to_json(const Polytope& P);
Polytope polytope_from_json(const Json& j);

/// {"dim": n, "rays": [[ints]], "maximal_cones": [[ray indices]]}
Json to_json(const Fan& fan);
Fan fan_from_json(const Json& j);

/// {"equalities": [...], "inequalities": [{"coeffs": [...], "strict": bool}]}
Json to_json(const SecondaryCone& cone);
SecondaryCone secondary_cone_from_json(const Json& j);

/// [{"gamma": [ints], "cone": [ray indices]}, ...]
Json to_json(const RefinementTrace& trace);
RefinementTrace trace_from_json(const Json& j);

Json to_json(const AffineUnimodularMap& map);
Json to_json(const PolygonClassification& cls);
Json to_json(const DistanceResult& result, const std::string& metric);

}  // namespace delzant
