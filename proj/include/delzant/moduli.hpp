#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "delzant/fan.hpp"
#include "delzant/polytope.hpp"

namespace delzant {

struct DelzantCheck {
  bool delzant = false;
  /// "simple" or "smooth" when failing; empty otherwise. Rationality can
  /// never fail for exact input data.
  std::string failure;
  std::optional<RationalVector> witness_vertex;
};

/// Simple with a lattice basis of primitive edge directions at every vertex
/// (equivalently, unimodular normal fan).
DelzantCheck is_delzant(const Polytope& P);

/// Truncates a Delzant polytope at a vertex: one new facet with outer normal
/// equal to the sum of the vertex's facet normals, cutting off rational
/// length eps. eps must be positive and smaller than every edge length at
/// the vertex. The normal fan of the result is the blow-up of the input's
/// fan at the vertex cone.
Polytope corner_chop(const Polytope& P, const RationalVector& vertex, const Rational& eps);

struct TriangleBase {
  Rational lambda;
};
struct HirzebruchBase {
  Rational a, b;
  BigInt k;
};
struct ChopRecord {
  RationalVector vertex;
  Rational eps;
};

/// Result of peeling corner chops off a Delzant polygon until 3 or 4 edges
/// remain. `map` carries the canonical base onto the de-chopped polygon;
/// replay() rebuilds the input exactly.
struct PolygonClassification {
  std::variant<TriangleBase, HirzebruchBase> base;
  std::vector<ChopRecord> chops;  // in blow-down order, outermost first
  AffineUnimodularMap map;

  Polytope base_polytope() const;
  Polytope replay() const;
};

PolygonClassification classify_delzant_polygon(const Polytope& P);

struct MinkowskiSegment {
  Polytope from, to;
  Fan interior_fan;   // normal fan of every interior point of the segment
  size_t complexity;  // rays in exactly one of the endpoint fans
};

struct MinkowskiPath {
  std::vector<Polytope> breakpoints;
  std::vector<MinkowskiSegment> segments;

  /// (1-t) from + t to on the given segment.
  Polytope at(size_t segment, const Rational& t) const;
};

/// Two-segment path through a common Delzant refinement: P1 -> Q_eps -> P2
/// with Q_eps = (1-eps) P1 + eps Q. Collapses to one segment when one
/// endpoint fan already refines the other. Every point of the path is
/// Delzant.
MinkowskiPath minkowski_path(const Polytope& P1, const Polytope& P2, const Rational& eps);

struct PathComplexity {
  size_t local;   // max segment complexity
  size_t global;  // distinct interior rays not in either endpoint fan
};
PathComplexity path_complexity(const MinkowskiPath& path);

struct LowerBoundReport {
  size_t facets, dim, vertices, bound, slack;
  bool holds;
};
/// Vertex count against (m-n)(n-1)+2 for simple polytopes.
LowerBoundReport check_lower_bound(const Polytope& P);

struct AreaBoundReport {
  Rational area;
  size_t vertex_count;
  Rational perimeter;
  bool holds;
};
/// area <= phi^(2k) * perimeter^2 with k the vertex count, decided exactly
/// in Z[phi] via the Fibonacci expansion phi^m = F_m phi + F_{m-1}.
AreaBoundReport check_polygon_area_bound(const Polytope& P);

/// AGL(n,Z)-canonical form: minimum, over anchor vertices and orderings of
/// their edge bases, of the vertex list in edge-basis coordinates. Two
/// Delzant polytopes are AGL-congruent iff their canonical forms coincide.
std::vector<RationalVector> canonical_delzant_form(const Polytope& P);

struct ToricSummary {
  size_t manifold_dimension;  // 2n
  size_t fixed_points;        // = vertex count
  size_t facets;
  Rational volume;
  /// Weak-isomorphism invariant: the canonical form of the momentum image.
  std::vector<RationalVector> invariants;
};
ToricSummary toric_summary(const Polytope& P);

/// Duistermaat-Heckman measure of a region: Vol(U cap P).
Rational dh_measure(const Polytope& P, const Polytope& U);

}  // namespace delzant
