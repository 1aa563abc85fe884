#pragma once

#include <variant>
#include <vector>

#include "delzant/fan.hpp"
#include "delzant/polytope.hpp"

namespace delzant {

/// One homogeneous inequality <coeffs, b> >= 0 (or > 0) on right-hand-side
/// vectors b indexed by a ray configuration.
struct SecondaryRow {
  RationalVector coeffs;
  bool strict = false;
};

/// Exact linear description of a cone of right-hand sides. `ambient` is the
/// number of rays of the configuration.
struct SecondaryCone {
  size_t ambient = 0;
  std::vector<RationalVector> equalities;  // <coeffs, b> = 0
  std::vector<SecondaryRow> inequalities;

  bool satisfied_by(const RationalVector& b) const;
  /// Does the closure of this cone imply <coeffs, b> >= 0 everywhere?
  bool implies(const RationalVector& coeffs) const;
  /// Mutual implication of the closures.
  bool equals(const SecondaryCone& other) const;
  /// Drops rows implied by the remaining ones. Deterministic.
  SecondaryCone reduced() const;
  /// Dimension of the lineality space of the closure.
  size_t lineality_dim() const;
};

/// The cone of vectors b for which {<alpha_i, x> <= b_i} cuts out a polytope
/// whose support values are exactly b. Rows come from circuits of the
/// configuration: all-positive circuits give dependence rows, circuits with
/// a single negative entry give combination rows. The configuration must
/// positively span.
SecondaryCone config_cone(const std::vector<LatticeVector>& rays);

/// The open secondary cone of a complete simplicial fan: one strict wall
/// inequality per pair of adjacent maximal cones, from the unique linear
/// dependence on the n+1 rays across the shared ridge. b lies inside iff
/// the polytope with those right-hand sides has normal fan exactly the input.
SecondaryCone secondary_cone(const Fan& fan);

struct NotPolytopal {
  /// Nonnegative multipliers on the wall rows certifying that the strict
  /// system has no solution.
  RationalVector certificate;
};

/// Solves the strict secondary system. On success returns a polytope whose
/// normal fan equals the input (asserted); otherwise the Farkas-style
/// certificate.
std::variant<Polytope, NotPolytopal> realize_polytopal(const Fan& fan);

bool is_polytopal(const Fan& fan);

struct StratumInfo {
  size_t dimension;  // = ray count of the fan
  size_t lineality;  // = ambient dimension n
};

/// Dimension data of the stratum of polytopes sharing this normal fan,
/// cross-checked against the rank of the wall system. The fan must be
/// complete, simplicial and polytopal.
StratumInfo stratum_info(const Fan& fan);

/// Support values of P at the rays of its normal fan, in the fan's ray
/// order: the b-vector placing P inside secondary_cone(normal_fan(P)).
RationalVector support_vector(const Polytope& P, const Fan& fan);

}  // namespace delzant
