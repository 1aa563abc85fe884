#pragma once

#include <optional>
#include <string>
#include <vector>

#include "delzant/error.hpp"
#include "delzant/polytope.hpp"
#include "delzant/rational.hpp"

namespace delzant {

/// Rational polyhedral fan: a global table of primitive, pairwise
/// non-parallel rays plus the maximal cones as sorted ray index sets.
/// Lower-dimensional faces are derived on demand. Immutable.
///
/// Ray order is preserved as given (refinement operations append new rays),
/// so indices stay stable along a subdivision trace; equality is structural
/// equality of the canonicalized form.
class Fan {
 public:
  Fan(size_t dim, std::vector<LatticeVector> rays, std::vector<std::vector<size_t>> maximal_cones);

  size_t dim() const { return dim_; }
  const std::vector<LatticeVector>& rays() const { return rays_; }
  const std::vector<std::vector<size_t>>& maximal_cones() const { return cones_; }

  std::optional<size_t> ray_index(const LatticeVector& primitive_ray) const;

  /// Sorted rays with cones re-indexed and sorted; two fans are equal as
  /// complexes iff their canonical forms coincide.
  struct Canonical {
    size_t dim;
    std::vector<LatticeVector> rays;
    std::vector<std::vector<size_t>> cones;
    bool operator==(const Canonical&) const = default;
  };
  Canonical canonical() const;
  bool operator==(const Fan& o) const { return canonical() == o.canonical(); }

 private:
  size_t dim_;
  std::vector<LatticeVector> rays_;
  std::vector<std::vector<size_t>> cones_;
};

// ----- cone-level helpers (generators given explicitly) -----

/// Nonnegative-combination membership. Uses an exact solve for simplicial
/// cones and LP otherwise.
bool cone_contains(const std::vector<LatticeVector>& generators, const RationalVector& x);

/// Coefficients of x in the generators of a simplicial cone, or nullopt when
/// x is outside their span. Membership holds iff all coefficients are >= 0.
std::optional<RationalVector> simplicial_coefficients(const std::vector<LatticeVector>& generators,
                                                      const RationalVector& x);

/// Facets of a pointed cone as (sorted positions of generators on the facet).
/// Simplicial cones: the (k-1)-subsets. Non-simplicial full-dimensional
/// cones: supporting-hyperplane enumeration.
std::vector<std::vector<size_t>> cone_facet_sets(const std::vector<LatticeVector>& generators,
                                                 size_t dim);

/// Multiplicity (lattice index) of a simplicial cone; 1 = unimodular.
BigInt cone_multiplicity(const std::vector<LatticeVector>& generators);

// ----- fan-level operations -----

struct FanProperties {
  bool rational = true;
  bool pointed = false;
  bool simplicial = false;
  bool complete = false;
  bool unimodular = false;
  /// Per maximal cone; 0 marks a non-simplicial cone.
  std::vector<BigInt> multiplicities;
  /// Per ray: number of full-dimensional maximal cones containing it.
  std::vector<size_t> valency;
};

/// Exact property report. With check_proper_intersections set, verifies
/// pairwise that maximal cones meet in a common face and throws InvalidFan
/// naming the offending pair otherwise.
FanProperties fan_properties(const Fan& fan, bool check_proper_intersections = true);

/// Every maximal cone of `fine` lies in some maximal cone of `coarse`
/// (tested exactly by generator membership).
bool refines(const Fan& fine, const Fan& coarse);

/// Maximal cones are the full-dimensional pairwise intersections; both
/// inputs must be complete and of equal dimension. Equals the normal fan of
/// the Minkowski sum when the inputs are normal fans.
Fan common_refinement(const Fan& a, const Fan& b);

/// Stellar subdivision by gamma: cones not containing gamma are kept; every
/// cone containing gamma is replaced by the cones joining gamma to its
/// facets that avoid gamma. Returns the fan unchanged when gamma spans an
/// existing ray; throws OutsideSupport when gamma lies in no cone.
Fan stellar_subdivision(const Fan& fan, const LatticeVector& gamma);

/// Stellar subdivision at the sum of the primitive generators of the cone
/// spanned by the given ray indices, which must form a unimodular face.
Fan blow_up(const Fan& fan, const std::vector<size_t>& cone_ray_indices);

struct BlowDownCandidate {
  size_t ray;                  // index of the ray that disappears
  std::vector<size_t> target;  // ray indices (in the input fan) spanning the blow-up cone
};

/// All rays whose star can be merged back so that the input is exactly the
/// blow-up of the smaller fan at the returned cone. Each candidate is
/// verified by reconstruction (apply_blow_down followed by blow_up).
std::vector<BlowDownCandidate> find_blow_downs(const Fan& fan, CancellationToken token = {});

/// The merged fan of a candidate; blow_up at the candidate target
/// reproduces the input.
Fan apply_blow_down(const Fan& fan, const BlowDownCandidate& candidate);

/// Rays are the primitive outer facet normals; maximal cones collect the
/// facets incident to each vertex.
Fan normal_fan(const Polytope& P);

}  // namespace delzant
