#pragma once

#include "delzant/polytope.hpp"

namespace delzant {

/// Exact squared distance plus a float convenience value. Square roots are
/// taken only at this reporting boundary; the core stays rational.
struct DistanceResult {
  Rational exact_squared;
  double value = 0.0;
  RationalVector witness_from;  // point attaining the max
  RationalVector witness_to;    // its nearest point on the other body
};

/// Exact squared distance from a point to a polytope: project onto the
/// affine hull of every face, keep projections that land inside, take the
/// minimum. With `nearest` set, receives the attaining point.
Rational point_distance_squared(const RationalVector& p, const Polytope& Q,
                                RationalVector* nearest = nullptr);

/// max(max_{x in P} dist(x,Q), max_{y in Q} dist(y,P)), attained at
/// vertices; exact in the square.
DistanceResult hausdorff_distance(const Polytope& P, const Polytope& Q);

/// Vol(P \ Q) + Vol(Q \ P) = Vol(P) + Vol(Q) - 2 Vol(P cap Q), exact.
Rational symmetric_difference_exact(const Polytope& P, const Polytope& Q);
DistanceResult symmetric_difference_distance(const Polytope& P, const Polytope& Q);

/// Lower bound on the Hausdorff distance: max of |h_P - h_Q| over a
/// deterministic low-discrepancy sample of unit directions.
double support_uniform_norm_estimate(const Polytope& P, const Polytope& Q, size_t samples);

}  // namespace delzant
