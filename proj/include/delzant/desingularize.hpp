#pragma once

#include <utility>
#include <vector>

#include "delzant/fan.hpp"

namespace delzant {

/// One stellar subdivision: the inserted vector and the ray indices of its
/// minimal containing cone at the time of insertion. Ray indices stay valid
/// under replay because subdivisions only append rays.
struct TraceStep {
  LatticeVector gamma;
  std::vector<size_t> cone_rays;
};

struct RefinementTrace {
  std::vector<TraceStep> steps;
};

/// Applies the trace's subdivisions to the initial fan.
Fan replay_trace(const Fan& initial, const RefinementTrace& trace);

/// Refines to a simplicial fan by stellar subdivisions at the sum of the
/// rays of each non-simplicial face, processed in decreasing dimension.
std::pair<Fan, RefinementTrace> simplicialize(const Fan& fan, CancellationToken token = {});

/// Refines a complete rational fan to a unimodular one: simplicialize, then
/// repeatedly pick a maximal-multiplicity cone and subdivide at a lattice
/// point of its half-open parallelepiped (smallest coefficient sum, then
/// lexicographically smallest). The maximum multiplicity never increases
/// and eventually reaches one.
std::pair<Fan, RefinementTrace> desingularize(const Fan& fan, CancellationToken token = {});

/// Minimal additive generating set of Cone(u, v) intersected with Z^2.
/// The cone must be two-dimensional and pointed.
std::vector<LatticeVector> hilbert_basis_2d(const LatticeVector& u, const LatticeVector& v);

}  // namespace delzant
