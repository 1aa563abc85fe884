#pragma once

#include <optional>
#include <vector>

#include "delzant/linalg.hpp"
#include "delzant/rational.hpp"

namespace delzant {

/// One constraint <coeffs, x> <= rhs, optionally strict.
struct LPRow {
  RationalVector coeffs;
  Rational rhs;
  bool strict = false;
};

/// Feasibility problem over free variables x in Q^num_vars.
struct LPProblem {
  size_t num_vars = 0;
  std::vector<LPRow> rows;

  void add(RationalVector coeffs, Rational rhs, bool strict = false);
  /// Adds <coeffs, x> = rhs as a pair of opposite non-strict rows.
  void add_equality(const RationalVector& coeffs, const Rational& rhs);
};

/// Exactly one of the two alternatives holds:
///  - feasible, with a witness satisfying every row (strictly where flagged);
///  - infeasible, with a certificate lambda >= 0 per row such that
///    lambda^T A = 0 and either lambda^T b < 0 or (lambda^T b = 0 with
///    positive weight on at least one strict row).
struct LPOutcome {
  bool feasible = false;
  RationalVector witness;
  RationalVector certificate;
};

/// Simplex over exact rationals with Bland's rule; deterministic.
/// Strict rows are handled by maximizing one extra slack variable t
/// (feasible iff the optimum of t is positive).
LPOutcome solve_rational_lp(const LPProblem& problem);

/// Exact substitution check of an outcome against its problem.
bool verify_lp_outcome(const LPProblem& problem, const LPOutcome& outcome);

/// Is target a nonnegative combination of the given vectors?
bool in_nonnegative_span(const std::vector<LatticeVector>& vectors, const RationalVector& target);

/// Cone(vectors) = R^n, i.e. every direction reachable.
bool positively_spans(const std::vector<LatticeVector>& vectors, size_t dim);

}  // namespace delzant
