#include "delzant/lp.hpp"

#include <algorithm>

namespace delzant {

void LPProblem::add(RationalVector coeffs, Rational rhs, bool strict) {
  if (coeffs.size() != num_vars)
    throw Error(ErrorCode::DimensionMismatch, "LP row width does not match variable count");
  rows.push_back(LPRow{std::move(coeffs), std::move(rhs), strict});
}

void LPProblem::add_equality(const RationalVector& coeffs, const Rational& rhs) {
  add(coeffs, rhs, false);
  RationalVector neg(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) neg[i] = -coeffs[i];
  add(std::move(neg), -rhs, false);
}

namespace {

// Dense simplex tableau for
//   min c^T u   s.t.  T u = rhs,  u >= 0,
// with an explicit objective row of reduced costs. Bland's rule throughout.
class Tableau {
 public:
  Tableau(size_t rows, size_t cols) : m_(rows), n_(cols), a_(rows, RationalVector(cols + 1)), obj_(cols + 1), basis_(rows, SIZE_MAX) {}

  Rational& at(size_t r, size_t c) { return a_[r][c]; }
  Rational& rhs(size_t r) { return a_[r][n_]; }
  Rational& obj(size_t c) { return obj_[c]; }
  Rational& obj_value() { return obj_[n_]; }
  size_t rows() const { return m_; }
  size_t cols() const { return n_; }
  size_t basis(size_t r) const { return basis_[r]; }

  void set_basis(size_t r, size_t col) { basis_[r] = col; }

  void pivot(size_t r, size_t c) {
    Rational p = a_[r][c];
    for (auto& e : a_[r]) e /= p;
    for (size_t i = 0; i < m_; ++i) {
      if (i == r || a_[i][c].is_zero()) continue;
      Rational f = a_[i][c];
      for (size_t j = 0; j <= n_; ++j) a_[i][j] -= f * a_[r][j];
    }
    if (!obj_[c].is_zero()) {
      Rational f = obj_[c];
      for (size_t j = 0; j <= n_; ++j) obj_[j] -= f * a_[r][j];
    }
    basis_[r] = c;
  }

  /// Runs simplex until optimality. `allowed` masks columns that may enter.
  void optimize(const std::vector<bool>& allowed) {
    while (true) {
      size_t enter = SIZE_MAX;
      for (size_t c = 0; c < n_; ++c) {
        if (allowed[c] && obj_[c].sign() < 0) {
          enter = c;
          break;  // Bland: first eligible column
        }
      }
      if (enter == SIZE_MAX) return;
      size_t leave = SIZE_MAX;
      Rational best_ratio;
      for (size_t r = 0; r < m_; ++r) {
        if (a_[r][enter].sign() <= 0) continue;
        Rational ratio = a_[r][n_] / a_[r][enter];
        if (leave == SIZE_MAX || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
      if (leave == SIZE_MAX)
        throw Error(ErrorCode::InternalInconsistency, "unbounded LP objective");
      pivot(leave, enter);
    }
  }

 private:
  size_t m_, n_;
  std::vector<RationalVector> a_;
  RationalVector obj_;
  std::vector<size_t> basis_;
};

RationalVector normalize_certificate(const RationalVector& lambda) {
  BigInt lcm = 1;
  for (const auto& e : lambda)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.denominator().get_mpz_t());
  LatticeVector scaled(lambda.size());
  for (size_t i = 0; i < lambda.size(); ++i)
    scaled[i] = lambda[i].numerator() * (lcm / lambda[i].denominator());
  BigInt g = content(scaled);
  RationalVector out(lambda.size());
  for (size_t i = 0; i < lambda.size(); ++i)
    out[i] = g == 0 ? Rational(0) : Rational(scaled[i] / g);
  return out;
}

}  // namespace

LPOutcome solve_rational_lp(const LPProblem& problem) {
  const size_t d = problem.num_vars;
  const size_t m = problem.rows.size();
  bool has_strict = std::any_of(problem.rows.begin(), problem.rows.end(),
                                [](const LPRow& r) { return r.strict; });

  // Augmented system over nonnegative variables (x+, x-, t):
  //   A x+ - A x- + s t + slack = b     (s = strict indicator)
  //   t + slack_cap = 1
  // Rows with negative rhs are sign-flipped and get an artificial column.
  const size_t num_rows = m + 1;
  const size_t col_t = 2 * d;
  const size_t first_slack = 2 * d + 1;
  const size_t first_artificial = first_slack + num_rows;
  const size_t total_cols = first_artificial + num_rows;

  Tableau t(num_rows, total_cols);
  std::vector<int> row_sign(num_rows, 1);
  std::vector<bool> row_has_artificial(num_rows, false);

  for (size_t i = 0; i < num_rows; ++i) {
    RationalVector coeffs(2 * d + 1, Rational(0));
    Rational rhs;
    if (i < m) {
      const LPRow& row = problem.rows[i];
      if (row.coeffs.size() != d)
        throw Error(ErrorCode::DimensionMismatch, "LP row width mismatch");
      for (size_t j = 0; j < d; ++j) {
        coeffs[j] = row.coeffs[j];
        coeffs[d + j] = -row.coeffs[j];
      }
      coeffs[col_t] = row.strict ? Rational(1) : Rational(0);
      rhs = row.rhs;
    } else {
      coeffs[col_t] = Rational(1);  // cap row t <= 1
      rhs = Rational(1);
    }
    int sign = rhs.sign() < 0 ? -1 : 1;
    row_sign[i] = sign;
    for (size_t j = 0; j <= col_t; ++j)
      t.at(i, j) = sign < 0 ? -coeffs[j] : coeffs[j];
    t.at(i, first_slack + i) = Rational(sign);
    t.rhs(i) = sign < 0 ? -rhs : rhs;
    if (sign < 0) {
      t.at(i, first_artificial + i) = Rational(1);
      row_has_artificial[i] = true;
      t.set_basis(i, first_artificial + i);
    } else {
      t.set_basis(i, first_slack + i);
    }
  }

  std::vector<bool> allowed(total_cols, true);
  for (size_t i = 0; i < num_rows; ++i)
    if (!row_has_artificial[i]) allowed[first_artificial + i] = false;

  // Phase 1: minimize the sum of artificials.
  bool any_artificial = false;
  for (size_t i = 0; i < num_rows; ++i) {
    if (!row_has_artificial[i]) continue;
    any_artificial = true;
    t.obj(first_artificial + i) = Rational(1);
  }
  if (any_artificial) {
    // Price out the initial basis.
    for (size_t i = 0; i < num_rows; ++i) {
      if (!row_has_artificial[i]) continue;
      for (size_t j = 0; j <= total_cols; ++j) {
        Rational v = (j == total_cols) ? t.rhs(i) : t.at(i, j);
        if (j == total_cols)
          t.obj_value() -= v;
        else
          t.obj(j) -= v;
      }
    }
    t.optimize(allowed);
    Rational phase1 = -t.obj_value();
    if (phase1.sign() > 0) {
      // Closure infeasible: dual values give a Farkas certificate.
      // y_i = c_init(i) - objrow(initial identity column of row i).
      RationalVector lambda(m);
      for (size_t i = 0; i < m; ++i) {
        Rational y;
        if (row_has_artificial[i])
          y = Rational(1) - t.obj(first_artificial + i);
        else
          y = -t.obj(first_slack + i);
        lambda[i] = Rational(-row_sign[i]) * y;
        if (lambda[i].sign() < 0)
          throw Error(ErrorCode::InternalInconsistency, "negative Farkas multiplier");
      }
      LPOutcome out;
      out.feasible = false;
      out.certificate = normalize_certificate(lambda);
      return out;
    }
    // Drive remaining basic artificials out (they sit at value zero).
    for (size_t r = 0; r < num_rows; ++r) {
      size_t b = t.basis(r);
      if (b < first_artificial) continue;
      size_t enter = SIZE_MAX;
      for (size_t c = 0; c < first_artificial; ++c) {
        if (!t.at(r, c).is_zero()) {
          enter = c;
          break;
        }
      }
      if (enter != SIZE_MAX) t.pivot(r, enter);
      // else: redundant row, harmless to leave in place.
    }
  }

  // Phase 2: maximize t (min -t), artificials barred from entering.
  for (size_t i = 0; i < num_rows; ++i) allowed[first_artificial + i] = false;
  for (size_t j = 0; j <= total_cols; ++j) {
    if (j == total_cols)
      t.obj_value() = Rational(0);
    else
      t.obj(j) = Rational(0);
  }
  t.obj(col_t) = Rational(-1);
  for (size_t r = 0; r < num_rows; ++r) {
    size_t b = t.basis(r);
    if (b == col_t) {
      for (size_t j = 0; j < total_cols; ++j) t.obj(j) += t.at(r, j);
      t.obj_value() += t.rhs(r);
    }
  }
  t.optimize(allowed);
  Rational t_star = t.obj_value();  // objective row holds -(-t) = t value

  if (!has_strict || t_star.sign() > 0) {
    RationalVector witness(d, Rational(0));
    for (size_t r = 0; r < num_rows; ++r) {
      size_t b = t.basis(r);
      if (b < d)
        witness[b] += t.rhs(r);
      else if (b < 2 * d)
        witness[b - d] -= t.rhs(r);
    }
    LPOutcome out;
    out.feasible = true;
    out.witness = std::move(witness);
    return out;
  }

  // t* = 0 with strict rows present: strictness is unattainable. The dual
  // values give a certificate with lambda^T b = 0 and weight on strict rows.
  RationalVector lambda(m);
  for (size_t i = 0; i < m; ++i) {
    Rational y;
    if (row_has_artificial[i])
      y = Rational(0) - t.obj(first_artificial + i);
    else
      y = -t.obj(first_slack + i);
    lambda[i] = Rational(-row_sign[i]) * y;
    if (lambda[i].sign() < 0)
      throw Error(ErrorCode::InternalInconsistency, "negative Motzkin multiplier");
  }
  LPOutcome out;
  out.feasible = false;
  out.certificate = normalize_certificate(lambda);
  return out;
}

bool verify_lp_outcome(const LPProblem& problem, const LPOutcome& outcome) {
  if (outcome.feasible) {
    if (outcome.witness.size() != problem.num_vars) return false;
    for (const auto& row : problem.rows) {
      Rational v = dot(row.coeffs, outcome.witness);
      if (row.strict ? !(v < row.rhs) : !(v <= row.rhs)) return false;
    }
    return true;
  }
  const auto& lambda = outcome.certificate;
  if (lambda.size() != problem.rows.size()) return false;
  bool nonzero = false;
  Rational lambda_b;
  Rational strict_weight;
  RationalVector combo(problem.num_vars, Rational(0));
  for (size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i].sign() < 0) return false;
    if (lambda[i].sign() > 0) nonzero = true;
    lambda_b += lambda[i] * problem.rows[i].rhs;
    if (problem.rows[i].strict) strict_weight += lambda[i];
    for (size_t j = 0; j < problem.num_vars; ++j)
      combo[j] += lambda[i] * problem.rows[i].coeffs[j];
  }
  if (!nonzero || !is_zero(combo)) return false;
  if (lambda_b.sign() < 0) return true;
  return lambda_b.is_zero() && strict_weight.sign() > 0;
}

bool in_nonnegative_span(const std::vector<LatticeVector>& vectors, const RationalVector& target) {
  size_t n = target.size();
  LPProblem lp;
  lp.num_vars = vectors.size();
  for (size_t i = 0; i < vectors.size(); ++i) {
    RationalVector row(vectors.size(), Rational(0));
    row[i] = Rational(-1);
    lp.add(std::move(row), Rational(0));
  }
  for (size_t coord = 0; coord < n; ++coord) {
    RationalVector row(vectors.size());
    for (size_t i = 0; i < vectors.size(); ++i) {
      if (vectors[i].size() != n)
        throw Error(ErrorCode::DimensionMismatch, "span test dimension mismatch");
      row[i] = Rational(vectors[i][coord]);
    }
    lp.add_equality(row, target[coord]);
  }
  return solve_rational_lp(lp).feasible;
}

bool positively_spans(const std::vector<LatticeVector>& vectors, size_t dim) {
  for (size_t coord = 0; coord < dim; ++coord) {
    for (int sign : {1, -1}) {
      RationalVector target(dim, Rational(0));
      target[coord] = Rational(sign);
      if (!in_nonnegative_span(vectors, target)) return false;
    }
  }
  return true;
}

}  // namespace delzant
