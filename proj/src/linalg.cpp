#include "delzant/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace delzant {

namespace {

void require_same_dim(size_t a, size_t b) {
  if (a != b) throw Error(ErrorCode::DimensionMismatch, "vector dimension mismatch");
}

}  // namespace

QMatrix QMatrix::identity(size_t n) {
  QMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<RationalVector>& rows) {
  if (rows.empty()) return QMatrix();
  QMatrix m(rows.size(), rows[0].size());
  for (size_t r = 0; r < rows.size(); ++r) {
    require_same_dim(rows[r].size(), m.cols());
    for (size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<RationalVector>& cols) {
  if (cols.empty()) return QMatrix();
  QMatrix m(cols[0].size(), cols.size());
  for (size_t c = 0; c < cols.size(); ++c) {
    require_same_dim(cols[c].size(), m.rows());
    for (size_t r = 0; r < m.rows(); ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

RationalVector QMatrix::row(size_t r) const {
  RationalVector v(cols_);
  for (size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

RationalVector QMatrix::column(size_t c) const {
  RationalVector v(rows_);
  for (size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

size_t QMatrix::rank() const {
  QMatrix m = *this;
  size_t rank = 0;
  for (size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    size_t pivot = rank;
    while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    for (size_t c = 0; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(rank, c));
    for (size_t r = rank + 1; r < m.rows(); ++r) {
      if (m.at(r, col).is_zero()) continue;
      Rational f = m.at(r, col) / m.at(rank, col);
      for (size_t c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(rank, c);
    }
    ++rank;
  }
  return rank;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  require_same_dim(a.size(), b.size());
  Rational s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const LatticeVector& a, const RationalVector& b) {
  require_same_dim(a.size(), b.size());
  Rational s;
  for (size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

BigInt dot(const LatticeVector& a, const LatticeVector& b) {
  require_same_dim(a.size(), b.size());
  BigInt s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RationalVector add(const RationalVector& a, const RationalVector& b) {
  require_same_dim(a.size(), b.size());
  RationalVector out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RationalVector subtract(const RationalVector& a, const RationalVector& b) {
  require_same_dim(a.size(), b.size());
  RationalVector out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RationalVector scale(const Rational& s, const RationalVector& v) {
  RationalVector out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

LatticeVector add(const LatticeVector& a, const LatticeVector& b) {
  require_same_dim(a.size(), b.size());
  LatticeVector out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

LatticeVector negate(const LatticeVector& v) {
  LatticeVector out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

bool is_zero(const LatticeVector& v) {
  for (const auto& e : v)
    if (e != 0) return false;
  return true;
}

bool is_zero(const RationalVector& v) {
  for (const auto& e : v)
    if (!e.is_zero()) return false;
  return true;
}

BigInt content(const LatticeVector& v) {
  BigInt g = 0;
  for (const auto& e : v) {
    BigInt a = ::abs(e);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  }
  return g;
}

LatticeVector primitive_vector(const LatticeVector& v) {
  BigInt g = content(v);
  if (g == 0) throw Error(ErrorCode::ZeroVector, "no primitive generator of the zero vector");
  LatticeVector out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

LatticeVector primitive_direction(const RationalVector& v) {
  BigInt lcm = 1;
  for (const auto& e : v)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.denominator().get_mpz_t());
  LatticeVector scaled(v.size());
  for (size_t i = 0; i < v.size(); ++i)
    scaled[i] = v[i].numerator() * (lcm / v[i].denominator());
  return primitive_vector(scaled);
}

BigInt determinant(const std::vector<LatticeVector>& rows) {
  size_t n = rows.size();
  for (const auto& r : rows) {
    if (r.size() != n)
      throw Error(ErrorCode::DimensionMismatch, "determinant needs n vectors of dimension n");
  }
  if (n == 0) return 1;
  // Fraction-free Bareiss elimination.
  std::vector<std::vector<BigInt>> m(n);
  for (size_t i = 0; i < n; ++i) m[i] = rows[i];
  BigInt prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        BigInt t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : BigInt(-m[n - 1][n - 1]);
}

BigInt lattice_determinant(const std::vector<LatticeVector>& vectors) {
  return ::abs(determinant(vectors));
}

size_t rank(const std::vector<LatticeVector>& vectors) {
  std::vector<RationalVector> q;
  q.reserve(vectors.size());
  for (const auto& v : vectors) q.push_back(to_rational(v));
  return rank(q);
}

size_t rank(const std::vector<RationalVector>& vectors) {
  if (vectors.empty()) return 0;
  return QMatrix::from_rows(vectors).rank();
}

SmithNormalForm smith_normal_form(const std::vector<std::vector<BigInt>>& A) {
  size_t rows = A.size();
  size_t cols = rows == 0 ? 0 : A[0].size();
  SmithNormalForm snf;
  snf.D = A;
  snf.U.assign(rows, std::vector<BigInt>(rows, 0));
  snf.V.assign(cols, std::vector<BigInt>(cols, 0));
  for (size_t i = 0; i < rows; ++i) snf.U[i][i] = 1;
  for (size_t i = 0; i < cols; ++i) snf.V[i][i] = 1;
  auto& D = snf.D;
  auto& U = snf.U;
  auto& V = snf.V;

  auto swap_rows = [&](size_t a, size_t b) {
    std::swap(D[a], D[b]);
    std::swap(U[a], U[b]);
  };
  auto swap_cols = [&](size_t a, size_t b) {
    for (size_t r = 0; r < rows; ++r) std::swap(D[r][a], D[r][b]);
    for (size_t r = 0; r < cols; ++r) std::swap(V[r][a], V[r][b]);
  };
  auto add_row = [&](size_t dst, size_t src, const BigInt& f) {
    for (size_t c = 0; c < cols; ++c) D[dst][c] += f * D[src][c];
    for (size_t c = 0; c < rows; ++c) U[dst][c] += f * U[src][c];
  };
  auto add_col = [&](size_t dst, size_t src, const BigInt& f) {
    for (size_t r = 0; r < rows; ++r) D[r][dst] += f * D[r][src];
    for (size_t r = 0; r < cols; ++r) V[r][dst] += f * V[r][src];
  };
  auto negate_row = [&](size_t r) {
    for (auto& e : D[r]) e = -e;
    for (auto& e : U[r]) e = -e;
  };

  size_t t = 0;
  while (t < rows && t < cols) {
    // Locate a nonzero entry of smallest absolute value in the submatrix.
    size_t pr = rows, pc = cols;
    BigInt best = 0;
    for (size_t r = t; r < rows; ++r) {
      for (size_t c = t; c < cols; ++c) {
        if (D[r][c] == 0) continue;
        BigInt a = ::abs(D[r][c]);
        if (pr == rows || a < best) {
          best = a;
          pr = r;
          pc = c;
        }
      }
    }
    if (pr == rows) break;  // submatrix is zero
    if (pr != t) swap_rows(pr, t);
    if (pc != t) swap_cols(pc, t);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t r = t + 1; r < rows; ++r) {
        if (D[r][t] == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), D[r][t].get_mpz_t(), D[t][t].get_mpz_t());
        add_row(r, t, -q);
        if (D[r][t] != 0) {
          swap_rows(r, t);
          clean = false;
        }
      }
      for (size_t c = t + 1; c < cols; ++c) {
        if (D[t][c] == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), D[t][c].get_mpz_t(), D[t][t].get_mpz_t());
        add_col(c, t, -q);
        if (D[t][c] != 0) {
          swap_cols(c, t);
          clean = false;
        }
      }
      if (!clean) continue;
      // Pivot must divide everything below and to the right.
      for (size_t r = t + 1; r < rows && clean; ++r) {
        for (size_t c = t + 1; c < cols && clean; ++c) {
          if (D[r][c] % D[t][t] != 0) {
            add_row(t, r, 1);
            clean = false;
          }
        }
      }
    }
    if (D[t][t] < 0) negate_row(t);
    ++t;
  }
  return snf;
}

static std::vector<std::vector<BigInt>> columns_matrix(
    const std::vector<LatticeVector>& generators) {
  size_t k = generators.size();
  if (k == 0) throw Error(ErrorCode::DependentGenerators, "no generators");
  size_t n = generators[0].size();
  for (const auto& g : generators) require_same_dim(g.size(), n);
  std::vector<std::vector<BigInt>> A(n, std::vector<BigInt>(k));
  for (size_t c = 0; c < k; ++c)
    for (size_t r = 0; r < n; ++r) A[r][c] = generators[c][r];
  return A;
}

BigInt lattice_index(const std::vector<LatticeVector>& generators) {
  auto snf = smith_normal_form(columns_matrix(generators));
  size_t k = generators.size();
  BigInt index = 1;
  for (size_t i = 0; i < k; ++i) {
    if (i >= snf.D.size() || snf.D[i][i] == 0)
      throw Error(ErrorCode::DependentGenerators, "generators are linearly dependent");
    index *= snf.D[i][i];
  }
  return index;
}

std::vector<LatticeVector> halfopen_parallelepiped_points(
    const std::vector<LatticeVector>& generators) {
  size_t k = generators.size();
  size_t n = generators[0].size();
  auto snf = smith_normal_form(columns_matrix(generators));

  std::vector<BigInt> d(k);
  for (size_t i = 0; i < k; ++i) {
    if (i >= snf.D.size() || snf.D[i][i] == 0)
      throw Error(ErrorCode::DependentGenerators, "generators are linearly dependent");
    d[i] = snf.D[i][i];
  }

  // Coset representatives of the generator lattice inside its saturation are
  // the boxes 0 <= c_i < d_i; the coefficient vector of the representative in
  // the generator basis is frac(V * diag(1/d_i) * c).
  std::vector<LatticeVector> points;
  std::vector<BigInt> c(k, 0);
  while (true) {
    RationalVector lambda(k);
    for (size_t j = 0; j < k; ++j) {
      Rational s;
      for (size_t i = 0; i < k; ++i)
        s += Rational(snf.V[j][i] * c[i], d[i]);
      // fractional part in [0,1)
      BigInt fl;
      mpz_fdiv_q(fl.get_mpz_t(), s.numerator().get_mpz_t(), s.denominator().get_mpz_t());
      lambda[j] = s - Rational(fl);
    }
    RationalVector p(n, Rational(0));
    for (size_t j = 0; j < k; ++j)
      if (!lambda[j].is_zero()) p = add(p, scale(lambda[j], to_rational(generators[j])));
    LatticeVector point(n);
    for (size_t i = 0; i < n; ++i) {
      if (!p[i].is_integer())
        throw Error(ErrorCode::InternalInconsistency, "parallelepiped point not integral");
      point[i] = p[i].numerator();
    }
    points.push_back(std::move(point));

    size_t pos = 0;
    while (pos < k) {
      c[pos] += 1;
      if (c[pos] < d[pos]) break;
      c[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
  }
  std::sort(points.begin(), points.end(),
            [](const LatticeVector& a, const LatticeVector& b) { return lex_compare(a, b) < 0; });
  return points;
}

std::optional<RationalVector> solve_linear_system(const QMatrix& A, const RationalVector& b) {
  if (A.rows() != b.size())
    throw Error(ErrorCode::DimensionMismatch, "solve: row count does not match rhs");
  size_t rows = A.rows(), cols = A.cols();
  QMatrix m(rows, cols + 1);
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < cols; ++c) m.at(r, c) = A.at(r, c);
    m.at(r, cols) = b[r];
  }
  std::vector<size_t> pivot_col;
  size_t lead = 0;
  for (size_t col = 0; col < cols && lead < rows; ++col) {
    size_t pivot = lead;
    while (pivot < rows && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == rows) continue;
    for (size_t c = 0; c <= cols; ++c) std::swap(m.at(pivot, c), m.at(lead, c));
    for (size_t r = 0; r < rows; ++r) {
      if (r == lead || m.at(r, col).is_zero()) continue;
      Rational f = m.at(r, col) / m.at(lead, col);
      for (size_t c = col; c <= cols; ++c) m.at(r, c) -= f * m.at(lead, c);
    }
    pivot_col.push_back(col);
    ++lead;
  }
  // Inconsistent if a zero row has nonzero rhs.
  for (size_t r = lead; r < rows; ++r)
    if (!m.at(r, cols).is_zero()) return std::nullopt;
  if (pivot_col.size() != cols) return std::nullopt;  // not full column rank
  RationalVector x(cols);
  for (size_t i = 0; i < cols; ++i)
    x[pivot_col[i]] = m.at(i, cols) / m.at(i, pivot_col[i]);
  return x;
}

std::vector<LatticeVector> extreme_rays_of_dual(const std::vector<RationalVector>& rows,
                                                size_t dim) {
  std::vector<LatticeVector> result;
  auto consider = [&](const LatticeVector& cand) {
    for (const auto& r : rows)
      if (dot(cand, r).sign() > 0) return;
    result.push_back(cand);
  };
  if (dim == 1) {
    consider(LatticeVector{BigInt(1)});
    consider(LatticeVector{BigInt(-1)});
  } else {
    for_each_subset(rows.size(), dim - 1, [&](const std::vector<size_t>& idx) {
      std::vector<RationalVector> sub;
      sub.reserve(dim - 1);
      for (size_t i : idx) sub.push_back(rows[i]);
      if (rank(sub) != dim - 1) return;
      auto k = kernel_vector(sub);
      if (!k) return;
      LatticeVector d = primitive_direction(*k);
      consider(d);
      consider(negate(d));
    });
  }
  std::sort(result.begin(), result.end(),
            [](const LatticeVector& a, const LatticeVector& b) { return lex_compare(a, b) < 0; });
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

std::optional<RationalVector> kernel_vector(const std::vector<RationalVector>& rows) {
  if (rows.empty()) return std::nullopt;
  size_t n = rows[0].size();
  QMatrix m = QMatrix::from_rows(rows);
  std::vector<size_t> pivot_col;
  size_t lead = 0;
  for (size_t col = 0; col < n && lead < m.rows(); ++col) {
    size_t pivot = lead;
    while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    for (size_t c = 0; c < n; ++c) std::swap(m.at(pivot, c), m.at(lead, c));
    for (size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m.at(r, col).is_zero()) continue;
      Rational f = m.at(r, col) / m.at(lead, col);
      for (size_t c = col; c < n; ++c) m.at(r, c) -= f * m.at(lead, c);
    }
    pivot_col.push_back(col);
    ++lead;
  }
  if (pivot_col.size() == n) return std::nullopt;
  // first free column
  size_t free_col = 0;
  std::vector<bool> is_pivot(n, false);
  for (size_t c : pivot_col) is_pivot[c] = true;
  while (free_col < n && is_pivot[free_col]) ++free_col;
  RationalVector x(n, Rational(0));
  x[free_col] = Rational(1);
  for (size_t i = 0; i < pivot_col.size(); ++i)
    x[pivot_col[i]] = -(m.at(i, free_col) / m.at(i, pivot_col[i]));
  return x;
}

}  // namespace delzant
