#pragma once

#include <optional>
#include <vector>

#include "delzant/rational.hpp"

namespace delzant {

/// Dense rational matrix, row major.
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(size_t n);
  static QMatrix from_rows(const std::vector<RationalVector>& rows);
  static QMatrix from_columns(const std::vector<RationalVector>& cols);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Rational& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  RationalVector row(size_t r) const;
  RationalVector column(size_t c) const;

  size_t rank() const;

 private:
  size_t rows_, cols_;
  std::vector<Rational> data_;
};

// ----- vector arithmetic -----

Rational dot(const RationalVector& a, const RationalVector& b);
Rational dot(const LatticeVector& a, const RationalVector& b);
BigInt dot(const LatticeVector& a, const LatticeVector& b);

RationalVector add(const RationalVector& a, const RationalVector& b);
RationalVector subtract(const RationalVector& a, const RationalVector& b);
RationalVector scale(const Rational& s, const RationalVector& v);
LatticeVector add(const LatticeVector& a, const LatticeVector& b);
LatticeVector negate(const LatticeVector& v);
bool is_zero(const LatticeVector& v);
bool is_zero(const RationalVector& v);

// ----- lattice operations -----

/// gcd of entries; 0 for the zero vector.
BigInt content(const LatticeVector& v);

/// v / gcd(entries). Errors on the zero vector.
LatticeVector primitive_vector(const LatticeVector& v);

/// Clears denominators and divides by the content, preserving orientation.
/// This is the primitive lattice generator of the ray spanned by v.
LatticeVector primitive_direction(const RationalVector& v);

/// |det| of n lattice vectors in dimension n, computed exactly
/// (fraction-free Bareiss elimination).
BigInt lattice_determinant(const std::vector<LatticeVector>& vectors);

BigInt determinant(const std::vector<LatticeVector>& rows);  // signed

size_t rank(const std::vector<LatticeVector>& vectors);
size_t rank(const std::vector<RationalVector>& vectors);

/// Smith normal form of an arbitrary integer matrix A (rows x cols):
/// U * A * V = D with U, V unimodular and D diagonal, each diagonal entry
/// dividing the next.
struct SmithNormalForm {
  std::vector<std::vector<BigInt>> U, V, D;
};
SmithNormalForm smith_normal_form(const std::vector<std::vector<BigInt>>& A);

/// All lattice points expressible as sum lambda_i * g_i with lambda_i in
/// [0,1). The generators must be linearly independent. The count equals the
/// multiplicity (lattice index) of the cone they span, and 0 is always among
/// the points. Enumeration goes through the Smith normal form of the
/// generator matrix, so it terminates regardless of determinant size.
std::vector<LatticeVector> halfopen_parallelepiped_points(
    const std::vector<LatticeVector>& generators);

/// Index of the sublattice spanned by the generators inside the saturated
/// lattice of their span; 1 means unimodular. Generators must be independent.
BigInt lattice_index(const std::vector<LatticeVector>& generators);

// ----- solving -----

/// Exact solution of A x = b when A has full column rank and the system is
/// consistent; nullopt otherwise. A may be square or overdetermined.
std::optional<RationalVector> solve_linear_system(const QMatrix& A, const RationalVector& b);

/// One nonzero rational kernel vector of the matrix whose rows are given,
/// or nullopt when the rows have full column rank.
std::optional<RationalVector> kernel_vector(const std::vector<RationalVector>& rows);

/// Extreme rays of the pointed cone {x : <d, x> <= 0 for all d in rows},
/// found by enumerating (dim-1)-subsets of the rows. Returned primitive and
/// lexicographically sorted.
std::vector<LatticeVector> extreme_rays_of_dual(const std::vector<RationalVector>& rows,
                                                size_t dim);

/// Visits all k-subsets of {0..m-1} in lexicographic order.
template <typename F>
void for_each_subset(size_t m, size_t k, F&& fn) {
  if (k > m) return;
  std::vector<size_t> idx(k);
  for (size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(static_cast<const std::vector<size_t>&>(idx));
    size_t pos = k;
    bool done = true;
    while (pos > 0) {
      --pos;
      if (idx[pos] != pos + m - k) {
        done = false;
        break;
      }
    }
    if (done) return;
    ++idx[pos];
    for (size_t j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct LexLess {
  bool operator()(const LatticeVector& a, const LatticeVector& b) const {
    return lex_compare(a, b) < 0;
  }
  bool operator()(const RationalVector& a, const RationalVector& b) const {
    return lex_compare(a, b) < 0;
  }
};

}  // namespace delzant
