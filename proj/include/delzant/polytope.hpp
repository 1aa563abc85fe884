#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "delzant/linalg.hpp"
#include "delzant/rational.hpp"

namespace delzant {

/// Facet inequality <normal, x> <= rhs with primitive outer normal.
struct Facet {
  LatticeVector normal;
  Rational rhs;

  bool operator==(const Facet& o) const { return normal == o.normal && rhs == o.rhs; }
};

/// A proper face, identified by its (sorted) vertex index set.
struct Face {
  std::vector<size_t> vertices;
  size_t dim = 0;
};

/// Full-dimensional convex polytope in dual representation: irredundant
/// facet inequalities plus the exact vertex list, with the vertex-facet
/// incidence. Facets and vertices are kept in lexicographic order so that
/// equality of polytopes is structural equality. Immutable once built.
class Polytope {
 public:
  /// Builds from inequalities <normal, x> <= rhs. Redundant rows are
  /// dropped, right-hand sides are replaced by support values, and vertices
  /// are enumerated exactly. Throws EmptyPolytope / Unbounded /
  /// NotFullDimensional.
  static Polytope from_halfspaces(size_t dim, const std::vector<Facet>& rows);

  /// Convex hull; interior points of the input are discarded. Throws
  /// NotFullDimensional when the affine span is deficient.
  static Polytope from_vertices(size_t dim, const std::vector<RationalVector>& points);

  size_t dim() const { return dim_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<RationalVector>& vertices() const { return vertices_; }
  /// Sorted facet indices tight at vertex v.
  const std::vector<size_t>& vertex_facets(size_t v) const { return incidence_[v]; }

  bool contains(const RationalVector& p) const;

  /// h_P(alpha) = max over vertices of <alpha, v>.
  Rational support_value(const RationalVector& alpha) const;
  Rational support_value(const LatticeVector& alpha) const;

  /// Vertices sharing an edge with v.
  std::vector<size_t> adjacent_vertices(size_t v) const;
  /// All edges as vertex index pairs (i < j).
  std::vector<std::pair<size_t, size_t>> edges() const;
  /// All proper faces (dimensions 0 .. n-1).
  std::vector<Face> proper_faces() const;

  /// Exact Euclidean volume via a pulling triangulation from the
  /// lexicographically smallest vertex of every face.
  Rational volume() const;

  /// Every vertex lies in exactly n facets.
  bool is_simple() const;
  /// Primitive edge directions at a vertex, lexicographically sorted.
  std::vector<LatticeVector> vertex_edge_directions(size_t v) const;
  /// Simple and every vertex's primitive edge directions form a lattice
  /// basis. (The full check with failure witness lives in the moduli layer.)
  bool is_delzant_quick() const;

  Polytope translated(const RationalVector& c) const;

  bool operator==(const Polytope& o) const {
    return dim_ == o.dim_ && facets_ == o.facets_ && vertices_ == o.vertices_;
  }

 private:
  friend struct AffineUnimodularMap;

  Polytope() = default;
  void finalize();  // sorts, recomputes incidence, validates

  size_t dim_ = 0;
  std::vector<Facet> facets_;
  std::vector<RationalVector> vertices_;
  std::vector<std::vector<size_t>> incidence_;
};

/// lambda P + mu Q with lambda, mu >= 0, not both zero.
Polytope minkowski_combine(const Rational& lambda, const Polytope& P, const Rational& mu,
                           const Polytope& Q);

enum class IntersectKind { Full, Empty, LowerDimensional };
struct IntersectResult {
  IntersectKind kind;
  std::optional<Polytope> polytope;  // set only when kind == Full

  Rational volume() const { return polytope ? polytope->volume() : Rational(0); }
};
IntersectResult intersect(const Polytope& P, const Polytope& Q);

/// Lattice-normalized length: the ell >= 0 with b - a = ell * primitive
/// direction. Zero for coincident endpoints.
Rational rational_length(const RationalVector& a, const RationalVector& b);
/// Sum of rational lengths over all edges.
Rational rational_perimeter(const Polytope& P);

/// x -> A x + c with A integer and |det A| = 1.
struct AffineUnimodularMap {
  std::vector<LatticeVector> matrix;  // rows
  RationalVector translation;

  RationalVector apply(const RationalVector& x) const;
  Polytope apply(const Polytope& P) const;
  AffineUnimodularMap inverse() const;
  BigInt det() const;
};

/// Searches for a map with A(P) + c = Q. Both polytopes must be Delzant;
/// anchoring a vertex of P against each vertex of Q and each bijection of
/// primitive edge directions determines A, which is then verified globally.
std::optional<AffineUnimodularMap> agl_congruent(const Polytope& P, const Polytope& Q);

}  // namespace delzant
