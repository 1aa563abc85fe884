#include "delzant/polytope.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "delzant/lp.hpp"

namespace delzant {

namespace {

Rational qdeterminant(std::vector<RationalVector> rows) {
  size_t n = rows.size();
  Rational det(1);
  for (size_t k = 0; k < n; ++k) {
    size_t pivot = k;
    while (pivot < n && rows[pivot][k].is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != k) {
      std::swap(rows[pivot], rows[k]);
      det = -det;
    }
    det *= rows[k][k];
    for (size_t i = k + 1; i < n; ++i) {
      if (rows[i][k].is_zero()) continue;
      Rational f = rows[i][k] / rows[k][k];
      for (size_t j = k; j < n; ++j) rows[i][j] -= f * rows[k][j];
    }
  }
  return det;
}

size_t affine_rank(const std::vector<RationalVector>& points) {
  if (points.size() <= 1) return 0;
  std::vector<RationalVector> diffs;
  diffs.reserve(points.size() - 1);
  for (size_t i = 1; i < points.size(); ++i) diffs.push_back(subtract(points[i], points[0]));
  return rank(diffs);
}

}  // namespace

void Polytope::finalize() {
  std::sort(vertices_.begin(), vertices_.end(), LexLess{});
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  std::sort(facets_.begin(), facets_.end(), [](const Facet& a, const Facet& b) {
    int c = lex_compare(a.normal, b.normal);
    if (c != 0) return c < 0;
    return a.rhs < b.rhs;
  });
  incidence_.assign(vertices_.size(), {});
  for (size_t v = 0; v < vertices_.size(); ++v) {
    for (size_t f = 0; f < facets_.size(); ++f) {
      Rational lhs = dot(facets_[f].normal, vertices_[v]);
      if (lhs > facets_[f].rhs)
        throw Error(ErrorCode::InternalInconsistency, "vertex violates facet");
      if (lhs == facets_[f].rhs) incidence_[v].push_back(f);
    }
    if (incidence_[v].size() < dim_)
      throw Error(ErrorCode::InternalInconsistency, "vertex on fewer than n facets");
  }
}

Polytope Polytope::from_halfspaces(size_t dim, const std::vector<Facet>& rows_in) {
  if (dim == 0) throw Error(ErrorCode::DimensionMismatch, "dimension must be positive");

  // Primitivize, drop zero rows, and keep the tightest rhs per normal.
  std::map<LatticeVector, Rational, LexLess> tightest;
  for (const auto& row : rows_in) {
    if (row.normal.size() != dim)
      throw Error(ErrorCode::DimensionMismatch, "facet normal has wrong dimension");
    BigInt g = content(row.normal);
    if (g == 0) {
      if (row.rhs.sign() < 0)
        throw Error(ErrorCode::EmptyPolytope, "zero row with negative rhs");
      continue;
    }
    LatticeVector nrm(dim);
    for (size_t i = 0; i < dim; ++i) nrm[i] = row.normal[i] / g;
    Rational rhs = row.rhs / Rational(g);
    auto it = tightest.find(nrm);
    if (it == tightest.end())
      tightest.emplace(std::move(nrm), std::move(rhs));
    else if (rhs < it->second)
      it->second = rhs;
  }

  std::vector<Facet> rows;
  rows.reserve(tightest.size());
  for (auto& [nrm, rhs] : tightest) rows.push_back(Facet{nrm, rhs});

  LPProblem closure;
  closure.num_vars = dim;
  for (const auto& row : rows) closure.add(to_rational(row.normal), row.rhs, false);
  if (!solve_rational_lp(closure).feasible)
    throw Error(ErrorCode::EmptyPolytope, "inequality system is infeasible");

  std::vector<LatticeVector> normals;
  normals.reserve(rows.size());
  for (const auto& row : rows) normals.push_back(row.normal);
  if (!positively_spans(normals, dim))
    throw Error(ErrorCode::Unbounded, "solution set is unbounded");

  LPProblem interior = closure;
  for (auto& row : interior.rows) row.strict = true;
  if (!solve_rational_lp(interior).feasible)
    throw Error(ErrorCode::NotFullDimensional, "solution set is not full-dimensional");

  // Candidate vertices: exact solutions of n tight rows.
  std::vector<RationalVector> verts;
  for_each_subset(rows.size(), dim, [&](const std::vector<size_t>& idx) {
    std::vector<RationalVector> sub;
    RationalVector rhs(dim);
    for (size_t i = 0; i < dim; ++i) {
      sub.push_back(to_rational(rows[idx[i]].normal));
      rhs[i] = rows[idx[i]].rhs;
    }
    auto x = solve_linear_system(QMatrix::from_rows(sub), rhs);
    if (!x) return;
    for (const auto& row : rows)
      if (dot(row.normal, *x) > row.rhs) return;
    verts.push_back(std::move(*x));
  });
  std::sort(verts.begin(), verts.end(), LexLess{});
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

  // Facets: rows whose tight vertex set is (n-1)-dimensional, with rhs
  // replaced by the support value.
  Polytope P;
  P.dim_ = dim;
  P.vertices_ = std::move(verts);
  for (const auto& row : rows) {
    Rational h = dot(row.normal, P.vertices_[0]);
    for (const auto& v : P.vertices_) {
      Rational s = dot(row.normal, v);
      if (s > h) h = s;
    }
    std::vector<RationalVector> tight;
    for (const auto& v : P.vertices_)
      if (dot(row.normal, v) == h) tight.push_back(v);
    if (tight.size() >= dim && affine_rank(tight) == dim - 1)
      P.facets_.push_back(Facet{row.normal, h});
  }
  auto last = std::unique(P.facets_.begin(), P.facets_.end());
  P.facets_.erase(last, P.facets_.end());
  P.finalize();
  return P;
}

Polytope Polytope::from_vertices(size_t dim, const std::vector<RationalVector>& points_in) {
  if (dim == 0) throw Error(ErrorCode::DimensionMismatch, "dimension must be positive");
  std::vector<RationalVector> points = points_in;
  for (const auto& p : points)
    if (p.size() != dim) throw Error(ErrorCode::DimensionMismatch, "point has wrong dimension");
  std::sort(points.begin(), points.end(), LexLess{});
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < dim + 1 || affine_rank(points) != dim)
    throw Error(ErrorCode::NotFullDimensional, "points do not affinely span");

  std::set<std::pair<LatticeVector, Rational>,
           bool (*)(const std::pair<LatticeVector, Rational>&,
                    const std::pair<LatticeVector, Rational>&)>
      rows([](const std::pair<LatticeVector, Rational>& a,
              const std::pair<LatticeVector, Rational>& b) {
        int c = lex_compare(a.first, b.first);
        if (c != 0) return c < 0;
        return a.second < b.second;
      });

  for_each_subset(points.size(), dim, [&](const std::vector<size_t>& idx) {
    std::vector<RationalVector> diffs;
    for (size_t i = 1; i < dim; ++i)
      diffs.push_back(subtract(points[idx[i]], points[idx[0]]));
    if (dim > 1 && rank(diffs) != dim - 1) return;
    LatticeVector nrm;
    if (dim == 1) {
      nrm = LatticeVector{BigInt(1)};
    } else {
      auto k = kernel_vector(diffs);
      if (!k) return;
      nrm = primitive_direction(*k);
    }
    Rational b = dot(nrm, points[idx[0]]);
    bool all_below = true, all_above = true;
    for (const auto& p : points) {
      Rational s = dot(nrm, p);
      if (s > b) all_below = false;
      if (s < b) all_above = false;
    }
    if (all_below)
      rows.emplace(nrm, b);
    else if (all_above)
      rows.emplace(negate(nrm), -b);
  });

  std::vector<Facet> facets;
  for (const auto& [nrm, b] : rows) facets.push_back(Facet{nrm, b});
  return from_halfspaces(dim, facets);
}

bool Polytope::contains(const RationalVector& p) const {
  for (const auto& f : facets_)
    if (dot(f.normal, p) > f.rhs) return false;
  return true;
}

Rational Polytope::support_value(const RationalVector& alpha) const {
  if (alpha.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "support direction dimension");
  Rational h = dot(alpha, vertices_[0]);
  for (const auto& v : vertices_) {
    Rational s = dot(alpha, v);
    if (s > h) h = s;
  }
  return h;
}

Rational Polytope::support_value(const LatticeVector& alpha) const {
  return support_value(to_rational(alpha));
}

std::vector<size_t> Polytope::adjacent_vertices(size_t v) const {
  std::vector<size_t> out;
  for (size_t u = 0; u < vertices_.size(); ++u) {
    if (u == v) continue;
    std::vector<size_t> common;
    std::set_intersection(incidence_[v].begin(), incidence_[v].end(), incidence_[u].begin(),
                          incidence_[u].end(), std::back_inserter(common));
    // [v,u] is an edge iff v and u are the only vertices tight on all the
    // facets they share.
    bool edge = true;
    for (size_t w = 0; w < vertices_.size() && edge; ++w) {
      if (w == v || w == u) continue;
      if (std::includes(incidence_[w].begin(), incidence_[w].end(), common.begin(), common.end()))
        edge = false;
    }
    if (edge) out.push_back(u);
  }
  return out;
}

std::vector<std::pair<size_t, size_t>> Polytope::edges() const {
  std::vector<std::pair<size_t, size_t>> out;
  for (size_t v = 0; v < vertices_.size(); ++v)
    for (size_t u : adjacent_vertices(v))
      if (v < u) out.emplace_back(v, u);
  return out;
}

std::vector<Face> Polytope::proper_faces() const {
  std::map<std::vector<size_t>, size_t> seen;  // vertex set -> dim
  std::vector<std::vector<size_t>> facet_verts(facets_.size());
  for (size_t v = 0; v < vertices_.size(); ++v)
    for (size_t f : incidence_[v]) facet_verts[f].push_back(v);

  std::vector<std::vector<size_t>> queue;
  auto dim_of = [&](const std::vector<size_t>& vs) {
    std::vector<RationalVector> pts;
    for (size_t v : vs) pts.push_back(vertices_[v]);
    return affine_rank(pts);
  };
  for (const auto& fv : facet_verts) {
    if (!seen.count(fv)) {
      seen[fv] = dim_of(fv);
      queue.push_back(fv);
    }
  }
  while (!queue.empty()) {
    auto s = queue.back();
    queue.pop_back();
    for (const auto& fv : facet_verts) {
      std::vector<size_t> t;
      std::set_intersection(s.begin(), s.end(), fv.begin(), fv.end(), std::back_inserter(t));
      if (t.empty() || t == s || seen.count(t)) continue;
      seen[t] = dim_of(t);
      queue.push_back(t);
    }
  }
  std::vector<Face> out;
  out.reserve(seen.size());
  for (auto& [vs, d] : seen) out.push_back(Face{vs, d});
  return out;
}

Rational Polytope::volume() const {
  // Pulling triangulation: recursively cone each face from its
  // lexicographically smallest vertex.
  auto faces = proper_faces();
  std::map<std::vector<size_t>, std::vector<std::vector<size_t>>> tri;

  std::vector<std::vector<const Face*>> level(dim_);
  for (const auto& f : faces) level[f.dim].push_back(&f);

  std::function<const std::vector<std::vector<size_t>>&(const std::vector<size_t>&, size_t)>
      triangulate = [&](const std::vector<size_t>& verts,
                        size_t d) -> const std::vector<std::vector<size_t>>& {
    auto it = tri.find(verts);
    if (it != tri.end()) return it->second;
    std::vector<std::vector<size_t>> simplices;
    if (d == 0) {
      simplices.push_back(verts);
    } else {
      size_t apex = verts[0];
      for (const Face* child : level[d - 1]) {
        if (!std::includes(verts.begin(), verts.end(), child->vertices.begin(),
                           child->vertices.end()))
          continue;
        if (std::binary_search(child->vertices.begin(), child->vertices.end(), apex)) continue;
        for (const auto& s : triangulate(child->vertices, d - 1)) {
          std::vector<size_t> simplex;
          simplex.push_back(apex);
          simplex.insert(simplex.end(), s.begin(), s.end());
          simplices.push_back(std::move(simplex));
        }
      }
    }
    return tri.emplace(verts, std::move(simplices)).first->second;
  };

  std::vector<size_t> all(vertices_.size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = i;
  size_t apex = 0;
  Rational total(0);
  for (const Face* facet : level[dim_ - 1]) {
    if (std::binary_search(facet->vertices.begin(), facet->vertices.end(), apex)) continue;
    for (const auto& s : triangulate(facet->vertices, dim_ - 1)) {
      std::vector<RationalVector> edges;
      edges.reserve(dim_);
      for (size_t v : s) edges.push_back(subtract(vertices_[v], vertices_[apex]));
      total += qdeterminant(edges).abs();
    }
  }
  BigInt fact = 1;
  for (size_t i = 2; i <= dim_; ++i) fact *= BigInt(i);
  return total / Rational(fact);
}

bool Polytope::is_simple() const {
  for (const auto& inc : incidence_)
    if (inc.size() != dim_) return false;
  return true;
}

std::vector<LatticeVector> Polytope::vertex_edge_directions(size_t v) const {
  std::vector<LatticeVector> dirs;
  for (size_t u : adjacent_vertices(v))
    dirs.push_back(primitive_direction(subtract(vertices_[u], vertices_[v])));
  std::sort(dirs.begin(), dirs.end(), LexLess{});
  return dirs;
}

bool Polytope::is_delzant_quick() const {
  if (!is_simple()) return false;
  for (size_t v = 0; v < vertices_.size(); ++v) {
    auto dirs = vertex_edge_directions(v);
    if (dirs.size() != dim_ || lattice_determinant(dirs) != 1) return false;
  }
  return true;
}

Polytope Polytope::translated(const RationalVector& c) const {
  Polytope out;
  out.dim_ = dim_;
  for (const auto& f : facets_) out.facets_.push_back(Facet{f.normal, f.rhs + dot(f.normal, c)});
  for (const auto& v : vertices_) out.vertices_.push_back(add(v, c));
  out.finalize();
  return out;
}

namespace {

Polytope scaled(const Polytope& P, const Rational& s) {
  std::vector<Facet> rows;
  for (const auto& f : P.facets()) rows.push_back(Facet{f.normal, s * f.rhs});
  return Polytope::from_halfspaces(P.dim(), rows);
}

}  // namespace

Polytope minkowski_combine(const Rational& lambda, const Polytope& P, const Rational& mu,
                           const Polytope& Q) {
  if (P.dim() != Q.dim())
    throw Error(ErrorCode::DimensionMismatch, "Minkowski combination of different dimensions");
  if (lambda.sign() < 0 || mu.sign() < 0)
    throw Error(ErrorCode::UnsupportedInput, "Minkowski coefficients must be nonnegative");
  if (lambda.is_zero() && mu.is_zero())
    throw Error(ErrorCode::NotFullDimensional, "Minkowski combination degenerates to a point");
  if (lambda.is_zero()) return scaled(Q, mu);
  if (mu.is_zero()) return scaled(P, lambda);

  size_t n = P.dim();
  // Facet normals of the sum are extreme rays of intersections of vertex
  // normal cones; collect them all plus both input normal sets.
  std::set<LatticeVector, LexLess> candidates;
  for (const auto& f : P.facets()) candidates.insert(f.normal);
  for (const auto& f : Q.facets()) candidates.insert(f.normal);

  auto vertex_cone_rows = [](const Polytope& R, size_t v) {
    std::vector<RationalVector> rows;
    for (size_t u : R.adjacent_vertices(v))
      rows.push_back(subtract(R.vertices()[u], R.vertices()[v]));
    return rows;
  };
  std::vector<std::vector<RationalVector>> rows_p(P.vertices().size());
  std::vector<std::vector<RationalVector>> rows_q(Q.vertices().size());
  for (size_t v = 0; v < P.vertices().size(); ++v) rows_p[v] = vertex_cone_rows(P, v);
  for (size_t w = 0; w < Q.vertices().size(); ++w) rows_q[w] = vertex_cone_rows(Q, w);

  for (size_t v = 0; v < P.vertices().size(); ++v) {
    for (size_t w = 0; w < Q.vertices().size(); ++w) {
      std::vector<RationalVector> rows = rows_p[v];
      rows.insert(rows.end(), rows_q[w].begin(), rows_q[w].end());
      for (auto& r : extreme_rays_of_dual(rows, n)) candidates.insert(std::move(r));
    }
  }

  std::vector<Facet> rows;
  for (const auto& nrm : candidates) {
    RationalVector a = to_rational(nrm);
    rows.push_back(Facet{nrm, lambda * P.support_value(a) + mu * Q.support_value(a)});
  }
  return Polytope::from_halfspaces(n, rows);
}

IntersectResult intersect(const Polytope& P, const Polytope& Q) {
  if (P.dim() != Q.dim())
    throw Error(ErrorCode::DimensionMismatch, "intersection of different dimensions");
  std::vector<Facet> rows = P.facets();
  rows.insert(rows.end(), Q.facets().begin(), Q.facets().end());
  try {
    return IntersectResult{IntersectKind::Full, Polytope::from_halfspaces(P.dim(), rows)};
  } catch (const Error& e) {
    if (e.code() == ErrorCode::EmptyPolytope) return IntersectResult{IntersectKind::Empty, {}};
    if (e.code() == ErrorCode::NotFullDimensional)
      return IntersectResult{IntersectKind::LowerDimensional, {}};
    throw;
  }
}

Rational rational_length(const RationalVector& a, const RationalVector& b) {
  RationalVector d = subtract(b, a);
  if (is_zero(d)) return Rational(0);
  LatticeVector prim = primitive_direction(d);
  for (size_t i = 0; i < d.size(); ++i)
    if (prim[i] != 0) return d[i] / Rational(prim[i]);
  throw Error(ErrorCode::InternalInconsistency, "primitive direction of nonzero vector is zero");
}

Rational rational_perimeter(const Polytope& P) {
  Rational total(0);
  for (auto [u, v] : P.edges()) total += rational_length(P.vertices()[u], P.vertices()[v]);
  return total;
}

RationalVector AffineUnimodularMap::apply(const RationalVector& x) const {
  RationalVector y(matrix.size());
  for (size_t i = 0; i < matrix.size(); ++i) y[i] = dot(matrix[i], x) + translation[i];
  return y;
}

BigInt AffineUnimodularMap::det() const { return determinant(matrix); }

AffineUnimodularMap AffineUnimodularMap::inverse() const {
  size_t n = matrix.size();
  // A^{-1} is integral because |det A| = 1.
  std::vector<RationalVector> cols;
  for (size_t j = 0; j < n; ++j) {
    RationalVector e(n, Rational(0));
    e[j] = Rational(1);
    std::vector<RationalVector> rows;
    for (const auto& r : matrix) rows.push_back(to_rational(r));
    auto x = solve_linear_system(QMatrix::from_rows(rows), e);
    if (!x) throw Error(ErrorCode::InternalInconsistency, "singular unimodular map");
    cols.push_back(*x);
  }
  AffineUnimodularMap inv;
  inv.matrix.assign(n, LatticeVector(n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (!cols[j][i].is_integer())
        throw Error(ErrorCode::InternalInconsistency, "inverse of unimodular map not integral");
      inv.matrix[i][j] = cols[j][i].numerator();
    }
  }
  RationalVector t(n);
  for (size_t i = 0; i < n; ++i) t[i] = -dot(inv.matrix[i], translation);
  inv.translation = std::move(t);
  return inv;
}

Polytope AffineUnimodularMap::apply(const Polytope& P) const {
  AffineUnimodularMap inv = inverse();
  Polytope out;
  out.dim_ = P.dim();
  for (const auto& f : P.facets()) {
    // y = Ax + c maps <a,x> <= b to <a A^{-1}, y> <= b + <a A^{-1}, c>.
    LatticeVector nrm(out.dim_);
    for (size_t j = 0; j < out.dim_; ++j) {
      BigInt s = 0;
      for (size_t i = 0; i < out.dim_; ++i) s += f.normal[i] * inv.matrix[i][j];
      nrm[j] = s;
    }
    out.facets_.push_back(Facet{nrm, f.rhs + dot(nrm, translation)});
  }
  for (const auto& v : P.vertices()) out.vertices_.push_back(apply(v));
  out.finalize();
  return out;
}

std::optional<AffineUnimodularMap> agl_congruent(const Polytope& P, const Polytope& Q) {
  if (P.dim() != Q.dim())
    throw Error(ErrorCode::DimensionMismatch, "congruence of different dimensions");
  if (!P.is_delzant_quick() || !Q.is_delzant_quick())
    throw Error(ErrorCode::UnsupportedInput, "congruence search requires Delzant inputs");
  if (P.vertices().size() != Q.vertices().size() || P.facets().size() != Q.facets().size())
    return std::nullopt;

  size_t n = P.dim();
  const RationalVector& anchor = P.vertices()[0];
  auto dirs_p = P.vertex_edge_directions(0);

  std::vector<RationalVector> ep_rows;
  for (const auto& d : dirs_p) ep_rows.push_back(to_rational(d));
  QMatrix ep = QMatrix::from_columns(ep_rows);

  std::vector<RationalVector> sorted_q = Q.vertices();
  for (size_t w = 0; w < Q.vertices().size(); ++w) {
    auto dirs_q = Q.vertex_edge_directions(w);
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = i;
    do {
      // A maps the i-th edge direction at the anchor to dirs_q[perm[i]].
      std::vector<LatticeVector> a_rows(n, LatticeVector(n));
      bool integral = true;
      for (size_t col = 0; col < n && integral; ++col) {
        RationalVector e(n, Rational(0));
        e[col] = Rational(1);
        auto coeff = solve_linear_system(ep, e);
        if (!coeff) throw Error(ErrorCode::InternalInconsistency, "edge basis is singular");
        for (size_t r = 0; r < n; ++r) {
          Rational entry;
          for (size_t i = 0; i < n; ++i)
            entry += (*coeff)[i] * Rational(dirs_q[perm[i]][r]);
          if (!entry.is_integer()) {
            integral = false;
            break;
          }
          a_rows[r][col] = entry.numerator();
        }
      }
      if (!integral) continue;
      if (lattice_determinant(a_rows) != 1) continue;
      AffineUnimodularMap map;
      map.matrix = a_rows;
      map.translation = RationalVector(n, Rational(0));
      RationalVector image = map.apply(anchor);
      map.translation = subtract(Q.vertices()[w], image);
      std::vector<RationalVector> mapped;
      mapped.reserve(P.vertices().size());
      for (const auto& v : P.vertices()) mapped.push_back(map.apply(v));
      std::sort(mapped.begin(), mapped.end(), LexLess{});
      if (mapped == sorted_q) return map;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return std::nullopt;
}

}  // namespace delzant
