#include "delzant/moduli.hpp"

#include <algorithm>
#include <set>

#include "delzant/constructions.hpp"
#include "delzant/desingularize.hpp"
#include "delzant/secondary.hpp"

namespace delzant {

namespace {

/// Cyclic angular order of 2D lattice vectors, starting just above the
/// positive x-axis.
bool angular_less(const LatticeVector& u, const LatticeVector& v) {
  auto half = [](const LatticeVector& w) {
    if (w[1] > 0 || (w[1] == 0 && w[0] > 0)) return 0;
    return 1;
  };
  int hu = half(u), hv = half(v);
  if (hu != hv) return hu < hv;
  BigInt cross = u[0] * v[1] - u[1] * v[0];
  if (cross != 0) return cross > 0;
  return lex_compare(u, v) < 0;
}

}  // namespace

DelzantCheck is_delzant(const Polytope& P) {
  DelzantCheck check;
  for (size_t v = 0; v < P.vertices().size(); ++v) {
    if (P.vertex_facets(v).size() != P.dim()) {
      check.delzant = false;
      check.failure = "simple";
      check.witness_vertex = P.vertices()[v];
      return check;
    }
  }
  for (size_t v = 0; v < P.vertices().size(); ++v) {
    auto dirs = P.vertex_edge_directions(v);
    if (dirs.size() != P.dim() || lattice_determinant(dirs) != 1) {
      check.delzant = false;
      check.failure = "smooth";
      check.witness_vertex = P.vertices()[v];
      return check;
    }
  }
  check.delzant = true;
  return check;
}

Polytope corner_chop(const Polytope& P, const RationalVector& vertex, const Rational& eps) {
  auto check = is_delzant(P);
  if (!check.delzant)
    throw Error(ErrorCode::UnsupportedInput, "corner chop requires a Delzant polytope");
  size_t v = SIZE_MAX;
  for (size_t i = 0; i < P.vertices().size(); ++i)
    if (P.vertices()[i] == vertex) v = i;
  if (v == SIZE_MAX) throw Error(ErrorCode::NotAVertex, "chop point is not a vertex");
  if (eps.sign() <= 0) throw Error(ErrorCode::ChopTooLarge, "chop size must be positive");
  for (size_t u : P.adjacent_vertices(v)) {
    Rational len = rational_length(P.vertices()[v], P.vertices()[u]);
    if (!(eps < len)) throw Error(ErrorCode::ChopTooLarge, "chop size reaches an adjacent vertex");
  }
  LatticeVector gamma(P.dim(), BigInt(0));
  Rational rhs_sum;
  for (size_t f : P.vertex_facets(v)) {
    gamma = add(gamma, P.facets()[f].normal);
    rhs_sum += P.facets()[f].rhs;
  }
  std::vector<Facet> rows = P.facets();
  rows.push_back(Facet{gamma, rhs_sum - eps});
  return Polytope::from_halfspaces(P.dim(), rows);
}

Polytope PolygonClassification::base_polytope() const {
  if (std::holds_alternative<TriangleBase>(base))
    return delzant_triangle(std::get<TriangleBase>(base).lambda);
  const auto& h = std::get<HirzebruchBase>(base);
  return hirzebruch_trapezoid(h.a, h.b, h.k);
}

Polytope PolygonClassification::replay() const {
  Polytope P = map.apply(base_polytope());
  for (auto it = chops.rbegin(); it != chops.rend(); ++it)
    P = corner_chop(P, it->vertex, it->eps);
  return P;
}

PolygonClassification classify_delzant_polygon(const Polytope& input) {
  if (input.dim() != 2)
    throw Error(ErrorCode::UnsupportedInput, "polygon classification is two-dimensional");
  if (!is_delzant(input).delzant)
    throw Error(ErrorCode::UnsupportedInput, "polygon classification requires Delzant input");

  PolygonClassification result;
  Polytope current = input;

  while (current.facets().size() > 4) {
    const auto& facets = current.facets();
    std::vector<size_t> order(facets.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
      return angular_less(facets[x].normal, facets[y].normal);
    });
    size_t m = order.size();
    std::optional<size_t> pick;  // position in cyclic order
    for (size_t pos = 0; pos < m; ++pos) {
      const auto& prev = facets[order[(pos + m - 1) % m]].normal;
      const auto& self = facets[order[pos]].normal;
      const auto& next = facets[order[(pos + 1) % m]].normal;
      if (add(prev, next) != self) continue;
      if (!pick || lex_compare(self, facets[order[*pick]].normal) < 0) pick = pos;
    }
    if (!pick)
      throw Error(ErrorCode::InternalInconsistency, "Delzant polygon without a blow-down");
    size_t pos = *pick;
    const Facet& removed = facets[order[pos]];
    const Facet& fprev = facets[order[(pos + m - 1) % m]];
    const Facet& fnext = facets[order[(pos + 1) % m]];

    std::vector<Facet> rows;
    for (size_t i = 0; i < facets.size(); ++i)
      if (i != order[pos]) rows.push_back(facets[i]);
    Polytope smaller = Polytope::from_halfspaces(2, rows);

    auto vertex = solve_linear_system(
        QMatrix::from_rows({to_rational(fprev.normal), to_rational(fnext.normal)}),
        RationalVector{fprev.rhs, fnext.rhs});
    if (!vertex) throw Error(ErrorCode::InternalInconsistency, "blow-down vertex is singular");
    Rational eps = fprev.rhs + fnext.rhs - removed.rhs;
    if (eps.sign() <= 0)
      throw Error(ErrorCode::InternalInconsistency, "blow-down with nonpositive chop size");
    result.chops.push_back(ChopRecord{*vertex, eps});
    current = std::move(smaller);
  }

  if (current.facets().size() == 3) {
    Rational lambda;
    for (const auto& f : current.facets()) lambda += f.rhs;
    result.base = TriangleBase{lambda};
  } else {
    const auto& facets = current.facets();
    struct Candidate {
      BigInt k;
      Rational a, b;
    };
    std::optional<Candidate> best;
    for (size_t i = 0; i < 4; ++i) {
      for (size_t j = 0; j < 4; ++j) {
        if (i == j || facets[i].normal != negate(facets[j].normal)) continue;
        // facets[j] plays alpha_2 = (0,1), facets[i] plays alpha_1 = (0,-1).
        std::vector<size_t> rest;
        for (size_t t = 0; t < 4; ++t)
          if (t != i && t != j) rest.push_back(t);
        LatticeVector sum = add(facets[rest[0]].normal, facets[rest[1]].normal);
        BigInt k;
        if (is_zero(sum)) {
          k = 0;
        } else {
          if (primitive_vector(sum) != facets[j].normal) continue;
          k = content(sum);
        }
        for (size_t swap = 0; swap < 2; ++swap) {
          size_t s = rest[swap], t = rest[1 - swap];
          // alpha_3 = (-1,0) at s, alpha_4 = (1,k) at t; parameters are
          // invariant under the linear normalization.
          Rational c1 = facets[i].rhs, c2 = facets[j].rhs;
          Rational b = c1 + c2;
          Rational a = facets[t].rhs + facets[s].rhs + Rational(k) * (c1 - c2) / Rational(2);
          if (a.sign() <= 0 || b.sign() <= 0) continue;
          if (!(Rational(2) * a > b * Rational(k))) continue;
          // Smallest k; the k = 0 rectangle is the one ambiguous case
          // (a x b vs b x a), canonicalized as a >= b.
          Candidate cand{k, a, b};
          bool better = !best;
          if (best) {
            if (cand.k != best->k)
              better = cand.k < best->k;
            else if (cand.a != best->a)
              better = cand.a > best->a;
            else
              better = cand.b > best->b;
          }
          if (better) best = cand;
        }
      }
    }
    if (!best)
      throw Error(ErrorCode::InternalInconsistency, "four-edge Delzant polygon is not a trapezoid");
    result.base = HirzebruchBase{best->a, best->b, best->k};
  }

  auto map = agl_congruent(result.base_polytope(), current);
  if (!map)
    throw Error(ErrorCode::InternalInconsistency, "canonical base is not congruent to the core");
  result.map = *map;
  return result;
}

Polytope MinkowskiPath::at(size_t segment, const Rational& t) const {
  const auto& seg = segments.at(segment);
  if (t.sign() < 0 || t > Rational(1))
    throw Error(ErrorCode::UnsupportedInput, "segment parameter outside [0,1]");
  if (t.is_zero()) return seg.from;
  if (t == Rational(1)) return seg.to;
  return minkowski_combine(Rational(1) - t, seg.from, t, seg.to);
}

namespace {

size_t ray_symmetric_difference(const Fan& a, const Fan& b) {
  std::set<LatticeVector, LexLess> ra(a.rays().begin(), a.rays().end());
  std::set<LatticeVector, LexLess> rb(b.rays().begin(), b.rays().end());
  size_t count = 0;
  for (const auto& r : ra)
    if (!rb.count(r)) ++count;
  for (const auto& r : rb)
    if (!ra.count(r)) ++count;
  return count;
}

MinkowskiSegment make_segment(const Polytope& from, const Polytope& to) {
  Fan nf = normal_fan(from);
  Fan nt = normal_fan(to);
  return MinkowskiSegment{from, to, common_refinement(nf, nt), ray_symmetric_difference(nf, nt)};
}

}  // namespace

MinkowskiPath minkowski_path(const Polytope& P1, const Polytope& P2, const Rational& eps) {
  if (P1.dim() != P2.dim())
    throw Error(ErrorCode::DimensionMismatch, "path endpoints of different dimension");
  if (eps.sign() <= 0 || eps > Rational(1))
    throw Error(ErrorCode::UnsupportedInput, "path parameter must lie in (0,1]");
  if (!is_delzant(P1).delzant || !is_delzant(P2).delzant)
    throw Error(ErrorCode::UnsupportedInput, "path endpoints must be Delzant");

  Fan f1 = normal_fan(P1);
  Fan f2 = normal_fan(P2);
  MinkowskiPath path;
  if (refines(f1, f2) || refines(f2, f1)) {
    path.breakpoints = {P1, P2};
    path.segments.push_back(make_segment(P1, P2));
    return path;
  }

  Fan cr = common_refinement(f1, f2);
  auto [unimodular, trace] = desingularize(cr);
  auto realized = realize_polytopal(unimodular);
  if (!std::holds_alternative<Polytope>(realized))
    throw Error(ErrorCode::InternalInconsistency,
                "refinement of a polytopal fan failed to realize");
  const Polytope& Q = std::get<Polytope>(realized);
  Polytope Q_eps = minkowski_combine(Rational(1) - eps, P1, eps, Q);

  path.breakpoints = {P1, Q_eps, P2};
  path.segments.push_back(make_segment(P1, Q_eps));
  path.segments.push_back(make_segment(Q_eps, P2));
  return path;
}

PathComplexity path_complexity(const MinkowskiPath& path) {
  PathComplexity out{0, 0};
  for (const auto& seg : path.segments) out.local = std::max(out.local, seg.complexity);
  if (path.breakpoints.empty()) return out;
  std::set<LatticeVector, LexLess> interior;
  for (const auto& seg : path.segments)
    interior.insert(seg.interior_fan.rays().begin(), seg.interior_fan.rays().end());
  Fan first = normal_fan(path.breakpoints.front());
  Fan last = normal_fan(path.breakpoints.back());
  std::set<LatticeVector, LexLess> endpoint(first.rays().begin(), first.rays().end());
  endpoint.insert(last.rays().begin(), last.rays().end());
  for (const auto& r : interior)
    if (!endpoint.count(r)) ++out.global;
  return out;
}

LowerBoundReport check_lower_bound(const Polytope& P) {
  if (!P.is_simple())
    throw Error(ErrorCode::UnsupportedInput, "lower bound applies to simple polytopes");
  LowerBoundReport report;
  report.facets = P.facets().size();
  report.dim = P.dim();
  report.vertices = P.vertices().size();
  report.bound = (report.facets - report.dim) * (report.dim - 1) + 2;
  report.holds = report.vertices >= report.bound;
  report.slack = report.holds ? report.vertices - report.bound : 0;
  return report;
}

AreaBoundReport check_polygon_area_bound(const Polytope& P) {
  if (P.dim() != 2)
    throw Error(ErrorCode::UnsupportedInput, "area bound applies to Delzant polygons");
  if (!is_delzant(P).delzant)
    throw Error(ErrorCode::UnsupportedInput, "area bound applies to Delzant polygons");
  AreaBoundReport report;
  report.area = P.volume();
  report.vertex_count = P.vertices().size();
  report.perimeter = rational_perimeter(P);

  // phi^(2k) = F phi + G with F = F_{2k}, G = F_{2k-1}. The bound
  // area <= (F phi + G) ell^2 is decided exactly:
  //   X := area - G ell^2 <= F ell^2 phi  <=>  2X - Y <= Y sqrt(5), Y := F ell^2.
  size_t power = 2 * report.vertex_count;
  BigInt f_prev = 0, f_cur = 1;  // F_0, F_1
  for (size_t i = 1; i < power; ++i) {
    BigInt next = f_prev + f_cur;
    f_prev = f_cur;
    f_cur = next;
  }
  Rational L = report.perimeter * report.perimeter;
  Rational X = report.area - Rational(f_prev) * L;
  Rational Y = Rational(f_cur) * L;
  if (X.sign() <= 0) {
    report.holds = true;
  } else {
    Rational lhs = Rational(2) * X - Y;
    report.holds = lhs.sign() <= 0 || lhs * lhs <= Rational(5) * Y * Y;
  }
  return report;
}

std::vector<RationalVector> canonical_delzant_form(const Polytope& P) {
  if (!P.is_delzant_quick())
    throw Error(ErrorCode::UnsupportedInput, "canonical form requires a Delzant polytope");
  size_t n = P.dim();
  std::optional<std::vector<RationalVector>> best;
  for (size_t v = 0; v < P.vertices().size(); ++v) {
    auto dirs = P.vertex_edge_directions(v);
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = i;
    do {
      std::vector<RationalVector> cols;
      for (size_t i : perm) cols.push_back(to_rational(dirs[i]));
      QMatrix basis = QMatrix::from_columns(cols);
      std::vector<RationalVector> mapped;
      mapped.reserve(P.vertices().size());
      bool ok = true;
      for (const auto& u : P.vertices()) {
        auto coeff = solve_linear_system(basis, subtract(u, P.vertices()[v]));
        if (!coeff) {
          ok = false;
          break;
        }
        mapped.push_back(std::move(*coeff));
      }
      if (!ok) continue;
      std::sort(mapped.begin(), mapped.end(),
                [](const RationalVector& a, const RationalVector& b) {
                  return lex_compare(a, b) < 0;
                });
      bool better = !best;
      if (best) {
        for (size_t i = 0; i < mapped.size(); ++i) {
          int c = lex_compare(mapped[i], (*best)[i]);
          if (c != 0) {
            better = c < 0;
            break;
          }
        }
      }
      if (better) best = std::move(mapped);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  if (!best) throw Error(ErrorCode::InternalInconsistency, "no canonical form candidate");
  return *best;
}

ToricSummary toric_summary(const Polytope& P) {
  if (!is_delzant(P).delzant)
    throw Error(ErrorCode::UnsupportedInput, "toric summary requires a Delzant polytope");
  ToricSummary summary;
  summary.manifold_dimension = 2 * P.dim();
  summary.fixed_points = P.vertices().size();
  summary.facets = P.facets().size();
  summary.volume = P.volume();
  summary.invariants = canonical_delzant_form(P);
  return summary;
}

Rational dh_measure(const Polytope& P, const Polytope& U) {
  if (P.dim() != U.dim())
    throw Error(ErrorCode::DimensionMismatch, "measure region of wrong dimension");
  return intersect(P, U).volume();
}

}  // namespace delzant
