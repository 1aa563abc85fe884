#include "delzant/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "delzant/lp.hpp"

namespace delzant {

namespace {

std::vector<LatticeVector> gens_of(const Fan& fan, const std::vector<size_t>& cone) {
  std::vector<LatticeVector> g;
  g.reserve(cone.size());
  for (size_t i : cone) g.push_back(fan.rays()[i]);
  return g;
}

bool is_simplicial_cone(const std::vector<LatticeVector>& gens) {
  return rank(gens) == gens.size();
}

/// Outer facet normals of a full-dimensional pointed cone:
/// cone = {x : <w, x> <= 0 for every returned w}.
std::vector<RationalVector> cone_facet_normals(const std::vector<LatticeVector>& gens,
                                               size_t dim) {
  if (dim == 1) {
    return {RationalVector{Rational(-gens[0][0])}};
  }
  std::set<LatticeVector, LexLess> normals;
  for_each_subset(gens.size(), dim - 1, [&](const std::vector<size_t>& idx) {
    std::vector<RationalVector> sub;
    for (size_t i : idx) sub.push_back(to_rational(gens[i]));
    if (rank(sub) != dim - 1) return;
    auto k = kernel_vector(sub);
    if (!k) return;
    LatticeVector w = primitive_direction(*k);
    bool nonpos = true, nonneg = true;
    for (const auto& g : gens) {
      int s = sgn(dot(w, g));
      if (s > 0) nonpos = false;
      if (s < 0) nonneg = false;
    }
    if (nonpos)
      normals.insert(w);
    else if (nonneg)
      normals.insert(negate(w));
  });
  std::vector<RationalVector> out;
  for (const auto& w : normals) out.push_back(to_rational(w));
  return out;
}

/// Positions of the generators spanning the minimal face containing x,
/// where x must lie in the cone.
std::vector<size_t> minimal_face_positions(const std::vector<LatticeVector>& gens, size_t dim,
                                           const RationalVector& x) {
  if (is_simplicial_cone(gens)) {
    auto coeff = simplicial_coefficients(gens, x);
    if (!coeff)
      throw Error(ErrorCode::InternalInconsistency, "point not in span of simplicial cone");
    std::vector<size_t> support;
    for (size_t i = 0; i < coeff->size(); ++i) {
      if ((*coeff)[i].sign() < 0)
        throw Error(ErrorCode::InternalInconsistency, "point not in simplicial cone");
      if ((*coeff)[i].sign() > 0) support.push_back(i);
    }
    return support;
  }
  if (rank(gens) != dim)
    throw Error(ErrorCode::UnsupportedInput, "non-simplicial lower-dimensional cone");
  std::vector<size_t> face(gens.size());
  std::iota(face.begin(), face.end(), 0);
  for (const auto& w : cone_facet_normals(gens, dim)) {
    if (!dot(w, x).is_zero()) continue;
    std::vector<size_t> keep;
    for (size_t i : face)
      if (dot(w, to_rational(gens[i])).is_zero()) keep.push_back(i);
    face = std::move(keep);
  }
  return face;
}

std::vector<LatticeVector> deterministic_probes(size_t dim) {
  std::vector<LatticeVector> probes;
  for (size_t i = 0; i < dim; ++i) {
    LatticeVector e(dim, BigInt(0)), f(dim, BigInt(0));
    e[i] = 1;
    f[i] = -1;
    probes.push_back(e);
    probes.push_back(f);
  }
  probes.push_back(LatticeVector(dim, BigInt(1)));
  LatticeVector ramp(dim);
  for (size_t i = 0; i < dim; ++i) ramp[i] = BigInt(i + 1);
  probes.push_back(ramp);
  uint64_t state = 0x9e3779b97f4a7c15ULL;  // fixed seed
  for (int k = 0; k < 8; ++k) {
    LatticeVector v(dim);
    bool zero = true;
    for (size_t i = 0; i < dim; ++i) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      long val = static_cast<long>((state >> 33) % 19) - 9;
      v[i] = val;
      if (val != 0) zero = false;
    }
    if (zero) v[0] = 1;
    probes.push_back(v);
  }
  return probes;
}

}  // namespace

bool cone_contains(const std::vector<LatticeVector>& generators, const RationalVector& x) {
  if (is_simplicial_cone(generators)) {
    auto coeff = simplicial_coefficients(generators, x);
    if (!coeff) return false;
    for (const auto& c : *coeff)
      if (c.sign() < 0) return false;
    return true;
  }
  return in_nonnegative_span(generators, x);
}

std::optional<RationalVector> simplicial_coefficients(const std::vector<LatticeVector>& generators,
                                                      const RationalVector& x) {
  std::vector<RationalVector> cols;
  cols.reserve(generators.size());
  for (const auto& g : generators) cols.push_back(to_rational(g));
  return solve_linear_system(QMatrix::from_columns(cols), x);
}

std::vector<std::vector<size_t>> cone_facet_sets(const std::vector<LatticeVector>& generators,
                                                 size_t dim) {
  size_t k = generators.size();
  std::vector<std::vector<size_t>> out;
  if (is_simplicial_cone(generators)) {
    if (k == 0) return out;
    for (size_t drop = 0; drop < k; ++drop) {
      std::vector<size_t> f;
      for (size_t i = 0; i < k; ++i)
        if (i != drop) f.push_back(i);
      out.push_back(std::move(f));
    }
    return out;
  }
  if (rank(generators) != dim)
    throw Error(ErrorCode::UnsupportedInput, "non-simplicial lower-dimensional cone");
  std::set<std::vector<size_t>> seen;
  for (const auto& w : cone_facet_normals(generators, dim)) {
    std::vector<size_t> tight;
    for (size_t i = 0; i < k; ++i)
      if (dot(w, to_rational(generators[i])).is_zero()) tight.push_back(i);
    seen.insert(tight);
  }
  return {seen.begin(), seen.end()};
}

BigInt cone_multiplicity(const std::vector<LatticeVector>& generators) {
  return lattice_index(generators);
}

Fan::Fan(size_t dim, std::vector<LatticeVector> rays,
         std::vector<std::vector<size_t>> maximal_cones)
    : dim_(dim), rays_(std::move(rays)), cones_(std::move(maximal_cones)) {
  if (dim_ == 0) throw Error(ErrorCode::DimensionMismatch, "fan dimension must be positive");
  for (auto& r : rays_) {
    if (r.size() != dim_) throw Error(ErrorCode::InvalidFan, "ray of wrong dimension");
    if (is_zero(r)) throw Error(ErrorCode::InvalidFan, "zero ray");
    if (content(r) != 1) throw Error(ErrorCode::InvalidFan, "ray is not primitive");
  }
  for (size_t i = 0; i < rays_.size(); ++i)
    for (size_t j = i + 1; j < rays_.size(); ++j)
      if (rays_[i] == rays_[j]) throw Error(ErrorCode::InvalidFan, "duplicate ray");

  std::vector<bool> used(rays_.size(), false);
  for (auto& cone : cones_) {
    std::sort(cone.begin(), cone.end());
    cone.erase(std::unique(cone.begin(), cone.end()), cone.end());
    if (cone.empty()) throw Error(ErrorCode::InvalidFan, "empty maximal cone");
    for (size_t i : cone) {
      if (i >= rays_.size()) throw Error(ErrorCode::InvalidFan, "cone ray index out of range");
      used[i] = true;
    }
  }
  std::sort(cones_.begin(), cones_.end());
  cones_.erase(std::unique(cones_.begin(), cones_.end()), cones_.end());
  for (bool u : used)
    if (!u) throw Error(ErrorCode::InvalidFan, "unused ray in ray table");

  // Generators of non-simplicial cones must be extreme rays of their cone.
  for (const auto& cone : cones_) {
    auto gens = gens_of(*this, cone);
    if (is_simplicial_cone(gens)) continue;
    for (size_t i = 0; i < gens.size(); ++i) {
      std::vector<LatticeVector> others;
      for (size_t j = 0; j < gens.size(); ++j)
        if (j != i) others.push_back(gens[j]);
      if (in_nonnegative_span(others, to_rational(gens[i])))
        throw Error(ErrorCode::InvalidFan, "non-extreme generator in cone");
    }
  }
}

std::optional<size_t> Fan::ray_index(const LatticeVector& primitive_ray) const {
  for (size_t i = 0; i < rays_.size(); ++i)
    if (rays_[i] == primitive_ray) return i;
  return std::nullopt;
}

Fan::Canonical Fan::canonical() const {
  std::vector<size_t> order(rays_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return lex_compare(rays_[a], rays_[b]) < 0; });
  std::vector<size_t> pos(rays_.size());
  for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;

  Canonical c;
  c.dim = dim_;
  c.rays.reserve(rays_.size());
  for (size_t i : order) c.rays.push_back(rays_[i]);
  for (const auto& cone : cones_) {
    std::vector<size_t> mapped;
    mapped.reserve(cone.size());
    for (size_t i : cone) mapped.push_back(pos[i]);
    std::sort(mapped.begin(), mapped.end());
    c.cones.push_back(std::move(mapped));
  }
  std::sort(c.cones.begin(), c.cones.end());
  return c;
}

FanProperties fan_properties(const Fan& fan, bool check_proper_intersections) {
  FanProperties props;
  size_t n = fan.dim();
  const auto& cones = fan.maximal_cones();

  std::vector<std::vector<LatticeVector>> gens(cones.size());
  std::vector<bool> simplicial(cones.size());
  std::vector<bool> fulldim(cones.size());
  props.simplicial = true;
  props.pointed = true;
  for (size_t c = 0; c < cones.size(); ++c) {
    gens[c] = gens_of(fan, cones[c]);
    size_t r = rank(gens[c]);
    simplicial[c] = r == gens[c].size();
    fulldim[c] = r == n;
    if (!simplicial[c]) {
      props.simplicial = false;
      // Pointedness: no nontrivial nonnegative dependence among generators.
      LPProblem lp;
      lp.num_vars = gens[c].size();
      for (size_t i = 0; i < gens[c].size(); ++i) {
        RationalVector row(gens[c].size(), Rational(0));
        row[i] = Rational(-1);
        lp.add(std::move(row), Rational(0));
      }
      RationalVector ones(gens[c].size(), Rational(1));
      lp.add_equality(ones, Rational(1));
      for (size_t coord = 0; coord < n; ++coord) {
        RationalVector row(gens[c].size());
        for (size_t i = 0; i < gens[c].size(); ++i) row[i] = Rational(gens[c][i][coord]);
        lp.add_equality(row, Rational(0));
      }
      if (solve_rational_lp(lp).feasible) props.pointed = false;
    }
  }

  props.multiplicities.resize(cones.size());
  props.unimodular = props.simplicial;
  for (size_t c = 0; c < cones.size(); ++c) {
    if (simplicial[c]) {
      props.multiplicities[c] = cone_multiplicity(gens[c]);
      if (!fulldim[c] || props.multiplicities[c] != 1) props.unimodular = false;
    } else {
      props.multiplicities[c] = 0;
      props.unimodular = false;
    }
  }

  props.valency.assign(fan.rays().size(), 0);
  for (size_t c = 0; c < cones.size(); ++c) {
    if (!fulldim[c]) continue;
    for (size_t i : cones[c]) ++props.valency[i];
  }

  // Completeness: all maximal cones full-dimensional, every ridge shared by
  // exactly two of them, and every probe direction covered.
  props.complete = true;
  for (size_t c = 0; c < cones.size(); ++c)
    if (!fulldim[c]) props.complete = false;
  if (props.complete) {
    std::map<std::vector<size_t>, size_t> ridge_count;
    for (size_t c = 0; c < cones.size(); ++c) {
      for (const auto& fpos : cone_facet_sets(gens[c], n)) {
        std::vector<size_t> global;
        global.reserve(fpos.size());
        for (size_t p : fpos) global.push_back(cones[c][p]);
        std::sort(global.begin(), global.end());
        ++ridge_count[global];
      }
    }
    for (const auto& [ridge, count] : ridge_count)
      if (count != 2) props.complete = false;
  }
  if (props.complete) {
    for (const auto& probe : deterministic_probes(n)) {
      bool covered = false;
      for (size_t c = 0; c < cones.size() && !covered; ++c)
        covered = cone_contains(gens[c], to_rational(probe));
      if (!covered) {
        props.complete = false;
        break;
      }
    }
  }

  if (check_proper_intersections) {
    std::vector<std::vector<RationalVector>> hrep(cones.size());
    for (size_t c = 0; c < cones.size(); ++c)
      if (fulldim[c]) hrep[c] = cone_facet_normals(gens[c], n);
    for (size_t a = 0; a < cones.size(); ++a) {
      for (size_t b = a + 1; b < cones.size(); ++b) {
        if (!fulldim[a] || !fulldim[b]) continue;
        std::vector<size_t> shared;
        std::set_intersection(cones[a].begin(), cones[a].end(), cones[b].begin(), cones[b].end(),
                              std::back_inserter(shared));
        bool proper = true;
        if (simplicial[a] && simplicial[b] && shared.size() == n - 1) {
          // Fast path: the two off-ridge generators must lie strictly on
          // opposite sides of the ridge hyperplane.
          std::vector<RationalVector> ridge_rows;
          for (size_t i : shared) ridge_rows.push_back(to_rational(fan.rays()[i]));
          auto w = kernel_vector(ridge_rows);
          if (!w) {
            proper = false;
          } else {
            LatticeVector u, v;
            for (size_t i : cones[a])
              if (!std::binary_search(shared.begin(), shared.end(), i)) u = fan.rays()[i];
            for (size_t i : cones[b])
              if (!std::binary_search(shared.begin(), shared.end(), i)) v = fan.rays()[i];
            proper = dot(u, *w).sign() * dot(v, *w).sign() < 0;
          }
        } else {
          std::vector<RationalVector> rows = hrep[a];
          rows.insert(rows.end(), hrep[b].begin(), hrep[b].end());
          auto extreme = extreme_rays_of_dual(rows, n);
          std::vector<LatticeVector> expected;
          for (size_t i : shared) expected.push_back(fan.rays()[i]);
          std::sort(expected.begin(), expected.end(), LexLess{});
          proper = extreme == expected;
          if (proper && !shared.empty()) {
            RationalVector p(n, Rational(0));
            for (size_t i : shared) p = add(p, to_rational(fan.rays()[i]));
            for (size_t side : {a, b}) {
              auto face = minimal_face_positions(gens[side], n, p);
              std::vector<size_t> global;
              for (size_t q : face) global.push_back(cones[side][q]);
              std::sort(global.begin(), global.end());
              if (global != shared) proper = false;
            }
          }
        }
        if (!proper)
          throw Error(ErrorCode::InvalidFan, "maximal cones " + std::to_string(a) + " and " +
                                                 std::to_string(b) +
                                                 " do not intersect in a common face");
      }
    }
  }
  return props;
}

bool refines(const Fan& fine, const Fan& coarse) {
  if (fine.dim() != coarse.dim())
    throw Error(ErrorCode::DimensionMismatch, "refinement test across dimensions");
  std::vector<std::vector<LatticeVector>> coarse_gens;
  coarse_gens.reserve(coarse.maximal_cones().size());
  for (const auto& c : coarse.maximal_cones()) coarse_gens.push_back(gens_of(coarse, c));
  for (const auto& cone : fine.maximal_cones()) {
    auto gens = gens_of(fine, cone);
    bool contained = false;
    for (const auto& cg : coarse_gens) {
      bool all = true;
      for (const auto& g : gens) {
        if (!cone_contains(cg, to_rational(g))) {
          all = false;
          break;
        }
      }
      if (all) {
        contained = true;
        break;
      }
    }
    if (!contained) return false;
  }
  return true;
}

Fan common_refinement(const Fan& a, const Fan& b) {
  if (a.dim() != b.dim())
    throw Error(ErrorCode::DimensionMismatch, "common refinement across dimensions");
  size_t n = a.dim();

  auto hrep_of = [n](const Fan& f) {
    std::vector<std::vector<RationalVector>> h;
    for (const auto& c : f.maximal_cones()) {
      auto gens = gens_of(f, c);
      if (rank(gens) != n)
        throw Error(ErrorCode::UnsupportedInput, "common refinement requires complete fans");
      h.push_back(cone_facet_normals(gens, n));
    }
    return h;
  };
  auto ha = hrep_of(a);
  auto hb = hrep_of(b);

  std::set<std::vector<LatticeVector>> cone_set;
  for (const auto& ra : ha) {
    for (const auto& rb : hb) {
      std::vector<RationalVector> rows = ra;
      rows.insert(rows.end(), rb.begin(), rb.end());
      auto extreme = extreme_rays_of_dual(rows, n);
      if (extreme.size() < n || rank(extreme) != n) continue;
      cone_set.insert(std::move(extreme));
    }
  }

  std::set<LatticeVector, LexLess> ray_set;
  for (const auto& c : cone_set)
    for (const auto& r : c) ray_set.insert(r);
  std::vector<LatticeVector> rays(ray_set.begin(), ray_set.end());
  std::map<LatticeVector, size_t, LexLess> index;
  for (size_t i = 0; i < rays.size(); ++i) index[rays[i]] = i;

  std::vector<std::vector<size_t>> cones;
  for (const auto& c : cone_set) {
    std::vector<size_t> cone;
    for (const auto& r : c) cone.push_back(index[r]);
    cones.push_back(std::move(cone));
  }
  return Fan(n, std::move(rays), std::move(cones));
}

Fan stellar_subdivision(const Fan& fan, const LatticeVector& gamma) {
  if (gamma.size() != fan.dim())
    throw Error(ErrorCode::DimensionMismatch, "subdivision vector of wrong dimension");
  if (is_zero(gamma)) throw Error(ErrorCode::UnsupportedInput, "subdivision by the zero vector");
  LatticeVector g = primitive_vector(gamma);
  if (fan.ray_index(g)) return fan;  // gamma already spans a ray

  RationalVector gq = to_rational(g);
  const auto& cones = fan.maximal_cones();
  std::vector<bool> in_star(cones.size(), false);
  bool any = false;
  for (size_t c = 0; c < cones.size(); ++c) {
    in_star[c] = cone_contains(gens_of(fan, cones[c]), gq);
    any = any || in_star[c];
  }
  if (!any) throw Error(ErrorCode::OutsideSupport, "vector lies outside the fan's support");

  std::vector<LatticeVector> rays = fan.rays();
  rays.push_back(g);
  size_t new_index = rays.size() - 1;

  std::vector<std::vector<size_t>> out;
  for (size_t c = 0; c < cones.size(); ++c) {
    if (!in_star[c]) {
      out.push_back(cones[c]);
      continue;
    }
    auto gens = gens_of(fan, cones[c]);
    auto min_face = minimal_face_positions(gens, fan.dim(), gq);
    std::set<size_t> min_set(min_face.begin(), min_face.end());
    for (const auto& facet : cone_facet_sets(gens, fan.dim())) {
      // Keep only facets avoiding gamma, i.e. not containing its minimal face.
      bool contains_gamma = true;
      std::set<size_t> fs(facet.begin(), facet.end());
      for (size_t p : min_face)
        if (!fs.count(p)) contains_gamma = false;
      if (contains_gamma) continue;
      std::vector<size_t> cone;
      for (size_t p : facet) cone.push_back(cones[c][p]);
      cone.push_back(new_index);
      std::sort(cone.begin(), cone.end());
      out.push_back(std::move(cone));
    }
  }
  return Fan(fan.dim(), std::move(rays), std::move(out));
}

Fan blow_up(const Fan& fan, const std::vector<size_t>& cone_ray_indices) {
  std::vector<size_t> target = cone_ray_indices;
  std::sort(target.begin(), target.end());
  target.erase(std::unique(target.begin(), target.end()), target.end());
  if (target.empty()) throw Error(ErrorCode::UnsupportedCone, "empty blow-up target");
  for (size_t i : target)
    if (i >= fan.rays().size())
      throw Error(ErrorCode::UnsupportedCone, "blow-up target ray out of range");

  auto gens = gens_of(fan, target);
  if (rank(gens) != gens.size())
    throw Error(ErrorCode::UnsupportedCone, "blow-up target is not simplicial");
  if (cone_multiplicity(gens) != 1)
    throw Error(ErrorCode::UnsupportedCone, "blow-up target is not unimodular");

  // The target must be a face of the fan.
  LatticeVector gamma(fan.dim(), BigInt(0));
  for (const auto& g : gens) gamma = add(gamma, g);
  bool is_face = false;
  for (const auto& cone : fan.maximal_cones()) {
    if (!std::includes(cone.begin(), cone.end(), target.begin(), target.end())) continue;
    auto cg = gens_of(fan, cone);
    auto face = minimal_face_positions(cg, fan.dim(), to_rational(gamma));
    std::vector<size_t> global;
    for (size_t p : face) global.push_back(cone[p]);
    std::sort(global.begin(), global.end());
    if (global == target) {
      is_face = true;
      break;
    }
  }
  if (!is_face) throw Error(ErrorCode::UnsupportedCone, "blow-up target is not a cone of the fan");
  return stellar_subdivision(fan, gamma);
}

namespace {

std::optional<Fan> merge_star(const Fan& fan, size_t ray, const std::vector<size_t>& target) {
  size_t n = fan.dim();
  std::vector<std::vector<size_t>> merged;
  std::vector<std::vector<size_t>> kept;
  for (const auto& cone : fan.maximal_cones()) {
    if (!std::binary_search(cone.begin(), cone.end(), ray)) {
      kept.push_back(cone);
      continue;
    }
    std::set<size_t> m;
    for (size_t i : cone)
      if (i != ray) m.insert(i);
    m.insert(target.begin(), target.end());
    if (m.size() != n) return std::nullopt;
    std::vector<size_t> cone_m(m.begin(), m.end());
    auto gens = gens_of(fan, cone_m);
    if (rank(gens) != n || cone_multiplicity(gens) != 1) return std::nullopt;
    merged.push_back(std::move(cone_m));
  }
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  kept.insert(kept.end(), merged.begin(), merged.end());

  // Remove the ray and reindex.
  std::vector<LatticeVector> rays;
  std::vector<size_t> remap(fan.rays().size(), SIZE_MAX);
  for (size_t i = 0; i < fan.rays().size(); ++i) {
    if (i == ray) continue;
    remap[i] = rays.size();
    rays.push_back(fan.rays()[i]);
  }
  for (auto& cone : kept)
    for (auto& i : cone) i = remap[i];
  try {
    return Fan(n, std::move(rays), std::move(kept));
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

std::vector<BlowDownCandidate> find_blow_downs(const Fan& fan, CancellationToken token) {
  auto props = fan_properties(fan, false);
  if (!props.unimodular)
    throw Error(ErrorCode::UnsupportedInput, "blow-down search requires a unimodular fan");
  size_t n = fan.dim();

  std::vector<BlowDownCandidate> found;
  for (size_t r = 0; r < fan.rays().size(); ++r) {
    token.check();
    std::set<size_t> link;
    for (const auto& cone : fan.maximal_cones()) {
      if (!std::binary_search(cone.begin(), cone.end(), r)) continue;
      for (size_t i : cone)
        if (i != r) link.insert(i);
    }
    std::vector<size_t> link_v(link.begin(), link.end());
    for (size_t k = 2; k <= n && k <= link_v.size(); ++k) {
      for_each_subset(link_v.size(), k, [&](const std::vector<size_t>& idx) {
        LatticeVector sum(n, BigInt(0));
        std::vector<size_t> target;
        for (size_t p : idx) {
          target.push_back(link_v[p]);
          sum = add(sum, fan.rays()[link_v[p]]);
        }
        if (sum != fan.rays()[r]) return;
        auto smaller = merge_star(fan, r, target);
        if (!smaller) return;
        // Verify by reconstruction.
        std::vector<size_t> target_new;
        for (size_t i : target) {
          auto idx2 = smaller->ray_index(fan.rays()[i]);
          if (!idx2) return;
          target_new.push_back(*idx2);
        }
        try {
          if (blow_up(*smaller, target_new) == fan)
            found.push_back(BlowDownCandidate{r, target});
        } catch (const Error&) {
        }
      });
    }
  }
  std::sort(found.begin(), found.end(), [](const BlowDownCandidate& a, const BlowDownCandidate& b) {
    if (a.ray != b.ray) return a.ray < b.ray;
    return a.target < b.target;
  });
  return found;
}

Fan apply_blow_down(const Fan& fan, const BlowDownCandidate& candidate) {
  auto smaller = merge_star(fan, candidate.ray, candidate.target);
  if (!smaller)
    throw Error(ErrorCode::UnsupportedCone, "candidate does not merge into a unimodular fan");
  return *smaller;
}

Fan normal_fan(const Polytope& P) {
  std::vector<LatticeVector> rays;
  rays.reserve(P.facets().size());
  for (const auto& f : P.facets()) rays.push_back(f.normal);
  std::vector<std::vector<size_t>> cones;
  cones.reserve(P.vertices().size());
  for (size_t v = 0; v < P.vertices().size(); ++v) cones.push_back(P.vertex_facets(v));
  return Fan(P.dim(), std::move(rays), std::move(cones));
}

}  // namespace delzant
