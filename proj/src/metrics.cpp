#include "delzant/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace delzant {

Rational point_distance_squared(const RationalVector& p, const Polytope& Q,
                                RationalVector* nearest) {
  if (p.size() != Q.dim()) throw Error(ErrorCode::DimensionMismatch, "point dimension mismatch");
  if (Q.contains(p)) {
    if (nearest) *nearest = p;
    return Rational(0);
  }
  bool have = false;
  Rational best;
  RationalVector best_point;
  for (const auto& face : Q.proper_faces()) {
    const RationalVector& base = Q.vertices()[face.vertices[0]];
    // Maximal independent set of edge vectors spanning the face.
    std::vector<RationalVector> dirs;
    for (size_t i = 1; i < face.vertices.size(); ++i) {
      RationalVector d = subtract(Q.vertices()[face.vertices[i]], base);
      dirs.push_back(d);
      if (rank(dirs) != dirs.size()) dirs.pop_back();
    }
    RationalVector q = base;
    if (!dirs.empty()) {
      QMatrix gram(dirs.size(), dirs.size());
      RationalVector rhs(dirs.size());
      RationalVector diff = subtract(p, base);
      for (size_t i = 0; i < dirs.size(); ++i) {
        for (size_t j = 0; j < dirs.size(); ++j) gram.at(i, j) = dot(dirs[i], dirs[j]);
        rhs[i] = dot(dirs[i], diff);
      }
      auto sol = solve_linear_system(gram, rhs);
      if (!sol) throw Error(ErrorCode::InternalInconsistency, "singular Gram matrix");
      for (size_t i = 0; i < dirs.size(); ++i) q = add(q, scale((*sol)[i], dirs[i]));
    }
    if (!Q.contains(q)) continue;
    RationalVector d = subtract(p, q);
    Rational dist2 = dot(d, d);
    if (!have || dist2 < best) {
      have = true;
      best = dist2;
      best_point = q;
    }
  }
  if (!have) throw Error(ErrorCode::InternalInconsistency, "no face projection landed inside");
  if (nearest) *nearest = best_point;
  return best;
}

DistanceResult hausdorff_distance(const Polytope& P, const Polytope& Q) {
  if (P.dim() != Q.dim())
    throw Error(ErrorCode::DimensionMismatch, "Hausdorff distance across dimensions");
  DistanceResult result;
  result.exact_squared = Rational(0);
  bool have = false;
  auto side = [&](const Polytope& A, const Polytope& B) {
    for (const auto& v : A.vertices()) {
      RationalVector nearest;
      Rational d2 = point_distance_squared(v, B, &nearest);
      if (!have || d2 > result.exact_squared) {
        have = true;
        result.exact_squared = d2;
        result.witness_from = v;
        result.witness_to = nearest;
      }
    }
  };
  side(P, Q);
  side(Q, P);
  result.value = std::sqrt(result.exact_squared.to_double());
  return result;
}

Rational symmetric_difference_exact(const Polytope& P, const Polytope& Q) {
  if (P.dim() != Q.dim())
    throw Error(ErrorCode::DimensionMismatch, "symmetric difference across dimensions");
  return P.volume() + Q.volume() - Rational(2) * intersect(P, Q).volume();
}

DistanceResult symmetric_difference_distance(const Polytope& P, const Polytope& Q) {
  Rational v = symmetric_difference_exact(P, Q);
  DistanceResult result;
  result.exact_squared = v * v;
  result.value = v.to_double();
  return result;
}

double support_uniform_norm_estimate(const Polytope& P, const Polytope& Q, size_t samples) {
  if (P.dim() != Q.dim())
    throw Error(ErrorCode::DimensionMismatch, "support comparison across dimensions");
  if (samples == 0) throw Error(ErrorCode::UnsupportedInput, "need at least one sample");
  size_t n = P.dim();

  auto to_doubles = [](const Polytope& R) {
    std::vector<std::vector<double>> out;
    for (const auto& v : R.vertices()) {
      std::vector<double> d;
      for (const auto& c : v) d.push_back(c.to_double());
      out.push_back(std::move(d));
    }
    return out;
  };
  auto vp = to_doubles(P);
  auto vq = to_doubles(Q);

  auto h = [n](const std::vector<std::vector<double>>& verts, const std::vector<double>& dir) {
    double best = -1e300;
    for (const auto& v : verts) {
      double s = 0;
      for (size_t i = 0; i < n; ++i) s += v[i] * dir[i];
      best = std::max(best, s);
    }
    return best;
  };

  const double kGolden = 0.6180339887498949;
  uint64_t state = 0x2545f4914f6cdd1dULL;  // fixed seed for dimensions > 3
  double best = 0;
  for (size_t k = 0; k < samples; ++k) {
    std::vector<double> dir(n, 0.0);
    if (n == 1) {
      dir[0] = (k % 2 == 0) ? 1.0 : -1.0;
    } else if (n == 2) {
      double theta = 2.0 * M_PI * (static_cast<double>(k) + 0.5) / static_cast<double>(samples);
      dir = {std::cos(theta), std::sin(theta)};
    } else if (n == 3) {
      // Spherical Fibonacci spiral.
      double z = 1.0 - 2.0 * (static_cast<double>(k) + 0.5) / static_cast<double>(samples);
      double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      double phi = 2.0 * M_PI * kGolden * static_cast<double>(k);
      dir = {r * std::cos(phi), r * std::sin(phi), z};
    } else {
      double norm2 = 0;
      for (size_t i = 0; i < n; ++i) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        double u1 = static_cast<double>((state >> 11) + 1) / 9007199254740993.0;
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        double u2 = static_cast<double>(state >> 11) / 9007199254740992.0;
        dir[i] = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
        norm2 += dir[i] * dir[i];
      }
      double norm = std::sqrt(norm2);
      if (norm == 0) {
        dir[0] = 1;
      } else {
        for (auto& d : dir) d /= norm;
      }
    }
    best = std::max(best, std::fabs(h(vp, dir) - h(vq, dir)));
  }
  return best;
}

}  // namespace delzant
