#include "delzant/desingularize.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace delzant {

namespace {

constexpr size_t kMaxSteps = 100000;

std::vector<LatticeVector> gens_of(const Fan& fan, const std::vector<size_t>& cone) {
  std::vector<LatticeVector> g;
  g.reserve(cone.size());
  for (size_t i : cone) g.push_back(fan.rays()[i]);
  return g;
}

/// All faces of the fan as sorted ray-index sets, keyed by dimension.
std::map<std::vector<size_t>, size_t> all_faces(const Fan& fan) {
  std::map<std::vector<size_t>, size_t> faces;
  std::vector<std::vector<size_t>> queue;
  for (const auto& cone : fan.maximal_cones()) {
    if (!faces.count(cone)) {
      faces[cone] = rank(gens_of(fan, cone));
      queue.push_back(cone);
    }
  }
  while (!queue.empty()) {
    auto cone = queue.back();
    queue.pop_back();
    if (cone.size() <= 1) continue;
    auto gens = gens_of(fan, cone);
    for (const auto& fpos : cone_facet_sets(gens, fan.dim())) {
      std::vector<size_t> face;
      for (size_t p : fpos) face.push_back(cone[p]);
      std::sort(face.begin(), face.end());
      if (face.empty() || faces.count(face)) continue;
      faces[face] = rank(gens_of(fan, face));
      queue.push_back(face);
    }
  }
  return faces;
}

}  // namespace

Fan replay_trace(const Fan& initial, const RefinementTrace& trace) {
  Fan fan = initial;
  for (const auto& step : trace.steps) fan = stellar_subdivision(fan, step.gamma);
  return fan;
}

std::pair<Fan, RefinementTrace> simplicialize(const Fan& input, CancellationToken token) {
  Fan fan = input;
  RefinementTrace trace;
  for (size_t d = fan.dim(); d >= 2; --d) {
    bool changed = true;
    while (changed) {
      token.check();
      changed = false;
      for (const auto& [face, fdim] : all_faces(fan)) {
        if (fdim != d) continue;
        auto gens = gens_of(fan, face);
        if (rank(gens) == gens.size()) continue;  // simplicial
        LatticeVector gamma(fan.dim(), BigInt(0));
        for (const auto& g : gens) gamma = add(gamma, g);
        trace.steps.push_back(TraceStep{gamma, face});
        fan = stellar_subdivision(fan, gamma);
        changed = true;
        break;
      }
    }
  }
  return {fan, trace};
}

std::pair<Fan, RefinementTrace> desingularize(const Fan& input, CancellationToken token) {
  auto [fan, trace] = simplicialize(input, token);
  for (size_t step = 0; step < kMaxSteps; ++step) {
    token.check();
    const auto& cones = fan.maximal_cones();
    BigInt max_mult = 0;
    size_t target = SIZE_MAX;
    for (size_t c = 0; c < cones.size(); ++c) {
      BigInt mult = cone_multiplicity(gens_of(fan, cones[c]));
      if (mult > max_mult) {
        max_mult = mult;
        target = c;
      }
    }
    if (max_mult <= 1) return {fan, trace};

    auto gens = gens_of(fan, cones[target]);
    auto points = halfopen_parallelepiped_points(gens);
    LatticeVector best;
    Rational best_sum;
    for (const auto& p : points) {
      if (is_zero(p)) continue;
      auto coeff = simplicial_coefficients(gens, to_rational(p));
      if (!coeff)
        throw Error(ErrorCode::InternalInconsistency, "parallelepiped point outside span");
      Rational sum;
      for (const auto& c : *coeff) sum += c;
      if (best.empty() || sum < best_sum ||
          (sum == best_sum && lex_compare(p, best) < 0)) {
        best = p;
        best_sum = sum;
      }
    }
    if (best.empty())
      throw Error(ErrorCode::InternalInconsistency, "multiplicity > 1 but no interior point");
    trace.steps.push_back(TraceStep{best, cones[target]});
    fan = stellar_subdivision(fan, best);
  }
  throw Error(ErrorCode::InternalInconsistency, "desingularization did not terminate");
}

std::vector<LatticeVector> hilbert_basis_2d(const LatticeVector& u, const LatticeVector& v) {
  if (u.size() != 2 || v.size() != 2)
    throw Error(ErrorCode::DimensionMismatch, "Hilbert basis helper is two-dimensional");
  BigInt det = u[0] * v[1] - u[1] * v[0];
  if (det == 0)
    throw Error(ErrorCode::UnsupportedInput, "cone is not pointed and two-dimensional");

  // Hilbert basis elements lie in the closed fundamental parallelogram.
  auto corner = [&](int a, int b) {
    return LatticeVector{BigInt(a) * u[0] + BigInt(b) * v[0], BigInt(a) * u[1] + BigInt(b) * v[1]};
  };
  std::vector<LatticeVector> corners = {corner(0, 0), corner(1, 0), corner(0, 1), corner(1, 1)};
  BigInt xmin = corners[0][0], xmax = corners[0][0], ymin = corners[0][1], ymax = corners[0][1];
  for (const auto& c : corners) {
    xmin = std::min(xmin, c[0]);
    xmax = std::max(xmax, c[0]);
    ymin = std::min(ymin, c[1]);
    ymax = std::max(ymax, c[1]);
  }

  std::set<LatticeVector, LexLess> candidates;
  std::vector<LatticeVector> gens = {u, v};
  for (BigInt x = xmin; x <= xmax; ++x) {
    for (BigInt y = ymin; y <= ymax; ++y) {
      if (x == 0 && y == 0) continue;
      RationalVector p{Rational(x), Rational(y)};
      auto coeff = simplicial_coefficients(gens, p);
      if (!coeff) continue;
      if ((*coeff)[0].sign() < 0 || (*coeff)[1].sign() < 0) continue;
      if ((*coeff)[0] > Rational(1) || (*coeff)[1] > Rational(1)) continue;
      candidates.insert(LatticeVector{x, y});
    }
  }

  std::vector<LatticeVector> basis;
  for (const auto& c : candidates) {
    bool reducible = false;
    for (const auto& p : candidates) {
      LatticeVector q{c[0] - p[0], c[1] - p[1]};
      if (is_zero(q)) continue;
      if (candidates.count(q)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(c);
  }
  std::sort(basis.begin(), basis.end(), [](const LatticeVector& a, const LatticeVector& b) {
    return lex_compare(a, b) < 0;
  });
  return basis;
}

}  // namespace delzant
