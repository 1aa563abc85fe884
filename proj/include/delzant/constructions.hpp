#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "delzant/fan.hpp"
#include "delzant/polytope.hpp"

namespace delzant {

/// {x1 >= 0, x2 >= 0, x1 + x2 <= lambda}.
Polytope delzant_triangle(const Rational& lambda);

/// {-b/2 <= x2 <= b/2, 0 <= x1 <= a - k x2}; requires a, b > 0, k >= 0 and
/// 2a > bk.
Polytope hirzebruch_trapezoid(const Rational& a, const Rational& b, const BigInt& k);

/// Complete fan on rays (0,-1), (0,1), (-1,0), (1,k).
Fan hirzebruch_fan(const BigInt& k);

/// Unit cube [0,1]^n.
Polytope cube(size_t n);

/// polygon x [0,1].
Polytope prism(const Polytope& polygon);

/// Unit square with the corner at (1,1) chopped by 1/2.
Polytope delzant_pentagon();

/// Central fan of the triangulated triangular prism on rays -e_i and
/// (e1+e2+e3)-e_i: six rays, eight cones, exactly one cone of multiplicity
/// two. With `unimodular`, that cone is split by inserting e1+e2+e3,
/// giving the seven-ray ten-cone unimodular fan, which is not polytopal.
Fan moae_fan(bool unimodular);

/// Icosahedral triangulation of the cuboctahedron boundary, coned at the
/// origin: 12 rays, 20 cones, every determinant +-2. With `rescaled`, the
/// index-two sublattice x+y+z = 0 (mod 2) is mapped onto Z^3, making the
/// fan unimodular; it remains non-polytopal.
Fan cubocta_fan(bool rescaled);

/// Complete unimodular polytopal fan with k+6 rays and 2k+8 maximal cones
/// admitting no blow-down, k >= 1.
Fan isolated_fan(size_t k);

/// Refines a complete unimodular 3-fan to one with no blow-downs: blow up
/// every maximal cone, then blow up every two-dimensional cone of the
/// intermediate fan.
Fan harden_3fan(const Fan& fan);

/// Standard tetrahedron plus its k-th perturbation, whose normal fan
/// contains a unimodular two-dimensional cone crossing the tetrahedron's
/// fan; no fan using that cone refines the tetrahedron's.
struct NonlocalSequence {
  Polytope tetrahedron;
  Polytope perturbed;
  LatticeVector cone_ray_a, cone_ray_b;
};
NonlocalSequence nonlocal_sequence(size_t k);

/// One named expected-property check of the golden corpus.
struct CorpusCheck {
  std::string construction;
  std::string check;
  bool pass;
};

/// Runs the expected-property checklist of every named construction.
/// Deterministic; the seed only feeds the randomized spot checks.
std::vector<CorpusCheck> run_corpus(uint64_t seed);

}  // namespace delzant
