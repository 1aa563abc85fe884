#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "delzant/linalg.hpp"
#include "delzant/lp.hpp"

using namespace delzant;

namespace {

LatticeVector lv(std::initializer_list<long> xs) {
  LatticeVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

RationalVector qv(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(BigInt(x));
  return v;
}

// Independent determinant oracle: cofactor expansion along the first row.
BigInt cofactor_determinant(const std::vector<LatticeVector>& rows) {
  size_t n = rows.size();
  if (n == 1) return rows[0][0];
  BigInt det = 0;
  for (size_t j = 0; j < n; ++j) {
    if (rows[0][j] == 0) continue;
    std::vector<LatticeVector> minor;
    for (size_t r = 1; r < n; ++r) {
      LatticeVector row;
      for (size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(rows[r][c]);
      minor.push_back(row);
    }
    BigInt term = rows[0][j] * cofactor_determinant(minor);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

// Independent parallelepiped oracle: brute force over the bounding box of
// the half-open parallelepiped, membership by exact coefficient solve.
std::vector<LatticeVector> box_enumeration_oracle(const std::vector<LatticeVector>& gens) {
  size_t n = gens[0].size();
  size_t k = gens.size();
  // Bounding box over all corners sum_{i in S} g_i.
  std::vector<long> lo(n, 0), hi(n, 0);
  for (size_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<long> corner(n, 0);
    for (size_t i = 0; i < k; ++i)
      if (mask & (1u << i))
        for (size_t c = 0; c < n; ++c) corner[c] += gens[i][c].get_si();
    for (size_t c = 0; c < n; ++c) {
      lo[c] = std::min(lo[c], corner[c]);
      hi[c] = std::max(hi[c], corner[c]);
    }
  }
  std::vector<RationalVector> cols;
  for (const auto& g : gens) cols.push_back(to_rational(g));
  QMatrix mat = QMatrix::from_columns(cols);

  std::vector<LatticeVector> out;
  std::vector<long> point(n, 0);
  std::function<void(size_t)> rec = [&](size_t coord) {
    if (coord == n) {
      RationalVector p(n);
      for (size_t c = 0; c < n; ++c) p[c] = Rational(BigInt(point[c]));
      auto coeff = solve_linear_system(mat, p);
      if (!coeff) return;
      for (const auto& l : *coeff)
        if (l.sign() < 0 || l >= Rational(1)) return;
      LatticeVector z(n);
      for (size_t c = 0; c < n; ++c) z[c] = point[c];
      out.push_back(z);
      return;
    }
    for (long x = lo[coord]; x <= hi[coord]; ++x) {
      point[coord] = x;
      rec(coord + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(),
            [](const LatticeVector& a, const LatticeVector& b) { return lex_compare(a, b) < 0; });
  return out;
}

}  // namespace

TEST_CASE("primitive vector") {
  CHECK(primitive_vector(lv({2, 4, 6})) == lv({1, 2, 3}));
  CHECK(primitive_vector(lv({0, -5})) == lv({0, -1}));
  for (long k = 0; k <= 6; ++k) {
    LatticeVector v = lv({k, k + 1, 1});
    CHECK(primitive_vector(v) == v);  // already primitive
  }
  CHECK_THROWS_AS(primitive_vector(lv({0, 0})), Error);
  // gcd 1 and idempotence on random vectors
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> d(-40, 40);
  for (int trial = 0; trial < 200; ++trial) {
    LatticeVector v = lv({d(rng), d(rng), d(rng)});
    if (is_zero(v)) continue;
    auto p = primitive_vector(v);
    CHECK(content(p) == 1);
    CHECK(primitive_vector(p) == p);
  }
}

TEST_CASE("lattice determinant") {
  CHECK(lattice_determinant({lv({1, 0, 0}), lv({0, 1, 0}), lv({0, 0, 1})}) == 1);
  CHECK(lattice_determinant({lv({0, 1, 1}), lv({1, 0, 1}), lv({1, 1, 0})}) == 2);
  for (long k = 1; k <= 10; ++k)
    CHECK(lattice_determinant({lv({-1, 0, -k}), lv({1, -k - 1, 0}), lv({1, 1, k + 1})}) == 1);
  CHECK_THROWS_AS(lattice_determinant({lv({1, 0}), lv({0, 1}), lv({1, 1})}), Error);

  std::mt19937 rng(11);
  std::uniform_int_distribution<long> d(-6, 6);
  for (int trial = 0; trial < 150; ++trial) {
    size_t n = 1 + trial % 4;
    std::vector<LatticeVector> rows;
    for (size_t r = 0; r < n; ++r) {
      LatticeVector row(n);
      for (size_t c = 0; c < n; ++c) row[c] = d(rng);
      rows.push_back(row);
    }
    CHECK(determinant(rows) == cofactor_determinant(rows));
  }
}

TEST_CASE("half-open parallelepiped points") {
  CHECK(halfopen_parallelepiped_points({lv({1, 0}), lv({0, 1})}) ==
        std::vector<LatticeVector>{lv({0, 0})});
  CHECK(halfopen_parallelepiped_points({lv({1, 0}), lv({1, 2})}) ==
        std::vector<LatticeVector>{lv({0, 0}), lv({1, 1})});
  CHECK(halfopen_parallelepiped_points({lv({0, 1, 1}), lv({1, 0, 1}), lv({1, 1, 0})}) ==
        std::vector<LatticeVector>{lv({0, 0, 0}), lv({1, 1, 1})});
  CHECK_THROWS_AS(halfopen_parallelepiped_points({lv({1, 2}), lv({2, 4})}), Error);

  std::mt19937 rng(13);
  std::uniform_int_distribution<long> d(-4, 4);
  int done = 0;
  while (done < 60) {
    size_t n = 2 + done % 2;  // mix of full-dimensional and lower-dimensional
    size_t k = (done % 3 == 0 && n == 3) ? 2 : n;
    std::vector<LatticeVector> gens;
    for (size_t i = 0; i < k; ++i) {
      LatticeVector g(n);
      for (size_t c = 0; c < n; ++c) g[c] = d(rng);
      gens.push_back(g);
    }
    if (rank(gens) != k) continue;
    ++done;
    auto points = box_enumeration_oracle(gens);
    CHECK(halfopen_parallelepiped_points(gens) == points);
    CHECK(BigInt(points.size()) == lattice_index(gens));
    CHECK(std::count(points.begin(), points.end(), LatticeVector(n, BigInt(0))) == 1);
    if (k == n) CHECK(BigInt(points.size()) == lattice_determinant(gens));
  }
}

TEST_CASE("smith normal form invariants") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int trial = 0; trial < 80; ++trial) {
    size_t rows = 1 + trial % 4, cols = 1 + (trial / 2) % 4;
    std::vector<std::vector<BigInt>> A(rows, std::vector<BigInt>(cols));
    for (auto& row : A)
      for (auto& e : row) e = d(rng);
    auto snf = smith_normal_form(A);
    // U A V == D
    for (size_t i = 0; i < rows; ++i) {
      for (size_t j = 0; j < cols; ++j) {
        BigInt sum = 0;
        for (size_t p = 0; p < rows; ++p)
          for (size_t q = 0; q < cols; ++q) sum += snf.U[i][p] * A[p][q] * snf.V[q][j];
        CHECK(sum == snf.D[i][j]);
        if (i != j) CHECK(snf.D[i][j] == 0);
      }
    }
    std::vector<LatticeVector> urows(rows), vrows(cols);
    for (size_t i = 0; i < rows; ++i) urows[i] = LatticeVector(snf.U[i].begin(), snf.U[i].end());
    for (size_t i = 0; i < cols; ++i) vrows[i] = LatticeVector(snf.V[i].begin(), snf.V[i].end());
    CHECK(lattice_determinant(urows) == 1);
    CHECK(lattice_determinant(vrows) == 1);
    // divisibility chain
    size_t diag = std::min(rows, cols);
    for (size_t i = 0; i + 1 < diag; ++i) {
      if (snf.D[i + 1][i + 1] != 0) {
        CHECK(snf.D[i][i] != 0);
        CHECK(snf.D[i + 1][i + 1] % snf.D[i][i] == 0);
      }
      CHECK(snf.D[i][i] >= 0);
    }
  }
}

TEST_CASE("solve linear system") {
  auto sol = solve_linear_system(QMatrix::identity(2), qv({1, 2}));
  REQUIRE(sol.has_value());
  CHECK(*sol == qv({1, 2}));

  // singular and inconsistent
  QMatrix singular = QMatrix::from_rows({qv({1, 1}), qv({2, 2})});
  CHECK(!solve_linear_system(singular, qv({1, 3})).has_value());

  // vertex of the standard triangle at {x1 = 0, x2 = 0}
  QMatrix facets = QMatrix::from_rows({qv({-1, 0}), qv({0, -1})});
  auto vertex = solve_linear_system(facets, qv({0, 0}));
  REQUIRE(vertex.has_value());
  CHECK(*vertex == qv({0, 0}));

  // overdetermined consistent
  QMatrix over = QMatrix::from_rows({qv({1, 0}), qv({0, 1}), qv({1, 1})});
  auto o = solve_linear_system(over, RationalVector{Rational(2), Rational(3), Rational(5)});
  REQUIRE(o.has_value());
  CHECK(*o == qv({2, 3}));
}

TEST_CASE("rational LP: contradictory bounds give the (1,1) certificate") {
  LPProblem lp;
  lp.num_vars = 1;
  lp.add(qv({1}), Rational(1));
  lp.add(qv({-1}), Rational(-2));
  auto outcome = solve_rational_lp(lp);
  CHECK(!outcome.feasible);
  CHECK(verify_lp_outcome(lp, outcome));
  CHECK(outcome.certificate == qv({1, 1}));
  Rational lambda_b = dot(outcome.certificate, RationalVector{Rational(1), Rational(-2)});
  CHECK(lambda_b == Rational(-1));
}

TEST_CASE("rational LP: strict Hirzebruch system is feasible") {
  // b1 + b2 > 0 and b3 + b4 > k b2 with k = 1.
  LPProblem lp;
  lp.num_vars = 4;
  lp.add(qv({-1, -1, 0, 0}), Rational(0), true);
  lp.add(qv({0, 1, -1, -1}), Rational(0), true);
  auto outcome = solve_rational_lp(lp);
  CHECK(outcome.feasible);
  CHECK(verify_lp_outcome(lp, outcome));
}

TEST_CASE("rational LP: random systems verify by substitution") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<long> d(-5, 5);
  int feasible = 0, infeasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    LPProblem lp;
    lp.num_vars = 1 + trial % 3;
    size_t rows = 1 + static_cast<size_t>(trial % 7);
    for (size_t r = 0; r < rows; ++r) {
      RationalVector coeffs(lp.num_vars);
      for (auto& c : coeffs) c = Rational(BigInt(d(rng)));
      lp.add(std::move(coeffs), Rational(BigInt(d(rng))), trial % 2 == 0 && r % 3 == 0);
    }
    auto outcome = solve_rational_lp(lp);
    CHECK(verify_lp_outcome(lp, outcome));
    (outcome.feasible ? feasible : infeasible)++;
  }
  CHECK(feasible > 0);
  CHECK(infeasible > 0);
}

TEST_CASE("positively spanning") {
  CHECK(positively_spans({lv({1, 0}), lv({0, 1}), lv({-1, -1})}, 2));
  CHECK(!positively_spans({lv({1, 0}), lv({0, 1})}, 2));
  CHECK(in_nonnegative_span({lv({1, 0}), lv({0, 1})}, qv({3, 2})));
  CHECK(!in_nonnegative_span({lv({1, 0}), lv({0, 1})}, qv({-1, 2})));
}

TEST_CASE("rational parsing and serialization") {
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-4/2") == Rational(-2));
  CHECK(Rational::parse("17") == Rational(17));
  CHECK(Rational(1, 2).to_string() == "1/2");
  CHECK(Rational(-7).to_string() == "-7");
  CHECK(Rational(5, -10).to_string() == "-1/2");  // sign normalizes to the numerator
  CHECK_THROWS_AS(Rational::parse("x"), Error);
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  std::mt19937 rng(137);
  std::uniform_int_distribution<long> d(-1000, 1000);
  for (int i = 0; i < 100; ++i) {
    long num = d(rng), den = d(rng);
    if (den == 0) continue;
    Rational q(num, den);
    CHECK(Rational::parse(q.to_string()) == q);
    BigInt g;
    BigInt n = q.numerator(), dd = q.denominator();
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), dd.get_mpz_t());
    CHECK(g == 1);
    CHECK(q.denominator() > 0);
  }
}
