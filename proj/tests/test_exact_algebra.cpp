#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <numeric>

#include "legweb/exact_matrix.hpp"
#include "legweb/multipoly.hpp"
#include "legweb/parallel.hpp"
#include "support.hpp"

using namespace legweb;
using testsupport::random_poly;

namespace {

const MultiPoly X = MultiPoly::variable(Var::x);
const MultiPoly Y = MultiPoly::variable(Var::y);
const MultiPoly P = MultiPoly::variable(Var::p);
const MultiPoly Q = MultiPoly::variable(Var::q);
const Rational half = make_rational(1, 2);

}  // namespace

TEST_CASE("rational text round trip and normalization") {
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(make_rational(0, 7)) == "0");
  CHECK(to_string(make_rational(8, 4)) == "2");
  CHECK(parse_rational(" -10/4 ") == make_rational(-5, 2));
  CHECK(parse_rational("+3") == 3);
  CHECK(parse_rational("0/5").get_den() == 1);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("ring operations") {
  MultiPoly a = Y - P * X;
  CHECK(a + MultiPoly() == a);
  CHECK(P * P == MultiPoly::term(Monomial{{0, 0, 2, 0}}, 1));
  MultiPoly u1 = P - Q * X;
  MultiPoly u0 = Y - P * X + half * Q * X * X;
  MultiPoly u2 = half * P * P - Q * Y;
  CHECK(u1 * u1 == P * P - Rational(2) * Q * X * P + Q * Q * X * X);
  CHECK(u1 * u1 == Rational(2) * Q * u0 + Rational(2) * u2);
  CHECK((a - a).is_zero());
  CHECK((Rational(0) * a).is_zero());
  CHECK(u1.pow(3) == u1 * u1 * u1);
}

TEST_CASE("graded lex order is total degree then exponent tuple") {
  GradedLex lt;
  CHECK(lt(Monomial{{0, 0, 0, 0}}, Monomial{{0, 0, 0, 1}}));
  CHECK(lt(Monomial{{0, 0, 0, 1}}, Monomial{{1, 0, 0, 0}}));
  CHECK(lt(Monomial{{3, 0, 0, 0}}, Monomial{{0, 0, 0, 4}}));
  CHECK_FALSE(lt(Monomial{{1, 2, 0, 0}}, Monomial{{1, 2, 0, 0}}));
  MultiPoly u0 = Y - P * X + half * Q * X * X;
  CHECK(to_string(u0) == "y - x*p + 1/2*x^2*q");
}

TEST_CASE("partial derivatives") {
  CHECK(partial(P - Q * X, Var::p) == MultiPoly(Rational(1)));
  CHECK(partial(half * P * P - Q * Y, Var::y) == -Q);
  CHECK(partial(Y - P * X + half * Q * X * X, Var::x) == -P + Q * X);
  CHECK(partial(MultiPoly(), Var::q).is_zero());
}

TEST_CASE("substitute_q") {
  CHECK(substitute_q(P - Q * X, 0) == P);
  CHECK(substitute_q(half * P * P - Q * Y, 2) == half * P * P - Rational(2) * Y);
  MultiPoly u0 = Y - P * X + half * Q * X * X;
  for (long qa : {-3L, 0L, 1L, 5L}) {
    MultiPoly h = substitute_q(u0, qa);
    CHECK_FALSE(h.contains(Var::q));
    CHECK(h.evaluate(0, 0, 0) == 0);
  }
  CHECK(substitute_q(u0, 3).evaluate(1, 2, 3) == u0.evaluate(1, 2, 3, 3));
}

TEST_CASE("property: Leibniz rule and commuting mixed partials") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    MultiPoly a = random_poly(rng), b = random_poly(rng);
    for (Var v : {Var::x, Var::y, Var::p, Var::q})
      CHECK(partial(a * b, v) == partial(a, v) * b + a * partial(b, v));
    CHECK(partial(partial(a, Var::y), Var::p) ==
          partial(partial(a, Var::p), Var::y));
    CHECK(partial(partial(a, Var::x), Var::q) ==
          partial(partial(a, Var::q), Var::x));
  }
}

TEST_CASE("property: substitution is a ring homomorphism") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    MultiPoly a = random_poly(rng), b = random_poly(rng);
    Rational v = testsupport::random_rational(rng);
    CHECK(substitute_q(a * b, v) == substitute_q(a, v) * substitute_q(b, v));
    CHECK(substitute_q(a - b, v) == substitute_q(a, v) - substitute_q(b, v));
  }
}

TEST_CASE("rank_nullspace small cases") {
  SUBCASE("identity") {
    auto r = rank_nullspace(ExactMatrix::identity(3));
    CHECK(r.rank == 3);
    CHECK(r.nullspace.empty());
  }
  SUBCASE("zero 2x2") {
    auto r = rank_nullspace(ExactMatrix(2, 2));
    CHECK(r.rank == 0);
    REQUIRE(r.nullspace.size() == 2);
    CHECK(r.nullspace[0] == RationalVector{1, 0});
    CHECK(r.nullspace[1] == RationalVector{0, 1});
  }
  SUBCASE("Vandermonde rows l=0..2 on q=(0,1,2,3)") {
    ExactMatrix v(3, 4);
    for (int l = 0; l < 3; ++l)
      for (int a = 0; a < 4; ++a) {
        Rational q(a), pw(1);
        for (int k = 0; k < l; ++k) pw *= q;
        v(l, a) = pw;
      }
    auto r = rank_nullspace(v);
    CHECK(r.rank == 3);
    REQUIRE(r.nullspace.size() == 1);
    // third forward difference, normalized to 1 at the free column
    CHECK(r.nullspace[0] == RationalVector{-1, 3, -3, 1});
    CHECK(v.times(r.nullspace[0]) == RationalVector{0, 0, 0});
  }
}

TEST_CASE("Bareiss rank and nullspace agree with Gauss-Jordan oracle") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 80; ++trial) {
    std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 8;
    ExactMatrix m = testsupport::random_matrix(rng, rows, cols, 0.5);
    // duplicate a row now and then to force rank deficiency
    if (rows > 1 && trial % 3 == 0)
      for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = 2 * m(0, j);
    auto oracle = testsupport::gauss_jordan(m);
    auto got = rank_nullspace(m, Exec::serial);
    REQUIRE(got.rank == oracle.rank);
    CHECK(got.pivots == oracle.pivots);
    CHECK(got.nullspace.size() == cols - oracle.rank);
    // RREF basis: free-column vector is e_f minus the RREF column f
    std::size_t k = 0;
    for (std::size_t f = 0; f < cols; ++f) {
      if (std::find(oracle.pivots.begin(), oracle.pivots.end(), f) !=
          oracle.pivots.end())
        continue;
      RationalVector expect(cols);
      expect[f] = 1;
      for (std::size_t r = 0; r < oracle.rank; ++r)
        expect[oracle.pivots[r]] = -oracle.rref[r][f];
      CHECK(got.nullspace[k] == expect);
      ++k;
    }
    CHECK(rank(m, Exec::parallel) == got.rank);
  }
}

TEST_CASE("property: rank invariant under row and column permutations") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t rows = 2 + rng() % 6, cols = 2 + rng() % 6;
    ExactMatrix m = testsupport::random_matrix(rng, rows, cols, 0.6);
    std::vector<std::size_t> pr(rows), pc(cols);
    std::iota(pr.begin(), pr.end(), 0);
    std::iota(pc.begin(), pc.end(), 0);
    std::shuffle(pr.begin(), pr.end(), rng);
    std::shuffle(pc.begin(), pc.end(), rng);
    ExactMatrix mp(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) mp(i, j) = m(pr[i], pc[j]);
    CHECK(rank(mp) == rank(m));
    CHECK(rank(mp) <= std::min(rows, cols));
  }
}

TEST_CASE("property: Vandermonde on distinct rationals has full rank") {
  std::mt19937_64 rng(15);
  for (std::size_t d = 1; d <= 9; ++d) {
    auto q = testsupport::distinct_rationals(rng, d);
    ExactMatrix v(d, d);
    for (std::size_t a = 0; a < d; ++a) {
      Rational pw(1);
      for (std::size_t l = 0; l < d; ++l, pw *= q[a]) v(l, a) = pw;
    }
    CHECK(rank(v) == d);
  }
}

TEST_CASE("serial and OpenMP elimination give identical echelon forms") {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 10; ++trial) {
    ExactMatrix m = testsupport::random_matrix(rng, 12, 20, 0.7);
    auto s = bareiss(integer_rows(m), m.cols(), Exec::serial);
    auto p = bareiss(integer_rows(m), m.cols(), Exec::parallel);
    CHECK(s.rank == p.rank);
    CHECK(s.pivots == p.pivots);
    CHECK(s.echelon == p.echelon);
  }
}

TEST_CASE("in_span") {
  std::vector<RationalVector> basis{{1, 0, 1}, {0, 1, 1}};
  CHECK(in_span(basis, {2, 3, 5}));
  CHECK_FALSE(in_span(basis, {0, 0, 1}));
  CHECK(in_span({}, {0, 0}));
  CHECK_FALSE(in_span({}, {0, 1}));
}

TEST_CASE("LEGWEB_THREADS caps the worker count") {
  CHECK(worker_count() >= 1);
  if (const char* cap = std::getenv("LEGWEB_THREADS")) {
    const int n = std::stoi(cap);
    if (n > 0) CHECK(worker_count() <= n);
  }
}
