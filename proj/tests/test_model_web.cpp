#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <tuple>

#include "legweb/exact_matrix.hpp"
#include "legweb/model_web.hpp"
#include "support.hpp"

using namespace legweb;

namespace {

// Rows = polynomials, columns = union of supports.
ExactMatrix coefficient_rows(const std::vector<MultiPoly>& polys) {
  std::set<Monomial, GradedLex> support;
  for (const auto& p : polys)
    for (const auto& [m, c] : p.terms()) support.insert(m);
  std::vector<Monomial> cols(support.begin(), support.end());
  ExactMatrix out(polys.size(), cols.size());
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t k = 0; k < cols.size(); ++k)
      out(i, k) = polys[i].coeff(cols[k]);
  return out;
}

// Inductive definition of the first integrals:
// u^{m+1}_j = u0 u^m_j (j <= 2m-4), u^{m+1}_{2m-3} = u2 u^m_{2m-5},
// u^{m+1}_{2m-2} = u2 u^m_{2m-4}; base case m = 2 is (u0, u1, u2).
MultiPoly u_inductive(int m, int j) {
  const UBasic& u = u_basic();
  if (m == 2) return j == 0 ? u.u0 : (j == 1 ? u.u1 : u.u2);
  if (j <= 2 * m - 4) return u.u0 * u_inductive(m - 1, j);
  if (j == 2 * m - 3) return u.u2 * u_inductive(m - 1, 2 * m - 5);
  return u.u2 * u_inductive(m - 1, 2 * m - 4);
}

}  // namespace

TEST_CASE("WebSpec validation") {
  CHECK_NOTHROW(WebSpec::standard(3).validate());
  CHECK_THROWS_AS(WebSpec::standard(2), std::invalid_argument);
  WebSpec dup{{Rational(0), Rational(0), Rational(1)}};
  CHECK_THROWS_AS(dup.validate(), std::invalid_argument);
  WebSpec r1 = WebSpec::random(6, 0), r2 = WebSpec::random(6, 0);
  CHECK(r1.q == r2.q);
  CHECK(r1.q != WebSpec::random(6, 1).q);
}

TEST_CASE("index_decompose") {
  auto t = [](int m, int j) {
    IndexMJ i = index_decompose(m, j);
    return std::make_tuple(i.j0, i.j1, i.j2);
  };
  CHECK(t(2, 0) == std::make_tuple(1, 0, 0));
  CHECK(t(3, 3) == std::make_tuple(0, 1, 1));
  CHECK(t(4, 2) == std::make_tuple(2, 0, 1));
  CHECK_THROWS_AS(index_decompose(1, 0), std::out_of_range);
  CHECK_THROWS_AS(index_decompose(3, 5), std::out_of_range);
  CHECK_THROWS_AS(index_decompose(3, -1), std::out_of_range);
}

TEST_CASE("property: index_decompose is the unique constrained solution") {
  for (int m = 2; m <= 12; ++m) {
    std::set<std::tuple<int, int, int>> seen;
    for (int j = 0; j <= 2 * m - 2; ++j) {
      IndexMJ i = index_decompose(m, j);
      CHECK(i.j0 + i.j1 + i.j2 == m - 1);
      CHECK((i.j1 == 0 || i.j1 == 1));
      CHECK(i.j == i.j1 + 2 * i.j2);
      CHECK(i.j0 >= 0);
      CHECK(i.j2 >= 0);
      seen.insert({i.j0, i.j1, i.j2});
      // brute-force enumeration finds exactly one solution
      int count = 0;
      for (int a = 0; a < m; ++a)
        for (int b = 0; b <= 1; ++b)
          for (int c = 0; c < m; ++c)
            if (a + b + c == m - 1 && b + 2 * c == j) ++count;
      CHECK(count == 1);
    }
    CHECK(seen.size() == static_cast<std::size_t>(2 * m - 1));
  }
}

TEST_CASE("basic first integrals") {
  const UBasic& u = u_basic();
  const MultiPoly q = MultiPoly::variable(Var::q);
  CHECK(u.u1.evaluate(0, 0, 0, 5) == 0);
  CHECK((u.u1 * u.u1 - Rational(2) * q * u.u0 - Rational(2) * u.u2).is_zero());
  OneForm w = d_of_function(substitute_q(u.u2, 1));
  CHECK(wedge21(wedge11(w, contact_form()), leaf_form(1)).is_zero());
}

TEST_CASE("u_universal closed form") {
  const UBasic& u = u_basic();
  CHECK(u_universal(2, 1) == u.u1);
  CHECK(u_universal(3, 2) == u.u0 * u.u2);
  CHECK_THROWS_AS(u_universal(3, 5), std::out_of_range);
  for (int m = 2; m <= 8; ++m)
    for (int j = 0; j <= 2 * m - 2; ++j) {
      MultiPoly h = u_universal(m, j);
      CHECK(h.degree_in(Var::q) == m - 1);
      CHECK(h.evaluate(0, 0, 0, 7) == 0);
      CHECK(h == u_inductive(m, j));
      IndexMJ i = index_decompose(m, j);
      CHECK(depth_of(h) == 2 * i.j0 + i.j1 + 2 * i.j2);
      CHECK(depth_of(h) <= 2 * m - 2);
      CHECK(weight_of(h) == i.j0 + i.j1 + 2 * i.j2);
    }
}

TEST_CASE("weight and depth") {
  const UBasic& u = u_basic();
  CHECK(weight_of(u.u0) == 1);
  CHECK(depth_of(u.u0) == 2);
  CHECK(weight_of(u.u1) == 1);
  CHECK(depth_of(u.u1) == 1);
  CHECK_THROWS_AS(depth_of(MultiPoly()), std::invalid_argument);
}

TEST_CASE("property: every u is a first integral of every leaf") {
  std::mt19937_64 rng(31);
  auto qs = testsupport::distinct_rationals(rng, 4);
  qs.push_back(0);
  CHECK(in_web_ideal(d_of_function(substitute_q(u_universal(3, 2), 2)), 2));
  for (const auto& qa : qs)
    for (int m = 2; m <= 6; ++m)
      for (int j = 0; j <= 2 * m - 2; ++j) {
        OneForm dh = d_of_function(substitute_q(u_universal(m, j), qa));
        CHECK(in_web_ideal(dh, qa));
      }
}

TEST_CASE("property: linear independence for fixed m") {
  for (int m = 2; m <= 8; ++m) {
    std::vector<MultiPoly> family;
    for (int j = 0; j <= 2 * m - 2; ++j) family.push_back(u_universal(m, j));
    CHECK(rank(coefficient_rows(family)) ==
          static_cast<std::size_t>(2 * m - 1));
  }
}

TEST_CASE("property: specialization at q0 is injective on the u-span") {
  std::mt19937_64 rng(32);
  std::vector<MultiPoly> family;
  for (int m = 2; m <= 8; ++m)
    for (int j = 0; j <= 2 * m - 2; ++j) family.push_back(u_universal(m, j));
  const std::size_t before = rank(coefficient_rows(family));
  CHECK(before == family.size());
  for (int trial = 0; trial < 3; ++trial) {
    Rational q0 = testsupport::random_rational(rng);
    std::vector<MultiPoly> specialized;
    for (const auto& h : family) specialized.push_back(substitute_q(h, q0));
    CHECK(rank(coefficient_rows(specialized)) == before);
  }
}
