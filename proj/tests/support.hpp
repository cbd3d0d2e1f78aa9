#pragma once
// Seeded generators and small oracles shared by the unit tests.

#include <random>
#include <vector>

#include "legweb/exact_matrix.hpp"
#include "legweb/multipoly.hpp"

namespace testsupport {

using legweb::ExactMatrix;
using legweb::Monomial;
using legweb::MultiPoly;
using legweb::Rational;
using legweb::RationalVector;

inline Rational random_rational(std::mt19937_64& rng, int num_bound = 9,
                                int den_bound = 5) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound);
  std::uniform_int_distribution<int> den(1, den_bound);
  return legweb::make_rational(num(rng), den(rng));
}

inline MultiPoly random_poly(std::mt19937_64& rng, int terms = 5,
                             int max_exp = 3, bool with_q = true) {
  std::uniform_int_distribution<int> e(0, max_exp);
  MultiPoly p;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (int k = 0; k < 4; ++k) m.exps[k] = (k == 3 && !with_q) ? 0 : e(rng);
    p.add_term(m, random_rational(rng));
  }
  return p;
}

inline std::vector<Rational> distinct_rationals(std::mt19937_64& rng,
                                                std::size_t n) {
  std::vector<Rational> out;
  while (out.size() < n) {
    Rational r = random_rational(rng, 20, 9);
    bool fresh = true;
    for (const auto& s : out) fresh = fresh && s != r;
    if (fresh) out.push_back(r);
  }
  return out;
}

// Plain Gauss-Jordan over Q; returns rank and the RREF rows.
struct GaussJordan {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  std::vector<RationalVector> rref;
};

inline GaussJordan gauss_jordan(const ExactMatrix& m) {
  std::vector<RationalVector> a;
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(m.row(i));
  GaussJordan g;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
    std::size_t k = r;
    while (k < a.size() && a[k][c] == 0) ++k;
    if (k == a.size()) continue;
    std::swap(a[r], a[k]);
    Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
    }
    g.pivots.push_back(c);
    ++r;
  }
  g.rank = r;
  a.resize(r);
  g.rref = a;
  return g;
}

inline ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t rows,
                                 std::size_t cols, double zero_fraction) {
  std::uniform_real_distribution<double> u(0, 1);
  ExactMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (u(rng) >= zero_fraction) m(i, j) = random_rational(rng);
  return m;
}

}  // namespace testsupport
