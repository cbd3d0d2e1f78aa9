#pragma once

#include <cstdint>
#include <vector>

#include "legweb/forms.hpp"
#include "legweb/multipoly.hpp"

namespace legweb {

// The model web y'' = q^a with distinct constants q^a.
struct WebSpec {
  std::vector<Rational> q;

  std::size_t d() const { return q.size(); }
  // Throws std::invalid_argument unless d >= 3 and the q^a are distinct.
  void validate() const;

  // q = (0, 1, ..., d-1)
  static WebSpec standard(int d);
  // d distinct rationals n/m with |n| <= 20, 1 <= m <= 9, drawn from seed.
  static WebSpec random(int d, std::uint64_t seed);
};

struct IndexMJ {
  int m = 0, j = 0;
  int j0 = 0, j1 = 0, j2 = 0;
};

// Unique (j0, j1, j2) with j0 + j1 + j2 = m - 1, j1 in {0, 1}, j = j1 + 2 j2.
// Requires m >= 2 and 0 <= j <= 2m - 2 (std::out_of_range otherwise).
IndexMJ index_decompose(int m, int j);

struct UBasic {
  MultiPoly u0;  // y - p x + q x^2 / 2
  MultiPoly u1;  // p - q x
  MultiPoly u2;  // p^2 / 2 - q y
};

const UBasic& u_basic();

// u^{m+1}_j = u0^j0 u1^j1 u2^j2
MultiPoly u_universal(int m, int j);

// max over monomials of deg_p + deg_y, resp. deg_p + 2 deg_y.
// Throws std::invalid_argument on the zero polynomial.
int weight_of(const MultiPoly& h);
int depth_of(const MultiPoly& h);

}  // namespace legweb
