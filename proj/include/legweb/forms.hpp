#pragma once

#include "legweb/multipoly.hpp"

namespace legweb {

// Forms on J^1 with polynomial coefficients in (x, y, p). The variable q,
// when present, is a parameter and is never differentiated.
// Basis: (dx, dy, dp) and (dx^dy, dx^dp, dy^dp).
struct OneForm {
  MultiPoly dx, dy, dp;
  bool operator==(const OneForm&) const = default;
  bool is_zero() const { return dx.is_zero() && dy.is_zero() && dp.is_zero(); }
};

struct TwoForm {
  MultiPoly dxdy, dxdp, dydp;
  bool operator==(const TwoForm&) const = default;
  bool is_zero() const {
    return dxdy.is_zero() && dxdp.is_zero() && dydp.is_zero();
  }
};

struct ThreeForm {
  MultiPoly dxdydp;
  bool operator==(const ThreeForm&) const = default;
  bool is_zero() const { return dxdydp.is_zero(); }
};

OneForm operator+(const OneForm& a, const OneForm& b);
OneForm operator-(const OneForm& a, const OneForm& b);
OneForm operator*(const MultiPoly& f, const OneForm& w);

// Throws std::invalid_argument if h depends on q.
OneForm d_of_function(const MultiPoly& h);
TwoForm exterior_derivative(const OneForm& w);
ThreeForm exterior_derivative3(const TwoForm& w);
TwoForm wedge11(const OneForm& a, const OneForm& b);
ThreeForm wedge21(const TwoForm& a, const OneForm& b);

// theta = dy - p dx
OneForm contact_form();
// theta^a = dp - q_value dx
OneForm leaf_form(const Rational& q_value);

// True iff w ^ theta ^ theta^a vanishes identically, i.e. w lies in
// span{theta, theta^a} (the two are independent everywhere).
bool in_web_ideal(const OneForm& w, const Rational& q_value);

}  // namespace legweb
