#include "legweb/forms.hpp"

#include <stdexcept>

namespace legweb {

OneForm operator+(const OneForm& a, const OneForm& b) {
  return {a.dx + b.dx, a.dy + b.dy, a.dp + b.dp};
}

OneForm operator-(const OneForm& a, const OneForm& b) {
  return {a.dx - b.dx, a.dy - b.dy, a.dp - b.dp};
}

OneForm operator*(const MultiPoly& f, const OneForm& w) {
  return {f * w.dx, f * w.dy, f * w.dp};
}

OneForm d_of_function(const MultiPoly& h) {
  if (h.contains(Var::q))
    throw std::invalid_argument("d_of_function: coefficient depends on q");
  return {partial(h, Var::x), partial(h, Var::y), partial(h, Var::p)};
}

TwoForm exterior_derivative(const OneForm& w) {
  return {partial(w.dy, Var::x) - partial(w.dx, Var::y),
          partial(w.dp, Var::x) - partial(w.dx, Var::p),
          partial(w.dp, Var::y) - partial(w.dy, Var::p)};
}

ThreeForm exterior_derivative3(const TwoForm& w) {
  // d(A dx^dy + B dx^dp + C dy^dp) = (A_p - B_y + C_x) dx^dy^dp
  return {partial(w.dxdy, Var::p) - partial(w.dxdp, Var::y) +
          partial(w.dydp, Var::x)};
}

TwoForm wedge11(const OneForm& a, const OneForm& b) {
  return {a.dx * b.dy - a.dy * b.dx, a.dx * b.dp - a.dp * b.dx,
          a.dy * b.dp - a.dp * b.dy};
}

ThreeForm wedge21(const TwoForm& a, const OneForm& b) {
  return {a.dxdy * b.dp - a.dxdp * b.dy + a.dydp * b.dx};
}

OneForm contact_form() {
  return {-MultiPoly::variable(Var::p), MultiPoly(Rational(1)), MultiPoly()};
}

OneForm leaf_form(const Rational& q_value) {
  return {MultiPoly(Rational(-q_value)), MultiPoly(), MultiPoly(Rational(1))};
}

bool in_web_ideal(const OneForm& w, const Rational& q_value) {
  const TwoForm tt = wedge11(contact_form(), leaf_form(q_value));
  return wedge21(tt, w).is_zero();
}

}  // namespace legweb
