#pragma once

#include <array>
#include <map>
#include <string>

#include "legweb/rational.hpp"

namespace legweb {

enum class Var { x = 0, y = 1, p = 2, q = 3 };

struct Monomial {
  std::array<int, 4> exps{};  // (x, y, p, q)

  int total() const { return exps[0] + exps[1] + exps[2] + exps[3]; }
  int operator[](Var v) const { return exps[static_cast<int>(v)]; }
  bool operator==(const Monomial&) const = default;
};

// Graded lexicographic order: total degree first, then the exponent tuple
// (ex, ey, ep, eq) compared lexicographically.
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse polynomial over Q in x, y, p, q. No stored coefficient is zero.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Rational, GradedLex>;

  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)

  static MultiPoly variable(Var v);
  static MultiPoly term(const Monomial& m, const Rational& c);

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Monomial& m) const;
  // Largest exponent of v over the support; -1 for the zero polynomial.
  int degree_in(Var v) const;
  bool contains(Var v) const { return degree_in(v) > 0; }

  void add_term(const Monomial& m, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const;
  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

  MultiPoly pow(unsigned n) const;
  Rational evaluate(const Rational& x, const Rational& y, const Rational& p,
                    const Rational& q = Rational(0)) const;

 private:
  Terms terms_;
};

MultiPoly partial(const MultiPoly& a, Var v);
MultiPoly substitute_q(const MultiPoly& a, const Rational& value);

// Human-readable form, e.g. "-x*p + y + 1/2*x^2*q".
std::string to_string(const MultiPoly& a);

}  // namespace legweb
