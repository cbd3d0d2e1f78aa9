#include "legweb/multipoly.hpp"

#include <vector>

namespace legweb {

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
  int ta = a.total(), tb = b.total();
  if (ta != tb) return ta < tb;
  return a.exps < b.exps;
}

MultiPoly::MultiPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

MultiPoly MultiPoly::variable(Var v) {
  Monomial m;
  m.exps[static_cast<int>(v)] = 1;
  return term(m, Rational(1));
}

MultiPoly MultiPoly::term(const Monomial& m, const Rational& c) {
  MultiPoly r;
  r.add_term(m, c);
  return r;
}

Rational MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::degree_in(Var v) const {
  int deg = -1;
  for (const auto& [m, c] : terms_) deg = std::max(deg, m[v]);
  return deg;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  Rational prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      for (int k = 0; k < 4; ++k) m.exps[k] = ma.exps[k] + mb.exps[k];
      prod = ca * cb;
      r.add_term(m, prod);
    }
  }
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::pow(unsigned n) const {
  MultiPoly result(Rational(1)), base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

namespace {

Rational rpow(const Rational& b, int e) {
  Rational r(1);
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

Rational MultiPoly::evaluate(const Rational& x, const Rational& y,
                             const Rational& p, const Rational& q) const {
  const std::array<const Rational*, 4> vals{&x, &y, &p, &q};
  Rational sum(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int k = 0; k < 4; ++k)
      if (m.exps[k] > 0) t *= rpow(*vals[k], m.exps[k]);
    sum += t;
  }
  return sum;
}

MultiPoly partial(const MultiPoly& a, Var v) {
  const int k = static_cast<int>(v);
  MultiPoly r;
  for (const auto& [m, c] : a.terms()) {
    if (m.exps[k] == 0) continue;
    Monomial dm = m;
    dm.exps[k] -= 1;
    r.add_term(dm, c * m.exps[k]);
  }
  return r;
}

MultiPoly substitute_q(const MultiPoly& a, const Rational& value) {
  MultiPoly r;
  std::vector<Rational> powers{Rational(1)};
  for (const auto& [m, c] : a.terms()) {
    int e = m.exps[3];
    while (static_cast<int>(powers.size()) <= e)
      powers.push_back(powers.back() * value);
    Monomial dm = m;
    dm.exps[3] = 0;
    r.add_term(dm, c * powers[e]);
  }
  return r;
}

std::string to_string(const MultiPoly& a) {
  if (a.is_zero()) return "0";
  static const char* names[4] = {"x", "y", "p", "q"};
  std::string out;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    Rational mag = abs(c);
    out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    first = false;
    bool unit = (mag == 1) && m.total() > 0;
    if (!unit) out += to_string(mag);
    bool need_star = !unit;
    for (int k = 0; k < 4; ++k) {
      if (m.exps[k] == 0) continue;
      if (need_star) out += "*";
      out += names[k];
      if (m.exps[k] > 1) out += "^" + std::to_string(m.exps[k]);
      need_star = true;
    }
  }
  return out;
}

}  // namespace legweb
