#include "legweb/model_web.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace legweb {

void WebSpec::validate() const {
  if (q.size() < 3)
    throw std::invalid_argument("web needs d >= 3 leaves, got " +
                                std::to_string(q.size()));
  for (std::size_t a = 0; a < q.size(); ++a)
    for (std::size_t b = a + 1; b < q.size(); ++b)
      if (q[a] == q[b])
        throw std::invalid_argument("q values not distinct: " +
                                    to_string(q[a]) + " repeated");
}

WebSpec WebSpec::standard(int d) {
  WebSpec w;
  for (int a = 0; a < d; ++a) w.q.emplace_back(a);
  w.validate();
  return w;
}

WebSpec WebSpec::random(int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  WebSpec w;
  while (static_cast<int>(w.q.size()) < d) {
    Rational r = make_rational(num(rng), den(rng));
    bool fresh = true;
    for (const auto& s : w.q) fresh = fresh && s != r;
    if (fresh) w.q.push_back(r);
  }
  w.validate();
  return w;
}

IndexMJ index_decompose(int m, int j) {
  if (m < 2 || j < 0 || j > 2 * m - 2)
    throw std::out_of_range("index (m, j) = (" + std::to_string(m) + ", " +
                            std::to_string(j) + ") out of range");
  IndexMJ idx;
  idx.m = m;
  idx.j = j;
  idx.j1 = j % 2;
  idx.j2 = j / 2;
  idx.j0 = m - 1 - idx.j1 - idx.j2;
  return idx;
}

const UBasic& u_basic() {
  static const UBasic u = [] {
    const MultiPoly x = MultiPoly::variable(Var::x);
    const MultiPoly y = MultiPoly::variable(Var::y);
    const MultiPoly p = MultiPoly::variable(Var::p);
    const MultiPoly q = MultiPoly::variable(Var::q);
    const Rational half = make_rational(1, 2);
    return UBasic{y - p * x + half * q * x * x, p - q * x,
                  half * p * p - q * y};
  }();
  return u;
}

MultiPoly u_universal(int m, int j) {
  IndexMJ idx = index_decompose(m, j);
  const UBasic& u = u_basic();
  return u.u0.pow(idx.j0) * u.u1.pow(idx.j1) * u.u2.pow(idx.j2);
}

namespace {

int graded_max(const MultiPoly& h, int y_weight, const char* what) {
  if (h.is_zero())
    throw std::invalid_argument(std::string(what) + " of the zero polynomial");
  int best = 0;
  for (const auto& [m, c] : h.terms())
    best = std::max(best, m[Var::p] + y_weight * m[Var::y]);
  return best;
}

}  // namespace

int weight_of(const MultiPoly& h) { return graded_max(h, 1, "weight"); }
int depth_of(const MultiPoly& h) { return graded_max(h, 2, "depth"); }

}  // namespace legweb
