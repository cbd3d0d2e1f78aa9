#pragma once
// Exterior calculus on jet-valued coefficient forms, shared by the numeric
// sources. 2-forms use the basis (dx^dy, dx^dp, dy^dp).

#include <array>

#include "legweb/numeric_webs.hpp"

namespace legweb::detail {

template <int N>
using JetForm2 = std::array<Jet<N>, 3>;

template <int N>
JetForm2<N - 1> dform(const JetForm<N>& w) {
  return {w[1].partial(0) - w[0].partial(1), w[2].partial(0) - w[0].partial(2),
          w[2].partial(1) - w[1].partial(2)};
}

template <int A, int B>
auto wedge(const JetForm<A>& a, const JetForm<B>& b) {
  constexpr int M = A < B ? A : B;
  using J = Jet<M>;
  auto t = [](const auto& v) { return v.template truncate<M>(); };
  std::array<J, 3> u{t(a[0]), t(a[1]), t(a[2])};
  std::array<J, 3> v{t(b[0]), t(b[1]), t(b[2])};
  return JetForm2<M>{u[0] * v[1] - u[1] * v[0], u[0] * v[2] - u[2] * v[0],
                     u[1] * v[2] - u[2] * v[1]};
}

template <int M, int N>
JetForm<M> truncate_form(const JetForm<N>& w) {
  return {w[0].template truncate<M>(), w[1].template truncate<M>(),
          w[2].template truncate<M>()};
}

template <int N>
JetForm<N> scale(const Jet<N>& f, const JetForm<N>& w) {
  return {f * w[0], f * w[1], f * w[2]};
}

template <int N>
JetForm<N> add(const JetForm<N>& a, const JetForm<N>& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

template <int N>
JetForm<N> sub(const JetForm<N>& a, const JetForm<N>& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

template <int N>
using JetMat = std::array<std::array<Jet<N>, 3>, 3>;

template <int N>
Jet<N> det(const JetMat<N>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

template <int N>
JetMat<N> inverse(const JetMat<N>& m) {
  Jet<N> inv = reciprocal(det(m));
  JetMat<N> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int i1 = (j + 1) % 3, i2 = (j + 2) % 3;
      const int j1 = (i + 1) % 3, j2 = (i + 2) % 3;
      r[i][j] = (m[i1][j1] * m[i2][j2] - m[i1][j2] * m[i2][j1]) * inv;
    }
  return r;
}

// A coframe (theta, theta^1, theta^2) with its dual frame.
template <int N>
struct JetFrame {
  std::array<JetForm<N>, 3> forms;
  JetMat<N> dual;  // column a holds the coordinates of e_a

  explicit JetFrame(const std::array<JetForm<N>, 3>& f) : forms(f) {
    JetMat<N> m;
    for (int a = 0; a < 3; ++a)
      for (int k = 0; k < 3; ++k) m[a][k] = f[a][k];
    dual = inverse(m);
  }
};

// Components (c12, c01, c02) of a 2-form in the basis
// (theta^1 ^ theta^2, theta ^ theta^1, theta ^ theta^2), i.e. om(e_a, e_b).
template <int M, int N>
std::array<Jet<M>, 3> frame_components(const JetForm2<M>& om,
                                       const JetFrame<N>& fr) {
  auto e = [&](int a, int k) { return fr.dual[k][a].template truncate<M>(); };
  auto pair = [&](int a, int b) {
    return om[0] * (e(a, 0) * e(b, 1) - e(a, 1) * e(b, 0)) +
           om[1] * (e(a, 0) * e(b, 2) - e(a, 2) * e(b, 0)) +
           om[2] * (e(a, 1) * e(b, 2) - e(a, 2) * e(b, 1));
  };
  return {pair(1, 2), pair(0, 1), pair(0, 2)};
}

template <int N>
JetForm<N> contact_theta(const JetPoint<N>& v) {
  return {-v.p, Jet<N>(1.0), Jet<N>(0.0)};
}

inline Mat3 invert(const Mat3& m) {
  const double d = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                   m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                   m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int i1 = (j + 1) % 3, i2 = (j + 2) % 3;
      const int j1 = (i + 1) % 3, j2 = (i + 2) % 3;
      r[i][j] = (m[i1][j1] * m[i2][j2] - m[i1][j2] * m[i2][j1]) / d;
    }
  return r;
}

inline double det3(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace legweb::detail
