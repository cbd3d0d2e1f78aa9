#pragma once

// Forward-mode automatic differentiation in three variables (x, y, p).
// Jet<N> stores the Taylor coefficients of total degree <= N at a point.
// Jet<2> carries value, gradient and Hessian.

#include <array>
#include <cmath>
#include <cstddef>

namespace legweb {

namespace jet_detail {

constexpr int count(int n) { return (n + 1) * (n + 2) * (n + 3) / 6; }

// Multi-indices in graded order: degree 0, then degree 1, ...
template <int N>
struct Indexing {
  static constexpr int size = count(N);
  std::array<std::array<int, 3>, count(N)> alpha{};
  std::array<int, (N + 1) * (N + 1) * (N + 1)> lookup{};

  constexpr Indexing() {
    for (auto& v : lookup) v = -1;
    int k = 0;
    for (int deg = 0; deg <= N; ++deg)
      for (int i = deg; i >= 0; --i)
        for (int j = deg - i; j >= 0; --j) {
          int l = deg - i - j;
          alpha[k] = {i, j, l};
          lookup[(i * (N + 1) + j) * (N + 1) + l] = k;
          ++k;
        }
  }

  constexpr int index(int i, int j, int l) const {
    return lookup[(i * (N + 1) + j) * (N + 1) + l];
  }
  constexpr int degree(int k) const {
    return alpha[k][0] + alpha[k][1] + alpha[k][2];
  }
};

template <int N>
constexpr int pair_count() {
  Indexing<N> ix;
  int n = 0;
  for (int a = 0; a < ix.size; ++a)
    for (int b = 0; b < ix.size; ++b)
      if (ix.degree(a) + ix.degree(b) <= N) ++n;
  return n;
}

// (a, b, c) with alpha_a + alpha_b = alpha_c, the product support.
template <int N>
constexpr std::array<std::array<int, 3>, pair_count<N>()> product_pairs() {
  Indexing<N> ix;
  std::array<std::array<int, 3>, pair_count<N>()> out{};
  int n = 0;
  for (int a = 0; a < ix.size; ++a)
    for (int b = 0; b < ix.size; ++b)
      if (ix.degree(a) + ix.degree(b) <= N) {
        const auto& u = ix.alpha[a];
        const auto& v = ix.alpha[b];
        out[n++] = {a, b, ix.index(u[0] + v[0], u[1] + v[1], u[2] + v[2])};
      }
  return out;
}

constexpr double factorial(int n) {
  double r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

}  // namespace jet_detail

template <int N>
class Jet {
  static_assert(N >= 0, "jet order must be non-negative");

 public:
  static constexpr int order = N;
  static constexpr int size = jet_detail::count(N);
  static constexpr jet_detail::Indexing<N> ix{};

  Jet() { c_.fill(0.0); }
  Jet(double v) {  // NOLINT(google-explicit-constructor)
    c_.fill(0.0);
    c_[0] = v;
  }

  // Coordinate function of variable `var` (0 = x, 1 = y, 2 = p) at `value`.
  static Jet variable(int var, double value) {
    Jet r(value);
    if constexpr (N >= 1) r.c_[1 + var] = 1.0;
    return r;
  }

  double value() const { return c_[0]; }
  double taylor(int i, int j, int l) const { return c_[ix.index(i, j, l)]; }
  double& taylor_ref(int k) { return c_[k]; }
  double taylor_at(int k) const { return c_[k]; }
  // Partial derivative d^{i+j+l} / dx^i dy^j dp^l at the point.
  double derivative(int i, int j, int l) const {
    return taylor(i, j, l) * jet_detail::factorial(i) *
           jet_detail::factorial(j) * jet_detail::factorial(l);
  }

  std::array<double, 3> grad() const
    requires(N >= 1)
  {
    return {c_[1], c_[2], c_[3]};
  }

  std::array<std::array<double, 3>, 3> hess() const
    requires(N >= 2)
  {
    std::array<std::array<double, 3>, 3> h{};
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        std::array<int, 3> e{0, 0, 0};
        e[a] += 1;
        e[b] += 1;
        h[a][b] = derivative(e[0], e[1], e[2]);
      }
    return h;
  }

  Jet<N - 1> partial(int var) const
    requires(N >= 1)
  {
    Jet<N - 1> r;
    for (int k = 0; k < Jet<N - 1>::size; ++k) {
      auto a = Jet<N - 1>::ix.alpha[k];
      a[var] += 1;
      r.taylor_ref(k) = a[var] * c_[ix.index(a[0], a[1], a[2])];
    }
    return r;
  }

  template <int M>
  Jet<M> truncate() const
    requires(M <= N)
  {
    Jet<M> r;
    for (int k = 0; k < Jet<M>::size; ++k) r.taylor_ref(k) = c_[k];
    return r;
  }

  Jet& operator+=(const Jet& o) {
    for (int k = 0; k < size; ++k) c_[k] += o.c_[k];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    for (int k = 0; k < size; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  Jet& operator*=(double s) {
    for (auto& v : c_) v *= s;
    return *this;
  }
  Jet& operator*=(const Jet& o) { return *this = *this * o; }
  Jet& operator/=(const Jet& o) { return *this = *this / o; }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator-(Jet a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend Jet operator*(Jet a, double s) { return a *= s; }
  friend Jet operator*(double s, Jet a) { return a *= s; }
  friend Jet operator+(Jet a, double s) {
    a.c_[0] += s;
    return a;
  }
  friend Jet operator+(double s, Jet a) { return a + s; }
  friend Jet operator-(Jet a, double s) {
    a.c_[0] -= s;
    return a;
  }
  friend Jet operator-(double s, const Jet& a) { return -a + s; }
  friend Jet operator/(Jet a, double s) { return a *= (1.0 / s); }

  friend Jet operator*(const Jet& a, const Jet& b) {
    static constexpr auto pairs = jet_detail::product_pairs<N>();
    Jet r;
    for (const auto& t : pairs) r.c_[t[2]] += a.c_[t[0]] * b.c_[t[1]];
    return r;
  }

  friend Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }
  friend Jet operator/(double s, const Jet& b) { return s * reciprocal(b); }

  // f(u) = sum_k f^{(k)}(u0)/k! (u - u0)^k, given the scaled derivatives.
  static Jet compose(const Jet& u, const std::array<double, N + 1>& scaled) {
    Jet delta = u;
    delta.c_[0] = 0.0;
    Jet r(scaled[N]);
    for (int k = N - 1; k >= 0; --k) r = r * delta + scaled[k];
    return r;
  }

  friend Jet reciprocal(const Jet& u) {
    std::array<double, N + 1> s{};
    const double inv = 1.0 / u.c_[0];
    double pw = inv;
    for (int k = 0; k <= N; ++k, pw *= -inv) s[k] = pw;
    return compose(u, s);
  }

  friend Jet exp(const Jet& u) {
    std::array<double, N + 1> s{};
    const double e = std::exp(u.c_[0]);
    for (int k = 0; k <= N; ++k) s[k] = e / jet_detail::factorial(k);
    return compose(u, s);
  }

  friend Jet log(const Jet& u) {
    std::array<double, N + 1> s{};
    const double v = u.c_[0];
    s[0] = std::log(v);
    double pw = 1.0 / v;
    for (int k = 1; k <= N; ++k, pw /= -v) s[k] = pw / k;
    return compose(u, s);
  }

  // u^e for real e; needs u > 0 unless e is a non-negative integer.
  friend Jet pow(const Jet& u, double e) {
    std::array<double, N + 1> s{};
    const double v = u.c_[0];
    double falling = 1.0;
    for (int k = 0; k <= N; ++k) {
      s[k] = falling == 0.0
                 ? 0.0
                 : falling * std::pow(v, e - k) / jet_detail::factorial(k);
      falling *= (e - k);
    }
    return compose(u, s);
  }

  friend Jet sqrt(const Jet& u) { return pow(u, 0.5); }

  friend Jet sin(const Jet& u) {
    std::array<double, N + 1> s{};
    const double sv = std::sin(u.c_[0]), cv = std::cos(u.c_[0]);
    const double cyc[4] = {sv, cv, -sv, -cv};
    for (int k = 0; k <= N; ++k) s[k] = cyc[k % 4] / jet_detail::factorial(k);
    return compose(u, s);
  }

  friend Jet cos(const Jet& u) {
    std::array<double, N + 1> s{};
    const double sv = std::sin(u.c_[0]), cv = std::cos(u.c_[0]);
    const double cyc[4] = {cv, -sv, -cv, sv};
    for (int k = 0; k <= N; ++k) s[k] = cyc[k % 4] / jet_detail::factorial(k);
    return compose(u, s);
  }

  friend Jet sinh(const Jet& u) {
    std::array<double, N + 1> s{};
    const double sv = std::sinh(u.c_[0]), cv = std::cosh(u.c_[0]);
    for (int k = 0; k <= N; ++k)
      s[k] = (k % 2 == 0 ? sv : cv) / jet_detail::factorial(k);
    return compose(u, s);
  }

  friend Jet cosh(const Jet& u) {
    std::array<double, N + 1> s{};
    const double sv = std::sinh(u.c_[0]), cv = std::cosh(u.c_[0]);
    for (int k = 0; k <= N; ++k)
      s[k] = (k % 2 == 0 ? cv : sv) / jet_detail::factorial(k);
    return compose(u, s);
  }

  friend Jet tan(const Jet& u) { return sin(u) / cos(u); }
  friend Jet tanh(const Jet& u) { return sinh(u) / cosh(u); }

 private:
  std::array<double, size> c_;
};

// Mixed-order arithmetic truncates to the lower order.
template <int A, int B>
  requires(A != B)
auto operator*(const Jet<A>& a, const Jet<B>& b) {
  constexpr int M = A < B ? A : B;
  return a.template truncate<M>() * b.template truncate<M>();
}
template <int A, int B>
  requires(A != B)
auto operator+(const Jet<A>& a, const Jet<B>& b) {
  constexpr int M = A < B ? A : B;
  return a.template truncate<M>() + b.template truncate<M>();
}
template <int A, int B>
  requires(A != B)
auto operator-(const Jet<A>& a, const Jet<B>& b) {
  constexpr int M = A < B ? A : B;
  return a.template truncate<M>() - b.template truncate<M>();
}
template <int A, int B>
  requires(A != B)
auto operator/(const Jet<A>& a, const Jet<B>& b) {
  constexpr int M = A < B ? A : B;
  return a.template truncate<M>() / b.template truncate<M>();
}

using Jet2 = Jet<2>;

// The three coordinate jets at a point.
template <int N>
struct JetPoint {
  Jet<N> x, y, p;
  JetPoint(double x0, double y0, double p0)
      : x(Jet<N>::variable(0, x0)),
        y(Jet<N>::variable(1, y0)),
        p(Jet<N>::variable(2, p0)) {}
};

}  // namespace legweb
