#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "jet_forms.hpp"
#include "legweb/numeric_webs.hpp"

namespace legweb {

Path loop_path(const Point3& base, double size) {
  Path p{base};
  auto step = [&](double dx, double dy, double dp) {
    Point3 q = p.back();
    q.x += dx;
    q.y += dy;
    q.p += dp;
    p.push_back(q);
  };
  step(size, 0, 0);
  step(0, size, 0);
  step(0, 0, size);
  step(-size, 0, 0);
  step(0, -size, 0);
  step(0, 0, -size);
  p.back() = base;  // exact closure
  return p;
}

Path centred_loop(const SampleBox& box, double size) {
  const Point3 base{(box.lo[0] + box.hi[0] - size) / 2,
                    (box.lo[1] + box.hi[1] - size) / 2,
                    (box.lo[2] + box.hi[2] - size) / 2};
  return loop_path(base, size);
}

namespace {

// Pointwise data of the linear system: the coframe and the torsions.
struct FrameData {
  Mat3 coframe{};  // rows theta, theta^1, theta^2
  std::array<double, 3> alpha{};
  double R = 0, S = 0, T = 0, N = 0, L = 0;
};

using Evaluator = std::function<FrameData(const Point3&)>;

// Connection matrix Phi(v) with dF = F Phi for the row vector F = (f, g1, g2).
Mat3 connection(const FrameData& d, const std::array<double, 3>& v) {
  auto on = [&v](const std::array<double, 3>& w) {
    return w[0] * v[0] + w[1] * v[1] + w[2] * v[2];
  };
  const double th = on(d.coframe[0]), t1 = on(d.coframe[1]),
               t2 = on(d.coframe[2]), al = on(d.alpha);
  return Mat3{{{al, d.R * t1 + d.S * t2 - d.L * th, d.T * t1 - d.R * t2 + d.N * th},
               {t2, 2 * al + d.R * th, d.T * th},
               {-t1, d.S * th, 2 * al - d.R * th}}};
}

Mat3 mul(const Mat3& a, const Mat3& b) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      for (int j = 0; j < 3; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

Mat3 axpy(const Mat3& y, double a, const Mat3& x) {
  Mat3 r = y;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] += a * x[i][j];
  return r;
}

FrobeniusResult integrate(const Evaluator& eval, const Path& path, double step) {
  if (!(step > 0)) throw std::invalid_argument("frobenius_solve: step must be > 0");
  if (path.size() < 2) throw std::invalid_argument("frobenius_solve: path needs two points");
  Mat3 F{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  FrobeniusResult out;
  for (std::size_t s = 0; s + 1 < path.size(); ++s) {
    const Point3& a = path[s];
    const Point3& b = path[s + 1];
    const std::array<double, 3> seg{b.x - a.x, b.y - a.y, b.p - a.p};
    const double len = std::sqrt(seg[0] * seg[0] + seg[1] * seg[1] + seg[2] * seg[2]);
    if (len == 0) continue;
    const auto n = static_cast<std::size_t>(std::ceil(len / step - 1e-12));
    const std::array<double, 3> v{seg[0] / n, seg[1] / n, seg[2] / n};
    auto at = [&](double t) {
      return Point3{a.x + t * seg[0], a.y + t * seg[1], a.p + t * seg[2]};
    };
    auto rhs = [&](double t, const Mat3& Y) {
      return mul(Y, connection(eval(at(t)), v));
    };
    for (std::size_t i = 0; i < n; ++i) {
      const double t0 = static_cast<double>(i) / n;
      const double tm = (i + 0.5) / n, t1 = static_cast<double>(i + 1) / n;
      const Mat3 k1 = rhs(t0, F);
      const Mat3 k2 = rhs(tm, axpy(F, 0.5, k1));
      const Mat3 k3 = rhs(tm, axpy(F, 0.5, k2));
      const Mat3 k4 = rhs(t1, axpy(F, 1.0, k3));
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
          F[r][c] += (k1[r][c] + 2 * k2[r][c] + 2 * k3[r][c] + k4[r][c]) / 6.0;
      ++out.steps;
    }
  }
  out.endpoint = F;
  out.det = detail::det3(F);
  const Point3& p0 = path.front();
  const Point3& p1 = path.back();
  if (p0.x == p1.x && p0.y == p1.y && p0.p == p1.p) {
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c)
        out.holonomy = std::max(out.holonomy, std::abs(F[r][c] - (r == c ? 1.0 : 0.0)));
  }
  return out;
}

}  // namespace

FrobeniusResult frobenius_solve(const Coframe3& cf, const Path& path,
                                double step) {
  return integrate(
      [&cf](const Point3& pt) {
        if (!cf.admissible(pt))
          throw std::domain_error("frobenius_solve: path leaves the admissible set");
        FrameData d;
        d.coframe = cf.matrix(pt);
        d.R = cf.R;
        d.S = cf.S;
        d.T = cf.T;
        return d;
      },
      path, step);
}

FrobeniusResult frobenius_solve(const Web3Numeric& web, const Path& path,
                                double step) {
  return integrate(
      [&web](const Point3& pt) {
        const TorsionRecord r = torsion_extract(web, pt);
        FrameData d;
        d.coframe = r.coframe;
        d.alpha = r.alpha;
        d.R = r.R;
        d.S = r.S;
        d.T = r.T;
        d.N = r.N;
        d.L = r.L;
        return d;
      },
      path, step);
}

}  // namespace legweb
