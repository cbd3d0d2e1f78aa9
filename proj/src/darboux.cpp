#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "legweb/numeric_webs.hpp"

namespace legweb {

namespace {

using J = Jet<1>;

struct DarbouxSample {
  double sum = 0, annihilation = 0;
};

// |V f| relative to the sum of the absolute values of its three terms
double annihilation(const J& f, double p, double coef_p) {
  const auto g = f.grad();
  const double terms[3] = {g[0], p * g[1], coef_p * g[2]};
  const double scale = std::abs(terms[0]) + std::abs(terms[1]) + std::abs(terms[2]);
  const double v = terms[0] + terms[1] + terms[2];
  return scale == 0 ? std::abs(v) : std::abs(v) / scale;
}

DarbouxSample check_sample(double Dp, double D, const Point3& pt) {
  if (std::abs(pt.p) < 1e-3)
    throw std::domain_error("darboux_check: |p| must be at least 1e-3");
  const JetPoint<1> v(pt.x, pt.y, pt.p);
  const J ex = exp(v.x), emx = exp(-v.x);
  const J p2 = v.p * v.p;
  const J K = 2.0 * (D - Dp) * p2;
  const std::array<J, 3> ys{v.y * v.y, v.y, J(1.0)};
  // polynomial parts of the numerators, shared by both leading components
  const std::array<J, 3> poly{4.0 * p2 * ex + ex * v.y * v.y - 4.0 * v.p * ex * v.y,
                              -2.0 * v.p * ex + ex * v.y, ex};
  // V_+/- = d/dx + p d/dy + (p/2 + D e^{-2x} p^3) d/dp
  const double e2 = std::exp(-2.0 * pt.x), p3 = pt.p * pt.p * pt.p;
  const double cp_plus = pt.p / 2 + Dp * e2 * p3;
  const double cp_minus = pt.p / 2 + D * e2 * p3;
  DarbouxSample out;
  for (int t = 0; t < 3; ++t) {
    const J a = (-2.0 * Dp * emx * ys[t] * p2 + poly[t]) / K;
    const J b = (2.0 * D * emx * ys[t] * p2 - poly[t]) / K;
    const J c = -(emx * ys[t]);
    const double scale = std::abs(a.value()) + std::abs(b.value()) + std::abs(c.value());
    out.sum = std::max(out.sum, std::abs(a.value() + b.value() + c.value()) / scale);
    out.annihilation = std::max({out.annihilation, annihilation(a, pt.p, cp_plus),
                                 annihilation(b, pt.p, cp_minus),
                                 std::abs(c.grad()[2])});
  }
  return out;
}

}  // namespace

DarbouxReport darboux_check(double D_plus, double D,
                            const std::vector<Point3>& samples, double tol,
                            Exec exec) {
  if (D == D_plus) throw std::invalid_argument("darboux_check: requires D != D_plus");
  for (const auto& pt : samples)
    if (std::abs(pt.p) < 1e-3)
      throw std::domain_error("darboux_check: |p| must be at least 1e-3");
  const long n = static_cast<long>(samples.size());
  std::vector<DarbouxSample> res(samples.size());
  if (exec == Exec::serial) {
    for (long i = 0; i < n; ++i) res[i] = check_sample(D_plus, D, samples[i]);
  } else {
#pragma omp parallel for schedule(static) num_threads(worker_count())
    for (long i = 0; i < n; ++i) res[i] = check_sample(D_plus, D, samples[i]);
  }
  DarbouxReport rep;
  rep.samples = samples.size();
  for (const auto& r : res) {
    rep.max_sum_residual = std::max(rep.max_sum_residual, r.sum);
    rep.max_annihilation_residual = std::max(rep.max_annihilation_residual, r.annihilation);
  }
  rep.pass = rep.max_sum_residual < tol && rep.max_annihilation_residual < tol;
  return rep;
}

std::vector<Point3> darboux_samples(std::size_t n, std::uint64_t seed) {
  return sample_admissible([](const Point3&) { return true; },
                           SampleBox{{-1, -1, 0.5}, {1, 1, 2}}, n, seed);
}

}  // namespace legweb
