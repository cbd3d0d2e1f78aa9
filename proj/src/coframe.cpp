#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "jet_forms.hpp"
#include "legweb/numeric_webs.hpp"

namespace legweb {

using detail::JetForm2;

std::string to_string(NormalCase c) {
  switch (c) {
    case NormalCase::zero_disc: return "zero_disc";
    case NormalCase::positive_disc: return "positive_disc";
    case NormalCase::negative_disc: return "negative_disc";
  }
  return "unknown";
}

NormalCase parse_normal_case(const std::string& s) {
  if (s == "zero_disc") return NormalCase::zero_disc;
  if (s == "positive_disc") return NormalCase::positive_disc;
  if (s == "negative_disc") return NormalCase::negative_disc;
  throw std::invalid_argument("unknown normal-form case '" + s + "'");
}

Mat3 Coframe3::matrix(const Point3& pt) const {
  CoframeJets f = eval(JetPoint<2>(pt.x, pt.y, pt.p));
  Mat3 m{};
  const std::array<const JetForm<2>*, 3> rows{&f.theta, &f.theta1, &f.theta2};
  for (int a = 0; a < 3; ++a)
    for (int k = 0; k < 3; ++k) m[a][k] = (*rows[a])[k].value();
  return m;
}

bool Coframe3::admissible(const Point3& pt) const {
  if (!std::isfinite(pt.x) || !std::isfinite(pt.y) || !std::isfinite(pt.p))
    return false;
  if (domain && !domain(pt)) return false;
  return std::abs(detail::det3(matrix(pt))) > det_margin;
}

namespace {

constexpr double kDomainMargin = 1e-6;

template <int N>
std::array<JetForm<N>, 2> normal_pair(NormalCase kind, double c,
                                      const JetPoint<N>& v) {
  const Jet<N> zero(0.0), one(1.0);
  switch (kind) {
    case NormalCase::zero_disc:
      return {JetForm<N>{one, zero, zero}, JetForm<N>{c * v.y, zero, one}};
    case NormalCase::positive_disc: {
      const double s = std::sqrt(2.0 * c);
      Jet<N> k1 = exp(c * v.y) / (s * v.p);
      Jet<N> k2 = exp(-c * v.y) / (s * v.p);
      Jet<N> rp2 = c * v.p * v.p;
      return {JetForm<N>{k1 * rp2, zero, k1}, JetForm<N>{-(k2 * rp2), zero, k2}};
    }
    case NormalCase::negative_disc: {
      Jet<N> w = 1.0 - c * v.p * v.p;
      Jet<N> rw = sqrt(w);
      Jet<N> cs = cos(c * v.y), sn = sin(c * v.y);
      // cos/sqrt(w) (dp + tan w dx) and sin/sqrt(w) (dp - cot w dx)
      return {JetForm<N>{sn * rw, zero, cs / rw},
              JetForm<N>{-(cs * rw), zero, sn / rw}};
    }
  }
  throw std::logic_error("unreachable normal case");
}

}  // namespace

Coframe3 normal_form_coframe(NormalCase kind, double param) {
  if (!std::isfinite(param))
    throw std::invalid_argument("normal-form parameter must be finite");
  Coframe3 cf;
  cf.kind = kind;
  cf.param = param;
  switch (kind) {
    case NormalCase::zero_disc:
      if (param == 0) throw std::invalid_argument("zero_disc requires T != 0");
      cf.T = param;
      cf.box = {{-1, -1, -1}, {1, 1, 1}};
      break;
    case NormalCase::positive_disc:
      if (!(param > 0))
        throw std::invalid_argument("positive_disc requires R > 0");
      cf.R = param;
      cf.domain = [](const Point3& pt) { return std::abs(pt.p) > kDomainMargin; };
      cf.box = {{-1, -1, 0.5}, {1, 1, 2}};
      break;
    case NormalCase::negative_disc: {
      if (param == 0) throw std::invalid_argument("negative_disc requires T != 0");
      const double T = param;
      cf.S = -T;
      cf.T = T;
      cf.domain = [T](const Point3& pt) {
        const double c = std::cos(T * pt.y), s = std::sin(T * pt.y);
        return 1.0 - T * pt.p * pt.p > kDomainMargin &&
               std::abs(c) > kDomainMargin && std::abs(s) > kDomainMargin &&
               std::abs(c + s) > kDomainMargin;
      };
      // T y in [0.1, 1.4] keeps away from the zeros of cos, sin, cos + sin
      const double y0 = 0.1 / T, y1 = 1.4 / T;
      const double pmax = T > 0 ? 0.9 / std::sqrt(T) : 1.0;
      cf.box = {{-1, std::min(y0, y1), -pmax}, {1, std::max(y0, y1), pmax}};
      break;
    }
  }
  cf.eval = [kind, param](const JetPoint<2>& v) {
    auto pair = normal_pair<2>(kind, param, v);
    return CoframeJets{detail::contact_theta<2>(v), pair[0], pair[1]};
  };
  return cf;
}

std::vector<Point3> sample_admissible(
    const std::function<bool(const Point3&)>& admissible, const SampleBox& box,
    std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::array<std::uniform_real_distribution<double>, 3> u{
      std::uniform_real_distribution<double>(box.lo[0], box.hi[0]),
      std::uniform_real_distribution<double>(box.lo[1], box.hi[1]),
      std::uniform_real_distribution<double>(box.lo[2], box.hi[2])};
  std::vector<Point3> out;
  std::size_t attempts = 0;
  while (out.size() < n) {
    if (++attempts > 1000 * (n + 10))
      throw std::runtime_error("sampling box has too few admissible points");
    Point3 pt{u[0](rng), u[1](rng), u[2](rng)};
    if (admissible(pt)) out.push_back(pt);
  }
  return out;
}

std::vector<Point3> sample_points(const Coframe3& cf, std::size_t n,
                                  std::uint64_t seed) {
  return sample_admissible([&cf](const Point3& pt) { return cf.admissible(pt); },
                           cf.box, n, seed);
}

double structure_residual(const Coframe3& cf, const Point3& pt) {
  if (!cf.admissible(pt))
    throw std::domain_error("structure_residual: point outside the domain");
  CoframeJets f = cf.eval(JetPoint<2>(pt.x, pt.y, pt.p));
  using detail::wedge;
  const JetForm2<1> dth = detail::dform(f.theta);
  const JetForm2<1> dth1 = detail::dform(f.theta1);
  const JetForm2<1> dth2 = detail::dform(f.theta2);
  const JetForm<2> m1 =
      detail::add(detail::scale(Jet<2>(cf.R), f.theta1),
                  detail::scale(Jet<2>(cf.S), f.theta2));
  const JetForm<2> m2 =
      detail::sub(detail::scale(Jet<2>(cf.T), f.theta1),
                  detail::scale(Jet<2>(cf.R), f.theta2));
  const std::array<JetForm2<1>, 3> lhs{dth, dth1, dth2};
  const std::array<JetForm2<2>, 3> rhs{wedge(f.theta1, f.theta2),
                                       wedge(f.theta, m1), wedge(f.theta, m2)};
  double worst = 0;
  for (int e = 0; e < 3; ++e)
    for (int k = 0; k < 3; ++k)
      worst = std::max(worst, std::abs(lhs[e][k].value() - rhs[e][k].value()));
  return worst;
}

double max_structure_residual(const Coframe3& cf,
                              const std::vector<Point3>& samples, Exec exec) {
  const long n = static_cast<long>(samples.size());
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> r(samples.size());
  auto one = [&](long i) {
    try {
      r[i] = structure_residual(cf, samples[i]);
    } catch (const std::domain_error&) {
      r[i] = nan;
    }
  };
  if (exec == Exec::serial) {
    for (long i = 0; i < n; ++i) one(i);
  } else {
#pragma omp parallel for schedule(static) num_threads(worker_count())
    for (long i = 0; i < n; ++i) one(i);
  }
  double worst = 0;
  for (double v : r) {
    if (std::isnan(v)) return nan;
    worst = std::max(worst, v);
  }
  return worst;
}

}  // namespace legweb
