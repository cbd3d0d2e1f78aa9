#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>

#include "jet_forms.hpp"
#include "legweb/numeric_webs.hpp"

namespace legweb {

using detail::JetForm2;
using detail::JetFrame;

WebMember ode_member(std::string label,
                     std::function<Jet<4>(const JetPoint<4>&)> q) {
  WebMember m;
  m.label = std::move(label);
  m.ab = [q = std::move(q)](const JetPoint<4>& v) {
    return std::array<Jet<4>, 2>{Jet<4>(1.0), q(v)};
  };
  return m;
}

WebMember fiber_member() {
  WebMember m;
  m.label = "x = const";
  m.ab = [](const JetPoint<4>&) {
    return std::array<Jet<4>, 2>{Jet<4>(0.0), Jet<4>(-1.0)};
  };
  return m;
}

bool Web3Numeric::admissible(const Point3& pt) const {
  if (!std::isfinite(pt.x) || !std::isfinite(pt.y) || !std::isfinite(pt.p))
    return false;
  if (domain && !domain(pt)) return false;
  const JetPoint<4> v(pt.x, pt.y, pt.p);
  std::array<std::array<double, 2>, 3> ab;
  for (int a = 0; a < 3; ++a) {
    auto j = members[a].ab(v);
    ab[a] = {j[0].value(), j[1].value()};
  }
  for (int a = 0; a < 3; ++a) {
    const int b = (a + 1) % 3;
    if (std::abs(ab[a][0] * ab[b][1] - ab[b][0] * ab[a][1]) <=
        transversality_margin)
      return false;
  }
  return true;
}

Web3Numeric constant_web(double q1, double q2, double q3) {
  Web3Numeric w;
  w.name = "constant";
  auto c = [](double q) {
    return [q](const JetPoint<4>&) { return Jet<4>(q); };
  };
  w.members = {ode_member("q1", c(q1)), ode_member("q2", c(q2)),
               ode_member("q3", c(q3))};
  w.box = {{-1, -1, -1}, {1, 1, 1}};
  return w;
}

Web3Numeric normal_form_web(NormalCase kind, double param) {
  // the coframe constructor validates the parameter and supplies domain/box
  const Coframe3 cf = normal_form_coframe(kind, param);
  Web3Numeric w;
  w.name = to_string(kind);
  w.domain = cf.domain;
  w.box = cf.box;
  const double c = param;
  switch (kind) {
    case NormalCase::zero_disc:
      w.members = {
          fiber_member(),
          ode_member("y'' = -T y", [c](const JetPoint<4>& v) { return -c * v.y; }),
          ode_member("y'' = -T y - 1",
                     [c](const JetPoint<4>& v) { return -c * v.y - 1.0; })};
      break;
    case NormalCase::positive_disc:
      w.members = {
          ode_member("y'' = -R p^2",
                     [c](const JetPoint<4>& v) { return -c * v.p * v.p; }),
          ode_member("y'' = R p^2",
                     [c](const JetPoint<4>& v) { return c * v.p * v.p; }),
          ode_member("y'' = -R tanh(R y) p^2", [c](const JetPoint<4>& v) {
            return -c * tanh(c * v.y) * v.p * v.p;
          })};
      break;
    case NormalCase::negative_disc:
      w.members = {
          ode_member("y'' = -tan(T y)(1 - T p^2)",
                     [c](const JetPoint<4>& v) {
                       return -(sin(c * v.y) / cos(c * v.y)) *
                              (1.0 - c * v.p * v.p);
                     }),
          ode_member("y'' = cot(T y)(1 - T p^2)",
                     [c](const JetPoint<4>& v) {
                       return (cos(c * v.y) / sin(c * v.y)) *
                              (1.0 - c * v.p * v.p);
                     }),
          ode_member("y'' = (cos - sin)/(cos + sin)(T y)(1 - T p^2)",
                     [c](const JetPoint<4>& v) {
                       Jet<4> cs = cos(c * v.y), sn = sin(c * v.y);
                       return (cs - sn) / (cs + sn) * (1.0 - c * v.p * v.p);
                     })};
      break;
  }
  return w;
}

Web3Numeric non_maximal_web() {
  Web3Numeric w;
  w.name = "non_maximal";
  w.members = {
      ode_member("y'' = 0", [](const JetPoint<4>&) { return Jet<4>(0.0); }),
      ode_member("y'' = 1", [](const JetPoint<4>&) { return Jet<4>(1.0); }),
      ode_member("y'' = y", [](const JetPoint<4>& v) { return v.y; })};
  w.domain = [](const Point3& pt) {
    return std::abs(pt.y) > 1e-3 && std::abs(pt.y - 1) > 1e-3;
  };
  w.box = {{-1, 0.3, -1}, {1, 0.7, 1}};
  return w;
}

Web3Numeric permuted(const Web3Numeric& web, std::array<int, 3> perm) {
  std::array<bool, 3> seen{};
  for (int i : perm) {
    if (i < 0 || i > 2 || seen[i])
      throw std::invalid_argument("permuted: not a permutation of {0, 1, 2}");
    seen[i] = true;
  }
  Web3Numeric w = web;
  for (int a = 0; a < 3; ++a) w.members[a] = web.members[perm[a]];
  return w;
}

std::vector<Point3> sample_points(const Web3Numeric& web, std::size_t n,
                                  std::uint64_t seed) {
  return sample_admissible(
      [&web](const Point3& pt) { return web.admissible(pt); }, web.box, n, seed);
}

namespace {

template <int M, int N>
std::array<Jet<M - 1>, 3> d_components(const JetForm<M>& w,
                                       const JetFrame<N>& fr) {
  return detail::frame_components(detail::dform(w), fr);
}

template <int N>
std::array<double, 3> values(const JetForm<N>& w) {
  return {w[0].value(), w[1].value(), w[2].value()};
}

}  // namespace

TorsionRecord torsion_extract(const Web3Numeric& web, const Point3& pt) {
  if (!web.admissible(pt))
    throw std::domain_error("torsion_extract: coincident members or outside domain");
  using detail::add;
  using detail::scale;
  using detail::sub;
  using detail::truncate_form;

  const JetPoint<4> v(pt.x, pt.y, pt.p);
  std::array<std::array<Jet<4>, 2>, 3> ab;
  for (int a = 0; a < 3; ++a) ab[a] = web.members[a].ab(v);
  // cyclic cross coefficients; with A = 1 these are q2 - q3 and q3 - q1
  const Jet<4> c0 = ab[2][0] * ab[1][1] - ab[1][0] * ab[2][1];
  const Jet<4> c1 = ab[0][0] * ab[2][1] - ab[2][0] * ab[0][1];
  const JetForm<4> th0 = detail::contact_theta<4>(v);
  const JetForm<4> th1_0{-(c0 * ab[0][1]), Jet<4>(0.0), c0 * ab[0][0]};
  const JetForm<4> th2_0{-(c1 * ab[1][1]), Jet<4>(0.0), c1 * ab[1][0]};

  // scale theta so dtheta = theta1 ^ theta2 mod theta
  const JetFrame<4> f0({th0, th1_0, th2_0});
  const Jet<3> s = d_components(th0, f0)[0];
  if (std::abs(s.value()) < 1e-12)
    throw std::domain_error("torsion_extract: degenerate section (s = 0)");
  const Jet<3> inv_s = reciprocal(s);
  const Jet<3> s1 = d_components(th1_0, f0)[0];
  const Jet<3> s2 = d_components(th2_0, f0)[0];
  const JetForm<3> th = scale(inv_s, truncate_form<3>(th0));
  const JetForm<3> th1_1 =
      sub(truncate_form<3>(th1_0), scale(s1 * inv_s, truncate_form<3>(th0)));
  const JetForm<3> th2_1 =
      sub(truncate_form<3>(th2_0), scale(s2 * inv_s, truncate_form<3>(th0)));

  // translate theta^a along theta so that dtheta^a has no theta1 ^ theta2 part
  // beyond alpha
  const JetFrame<3> f1({th, th1_1, th2_1});
  const auto dth_1 = d_components(th, f1);
  const Jet<2> t1 = (dth_1[2] - 2.0 * d_components(th1_1, f1)[0]) / 3.0;
  const Jet<2> t2 = -(dth_1[1] + 2.0 * d_components(th2_1, f1)[0]) / 3.0;
  const JetForm<2> th_2 = truncate_form<2>(th);
  const JetForm<2> th1 = add(truncate_form<2>(th1_1), scale(t1, th_2));
  const JetForm<2> th2 = add(truncate_form<2>(th2_1), scale(t2, th_2));

  const JetFrame<2> f2({th_2, th1, th2});
  const auto dth = d_components(th, f2);
  const auto dth1 = d_components(th1, f2);
  const auto dth2 = d_components(th2, f2);
  const Jet<1> a1 = (dth[1] / 2.0).truncate<1>();
  const Jet<1> a2 = (dth[2] / 2.0).truncate<1>();
  const Jet<1> R = (dth1[1] - dth2[2]) / 2.0;
  const Jet<1> a0 = -(dth1[1] + dth2[2]) / 2.0;
  const Jet<1> S = dth1[2];
  const Jet<1> T = dth2[1];

  const JetForm<1> alpha =
      add(add(scale(a0, truncate_form<1>(th_2)), scale(a1, truncate_form<1>(th1))),
          scale(a2, truncate_form<1>(th2)));
  const JetFrame<1> f3({truncate_form<1>(th_2), truncate_form<1>(th1),
                        truncate_form<1>(th2)});
  const auto dal = d_components(alpha, f3);

  TorsionRecord rec;
  rec.R = R.value();
  rec.S = S.value();
  rec.T = T.value();
  rec.N = dal[1].value();
  rec.L = dal[2].value();
  rec.alpha_frame = {a0.value(), a1.value(), a2.value()};
  rec.alpha = values(alpha);
  rec.coframe = {values(th_2), values(th1), values(th2)};
  rec.dR = R.grad();
  rec.dS = S.grad();
  rec.dT = T.grad();
  rec.closure = std::max({std::abs(dth[0].value() - 1.0),
                          std::abs(dth1[0].value() - a2.value()),
                          std::abs(dth2[0].value() + a1.value())});
  return rec;
}

std::array<double, 3> permute_torsion(std::array<int, 3> perm,
                                      const std::array<double, 3>& RST) {
  static constexpr double basis[3][2] = {{1, 0}, {0, 1}, {-1, -1}};
  const double g00 = basis[perm[0]][0], g01 = basis[perm[0]][1];
  const double g10 = basis[perm[1]][0], g11 = basis[perm[1]][1];
  const double det = g00 * g11 - g01 * g10;
  if (det == 0) throw std::invalid_argument("permute_torsion: not a permutation");
  const double R = RST[0], S = RST[1], T = RST[2];
  // G tau
  const double m00 = g00 * R + g01 * T, m01 = g00 * S - g01 * R;
  const double m10 = g10 * R + g11 * T, m11 = g10 * S - g11 * R;
  // (G tau) adj(G) / det^2, adj(G) = [[g11, -g01], [-g10, g00]]
  const double d2 = det * det;
  return {(m00 * g11 - m01 * g10) / d2, (-m00 * g01 + m01 * g00) / d2,
          (m10 * g11 - m11 * g10) / d2};
}

namespace {

struct SampleResult {
  double nl = 0, cov = 0, cov_ad = 0;
};

SampleResult rank_sample(const Web3Numeric& web, const Point3& pt,
                         const MaximalRankOptions& opt) {
  const TorsionRecord r0 = torsion_extract(web, pt);
  SampleResult out;
  out.nl = std::max(std::abs(r0.N), std::abs(r0.L));
  const Mat3 dual = detail::invert(r0.coframe);  // column k = e_k
  const std::array<double, 3> X{r0.R, r0.S, r0.T};
  const std::array<const std::array<double, 3>*, 3> grads{&r0.dR, &r0.dS, &r0.dT};
  for (int k = 0; k < 3; ++k) {
    const std::array<double, 3> e{dual[0][k], dual[1][k], dual[2][k]};
    const double len = std::sqrt(e[0] * e[0] + e[1] * e[1] + e[2] * e[2]);
    const double sh = opt.h / len;
    // fourth-order central stencil; the second-order one is truncation
    // dominated where the extracted torsions are steep
    std::array<std::array<double, 3>, 4> Xs;
    const double offs[4] = {-2, -1, 1, 2};
    for (int j = 0; j < 4; ++j) {
      const double o = offs[j] * sh;
      const TorsionRecord r =
          torsion_extract(web, {pt.x + o * e[0], pt.y + o * e[1], pt.p + o * e[2]});
      Xs[j] = {r.R, r.S, r.T};
    }
    for (int i = 0; i < 3; ++i) {
      const double shift = 2.0 * X[i] * r0.alpha_frame[k];
      const double fd =
          (Xs[0][i] - 8.0 * Xs[1][i] + 8.0 * Xs[2][i] - Xs[3][i]) / (12.0 * sh);
      const auto& g = *grads[i];
      const double ad = g[0] * e[0] + g[1] * e[1] + g[2] * e[2];
      out.cov = std::max(out.cov, std::abs(fd - shift));
      out.cov_ad = std::max(out.cov_ad, std::abs(ad - shift));
    }
  }
  return out;
}

}  // namespace

MaximalRankReport maximal_rank_report(const Web3Numeric& web,
                                      const std::vector<Point3>& samples,
                                      const MaximalRankOptions& opt, Exec exec) {
  const long n = static_cast<long>(samples.size());
  std::vector<SampleResult> res(samples.size());
  if (exec == Exec::serial) {
    for (long i = 0; i < n; ++i) res[i] = rank_sample(web, samples[i], opt);
  } else {
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 4) num_threads(worker_count())
    for (long i = 0; i < n; ++i) {
      try {
        res[i] = rank_sample(web, samples[i], opt);
      } catch (...) {
#pragma omp critical(legweb_rank_err)
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
  }
  MaximalRankReport rep;
  rep.samples = samples.size();
  for (const auto& r : res) {
    rep.max_NL = std::max(rep.max_NL, r.nl);
    rep.max_covariant = std::max(rep.max_covariant, r.cov);
    rep.max_covariant_ad = std::max(rep.max_covariant_ad, r.cov_ad);
  }
  rep.pass = rep.max_NL < opt.tol_NL && rep.max_covariant < opt.tol_RST;
  return rep;
}

bool maximal_rank_test(const Web3Numeric& web,
                       const std::vector<Point3>& samples,
                       const MaximalRankOptions& opt, Exec exec) {
  return maximal_rank_report(web, samples, opt, exec).pass;
}

}  // namespace legweb
