#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "legweb/jet.hpp"
#include "legweb/parallel.hpp"

namespace legweb {

struct Point3 {
  double x = 0, y = 0, p = 0;
};

using Mat3 = std::array<std::array<double, 3>, 3>;

// Coefficients on (dx, dy, dp).
template <int N>
using JetForm = std::array<Jet<N>, 3>;

enum class NormalCase { zero_disc, positive_disc, negative_disc };

std::string to_string(NormalCase c);
// Throws std::invalid_argument on an unknown identifier.
NormalCase parse_normal_case(const std::string& s);

struct CoframeJets {
  JetForm<2> theta, theta1, theta2;
};

struct SampleBox {
  std::array<double, 3> lo{}, hi{};
};

// A coframe (theta, theta^1, theta^2) on an open set, here always with
// theta = dy - p dx. R, S, T are the constant torsions of the section.
struct Coframe3 {
  NormalCase kind = NormalCase::zero_disc;
  double param = 0;
  double R = 0, S = 0, T = 0;
  std::function<CoframeJets(const JetPoint<2>&)> eval;
  std::function<bool(const Point3&)> domain;
  SampleBox box;
  double det_margin = 1e-6;

  // Rows theta, theta^1, theta^2; columns dx, dy, dp.
  Mat3 matrix(const Point3& pt) const;
  bool admissible(const Point3& pt) const;
};

// zero_disc needs T != 0, positive_disc R > 0, negative_disc T != 0.
// Throws std::invalid_argument otherwise.
Coframe3 normal_form_coframe(NormalCase kind, double param);

// Rejection sampling of admissible points in the box, seeded.
std::vector<Point3> sample_admissible(
    const std::function<bool(const Point3&)>& admissible, const SampleBox& box,
    std::size_t n, std::uint64_t seed);
std::vector<Point3> sample_points(const Coframe3& cf, std::size_t n,
                                  std::uint64_t seed);

// Max-abs coefficient of the three residual 2-forms
// dtheta - theta1^theta2, dtheta1 - theta^(R theta1 + S theta2),
// dtheta2 - theta^(T theta1 - R theta2). Throws std::domain_error when pt is
// not admissible.
double structure_residual(const Coframe3& cf, const Point3& pt);
double max_structure_residual(const Coframe3& cf,
                              const std::vector<Point3>& samples,
                              Exec exec = Exec::parallel);

// One foliation of a 3-web: leaves annihilated by theta and A dp - B dx.
// The ODE y'' = q is (A, B) = (1, q); the fibers x = const are (0, -1).
struct WebMember {
  std::string label;
  std::function<std::array<Jet<4>, 2>(const JetPoint<4>&)> ab;
};

WebMember ode_member(std::string label,
                     std::function<Jet<4>(const JetPoint<4>&)> q);
WebMember fiber_member();

struct Web3Numeric {
  std::string name;
  std::array<WebMember, 3> members;
  std::function<bool(const Point3&)> domain;
  SampleBox box;
  double transversality_margin = 1e-8;

  // Domain predicate plus pairwise transversality at pt.
  bool admissible(const Point3& pt) const;
};

Web3Numeric constant_web(double q1, double q2, double q3);
// The web whose adapted coframe is normal_form_coframe(kind, param).
Web3Numeric normal_form_web(NormalCase kind, double param);
// q = (0, 1, y): not of maximal rank (N, L do not vanish).
Web3Numeric non_maximal_web();
Web3Numeric permuted(const Web3Numeric& web, std::array<int, 3> perm);
std::vector<Point3> sample_points(const Web3Numeric& web, std::size_t n,
                                  std::uint64_t seed);

// Torsion of the section fixed by: theta^a_0 = A^a dp - B^a dx scaled by
// cyclic cross coefficients so theta^1 + theta^2 + theta^3 = 0; then
// theta -> theta / s, theta^a -> theta^a - (s^a / s) theta; then
// theta^a -> theta^a + t^a theta with t^a chosen so the structure equations
// close; alpha, R, S, T from dtheta, dtheta^a and N, L from dalpha.
struct TorsionRecord {
  static constexpr const char* section = "scaled-translated-v1";
  double R = 0, S = 0, T = 0, N = 0, L = 0;
  std::array<double, 3> alpha_frame{};  // on (theta, theta^1, theta^2)
  std::array<double, 3> alpha{};        // on (dx, dy, dp)
  Mat3 coframe{};                       // rows theta, theta^1, theta^2
  // dR, dS, dT on (dx, dy, dp) from automatic differentiation
  std::array<double, 3> dR{}, dS{}, dT{};
  // largest violation of the closing conditions, expected ~ roundoff
  double closure = 0;
};

// Throws std::domain_error on coincident members or a degenerate section.
TorsionRecord torsion_extract(const Web3Numeric& web, const Point3& pt);

// (R, S, T) of the permuted web, from the torsion matrix [[R, S], [T, -R]]
// by tau -> G tau G^{-1} / det G, where G expresses the permuted
// (theta^1, theta^2) in the original ones (theta^3 = -theta^1 - theta^2).
std::array<double, 3> permute_torsion(std::array<int, 3> perm,
                                      const std::array<double, 3>& RST);

struct MaximalRankOptions {
  double h = 1e-4;
  double tol_NL = 1e-5;
  double tol_RST = 1e-4;
};

struct MaximalRankReport {
  std::size_t samples = 0;
  double max_NL = 0;
  // max over R, S, T and frame directions of |dX(e_k) - 2 X alpha(e_k)|,
  // with dX from fourth-order central differences (step h) of torsion_extract
  double max_covariant = 0;
  // the same quantity from automatic differentiation
  double max_covariant_ad = 0;
  bool pass = false;
};

MaximalRankReport maximal_rank_report(const Web3Numeric& web,
                                      const std::vector<Point3>& samples,
                                      const MaximalRankOptions& opt = {},
                                      Exec exec = Exec::parallel);
bool maximal_rank_test(const Web3Numeric& web,
                       const std::vector<Point3>& samples,
                       const MaximalRankOptions& opt = {},
                       Exec exec = Exec::parallel);

using Path = std::vector<Point3>;

// Closed hexagonal loop through base with edges of length `size` along
// x, y, p, -x, -y, -p.
Path loop_path(const Point3& base, double size);

// loop_path of the given size centred in the box
Path centred_loop(const SampleBox& box, double size = 0.3);

struct FrobeniusResult {
  Mat3 endpoint{};       // row k: (f, g1, g2) started from e_k
  double holonomy = 0;   // closed paths: max |endpoint - identity|
  double det = 0;
  std::size_t steps = 0;
};

// RK4 with fixed step along the polyline `path` (path.front() is the
// basepoint) for (f, g1, g2) with
//   df  = f alpha - g2 theta1 + g1 theta2
//   dg1 = 2 g1 alpha + R f theta1 + S f theta2 + (-L f + S g2 + R g1) theta
//   dg2 = 2 g2 alpha + T f theta1 - R f theta2 + (N f - R g2 + T g1) theta.
// For a normal-form coframe alpha = 0 and N = L = 0. Throws
// std::domain_error if the path leaves the admissible set.
FrobeniusResult frobenius_solve(const Coframe3& cf, const Path& path,
                                double step);
// Same system with alpha, R, S, T, N, L taken pointwise from torsion_extract.
FrobeniusResult frobenius_solve(const Web3Numeric& web, const Path& path,
                                double step);

struct DarbouxReport {
  std::size_t samples = 0;
  double max_sum_residual = 0;           // relative
  double max_annihilation_residual = 0;  // relative
  bool pass = false;
};

// The three explicit relation triples for the geodesic webs with constants
// D_plus and D; requires D != D_plus (std::invalid_argument) and |p| >= 1e-3
// at every sample (std::domain_error).
DarbouxReport darboux_check(double D_plus, double D,
                            const std::vector<Point3>& samples,
                            double tol = 1e-9, Exec exec = Exec::parallel);
// x, y in [-1, 1], p in [0.5, 2]
std::vector<Point3> darboux_samples(std::size_t n, std::uint64_t seed);

}  // namespace legweb
