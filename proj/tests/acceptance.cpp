// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "legweb/abelian.hpp"
#include "legweb/numeric_webs.hpp"
#include "legweb/symbol.hpp"

using namespace legweb;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Family {
  NormalCase kind;
  double param;
};

const std::vector<Family> kFamilies{
    {NormalCase::positive_disc, 0.5}, {NormalCase::positive_disc, 1},
    {NormalCase::positive_disc, 2},   {NormalCase::zero_disc, -1},
    {NormalCase::zero_disc, 0.5},     {NormalCase::zero_disc, 1},
    {NormalCase::negative_disc, -1},  {NormalCase::negative_disc, 0.5},
    {NormalCase::negative_disc, 1}};

std::string label(const Family& f) {
  std::ostringstream s;
  s << to_string(f.kind) << "(" << f.param << ")";
  return s.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome rho_formula() {
  Outcome o;
  for (int d = 3; d <= 50; ++d) {
    const Integer closed = Integer(d - 1) * (d - 2) * (2 * d + 3) / 6;
    Integer sum = 0;
    for (int m = 2; m <= d - 1; ++m) sum += Integer(d - m) * (2 * m - 1);
    std::int64_t decomp = 0;
    for (auto [mult, dim] : rho_decomposition(d)) decomp += std::int64_t(mult) * dim;
    const Integer r(static_cast<long>(rho(d)));
    if (r != closed || r != sum || decomp != rho(d)) {
      o.pass = false;
      o.detail += " mismatch at d=" + std::to_string(d);
    }
  }
  if (o.pass) o.detail = "d = 3..50";
  return o;
}

Outcome constructed_rank() {
  Outcome o;
  const std::int64_t expected[] = {3, 11, 26, 50, 85};
  std::ostringstream s;
  for (int d = 3; d <= 7; ++d) {
    for (int which = 0; which < 2; ++which) {
      const WebSpec w = which == 0 ? WebSpec::standard(d) : WebSpec::random(d, 0);
      const auto rk = static_cast<std::int64_t>(rank_of_relations(build_relations(w)));
      if (rk != rho(d) || rk != expected[d - 3]) o.pass = false;
      if (which == 0) s << (d > 3 ? ", " : "ranks ") << rk;
      else if (rk != expected[d - 3]) s << " (random d=" << d << ": " << rk << ")";
    }
  }
  o.detail = s.str() + " for standard and seeded q";
  return o;
}

Outcome relation_axioms() {
  Outcome o;
  std::size_t total = 0, bad = 0;
  for (int d = 3; d <= 7; ++d)
    for (const WebSpec& w : {WebSpec::standard(d), WebSpec::random(d, 0)}) {
      const auto rels = build_relations(w);
      for (const auto& r : verify_relations(rels, w)) {
        ++total;
        if (!r.pass()) ++bad;
      }
    }
  o.pass = bad == 0;
  o.detail = std::to_string(total) + " relations, " + std::to_string(bad) + " failing";
  return o;
}

Outcome symbol_full_rank() {
  Outcome o;
  std::ostringstream s;
  for (int d = 3; d <= 6; ++d) {
    const WebSpec w = WebSpec::standard(d);
    const auto t0 = std::chrono::steady_clock::now();
    const auto rows = symbol_table(w);
    long vars = 0, ranks = 0;
    for (const auto& r : rows) {
      const DepthBlock b = depth_block(w, r.depth);
      const SymbolRow c = closed_form_counts(d, r.depth);
      const long nv = static_cast<long>(b.vars.size()), ne = static_cast<long>(b.eqs.size());
      if (nv != c.vars || ne != c.eqs) {
        o.pass = false;
        s << " count mismatch d=" << d << " depth=" << r.depth;
      }
      if (r.rank != std::min(nv, ne)) {
        o.pass = false;
        s << " rank deficit d=" << d << " depth=" << r.depth;
      }
      if (r.depth == 2 * d - 3 && (nv != (d - 1) * d || ne != nv || r.rank != nv)) {
        o.pass = false;
        s << " top block not square full rank at d=" << d;
      }
      vars += nv;
      ranks += r.rank;
    }
    if (vars - ranks != rho(d)) {
      o.pass = false;
      s << " nullity " << vars - ranks << " != rho at d=" << d;
    }
    const double dt = seconds_since(t0);
    if (d == 6) {
      if (dt >= 120) o.pass = false;
      s << "d = 3..6, d = 6 in " << dt << " s";
    }
  }
  o.detail = s.str();
  return o;
}

Outcome compatibility_on_solutions() {
  Outcome o;
  for (int d = 3; d <= 5; ++d) {
    const WebSpec w = WebSpec::standard(d);
    if (!relations_satisfy_symbol(w, build_relations(w), 2 * d - 3)) {
      o.pass = false;
      o.detail += " fails at d=" + std::to_string(d);
    }
  }
  if (o.pass) o.detail = "d = 3..5, depth <= 2d-3";
  return o;
}

Outcome c_coefficients() {
  Outcome o;
  const CCoeffTable t(30);
  for (int I = 0; I <= 30; ++I)
    for (int J = 0; J <= I / 2 + 1; ++J)
      if (t.at(I, J) != c_coeff(I, J)) o.pass = false;
  const Integer row4[] = {1, 6, 3, 0};
  for (int J = 0; J < 4; ++J)
    if (t.at(4, J) != row4[J] || c_coeff(4, J) != row4[J]) o.pass = false;
  o.detail = "I <= 30, c^4 = (" + t.at(4, 0).get_str() + ", " + t.at(4, 1).get_str() +
             ", " + t.at(4, 2).get_str() + ", " + t.at(4, 3).get_str() + ")";
  return o;
}

Outcome structure_equations() {
  Outcome o;
  double worst = 0;
  for (const auto& f : kFamilies) {
    const Coframe3 cf = normal_form_coframe(f.kind, f.param);
    const double r = max_structure_residual(cf, sample_points(cf, 100, 0));
    if (!(r < 1e-7)) {
      o.pass = false;
      o.detail += " " + label(f);
    }
    worst = std::max(worst, r);
  }
  std::ostringstream s;
  s << "9 parameter samples x 100 points, max residual " << worst;
  o.detail = s.str() + o.detail;
  return o;
}

Outcome torsion_sanity() {
  Outcome o;
  const Web3Numeric c = constant_web(0, 1, 2);
  double cmax = 0;
  for (const auto& pt : sample_points(c, 100, 0)) {
    const TorsionRecord t = torsion_extract(c, pt);
    for (double v : {t.R, t.S, t.T, t.N, t.L}) cmax = std::max(cmax, std::abs(v));
  }
  if (!(cmax < 1e-8)) o.pass = false;
  double nl = 0, cov = 0;
  for (const auto& f : kFamilies) {
    const Web3Numeric w = normal_form_web(f.kind, f.param);
    const MaximalRankReport r = maximal_rank_report(w, sample_points(w, 100, 0));
    if (!r.pass) {
      o.pass = false;
      o.detail += " " + label(f);
    }
    nl = std::max(nl, r.max_NL);
    cov = std::max(cov, r.max_covariant);
  }
  std::ostringstream s;
  s << "constant web max torsion " << cmax << "; families max |N|,|L| " << nl
    << ", mod-alpha " << cov;
  o.detail = s.str() + o.detail;
  return o;
}

Outcome frobenius() {
  Outcome o;
  double worst = 0, min_ratio = 1e300, min_det = 1e300;
  for (const auto& f : kFamilies) {
    const Coframe3 cf = normal_form_coframe(f.kind, f.param);
    const Path loop = centred_loop(cf.box, 0.3);
    const FrobeniusResult fine = frobenius_solve(cf, loop, 1e-3);
    worst = std::max(worst, fine.holonomy);
    min_det = std::min(min_det, std::abs(fine.det));
    bool ok = fine.holonomy < 1e-6 && std::abs(fine.det) > 0.5;
    // order check at coarse steps, where truncation error dominates roundoff
    double prev = frobenius_solve(cf, loop, 0.3).holonomy;
    for (double step : {0.15, 0.075}) {
      const FrobeniusResult r = frobenius_solve(cf, loop, step);
      const double ratio = prev / r.holonomy;
      min_ratio = std::min(min_ratio, ratio);
      ok = ok && ratio >= 8 && std::abs(r.det) > 0.5;
      prev = r.holonomy;
    }
    if (!ok) {
      o.pass = false;
      o.detail += " " + label(f);
    }
  }
  std::ostringstream s;
  s << "holonomy at 1e-3 <= " << worst << ", min halving ratio " << min_ratio
    << ", min |det| " << min_det;
  o.detail = s.str() + o.detail;
  return o;
}

Outcome darboux() {
  Outcome o;
  const DarbouxReport r = darboux_check(1, 2, darboux_samples(200, 0), 1e-9);
  o.pass = r.pass && r.samples == 200;
  std::ostringstream s;
  s << "200 samples, sum " << r.max_sum_residual << ", annihilation "
    << r.max_annihilation_residual;
  o.detail = s.str();
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double budget;  // seconds, 0 = none
  };
  const std::vector<Criterion> criteria{
      {"rho formula and decomposition", rho_formula, 1},
      {"constructed rank", constructed_rank, 60},
      {"relation axioms", relation_axioms, 0},
      {"symbol full rank and counts", symbol_full_rank, 0},
      {"compatibility on solutions", compatibility_on_solutions, 0},
      {"c-coefficients", c_coefficients, 0},
      {"normal-form structure equations", structure_equations, 0},
      {"torsion extraction sanity", torsion_sanity, 0},
      {"Frobenius integration", frobenius, 0},
      {"Darboux example", darboux, 0}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double dt = seconds_since(t0);
    if (criteria[i].budget > 0 && dt >= criteria[i].budget) {
      o.pass = false;
      o.detail += " (over time budget)";
    }
    if (!o.pass) ++failed;
    std::printf("%s  %2zu  %-34s %8.3f s  %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].name, dt, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
