// legweb: command-line front end for the exact and numeric checks.
// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage or I/O.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "legweb/abelian.hpp"
#include "legweb/json_io.hpp"
#include "legweb/numeric_webs.hpp"
#include "legweb/report.hpp"
#include "legweb/symbol.hpp"

using namespace legweb;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Ctx {
  std::vector<std::string> argv;
  bool json = false;
};

int finish(const Ctx& ctx, RunReport& rep, const std::string& text) {
  if (ctx.json)
    std::cout << rep.to_json().dump(2) << '\n';
  else
    std::cout << text << (rep.pass() ? "PASS\n" : "FAIL\n");
  return rep.pass() ? kPass : kFail;
}

WebSpec make_web(std::optional<int> d, const std::string& q_list,
                 std::optional<std::uint64_t> seed) {
  WebSpec w;
  if (!q_list.empty()) {
    w.q = parse_rational_list(q_list);
    if (d && *d != static_cast<int>(w.d()))
      throw UsageError("--d " + std::to_string(*d) + " does not match " +
                       std::to_string(w.d()) + " values in --q");
  } else {
    if (!d) throw UsageError("give --d or --q");
    if (*d < 3) throw UsageError("d must be at least 3");
    w = seed ? WebSpec::random(*d, *seed) : WebSpec::standard(*d);
  }
  w.validate();
  return w;
}

std::string q_text(const WebSpec& w) {
  std::string s;
  for (std::size_t a = 0; a < w.d(); ++a) s += (a ? "," : "") + to_string(w.q[a]);
  return s;
}

int cmd_rho(const Ctx& ctx, int d) {
  if (d < 3) throw UsageError("rho requires d >= 3");
  RunReport rep(ctx.argv, "rho " + std::to_string(d));
  const std::int64_t r = rho(d);
  std::int64_t sum = 0;
  Json parts = Json::array();
  std::ostringstream text;
  text << "rho(" << d << ") = " << r << " =";
  bool first = true;
  for (auto [mult, dim] : rho_decomposition(d)) {
    sum += static_cast<std::int64_t>(mult) * dim;
    parts.push_back({{"multiplicity", exact(mult)}, {"dimension", exact(dim)}});
    text << (first ? " " : " + ") << mult << "*" << dim;
    first = false;
  }
  text << "\n";
  rep.set("d", d);
  rep.set("rho", exact(r));
  rep.set("decomposition", parts);
  rep.add({"decomposition sums to rho", sum == r, {{"sum", exact(sum)}}});
  return finish(ctx, rep, text.str());
}

int cmd_construct(const Ctx& ctx, std::optional<int> d, const std::string& q,
                  std::optional<std::uint64_t> seed, const std::string& out) {
  const WebSpec web = make_web(d, q, seed);
  RunReport rep(ctx.argv, "construct " + q_text(web));
  RelationsFile f;
  f.web = web;
  f.complement = vandermonde_complement(web);
  f.relations = build_relations(web, f.complement);
  write_relations_file(out, f);
  const auto want = rho(static_cast<int>(web.d()));
  rep.set("web", to_json(web));
  rep.set("out", out);
  rep.add({"relation count is rho",
           static_cast<std::int64_t>(f.relations.size()) == want,
           {{"relations", exact(static_cast<long long>(f.relations.size()))},
            {"rho", exact(want)}}});
  std::ostringstream text;
  text << "wrote " << f.relations.size() << " relations for q = (" << q_text(web)
       << ") to " << out << "\n";
  return finish(ctx, rep, text.str());
}

int cmd_verify(const Ctx& ctx, const std::string& path) {
  std::string bytes;
  {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open '" + path + "'");
    bytes.assign(std::istreambuf_iterator<char>(in), {});
  }
  RelationsFile f = read_relations_file(path);
  RunReport rep(ctx.argv, bytes);
  const int d = static_cast<int>(f.web.d());
  for (const auto& r : f.relations)
    if (r.components.size() != f.web.d())
      throw FormatError("relation (" + std::to_string(r.m) + ", " + std::to_string(r.j) +
                        ", " + std::to_string(r.mu) + ") has the wrong number of components");
  auto reports = verify_relations(f.relations, f.web);
  std::size_t bad = 0;
  Json failed = Json::array();
  for (std::size_t i = 0; i < reports.size(); ++i)
    if (!reports[i].pass()) {
      ++bad;
      const auto& r = f.relations[i];
      failed.push_back({r.m, r.j, r.mu});
    }
  rep.set("web", to_json(f.web));
  rep.add({"relation axioms", bad == 0,
           {{"relations", exact(static_cast<long long>(reports.size()))},
            {"failed", failed}}});
  const auto rk = rank_of_relations(f.relations);
  rep.add({"rank equals rho", static_cast<std::int64_t>(rk) == rho(d),
           {{"rank", exact(static_cast<long long>(rk))}, {"rho", exact(rho(d))}}});
  const bool sym = relations_satisfy_symbol(f.web, f.relations, 2 * d - 3);
  rep.add({"compatibility equations", sym, {{"depth_max", exact(2LL * d - 3)}}});
  std::ostringstream text;
  text << "relations: " << reports.size() << ", failing axioms: " << bad << "\n"
       << "rank: " << rk << " (rho = " << rho(d) << ")\n"
       << "compatibility equations up to depth " << 2 * d - 3 << ": "
       << (sym ? "satisfied" : "violated") << "\n";
  return finish(ctx, rep, text.str());
}

int cmd_symbol(const Ctx& ctx, std::optional<int> d, const std::string& q,
               std::optional<int> depth) {
  const WebSpec web = make_web(d, q, std::nullopt);
  const int dd = static_cast<int>(web.d());
  RunReport rep(ctx.argv, "symbol " + q_text(web));
  std::vector<SymbolRow> rows;
  if (depth) {
    if (*depth < 1) throw UsageError("--depth must be at least 1");
    DepthBlock b = depth_block(web, *depth);
    SymbolRow r;
    r.depth = *depth;
    r.vars = static_cast<long>(b.vars.size());
    r.eqs = static_cast<long>(b.eqs.size());
    r.rank = static_cast<long>(rank(b.matrix));
    rows.push_back(r);
  } else {
    rows = symbol_table(web);
  }
  std::ostringstream text;
  text << "depth  vars  eqs  rank  full\n";
  Json table = Json::array();
  bool all_full = true;
  for (const auto& r : rows) {
    const bool full = r.rank == std::min(r.vars, r.eqs);
    all_full = all_full && full;
    table.push_back({{"depth", r.depth}, {"vars", exact(r.vars)}, {"eqs", exact(r.eqs)},
                     {"rank", exact(r.rank)}, {"full_rank", full}});
    text << std::setw(5) << r.depth << std::setw(6) << r.vars << std::setw(5) << r.eqs
         << std::setw(6) << r.rank << "  " << (full ? "true" : "false") << "\n";
  }
  rep.set("web", to_json(web));
  rep.set("table", table);
  rep.add({"full rank at every depth", all_full, Json::object()});
  if (!depth) {
    long nullity = 0;
    for (const auto& r : rows) nullity += r.vars - r.rank;
    const bool ts = total_sum_check(dd);
    rep.add({"total-sum identity", ts, {{"rho", exact(rho(dd))}}});
    rep.add({"total nullity equals rho", nullity == rho(dd),
             {{"nullity", exact(nullity)}, {"rho", exact(rho(dd))}}});
    text << "total-sum identity: " << (ts ? "true" : "false") << "\n"
         << "sum vars - sum ranks = " << nullity << " (rho = " << rho(dd) << ")\n";
  }
  return finish(ctx, rep, text.str());
}

int cmd_table(const Ctx& ctx, int d) {
  if (d < 3) throw UsageError("table requires d >= 3");
  RunReport rep(ctx.argv, "table " + std::to_string(d));
  std::ostringstream text;
  text << "depth  vars  eqs\n";
  bool agree = true;
  Json table = Json::array();
  for (const auto& r : counting_table(d)) {
    const SymbolRow c = closed_form_counts(d, r.depth);
    agree = agree && c.vars == r.vars && c.eqs == r.eqs;
    table.push_back({{"depth", r.depth}, {"vars", exact(r.vars)}, {"eqs", exact(r.eqs)}});
    text << std::setw(5) << r.depth << std::setw(6) << r.vars << std::setw(5) << r.eqs << "\n";
  }
  rep.set("table", table);
  rep.add({"enumeration matches closed form", agree, Json::object()});
  const bool ts = total_sum_check(d);
  rep.add({"total-sum identity", ts, {{"rho", exact(rho(d))}}});
  text << "total-sum identity (rho = " << rho(d) << "): " << (ts ? "true" : "false") << "\n";
  return finish(ctx, rep, text.str());
}

int cmd_normal_form(const Ctx& ctx, const std::string& kind_name, std::optional<double> R,
                    std::optional<double> T, std::size_t samples, std::uint64_t seed) {
  NormalCase kind;
  try {
    kind = parse_normal_case(kind_name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const bool positive = kind == NormalCase::positive_disc;
  const std::optional<double> param = positive ? R : T;
  if (!param)
    throw UsageError(std::string(positive ? "--R" : "--T") + " is required for " + kind_name);
  const Coframe3 cf = normal_form_coframe(kind, *param);  // invalid_argument -> usage
  const Web3Numeric web = normal_form_web(kind, *param);
  std::ostringstream input;
  input << kind_name << " " << *param << " " << samples << " " << seed;
  RunReport rep(ctx.argv, input.str());
  rep.set("case", kind_name);
  rep.set("params", {{positive ? "R" : "T", *param}});
  rep.set("samples", samples);

  const auto pts = sample_points(cf, samples, seed);
  const double res = max_structure_residual(cf, pts);
  rep.set("max_residual", res);
  rep.add({"structure equations", res < 1e-7, {{"max_residual", res}, {"tol", 1e-7}}});

  const auto wpts = sample_points(web, samples, seed);
  const MaximalRankReport mr = maximal_rank_report(web, wpts);
  rep.add({"maximal rank", mr.pass,
           {{"max_NL", mr.max_NL},
            {"max_covariant", mr.max_covariant},
            {"max_covariant_ad", mr.max_covariant_ad}}});

  const FrobeniusResult fr = frobenius_solve(cf, centred_loop(cf.box), 1e-3);
  const bool fok = fr.holonomy < 1e-6 && std::abs(fr.det) > 0.5;
  rep.add({"Frobenius loop", fok,
           {{"holonomy", fr.holonomy}, {"det", fr.det}, {"step", 1e-3}}});

  std::ostringstream text;
  text << kind_name << " (" << (positive ? "R" : "T") << " = " << *param << "), "
       << samples << " samples, seed " << seed << "\n"
       << "structure residual: " << res << "\n"
       << "max |N|, |L|: " << mr.max_NL << ", mod-alpha residual: " << mr.max_covariant
       << "\n"
       << "loop holonomy: " << fr.holonomy << ", det: " << fr.det << "\n";
  return finish(ctx, rep, text.str());
}

int cmd_darboux(const Ctx& ctx, double Dp, double D, std::size_t samples,
                std::uint64_t seed) {
  if (Dp == D) throw UsageError("darboux requires D != Dplus");
  std::ostringstream input;
  input << Dp << " " << D << " " << samples << " " << seed;
  RunReport rep(ctx.argv, input.str());
  const DarbouxReport dr = darboux_check(Dp, D, darboux_samples(samples, seed));
  rep.set("case", "darboux");
  rep.set("params", {{"Dplus", Dp}, {"D", D}});
  rep.set("samples", samples);
  rep.set("max_residual", std::max(dr.max_sum_residual, dr.max_annihilation_residual));
  rep.add({"triples sum to zero", dr.max_sum_residual < 1e-9,
           {{"max_relative", dr.max_sum_residual}}});
  rep.add({"components annihilated", dr.max_annihilation_residual < 1e-9,
           {{"max_relative", dr.max_annihilation_residual}}});
  std::ostringstream text;
  text << "Dplus = " << Dp << ", D = " << D << ", " << samples << " samples\n"
       << "sum residual: " << dr.max_sum_residual << "\n"
       << "annihilation residual: " << dr.max_annihilation_residual << "\n";
  return finish(ctx, rep, text.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Legendrian web rank checks"};
  app.require_subcommand(1);
  app.fallthrough();  // --json may follow the subcommand
  Ctx ctx;
  ctx.argv.assign(argv, argv + argc);
  app.add_flag("--json", ctx.json, "print the JSON report");

  int rho_d = 0;
  auto* c_rho = app.add_subcommand("rho", "rho_d and its decomposition");
  c_rho->add_option("d", rho_d, "number of foliations")->required();

  std::optional<int> d;
  std::string q, out, path, kind;
  std::optional<std::uint64_t> seed;
  std::optional<int> depth;
  auto* c_con = app.add_subcommand("construct", "build the rho_d relations");
  c_con->add_option("--d", d, "number of foliations");
  c_con->add_option("--q", q, "comma-separated distinct rationals");
  c_con->add_option("--seed", seed, "draw random q values with this seed");
  c_con->add_option("--out", out, "output JSON path")->required();

  auto* c_ver = app.add_subcommand("verify", "exact checks on a relations file");
  c_ver->add_option("path", path, "relations JSON")->required();

  auto* c_sym = app.add_subcommand("symbol", "compatibility-equation ranks");
  c_sym->add_option("--d", d, "number of foliations");
  c_sym->add_option("--q", q, "comma-separated distinct rationals");
  c_sym->add_option("--depth", depth, "a single depth");

  int table_d = 0;
  auto* c_tab = app.add_subcommand("table", "counting table");
  c_tab->add_option("--d", table_d, "number of foliations")->required();

  std::optional<double> R, T;
  std::size_t samples = 100;
  std::uint64_t nseed = 0;
  auto* c_nf = app.add_subcommand("normal-form", "numeric normal-form suite");
  c_nf->add_option("--case", kind, "zero_disc | positive_disc | negative_disc")->required();
  c_nf->add_option("--R", R, "positive_disc parameter");
  c_nf->add_option("--T", T, "zero_disc / negative_disc parameter");
  c_nf->add_option("--samples", samples, "sample count")->capture_default_str();
  c_nf->add_option("--seed", nseed, "sampling seed")->capture_default_str();

  double Dp = 1, D = 2;
  std::size_t dsamples = 200;
  std::uint64_t dseed = 0;
  auto* c_dx = app.add_subcommand("darboux", "explicit relation triples");
  c_dx->add_option("--Dplus", Dp)->required();
  c_dx->add_option("--D", D)->required();
  c_dx->add_option("--samples", dsamples)->capture_default_str();
  c_dx->add_option("--seed", dseed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*c_rho) return cmd_rho(ctx, rho_d);
    if (*c_con) return cmd_construct(ctx, d, q, seed, out);
    if (*c_ver) return cmd_verify(ctx, path);
    if (*c_sym) return cmd_symbol(ctx, d, q, depth);
    if (*c_tab) return cmd_table(ctx, table_d);
    if (*c_nf) return cmd_normal_form(ctx, kind, R, T, samples, nseed);
    if (*c_dx) return cmd_darboux(ctx, Dp, D, dsamples, dseed);
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "check aborted: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
