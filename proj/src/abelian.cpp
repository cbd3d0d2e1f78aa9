#include "legweb/abelian.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace legweb {

ComplementVectors vandermonde_complement(const WebSpec& web) {
  web.validate();
  const std::size_t d = web.d();
  ComplementVectors out;
  for (std::size_t mu = 1; mu < d; ++mu) {
    ExactMatrix block(d - mu, d);
    for (std::size_t a = 0; a < d; ++a) {
      Rational pw(1);
      for (std::size_t l = 0; l < d - mu; ++l, pw *= web.q[a]) block(l, a) = pw;
    }
    RankNullspace ns = rank_nullspace(block, Exec::serial);
    bool found = false;
    for (const auto& cand : ns.nullspace) {
      if (!in_span(out.vectors, cand)) {
        out.vectors.push_back(cand);
        found = true;
        break;
      }
    }
    if (!found)
      throw std::logic_error("no complement vector for mu = " +
                             std::to_string(mu));
  }
  return out;
}

std::vector<AbelianRelation> build_relations(const WebSpec& web) {
  return build_relations(web, vandermonde_complement(web));
}

std::vector<AbelianRelation> build_relations(const WebSpec& web,
                                             const ComplementVectors& v) {
  web.validate();
  const int d = static_cast<int>(web.d());
  if (v.vectors.size() != web.d() - 1)
    throw std::invalid_argument("complement vector count does not match d");
  std::vector<AbelianRelation> rels;
  for (int m = 2; m <= d - 1; ++m) {
    for (int j = 0; j <= 2 * m - 2; ++j) {
      MultiPoly u = u_universal(m, j);
      std::vector<MultiPoly> specialized;
      for (int a = 0; a < d; ++a) specialized.push_back(substitute_q(u, web.q[a]));
      for (int mu = 1; mu <= d - m; ++mu) {
        AbelianRelation r{m, j, mu, {}};
        const RationalVector& vm = v.vectors[mu - 1];
        for (int a = 0; a < d; ++a) r.components.push_back(vm[a] * specialized[a]);
        rels.push_back(std::move(r));
      }
    }
  }
  return rels;
}

bool RelationReport::ideal_all() const {
  for (bool b : in_ideal)
    if (!b) return false;
  return true;
}

bool RelationReport::pass() const {
  return sum_zero && basepoint_vanishing && closed && ideal_all();
}

RelationReport verify_relation(const AbelianRelation& rel, const WebSpec& web) {
  if (rel.components.size() != web.d())
    throw std::invalid_argument("relation has " +
                                std::to_string(rel.components.size()) +
                                " components, web has d = " +
                                std::to_string(web.d()));
  RelationReport rep;
  MultiPoly sum;
  rep.basepoint_vanishing = true;
  rep.closed = true;
  for (std::size_t a = 0; a < web.d(); ++a) {
    const MultiPoly& h = rel.components[a];
    sum += h;
    rep.basepoint_vanishing =
        rep.basepoint_vanishing && h.evaluate(0, 0, 0, 0) == 0;
    if (h.contains(Var::q)) {
      rep.in_ideal.push_back(false);
      rep.closed = false;
      continue;
    }
    OneForm dh = d_of_function(h);
    rep.in_ideal.push_back(in_web_ideal(dh, web.q[a]));
    rep.closed = rep.closed && exterior_derivative(dh).is_zero();
  }
  rep.sum_zero = sum.is_zero();
  return rep;
}

std::vector<RelationReport> verify_relations(
    const std::vector<AbelianRelation>& rels, const WebSpec& web, Exec exec) {
  std::vector<RelationReport> out(rels.size());
  u_basic();
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < rels.size(); ++i)
      out[i] = verify_relation(rels[i], web);
    return out;
  }
  // exceptions must not escape the parallel region
  for (const auto& r : rels)
    if (r.components.size() != web.d()) return {verify_relation(r, web)};
  const long n = static_cast<long>(rels.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count())
  for (long i = 0; i < n; ++i) out[i] = verify_relation(rels[i], web);
  return out;
}

ExactMatrix relation_matrix(const std::vector<AbelianRelation>& rels) {
  if (rels.empty()) return {};
  const std::size_t d = rels[0].components.size();
  for (const auto& r : rels)
    if (r.components.size() != d)
      throw std::invalid_argument("relations with different d");
  std::vector<std::map<Monomial, std::size_t, GradedLex>> support(d);
  for (const auto& r : rels)
    for (std::size_t a = 0; a < d; ++a)
      for (const auto& [m, c] : r.components[a].terms()) support[a][m] = 0;
  std::size_t cols = 0;
  for (auto& s : support)
    for (auto& [m, idx] : s) idx = cols++;
  ExactMatrix out(rels.size(), cols);
  for (std::size_t i = 0; i < rels.size(); ++i)
    for (std::size_t a = 0; a < d; ++a)
      for (const auto& [m, c] : rels[i].components[a].terms())
        out(i, support[a].at(m)) = c;
  return out;
}

std::size_t rank_of_relations(const std::vector<AbelianRelation>& rels,
                              Exec exec) {
  return rank(relation_matrix(rels), exec);
}

std::int64_t rho(int d) {
  if (d < 3) throw std::invalid_argument("rho requires d >= 3");
  if (d > 1000000) throw std::out_of_range("rho: d too large");
  const std::int64_t n = d;
  return (n - 1) * (n - 2) * (2 * n + 3) / 6;
}

std::vector<std::pair<int, int>> rho_decomposition(int d) {
  if (d < 3) throw std::invalid_argument("rho_decomposition requires d >= 3");
  std::vector<std::pair<int, int>> out;
  for (int m = 2; m <= d - 1; ++m) out.emplace_back(d - m, 2 * m - 1);
  return out;
}

}  // namespace legweb
