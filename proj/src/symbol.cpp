#include "legweb/symbol.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

namespace legweb {

namespace {

Integer factorial(int n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Rational rpow(const Rational& b, int e) {
  Rational r(1);
  for (int k = 0; k < e; ++k) r *= b;
  return r;
}

}  // namespace

Integer c_coeff(int I, int J) {
  if (I < 0) throw std::invalid_argument("c_coeff requires I >= 0");
  if (J < 0 || 2 * J > I) return 0;
  Integer den = factorial(I - 2 * J) * factorial(J);
  den <<= J;
  return factorial(I) / den;
}

CCoeffTable::CCoeffTable(int max_I) {
  if (max_I < 0) throw std::invalid_argument("CCoeffTable requires max_I >= 0");
  rows_.resize(max_I + 1);
  rows_[0] = {Integer(1)};
  for (int I = 1; I <= max_I; ++I) {
    rows_[I].assign(I / 2 + 1, Integer(0));
    for (int J = 0; J <= I / 2; ++J) {
      Integer v = at(I - 1, J);
      if (J >= 1) v += (I - 2 * J + 1) * at(I - 1, J - 1);
      rows_[I][J] = v;
    }
  }
}

Integer CCoeffTable::at(int I, int J) const {
  if (I < 0 || I > max_I()) throw std::out_of_range("CCoeffTable index");
  if (J < 0 || 2 * J > I) return 0;
  return rows_[I][J];
}

DepthBlock depth_block(const WebSpec& web, int depth) {
  if (depth < 1) throw std::invalid_argument("depth_block requires depth >= 1");
  web.validate();
  const int d = static_cast<int>(web.d());
  DepthBlock b;
  b.d = d;
  b.depth = depth;
  std::map<std::tuple<int, int, int>, std::size_t> col;
  for (int j = 0; 2 * j <= depth; ++j) {
    const int i = depth - 2 * j;
    for (int a = 0; a < d; ++a) {
      col[{a, i, j}] = b.vars.size();
      b.vars.push_back({a, i, j});
    }
    for (int I = 0; I <= i; ++I) b.eqs.push_back({I, i, j});
  }
  b.matrix = ExactMatrix(b.eqs.size(), b.vars.size());
  for (std::size_t r = 0; r < b.eqs.size(); ++r) {
    const SymbolEq& e = b.eqs[r];
    for (int k = 0; 2 * k <= e.I && e.i - 2 * k >= 0; ++k) {
      Integer c = c_coeff(e.I, k);
      for (int a = 0; a < d; ++a)
        b.matrix(r, col.at({a, e.i - 2 * k, e.j + k})) +=
            Rational(c) * rpow(web.q[a], e.I - k);
    }
  }
  return b;
}

bool check_full_rank(const WebSpec& web, int depth, Exec exec) {
  DepthBlock b = depth_block(web, depth);
  return rank(b.matrix, exec) == std::min(b.eqs.size(), b.vars.size());
}

SymbolRow closed_form_counts(int d, int depth) {
  if (d < 3 || depth < 1)
    throw std::invalid_argument("closed_form_counts requires d >= 3, depth >= 1");
  SymbolRow r;
  r.depth = depth;
  const long k = (depth + 2) / 2;
  r.vars = depth == 1 ? d : k * d;
  r.eqs = depth == 1 ? 2 : (depth % 2 == 0 ? k * k : k * (k + 1));
  return r;
}

std::vector<SymbolRow> counting_table(int d) {
  if (d < 3) throw std::invalid_argument("counting_table requires d >= 3");
  std::vector<SymbolRow> rows;
  for (int depth = 1; depth <= 2 * d - 3; ++depth) {
    SymbolRow r;
    r.depth = depth;
    for (int j = 0; 2 * j <= depth; ++j) {
      r.vars += d;
      r.eqs += depth - 2 * j + 1;
    }
    rows.push_back(r);
  }
  return rows;
}

std::vector<SymbolRow> symbol_table(const WebSpec& web, Exec exec) {
  web.validate();
  std::vector<SymbolRow> rows = counting_table(static_cast<int>(web.d()));
  const long n = static_cast<long>(rows.size());
  auto work = [&](long k) {
    DepthBlock b = depth_block(web, rows[k].depth);
    rows[k].rank = static_cast<long>(rank(b.matrix, Exec::serial));
  };
  if (exec == Exec::serial) {
    for (long k = 0; k < n; ++k) work(k);
  } else {
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count())
    for (long k = 0; k < n; ++k) work(k);
  }
  return rows;
}

bool total_sum_check(int d) {
  long vars = 0, eqs = 0;
  for (const auto& r : counting_table(d)) {
    vars += r.vars;
    eqs += r.eqs;
  }
  return vars - eqs == rho(d);
}

namespace {

// Lazily computed d_p^i d_y^j h^a for one relation.
class DerivativeCache {
 public:
  explicit DerivativeCache(const AbelianRelation& rel) : rel_(rel) {}

  const MultiPoly& get(int a, int i, int j) {
    auto key = std::make_tuple(a, i, j);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    MultiPoly v;
    if (i == 0 && j == 0)
      v = rel_.components[a];
    else if (i > 0)
      v = partial(get(a, i - 1, j), Var::p);
    else
      v = partial(get(a, 0, j - 1), Var::y);
    return cache_.emplace(key, std::move(v)).first->second;
  }

 private:
  const AbelianRelation& rel_;
  std::map<std::tuple<int, int, int>, MultiPoly> cache_;
};

bool relation_satisfies(const WebSpec& web, const AbelianRelation& rel,
                        int depth_max) {
  const int d = static_cast<int>(web.d());
  DerivativeCache f(rel);
  for (int depth = 1; depth <= depth_max; ++depth) {
    for (int j = 0; 2 * j <= depth; ++j) {
      const int i = depth - 2 * j;
      for (int I = 0; I <= i; ++I) {
        MultiPoly lhs;
        for (int k = 0; 2 * k <= I && i - 2 * k >= 0; ++k) {
          Rational c(c_coeff(I, k));
          for (int a = 0; a < d; ++a) {
            const MultiPoly& fa = f.get(a, i - 2 * k, j + k);
            if (fa.is_zero()) continue;
            lhs += (c * rpow(web.q[a], I - k)) * fa;
          }
        }
        if (!lhs.is_zero()) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool relations_satisfy_symbol(const WebSpec& web,
                              const std::vector<AbelianRelation>& rels,
                              int depth_max, Exec exec) {
  web.validate();
  for (const auto& r : rels)
    if (r.components.size() != web.d())
      throw std::invalid_argument("relation arity does not match the web");
  const long n = static_cast<long>(rels.size());
  if (exec == Exec::serial) {
    for (long k = 0; k < n; ++k)
      if (!relation_satisfies(web, rels[k], depth_max)) return false;
    return true;
  }
  bool ok = true;
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count()) \
    reduction(&& : ok)
  for (long k = 0; k < n; ++k) ok = ok && relation_satisfies(web, rels[k], depth_max);
  return ok;
}

}  // namespace legweb
