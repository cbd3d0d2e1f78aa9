#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "legweb/exact_matrix.hpp"
#include "legweb/model_web.hpp"

namespace legweb {

// v^mu for mu = 1..d-1, stored at index mu-1.
struct ComplementVectors {
  std::vector<RationalVector> vectors;
};

// Un-differentiated Abelian relation: first integrals h^1..h^d summing to 0.
struct AbelianRelation {
  int m = 0, j = 0, mu = 0;
  std::vector<MultiPoly> components;
};

// Nested Vandermonde complements: v^mu is the first RREF nullspace vector of
// the rows (q^a)^l, l = 0..d-mu-1, that is not in the span of v^1..v^{mu-1}.
ComplementVectors vandermonde_complement(const WebSpec& web);

// All relations (m, j, mu) with 2 <= m <= d-1, 0 <= j <= 2m-2,
// 1 <= mu <= d-m, ordered by m, then j, then mu.
std::vector<AbelianRelation> build_relations(const WebSpec& web);
std::vector<AbelianRelation> build_relations(const WebSpec& web,
                                             const ComplementVectors& v);

struct RelationReport {
  bool sum_zero = false;
  bool basepoint_vanishing = false;
  std::vector<bool> in_ideal;  // d(h^a) in I^a, per leaf
  bool closed = false;         // d(d(h^a)) = 0, a sanity identity
  bool ideal_all() const;
  bool pass() const;
};

// Throws std::invalid_argument when rel has the wrong number of components.
RelationReport verify_relation(const AbelianRelation& rel, const WebSpec& web);
std::vector<RelationReport> verify_relations(
    const std::vector<AbelianRelation>& rels, const WebSpec& web,
    Exec exec = Exec::parallel);

// Rows are relations, columns are (leaf, monomial) pairs over the union of
// supports ordered by leaf then graded lex.
ExactMatrix relation_matrix(const std::vector<AbelianRelation>& rels);
std::size_t rank_of_relations(const std::vector<AbelianRelation>& rels,
                              Exec exec = Exec::parallel);

// (d-1)(d-2)(2d+3)/6; throws std::invalid_argument for d < 3.
std::int64_t rho(int d);
// [(d-2, 3), (d-3, 5), ..., (1, 2d-3)]
std::vector<std::pair<int, int>> rho_decomposition(int d);

}  // namespace legweb
