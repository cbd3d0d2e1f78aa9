#pragma once

#include <cstddef>
#include <vector>

#include "legweb/parallel.hpp"
#include "legweb/rational.hpp"

namespace legweb {

using RationalVector = std::vector<Rational>;

// Dense row-major matrix over Q.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_rows(const std::vector<RationalVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }
  RationalVector row(std::size_t i) const;
  RationalVector times(const RationalVector& v) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

// Row echelon form produced by fraction-free elimination over Z.
// echelon[k] has its first nonzero entry at pivots[k]; the last pivot equals
// the determinant of the leading pivot minor (after row scaling).
struct Echelon {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  std::vector<std::vector<Integer>> echelon;
};

// Bareiss elimination on integer rows. Rows are modified in place.
Echelon bareiss(std::vector<std::vector<Integer>> rows, std::size_t cols,
                Exec exec = Exec::parallel);

// Scales each row by the lcm of its denominators.
std::vector<std::vector<Integer>> integer_rows(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m, Exec exec = Exec::parallel);

struct RankNullspace {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  // Reduced row echelon basis: one vector per free column, in increasing
  // column order, with entry 1 at its free column and 0 at the others.
  std::vector<RationalVector> nullspace;
};

RankNullspace rank_nullspace(const ExactMatrix& m, Exec exec = Exec::parallel);

// Exact test whether v lies in the row span of `basis`.
bool in_span(const std::vector<RationalVector>& basis, const RationalVector& v);

}  // namespace legweb
