#include "legweb/exact_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace legweb {

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<RationalVector>& rows) {
  if (rows.empty()) return {};
  ExactMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_)
      throw std::invalid_argument("ragged rows in ExactMatrix::from_rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RationalVector ExactMatrix::row(std::size_t i) const {
  return RationalVector(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

RationalVector ExactMatrix::times(const RationalVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("dimension mismatch");
  RationalVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational s(0);
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0 && v[j] != 0) s += (*this)(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

std::vector<std::vector<Integer>> integer_rows(const ExactMatrix& m) {
  std::vector<std::vector<Integer>> out(m.rows(),
                                        std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l(1);
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
                                m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      Integer t = l / m(i, j).get_den();
      out[i][j] = t * m(i, j).get_num();
    }
  }
  return out;
}

namespace {

// One Bareiss update of `row` against pivot row `pr` at column c:
// row[j] <- (piv * row[j] - row[c] * pr[j]) / prev, exact for j > c.
void eliminate_row(std::vector<Integer>& row, const std::vector<Integer>& pr,
                   std::size_t c, const Integer& piv, const Integer& prev,
                   Integer& tmp) {
  const std::size_t n = row.size();
  const bool prev_one = prev == 1;
  if (row[c] == 0) {
    for (std::size_t j = c + 1; j < n; ++j) {
      if (row[j] == 0) continue;
      row[j] *= piv;
      if (!prev_one) mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(),
                                  prev.get_mpz_t());
    }
    return;
  }
  const Integer a = row[c];
  for (std::size_t j = c + 1; j < n; ++j) {
    if (pr[j] == 0) {
      if (row[j] == 0) continue;
      row[j] *= piv;
    } else {
      mpz_mul(tmp.get_mpz_t(), a.get_mpz_t(), pr[j].get_mpz_t());
      row[j] *= piv;
      row[j] -= tmp;
    }
    if (!prev_one && row[j] != 0)
      mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), prev.get_mpz_t());
  }
  row[c] = 0;
}

}  // namespace

Echelon bareiss(std::vector<std::vector<Integer>> rows, std::size_t cols,
                Exec exec) {
  const std::size_t n = rows.size();
  for (const auto& r : rows)
    if (r.size() != cols) throw std::invalid_argument("ragged integer rows");
  Echelon out;
  Integer prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < n; ++c) {
    std::size_t k = r;
    while (k < n && rows[k][c] == 0) ++k;
    if (k == n) continue;
    std::swap(rows[r], rows[k]);
    const Integer piv = rows[r][c];
    const auto& pr = rows[r];
    if (exec == Exec::serial) {
      Integer tmp;
      for (std::size_t i = r + 1; i < n; ++i)
        eliminate_row(rows[i], pr, c, piv, prev, tmp);
    } else {
      const long lo = static_cast<long>(r + 1), hi = static_cast<long>(n);
#pragma omp parallel num_threads(worker_count())
      {
        Integer tmp;
#pragma omp for schedule(dynamic, 1)
        for (long i = lo; i < hi; ++i)
          eliminate_row(rows[i], pr, c, piv, prev, tmp);
      }
    }
    out.pivots.push_back(c);
    prev = piv;
    ++r;
  }
  out.rank = r;
  rows.resize(r);
  out.echelon = std::move(rows);
  return out;
}

std::size_t rank(const ExactMatrix& m, Exec exec) {
  return bareiss(integer_rows(m), m.cols(), exec).rank;
}

RankNullspace rank_nullspace(const ExactMatrix& m, Exec exec) {
  Echelon e = bareiss(integer_rows(m), m.cols(), exec);
  RankNullspace out;
  out.rank = e.rank;
  out.pivots = e.pivots;
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(n);
    v[f] = 1;
    // back substitution from the last echelon row
    for (std::size_t k = e.rank; k-- > 0;) {
      const std::size_t pc = e.pivots[k];
      Rational s(0);
      for (std::size_t j = pc + 1; j < n; ++j)
        if (e.echelon[k][j] != 0 && v[j] != 0) s += e.echelon[k][j] * v[j];
      v[pc] = -s / e.echelon[k][pc];
    }
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

bool in_span(const std::vector<RationalVector>& basis,
             const RationalVector& v) {
  if (basis.empty()) {
    for (const auto& x : v)
      if (x != 0) return false;
    return true;
  }
  std::vector<RationalVector> rows = basis;
  std::size_t r0 = rank(ExactMatrix::from_rows(rows), Exec::serial);
  rows.push_back(v);
  return rank(ExactMatrix::from_rows(rows), Exec::serial) == r0;
}

}  // namespace legweb
