#include "symtwirl/rational_linalg.hpp"

#include <algorithm>

#include "symtwirl/errors.hpp"

namespace symtwirl {

std::vector<std::size_t> RationalMatrix::reduce_to_rref() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t pivot_row = row;
    while (pivot_row < rows_ && at(pivot_row, col) == 0) ++pivot_row;
    if (pivot_row == rows_) continue;
    if (pivot_row != row)
      for (std::size_t j = col; j < cols_; ++j) std::swap(at(row, j), at(pivot_row, j));
    const Rational inv = Rational(1) / at(row, col);
    for (std::size_t j = col; j < cols_; ++j) at(row, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || at(i, col) == 0) continue;
      const Rational f = at(i, col);
      for (std::size_t j = col; j < cols_; ++j) at(i, j) -= f * at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(RationalMatrix m) { return m.reduce_to_rref().size(); }

std::optional<std::vector<Rational>> first_kernel_vector(const RationalMatrix& m) {
  RationalMatrix r = m;
  const std::vector<std::size_t> pivots = r.reduce_to_rref();
  if (pivots.size() == m.cols()) return std::nullopt;

  std::size_t free_col = 0;
  {
    std::size_t p = 0;
    while (p < pivots.size() && pivots[p] == free_col) {
      ++free_col;
      ++p;
    }
  }
  std::vector<Rational> kernel(m.cols(), Rational(0));
  kernel[free_col] = 1;
  for (std::size_t prow = 0; prow < pivots.size(); ++prow) {
    const std::size_t pcol = pivots[prow];
    if (pcol > free_col) break;  // echelon: later pivots have no free_col entry
    kernel[pcol] = -r.at(prow, free_col);
  }
  return kernel;
}

namespace {

// Dense phase-I simplex tableau. Artificial variables start basic;
// feasibility holds iff the artificial objective reaches zero. Bland's rule
// (lowest eligible index) prevents cycling, and exact arithmetic removes any
// tolerance question.
class PhaseOneSimplex {
 public:
  PhaseOneSimplex(const RationalMatrix& m, const std::vector<Rational>& b)
      : rows_(m.rows()), cols_(m.cols()), tab_(rows_ + 1, cols_ + rows_ + 1) {
    basis_.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      const bool flip = b[i] < 0;
      for (std::size_t j = 0; j < cols_; ++j) tab_.at(i, j) = flip ? Rational(-m.at(i, j)) : m.at(i, j);
      tab_.at(i, cols_ + i) = 1;
      tab_.at(i, rhs()) = flip ? Rational(-b[i]) : b[i];
      basis_[i] = cols_ + i;
    }
    // objective row: minimize the sum of artificials, expressed over the basis
    for (std::size_t j = 0; j <= rhs(); ++j) {
      Rational s = 0;
      for (std::size_t i = 0; i < rows_; ++i) s += tab_.at(i, j);
      if (j < cols_ || j == rhs()) tab_.at(rows_, j) = s;
    }
  }

  std::optional<std::vector<Rational>> solve() {
    while (true) {
      // entering column: lowest index with positive reduced cost
      std::size_t enter = rhs();
      for (std::size_t j = 0; j < cols_ + rows_; ++j) {
        if (tab_.at(rows_, j) > 0) {
          enter = j;
          break;
        }
      }
      if (enter == rhs()) break;
      // leaving row: minimum ratio, ties by lowest basis index
      std::size_t leave = rows_;
      Rational best;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (tab_.at(i, enter) <= 0) continue;
        const Rational ratio = tab_.at(i, rhs()) / tab_.at(i, enter);
        if (leave == rows_ || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows_) break;  // unbounded cannot happen in phase I
      pivot(leave, enter);
    }
    if (tab_.at(rows_, rhs()) != 0) return std::nullopt;
    std::vector<Rational> x(cols_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
      if (basis_[i] < cols_) x[basis_[i]] = tab_.at(i, rhs());
    return x;
  }

 private:
  std::size_t rhs() const { return cols_ + rows_; }

  void pivot(std::size_t prow, std::size_t pcol) {
    const Rational inv = Rational(1) / tab_.at(prow, pcol);
    for (std::size_t j = 0; j <= rhs(); ++j) tab_.at(prow, j) *= inv;
    for (std::size_t i = 0; i <= rows_; ++i) {
      if (i == prow || tab_.at(i, pcol) == 0) continue;
      const Rational f = tab_.at(i, pcol);
      for (std::size_t j = 0; j <= rhs(); ++j) tab_.at(i, j) -= f * tab_.at(prow, j);
    }
    basis_[prow] = pcol;
  }

  std::size_t rows_;
  std::size_t cols_;
  RationalMatrix tab_;
  std::vector<std::size_t> basis_;
};

}  // namespace

std::optional<std::vector<Rational>> solve_nonnegative(const RationalMatrix& m,
                                                       const std::vector<Rational>& b) {
  if (b.size() != m.rows()) throw DimensionError("right-hand side length mismatch");
  return PhaseOneSimplex(m, b).solve();
}

}  // namespace symtwirl
