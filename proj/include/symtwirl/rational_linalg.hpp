#pragma once

#include <optional>
#include <vector>

#include "symtwirl/rational.hpp"

namespace symtwirl {

/// Dense matrix of exact rationals, row-major. Only what the design
/// machinery needs: reduced echelon form, rank, kernel directions, and an
/// exact phase-I simplex for feasibility of {M x = b, x >= 0}.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  /// In-place reduced row echelon form; returns the pivot column indices in
  /// increasing order. Pivots are the first nonzero entry scanning rows top
  /// to bottom, columns left to right (fully deterministic).
  std::vector<std::size_t> reduce_to_rref();

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

std::size_t rank(RationalMatrix m);

/// Kernel vector attached to the FIRST free column of the reduced echelon
/// form: unit coefficient on that column, minus the echelon coefficients on
/// the pivot columns, zero elsewhere. Empty optional when the kernel is
/// trivial.
std::optional<std::vector<Rational>> first_kernel_vector(const RationalMatrix& m);

/// Exact feasibility of {M x = b, x >= 0} by phase-I simplex with Bland's
/// rule. Returns a feasible x or an empty optional.
std::optional<std::vector<Rational>> solve_nonnegative(const RationalMatrix& m,
                                                       const std::vector<Rational>& b);

}  // namespace symtwirl
