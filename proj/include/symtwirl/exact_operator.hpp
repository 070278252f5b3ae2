#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <vector>

#include "symtwirl/permutation.hpp"
#include "symtwirl/rational.hpp"

namespace symtwirl {

inline constexpr std::size_t kDefaultMaxOperatorDim = 4096;

/// Dense matrix over exact complex rationals. Square instances model
/// operators on (C^d)^{tensor n}; rectangular ones only appear as Kraus
/// blocks of channels with different input and output dimensions.
class ExactOperator {
 public:
  ExactOperator() = default;
  /// Square zero matrix.
  explicit ExactOperator(std::size_t dim) : rows_(dim), cols_(dim), a_(dim * dim) {}
  ExactOperator(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static ExactOperator identity(std::size_t dim);
  /// |e_row><e_col| matrix unit.
  static ExactOperator matrix_unit(std::size_t dim, std::size_t row, std::size_t col);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  /// Dimension of a square operator.
  std::size_t dim() const;

  ComplexRational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const ComplexRational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  ExactOperator& operator+=(const ExactOperator& o);
  ExactOperator& operator-=(const ExactOperator& o);
  friend ExactOperator operator+(ExactOperator a, const ExactOperator& b) { return a += b; }
  friend ExactOperator operator-(ExactOperator a, const ExactOperator& b) { return a -= b; }
  friend ExactOperator operator*(const Rational& s, const ExactOperator& m);
  friend ExactOperator operator*(const ExactOperator& a, const ExactOperator& b);
  friend bool operator==(const ExactOperator& a, const ExactOperator& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const ExactOperator& a, const ExactOperator& b) { return !(a == b); }

  ExactOperator adjoint() const;
  ComplexRational trace() const;
  bool is_hermitian() const;
  bool is_zero() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ComplexRational> a_;
};

/// The 0/1 representation matrix U^pi on (C^d)^{tensor n}:
/// <e_y| U^pi |e_x> = 1 iff act_on_tuple(pi, x) = y.
/// Note the contravariant law U^sigma U^pi = U^{compose(pi, sigma)}; group
/// averages are unaffected, and the action formula is kept verbatim.
ExactOperator permutation_matrix(const Permutation& pi, int d,
                                 std::size_t max_dim = kDefaultMaxOperatorDim);

/// U^pi A U^pi{dagger} by pure index relabeling; the representation matrix is
/// never materialized. Preserves trace, Hermiticity and positivity.
ExactOperator conjugate_by_permutation(const Permutation& pi, const ExactOperator& a, int d);

/// Relabeling form reusing a precomputed action_index_table.
ExactOperator conjugate_by_index_table(const std::vector<std::size_t>& table,
                                       const ExactOperator& a);

// ---------------------------------------------------------------------------
// Float companion layer: spectral quantities live here, never in the exact one.
// ---------------------------------------------------------------------------

using FloatOperator = Eigen::MatrixXcd;

/// Wire form of an exact scalar: {"re":"p/q","im":"p/q"}.
std::string scalar_to_json(const ComplexRational& z);
ComplexRational scalar_from_json(const std::string& text);

FloatOperator to_float(const ExactOperator& a);
/// Entrywise nearest-rational lift with bounded denominators.
ExactOperator to_exact(const FloatOperator& a, std::uint64_t max_denominator = 1000000);

/// Sum of absolute eigenvalues of a Hermitian matrix.
/// Throws ContractError when ||A - A'||_max exceeds hermiticity_tol.
double trace_norm(const FloatOperator& a, double hermiticity_tol = 1e-10);

/// -sum lambda log2 lambda over the spectrum, 0 log 0 := 0.  Requires a
/// density matrix: PSD and unit trace within tol.
double von_neumann_entropy(const FloatOperator& rho, double tol = 1e-10);

/// Rank-one projector onto (1/sqrt(D)) sum_x |e_x>|e_x> on the doubled space.
FloatOperator maximally_entangled_state(std::size_t D,
                                        std::size_t max_dim = kDefaultMaxOperatorDim);

/// Trace over the first (which = 0) or second (which = 1) factor of a
/// dim_a * dim_b system.
FloatOperator partial_trace(const FloatOperator& a, std::size_t dim_a, std::size_t dim_b,
                            int which);

// ---------------------------------------------------------------------------
// Seeded generators used by randomized exact checks.
// ---------------------------------------------------------------------------

Rational random_rational(std::mt19937_64& rng, int max_abs_num = 5, int max_den = 6);
ComplexRational random_complex_rational(std::mt19937_64& rng);
ExactOperator random_rational_operator(std::size_t dim, std::mt19937_64& rng);
ExactOperator random_rational_hermitian(std::size_t dim, std::mt19937_64& rng);
/// Exact density matrix B B{dagger} / tr(B B{dagger}) for random rational B.
ExactOperator random_rational_state(std::size_t dim, std::mt19937_64& rng);

}  // namespace symtwirl
