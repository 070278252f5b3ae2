#pragma once

#include <vector>

#include "symtwirl/exact_operator.hpp"
#include "symtwirl/permutation.hpp"

namespace symtwirl {

/// Orthonormal occupation-number basis of the permutation-fixed subspace:
/// one vector per type, the normalized sum of e_x over the type class.
/// Cardinality C(d+n-1, d-1); every vector is fixed by every U^pi.
std::vector<Eigen::VectorXcd> sym_basis(int d, int n,
                                        std::size_t max_dim = kDefaultMaxOperatorDim);

/// Hermitian idempotent onto the span of sym_basis; agrees with the averaged
/// representation (1/n!) sum_pi U^pi.
FloatOperator sym_projector(int d, int n, std::size_t max_dim = kDefaultMaxOperatorDim);

/// Exact invariance under conjugation by every permutation. Adjacent
/// transpositions generate S_n, so checking them suffices.
bool is_permutation_invariant(const ExactOperator& rho, int d);

struct PurificationCheck {
  bool invariant = false;
  Eigen::VectorXcd witness;  // the purifying vector on the doubled space
  double max_deviation = 0.0;
};

/// Builds the spectral purification sum_i sqrt(lambda_i) |nu_i>|nu_i~> of a
/// permutation-invariant density matrix on the doubled space and tests
/// whether every (U^pi tensor U^pi) fixes it. The vector is assembled from
/// the spectral projectors (as vec of the operator square root), so the
/// verdict cannot depend on basis choices inside degenerate eigenspaces.
PurificationCheck purification_in_doubled_sym(const ExactOperator& rho, int d,
                                              double tol = 1e-9);
PurificationCheck purification_in_doubled_sym(const FloatOperator& rho, int d,
                                              double tol = 1e-9);

}  // namespace symtwirl
