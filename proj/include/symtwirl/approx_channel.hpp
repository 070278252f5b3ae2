#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "symtwirl/design.hpp"
#include "symtwirl/exact_operator.hpp"
#include "symtwirl/twirl.hpp"

namespace symtwirl {

/// Completely positive trace-preserving map in weighted-Kraus form:
/// X maps to sum_i w_i K_i X K_i{dagger} with rational w_i > 0. Mixed-unitary
/// channels keep exact rational entries this way (plain Kraus would need
/// sqrt(w) factors).
struct ChannelRep {
  std::size_t dim_in = 0;
  std::size_t dim_out = 0;
  struct Term {
    Rational weight;
    ExactOperator kraus;  // dim_out x dim_in
  };
  std::vector<Term> terms;

  static ChannelRep identity(std::size_t dim);
  static ChannelRep completely_depolarizing(std::size_t dim);
  /// Dephasing in the standard basis; the simplest non-unitary exact channel.
  static ChannelRep pinching(std::size_t dim);
  /// Convex mixture of random rational unitaries (Householder products).
  static ChannelRep random_mixed_unitary(std::size_t dim, int num_terms, std::mt19937_64& rng);

  /// sum_i w_i K_i{dagger} K_i == identity, exactly.
  bool is_complete() const;
  ExactOperator apply(const ExactOperator& x) const;
};

/// Random rational unitary: product of complex rational Householder
/// reflections and a rational unit-modulus diagonal.
ExactOperator random_rational_unitary(std::size_t dim, std::mt19937_64& rng);

/// Choi state (N tensor id)(|Phi><Phi|) with the normalized maximally
/// entangled input; exact, dimension dim_out * dim_in.
ExactOperator channel_choi_exact(const ChannelRep& n);
FloatOperator channel_choi(const ChannelRep& n);

/// Exact identity between the Choi state of (permute-out after N after
/// inverse-permute-in) and the jointly permuted Choi state of N.
/// N must map n-fold dH letters to n-fold dK letters.
bool covariance_identity_check(const ChannelRep& n, const Permutation& pi, int dH, int dK);

/// A distribution acts as a design on channels between n-fold dH and n-fold
/// dK systems iff it is a state design at local dimension dK * dH; verified
/// through that reduction, with direct spot checks on random rational
/// channels when the dimensions are tiny.
bool verify_channel_design(const DistributionOverSn& candidate, int dH, int dK,
                           int spot_trials = 2, std::uint64_t seed = 0);

// ---------------------------------------------------------------------------
// Certified diamond-norm bracket for the distance between the uniform twirl
// and the weighted twirl of q. The exact value is an optimization this tool
// deliberately does not perform; every consumer only needs the bracket.
// ---------------------------------------------------------------------------

/// sum_pi |1/n! - q(pi)|; upper bound since every conjugation has unit
/// diamond norm. Exact.
Rational diamond_upper_via_l1(const DistributionOverSn& q);

struct DiamondLower {
  double value = 0.0;
  std::string witness;  // "type (c1,...,cd)" or "maximally entangled"
};

/// Max output trace-norm difference over one basis-state representative per
/// type and over the maximally entangled doubled input.
DiamondLower diamond_lower_via_inputs(const DistributionOverSn& q, int d,
                                      std::size_t max_dim = kDefaultMaxOperatorDim);

struct DiamondBracket {
  double lower = 0.0;
  double upper = 0.0;
  std::string witness;
};

DiamondBracket diamond_bracket(const DistributionOverSn& q, int d);

struct ApproxDesignReport {
  double entropy_rate = 0.0;
  double eps_lower = 0.0;
  double eps_upper = 0.0;
  double rhs_at_lower = 0.0;
  double rhs_at_upper = 0.0;
  bool vacuous = false;       // floor at the upper end is negative
  bool consistent = false;    // entropy_rate >= rhs_at_upper - 1e-9
  std::string witness;

  std::string to_json() const;
};

/// Entropy-rate floor evaluated at both ends of the certified bracket.
/// Throws logic_error if the floor at the bracket's upper end were violated.
ApproxDesignReport approx_design_report(const DistributionOverSn& q, int d);

}  // namespace symtwirl
