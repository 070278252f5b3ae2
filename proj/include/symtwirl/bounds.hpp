#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symtwirl/design.hpp"
#include "symtwirl/exact_operator.hpp"
#include "symtwirl/rational.hpp"
#include "symtwirl/twirl.hpp"

namespace symtwirl {

/// Shannon entropy in bits. Throws ContractError unless p is a probability
/// vector within 1e-9.
double shannon_entropy(const std::vector<double>& p);
double shannon_entropy(const DistributionOverSn& q);

/// -x log2 x - (1-x) log2(1-x), endpoints 0. Domain [0, 1].
double binary_entropy(double x);

/// d^{4n} + 1: the Caratheodory cap on design support size.
Integer support_upper_bound(int d, int n);

/// d^n - C(d+n-1, d-1): the symmetric-complement floor on support size.
/// May be nonpositive for small n; returned as computed.
Integer support_lower_bound(int d, int n);

/// C(d+n-1, d-1): dimension of the permutation-fixed subspace of (C^d)^n.
Integer sym_dimension(int d, int n);

/// 4 log2(d+1): entropy-rate cap certified by the support cap.
double entropy_rate_upper(int d);

/// log2 d - 2 d log2(n+1) / n, unclamped (may be negative).
double entropy_rate_lower(int d, int n);

/// Continuity modulus 2 x log2(D-1) + 2 H2(x) for dimension D >= 2.
double audenaert_f(double eps, const Integer& D);

enum class AudenaertDim {
  kFullSpace,  // D = d^n, the space the perturbed states live on
  kLocal,      // D = d, the literal single-letter reading
};

/// Entropy-rate floor for approximate twirls:
/// entropy_rate_lower(d, n) - f(min(eps, 1), D) / n. Epsilon beyond 1 is
/// clamped to 1 (trace-distance domain of the continuity bound).
double entropy_rate_lower_approx(int d, int n, double eps,
                                 AudenaertDim dim = AudenaertDim::kFullSpace);

/// Floor for channel designs: entropy_rate_lower(dK * dH, n).
double channel_entropy_rate_lower(int dK, int dH, int n);

/// sum_x p(x) S(rho_x) + H(p) - S(sum_x p(x) rho_x); never below -1e-9.
double almost_convexity_gap(const std::vector<double>& p,
                            const std::vector<FloatOperator>& states);

struct BoundsReport {
  int d = 0;
  int n = 0;
  std::optional<double> eps;

  Integer eq_support_upper;         // d^{4n} + 1
  Integer eq_support_lower;         // d^n - C(d+n-1, d-1)
  // The floor formula can exceed n! at small n (already the full group
  // carries a design there); the floor verdict is suspended and flagged
  // instead of asserted in that regime.
  bool support_floor_exceeds_group = false;
  Integer sym_dim;                  // C(d+n-1, d-1)
  double eq_entropy_rate_upper = 0;
  double eq_entropy_rate_lower_raw = 0;
  double eq_entropy_rate_lower_clamped = 0;
  bool entropy_lower_vacuous = false;  // raw floor below zero
  double eq_channel_entropy_rate_lower = 0;  // dK = dH = d
  std::optional<double> eq_entropy_rate_lower_approx;
  bool eps_clamped = false;

  // present when a design was supplied
  std::optional<std::size_t> design_support;
  std::optional<double> design_entropy_bits;
  std::optional<double> design_entropy_rate;
  std::optional<bool> verdict_entropy_rate;  // H(w)/n >= raw floor - 1e-9
  std::optional<bool> verdict_support_bracket;

  std::string to_json() const;
};

/// Evaluates every closed-form bound at (d, n), plus the entropy and support
/// verdicts of a design when supplied. A supplied design is re-verified
/// first and rejected with ContractError if it fails.
BoundsReport bounds_report(int d, int n, const std::optional<WeightedDesign>& design = {},
                           std::optional<double> eps = {});

}  // namespace symtwirl
