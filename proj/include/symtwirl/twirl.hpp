#pragma once

#include <map>

#include "symtwirl/exact_operator.hpp"
#include "symtwirl/permutation.hpp"
#include "symtwirl/rational.hpp"
#include "symtwirl/typestat.hpp"

namespace symtwirl {

/// Probability distribution over S_n with exact rational weights: strictly
/// positive off the implicit zeros and summing to exactly one. The map is
/// keyed in lexicographic one-line order, so iteration is deterministic.
class DistributionOverSn {
 public:
  DistributionOverSn(int n, std::map<Permutation, Rational> weights);

  static DistributionOverSn uniform(int n);
  static DistributionOverSn point_mass(const Permutation& pi);

  int n() const { return n_; }
  std::size_t support_size() const { return weights_.size(); }
  const std::map<Permutation, Rational>& weights() const { return weights_; }
  /// Weight of pi, zero when outside the support.
  Rational weight(const Permutation& pi) const;

  friend bool operator==(const DistributionOverSn& a, const DistributionOverSn& b) {
    return a.n_ == b.n_ && a.weights_ == b.weights_;
  }

 private:
  int n_;
  std::map<Permutation, Rational> weights_;
};

enum class TwirlPath {
  kAuto,   // orbit path for n >= 6, naive below
  kNaive,  // explicit average over all n! conjugations; the ground truth
  kOrbit,  // entry averaging over diagonal-action orbits of index pairs
};

/// (1/n!) sum over S_n of U^pi A U^pi{dagger}, exactly.
ExactOperator uniform_twirl(const ExactOperator& a, int d, int n,
                            TwirlPath path = TwirlPath::kAuto);

/// sum_pi q(pi) U^pi A U^pi{dagger}, exactly.
ExactOperator weighted_twirl(const DistributionOverSn& q, const ExactOperator& a, int d);

/// Diagonal 0/1 projector onto span{ e_x : x in the type class of mu }.
ExactOperator type_projector(const TypeDistribution& mu, int d,
                             std::size_t max_dim = kDefaultMaxOperatorDim);

}  // namespace symtwirl
