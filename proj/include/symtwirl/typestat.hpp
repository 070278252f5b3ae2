#pragma once

#include <vector>

#include "symtwirl/permutation.hpp"
#include "symtwirl/rational.hpp"

namespace symtwirl {

/// Empirical distribution of a length-n word over {1..d}: occurrence counts
/// per letter, summing to n.
class TypeDistribution {
 public:
  TypeDistribution(int n, std::vector<int> counts);

  int n() const { return n_; }
  int d() const { return static_cast<int>(counts_.size()); }
  const std::vector<int>& counts() const { return counts_; }

  std::vector<double> probabilities() const;
  /// Shannon entropy of counts/n in bits.
  double entropy_bits() const;

  friend bool operator==(const TypeDistribution& a, const TypeDistribution& b) {
    return a.n_ == b.n_ && a.counts_ == b.counts_;
  }

 private:
  int n_;
  std::vector<int> counts_;
};

/// All compositions of n into d nonnegative parts, lexicographically by
/// count vector. Cardinality C(n+d-1, d-1).
std::vector<TypeDistribution> enumerate_types(int n, int d);

/// Exact multinomial n! / prod(counts!).
Integer type_class_size(const TypeDistribution& mu);

/// The words with empirical counts mu, in lexicographic order.
std::vector<IndexTuple> type_class(const TypeDistribution& mu,
                                   std::size_t max_words = 1u << 20);

/// Lexicographically first word of the type class.
IndexTuple type_representative(const TypeDistribution& mu);

TypeDistribution type_of(const IndexTuple& x);

/// The balanced type (counts differ by at most one, earlier letters carry
/// the extra); attains the maximum entropy over all n-types.
TypeDistribution max_entropy_type(int n, int d);

}  // namespace symtwirl
