#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symtwirl/permutation.hpp"
#include "symtwirl/rational.hpp"
#include "symtwirl/rational_linalg.hpp"
#include "symtwirl/twirl.hpp"

namespace symtwirl {

inline constexpr int kDefaultMaxConstraintLetters = 7;

/// Weighted subset of S_n whose weighted twirl reproduces the uniform twirl
/// on every operator of (C^d)^{tensor n}. Positivity and exact unit sum are
/// enforced by the underlying distribution.
struct WeightedDesign {
  int d;
  DistributionOverSn distribution;

  int n() const { return distribution.n(); }
  std::size_t support_size() const { return distribution.support_size(); }
};

/// Canonical zipped-tuple pattern: a length-n word over at most min(d^2, n)
/// symbols in first-occurrence (restricted-growth) form. Each pattern stands
/// for every pair of index tuples whose entrywise zip relabels to it.
using Pattern = std::vector<int>;

std::string pattern_string(const Pattern& p);

/// All canonical patterns for given d and n, lexicographically ordered.
std::vector<Pattern> enumerate_patterns(int d, int n);

/// Compressed linear system characterizing weighted designs: one row block
/// per canonical pattern P, one row per orbit element t of P, with 0/1 entry
/// (row (P,t), column pi) = [pi applied to P equals t]. A distribution omega
/// satisfies all blocks with the uniform right-hand side iff its weighted
/// twirl equals the uniform twirl on every operator.
class ConstraintSystem {
 public:
  static ConstraintSystem build(int d, int n, int max_letters = kDefaultMaxConstraintLetters);

  int d() const { return d_; }
  int n() const { return n_; }
  const std::vector<Pattern>& patterns() const { return patterns_; }
  /// Right-hand side value shared by every row of pattern block p:
  /// (product of letter multiplicities factorial) / n!.
  const Rational& target_value(std::size_t p) const { return target_value_[p]; }
  const Integer& orbit_size(std::size_t p) const { return orbit_size_[p]; }
  Integer row_count() const;

  /// Fully materialized 0/1 matrix with its exact right-hand side, rows in
  /// (pattern, lexicographic image) order and columns in lexicographic
  /// permutation order. Only for small instances and oracle tests.
  struct Dense {
    std::vector<std::size_t> row_pattern;        // pattern index per row
    std::vector<std::vector<int>> row_image;     // image word per row
    std::vector<std::vector<int>> matrix;        // rows x n! of {0,1}
    std::vector<Rational> target;
  };
  Dense materialize(std::size_t max_rows = 20000) const;

 private:
  ConstraintSystem(int d, int n) : d_(d), n_(n) {}

  int d_;
  int n_;
  std::vector<Pattern> patterns_;
  std::vector<Rational> target_value_;
  std::vector<Integer> orbit_size_;
};

/// Number of canonical patterns fixed by relabeling positions along tau,
/// i.e. with act_on_tuple(tau, P) = P. Counts coarsenings of the cycle
/// partition of tau into at most min(d^2, n) blocks.
Integer fixed_pattern_count(const Permutation& tau, int d);

struct VerifyResult {
  bool ok = true;
  // first violated row, in (pattern, lexicographic image) order
  std::string pattern;
  std::vector<int> image;
  Rational expected;
  Rational actual;
};

/// Exact acceptance test: the accumulated weight of every (pattern, image)
/// row equals the uniform target.
VerifyResult verify_design(const DistributionOverSn& candidate, const ConstraintSystem& sys);

/// Independent operational route: compares weighted against uniform twirl
/// exactly on `trials` random rational operators, and on every matrix unit
/// when d^n <= 16.
bool verify_design_operational(const DistributionOverSn& candidate, int d, int trials,
                               std::uint64_t seed = 0,
                               std::size_t max_dim = kDefaultMaxOperatorDim);

/// Support reduction along exact null-space directions of the active
/// constraint columns (augmented with the normalization row) until none
/// remains. Deterministic: directions come from the first free column of
/// the reduced echelon form; when several weights vanish together the
/// lexicographically largest permutation leaves the support.
WeightedDesign caratheodory_reduce(const DistributionOverSn& start, const ConstraintSystem& sys);

/// True iff the uniform distribution is the only solution of the system,
/// i.e. the kernel of the column matrix augmented with the all-ones row is
/// trivial. Holds in particular whenever d^2 >= n.
bool is_uniform_forced(const ConstraintSystem& sys);

struct MinimalSearchResult {
  std::optional<WeightedDesign> design;
  bool certified_minimal = false;
  std::uint64_t feasibility_solves = 0;
};

/// Ground-truth smallest-support search for n <= 4: subsets of S_n by
/// increasing size, exact nonnegative feasibility per subset. Reports an
/// explicit unknown when the budget runs out.
MinimalSearchResult minimal_support_exhaustive(const ConstraintSystem& sys,
                                               std::uint64_t budget = 1000000);

// ---------------------------------------------------------------------------
// Raw (uncompressed) route, tiny instances only: the sparse coordinate set of
// the full quadruple-indexed feature vector of a permutation.
// ---------------------------------------------------------------------------

struct FeatureVector {
  Permutation pi;
  std::vector<std::uint64_t> coords;  // sorted keys over (w, x, y, z) quadruples
};

FeatureVector raw_feature_vector(const Permutation& pi, int d);

/// Direct check that the candidate reproduces the uniform average of the raw
/// feature vectors. Oracle for the compressed verifier.
bool verify_design_raw(const DistributionOverSn& candidate, int d);

// ---------------------------------------------------------------------------
// Persistence: {"d":..,"n":..,"weights":[{"perm":[..],"w":"p/q"},..]} with
// weights in lexicographic permutation order; round-trips byte-exactly.
// ---------------------------------------------------------------------------

std::string design_to_json(const WeightedDesign& design);
WeightedDesign design_from_json(const std::string& text);
void save_design(const WeightedDesign& design, const std::string& path);
WeightedDesign load_design(const std::string& path);

}  // namespace symtwirl
