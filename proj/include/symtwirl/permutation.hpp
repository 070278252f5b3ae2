#pragma once

#include <cstddef>
#include <vector>

namespace symtwirl {

inline constexpr int kDefaultMaxPermutationLetters = 8;

/// Element of S_n in one-line notation: images[i-1] = pi(i), one-based values.
class Permutation {
 public:
  /// Validates that images is a bijection of {1..n}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int n() const { return static_cast<int>(images_.size()); }
  /// pi(i) for one-based i.
  int image(int i) const { return images_[static_cast<std::size_t>(i) - 1]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;

  /// Cycle count including fixed points.
  int cycle_count() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  /// Lexicographic order on image lists; the canonical enumeration order.
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.images_ < b.images_;
  }

 private:
  std::vector<int> images_;
};

/// All n! permutations in lexicographic one-line order. Deterministic.
std::vector<Permutation> enumerate_permutations(int n,
                                                int max_letters = kDefaultMaxPermutationLetters);

/// result(i) = outer(inner(i)).
Permutation compose(const Permutation& outer, const Permutation& inner);

Permutation inverse(const Permutation& pi);

/// Word over {1..d} of length n; the exponent tuple of a tensor basis vector.
struct IndexTuple {
  int d = 1;
  std::vector<int> entries;  // one-based letters

  int n() const { return static_cast<int>(entries.size()); }

  friend bool operator==(const IndexTuple& a, const IndexTuple& b) {
    return a.d == b.d && a.entries == b.entries;
  }
  friend bool operator<(const IndexTuple& a, const IndexTuple& b) {
    return a.entries < b.entries;
  }
};

/// Validating constructor helper.
IndexTuple make_tuple(int d, std::vector<int> entries);

/// Component i of the image carries entry pi(i): result[i] = x[pi(i)].
IndexTuple act_on_tuple(const Permutation& pi, const IndexTuple& x);

/// Big-endian mixed-radix encoding: entry 1 is the most significant digit.
/// Bijection between [d]^n tuples and {0 .. d^n - 1}.
std::size_t tuple_to_index(const IndexTuple& x);
IndexTuple index_to_tuple(std::size_t value, int d, int n);

/// Lookup table t with t[tuple_to_index(x)] = tuple_to_index(act_on_tuple(pi, x)),
/// the basis relabeling induced by pi on dimension d^n.
std::vector<std::size_t> action_index_table(const Permutation& pi, int d);

/// d^n, guarded against overflow of std::size_t.
std::size_t tensor_dimension(int d, int n);

}  // namespace symtwirl
