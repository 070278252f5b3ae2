#include "symtwirl/typestat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "symtwirl/errors.hpp"

namespace symtwirl {

TypeDistribution::TypeDistribution(int n, std::vector<int> counts)
    : n_(n), counts_(std::move(counts)) {
  if (n_ < 1) throw ContractError("type needs n >= 1");
  if (counts_.empty()) throw ContractError("type needs at least one letter");
  int sum = 0;
  for (int c : counts_) {
    if (c < 0) throw ContractError("negative count in type");
    sum += c;
  }
  if (sum != n_) throw ContractError("type counts do not sum to n");
}

std::vector<double> TypeDistribution::probabilities() const {
  std::vector<double> p(counts_.size());
  for (std::size_t i = 0; i < counts_.size(); ++i)
    p[i] = static_cast<double>(counts_[i]) / static_cast<double>(n_);
  return p;
}

double TypeDistribution::entropy_bits() const {
  double h = 0.0;
  for (int c : counts_) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / static_cast<double>(n_);
    h -= p * std::log2(p);
  }
  return h < 0.0 ? 0.0 : h;
}

std::vector<TypeDistribution> enumerate_types(int n, int d) {
  if (n < 1 || d < 1) throw ContractError("n and d must be positive");
  if (binomial(static_cast<unsigned>(n + d - 1), static_cast<unsigned>(d - 1)) > 2000000)
    throw SizeLimitError("too many types to enumerate");
  std::vector<TypeDistribution> out;
  std::vector<int> counts(static_cast<std::size_t>(d), 0);
  // Recursively assign counts left to right; lexicographic by construction.
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == d - 1) {
      counts[static_cast<std::size_t>(pos)] = remaining;
      out.emplace_back(n, counts);
      return;
    }
    for (int c = 0; c <= remaining; ++c) {
      counts[static_cast<std::size_t>(pos)] = c;
      self(self, pos + 1, remaining - c);
    }
  };
  rec(rec, 0, n);
  return out;
}

Integer type_class_size(const TypeDistribution& mu) {
  Integer size = factorial(static_cast<unsigned>(mu.n()));
  for (int c : mu.counts()) size /= factorial(static_cast<unsigned>(c));
  return size;
}

IndexTuple type_representative(const TypeDistribution& mu) {
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(mu.n()));
  for (int letter = 1; letter <= mu.d(); ++letter)
    for (int k = 0; k < mu.counts()[static_cast<std::size_t>(letter - 1)]; ++k)
      word.push_back(letter);
  return IndexTuple{mu.d(), std::move(word)};
}

std::vector<IndexTuple> type_class(const TypeDistribution& mu, std::size_t max_words) {
  const Integer size = type_class_size(mu);
  if (size > Integer(max_words))
    throw SizeLimitError("type class of size " + size.str() + " exceeds enumeration limit");
  std::vector<IndexTuple> out;
  std::vector<int> word = type_representative(mu).entries;  // sorted = lex first
  do {
    out.push_back(IndexTuple{mu.d(), word});
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

TypeDistribution type_of(const IndexTuple& x) {
  std::vector<int> counts(static_cast<std::size_t>(x.d), 0);
  for (int e : x.entries) ++counts[static_cast<std::size_t>(e - 1)];
  return TypeDistribution(x.n(), std::move(counts));
}

TypeDistribution max_entropy_type(int n, int d) {
  if (n < 1 || d < 1) throw ContractError("n and d must be positive");
  std::vector<int> counts(static_cast<std::size_t>(d), n / d);
  for (int i = 0; i < n % d; ++i) ++counts[static_cast<std::size_t>(i)];
  return TypeDistribution(n, std::move(counts));
}

}  // namespace symtwirl
