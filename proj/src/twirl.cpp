#include "symtwirl/twirl.hpp"

#include <string>
#include <unordered_map>

#include "symtwirl/errors.hpp"

namespace symtwirl {

DistributionOverSn::DistributionOverSn(int n, std::map<Permutation, Rational> weights)
    : n_(n), weights_(std::move(weights)) {
  if (n_ < 1) throw ContractError("n must be positive");
  if (weights_.empty()) throw ContractError("distribution needs a nonempty support");
  Rational sum = 0;
  for (const auto& [pi, w] : weights_) {
    if (pi.n() != n_) throw DimensionError("support permutation has wrong n");
    if (w <= 0) throw ContractError("weights must be strictly positive");
    sum += w;
  }
  if (sum != 1) throw ContractError("weights must sum to exactly 1, got " + fraction_string(sum));
}

DistributionOverSn DistributionOverSn::uniform(int n) {
  const auto perms = enumerate_permutations(n);
  const Rational w(Integer(1), Integer(perms.size()));
  std::map<Permutation, Rational> weights;
  for (const auto& pi : perms) weights.emplace(pi, w);
  return DistributionOverSn(n, std::move(weights));
}

DistributionOverSn DistributionOverSn::point_mass(const Permutation& pi) {
  std::map<Permutation, Rational> weights;
  weights.emplace(pi, Rational(1));
  return DistributionOverSn(pi.n(), std::move(weights));
}

Rational DistributionOverSn::weight(const Permutation& pi) const {
  auto it = weights_.find(pi);
  return it == weights_.end() ? Rational(0) : it->second;
}

namespace {

ExactOperator uniform_twirl_naive(const ExactOperator& a, int d, int n) {
  const auto perms = enumerate_permutations(n);
  ExactOperator acc(a.dim());
  for (const auto& pi : perms) acc += conjugate_by_permutation(pi, a, d);
  return Rational(Integer(1), factorial(static_cast<unsigned>(n))) * acc;
}

// The twirled entry at (y, z) is the average of A over the diagonal orbit
// of the pair, which is indexed by the letter counts of the zipped word
// zip(y, z) over the d*d pair alphabet.
ExactOperator uniform_twirl_orbit(const ExactOperator& a, int d, int n) {
  const std::size_t dim = a.dim();
  const Integer nfact = factorial(static_cast<unsigned>(n));

  // orbit key: count vector over the d^2 pair letters, packed as a string
  auto orbit_key = [&](std::size_t y, std::size_t z) {
    const IndexTuple ty = index_to_tuple(y, d, n);
    const IndexTuple tz = index_to_tuple(z, d, n);
    std::string key(static_cast<std::size_t>(d) * static_cast<std::size_t>(d), '\0');
    for (int i = 0; i < n; ++i) {
      const int pair = (ty.entries[static_cast<std::size_t>(i)] - 1) * d +
                       (tz.entries[static_cast<std::size_t>(i)] - 1);
      ++key[static_cast<std::size_t>(pair)];
    }
    return key;
  };

  struct Bucket {
    ComplexRational sum;
    std::vector<std::pair<std::size_t, std::size_t>> members;
  };
  std::unordered_map<std::string, Bucket> buckets;
  for (std::size_t y = 0; y < dim; ++y)
    for (std::size_t z = 0; z < dim; ++z) {
      Bucket& b = buckets[orbit_key(y, z)];
      b.sum += a.at(y, z);
      b.members.emplace_back(y, z);
    }

  ExactOperator out(dim);
  for (auto& [key, bucket] : buckets) {
    Integer stab = 1;
    for (char c : key) stab *= factorial(static_cast<unsigned>(c));
    const Rational factor(stab, nfact);
    const ComplexRational value = factor * bucket.sum;
    for (auto [y, z] : bucket.members) out.at(y, z) = value;
  }
  return out;
}

}  // namespace

ExactOperator uniform_twirl(const ExactOperator& a, int d, int n, TwirlPath path) {
  if (a.dim() != tensor_dimension(d, n))
    throw DimensionError("operator dimension is not d^n");
  if (path == TwirlPath::kAuto) path = n >= 6 ? TwirlPath::kOrbit : TwirlPath::kNaive;
  return path == TwirlPath::kNaive ? uniform_twirl_naive(a, d, n) : uniform_twirl_orbit(a, d, n);
}

ExactOperator weighted_twirl(const DistributionOverSn& q, const ExactOperator& a, int d) {
  if (a.dim() != tensor_dimension(d, q.n()))
    throw DimensionError("operator dimension is not d^n");
  ExactOperator acc(a.dim());
  for (const auto& [pi, w] : q.weights()) acc += w * conjugate_by_permutation(pi, a, d);
  return acc;
}

ExactOperator type_projector(const TypeDistribution& mu, int d, std::size_t max_dim) {
  if (mu.d() != d) throw DimensionError("type alphabet does not match d");
  const std::size_t dim = tensor_dimension(d, mu.n());
  if (dim > max_dim) throw SizeLimitError("type projector dimension exceeds limit");
  ExactOperator p(dim);
  for (const auto& word : type_class(mu)) {
    const std::size_t b = tuple_to_index(word);
    p.at(b, b) = ComplexRational(Rational(1));
  }
  return p;
}

}  // namespace symtwirl
