#include "symtwirl/approx_channel.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "symtwirl/bounds.hpp"
#include "symtwirl/errors.hpp"
#include "symtwirl/typestat.hpp"

namespace symtwirl {

ChannelRep ChannelRep::identity(std::size_t dim) {
  ChannelRep n;
  n.dim_in = n.dim_out = dim;
  n.terms.push_back({Rational(1), ExactOperator::identity(dim)});
  return n;
}

ChannelRep ChannelRep::completely_depolarizing(std::size_t dim) {
  ChannelRep n;
  n.dim_in = n.dim_out = dim;
  const Rational w(Integer(1), Integer(dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      n.terms.push_back({w, ExactOperator::matrix_unit(dim, i, j)});
  return n;
}

ChannelRep ChannelRep::pinching(std::size_t dim) {
  ChannelRep n;
  n.dim_in = n.dim_out = dim;
  for (std::size_t i = 0; i < dim; ++i)
    n.terms.push_back({Rational(1), ExactOperator::matrix_unit(dim, i, i)});
  return n;
}

ExactOperator random_rational_unitary(std::size_t dim, std::mt19937_64& rng) {
  ExactOperator u = ExactOperator::identity(dim);
  // two Householder reflections keep entries small while mixing everything
  for (int rep = 0; rep < 2; ++rep) {
    std::vector<ComplexRational> v(dim);
    Rational norm2 = 0;
    bool nonzero = false;
    for (auto& e : v) {
      e = random_complex_rational(rng);
      norm2 += e.re * e.re + e.im * e.im;
      nonzero = nonzero || !e.is_zero();
    }
    if (!nonzero) continue;
    ExactOperator h = ExactOperator::identity(dim);
    const Rational scale = Rational(2) / norm2;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        h.at(i, j) -= scale * (v[i] * v[j].conj());
    u = h * u;
  }
  // unit-modulus rational phases on the diagonal
  static const ComplexRational phases[] = {
      ComplexRational(1, 0), ComplexRational(0, 1), ComplexRational(-1, 0),
      ComplexRational(Rational(3, 5), Rational(4, 5)),
      ComplexRational(Rational(-4, 5), Rational(3, 5))};
  ExactOperator ph(dim);
  std::uniform_int_distribution<int> pick(0, 4);
  for (std::size_t i = 0; i < dim; ++i) ph.at(i, i) = phases[pick(rng)];
  return ph * u;
}

ChannelRep ChannelRep::random_mixed_unitary(std::size_t dim, int num_terms,
                                            std::mt19937_64& rng) {
  ChannelRep n;
  n.dim_in = n.dim_out = dim;
  std::uniform_int_distribution<int> numer(1, 9);
  std::vector<Rational> weights(static_cast<std::size_t>(num_terms));
  Rational total = 0;
  for (auto& w : weights) {
    w = numer(rng);
    total += w;
  }
  for (int i = 0; i < num_terms; ++i)
    n.terms.push_back({weights[static_cast<std::size_t>(i)] / total,
                       random_rational_unitary(dim, rng)});
  return n;
}

bool ChannelRep::is_complete() const {
  ExactOperator acc(dim_in);
  for (const auto& [w, k] : terms) acc += w * (k.adjoint() * k);
  return acc == ExactOperator::identity(dim_in);
}

ExactOperator ChannelRep::apply(const ExactOperator& x) const {
  if (x.dim() != dim_in) throw DimensionError("channel input dimension mismatch");
  ExactOperator out(dim_out);
  for (const auto& [w, k] : terms) out += w * (k * x * k.adjoint());
  return out;
}

ExactOperator channel_choi_exact(const ChannelRep& n) {
  const std::size_t din = n.dim_in, dout = n.dim_out;
  if (dout * din > kDefaultMaxOperatorDim)
    throw SizeLimitError("Choi state dimension exceeds limit");
  ExactOperator choi(dout * din);
  const Rational norm(Integer(1), Integer(din));
  for (std::size_t x = 0; x < din; ++x)
    for (std::size_t y = 0; y < din; ++y) {
      const ExactOperator image = n.apply(ExactOperator::matrix_unit(din, x, y));
      for (std::size_t a = 0; a < dout; ++a)
        for (std::size_t b = 0; b < dout; ++b) {
          const ComplexRational& v = image.at(a, b);
          if (!v.is_zero()) choi.at(a * din + x, b * din + y) += norm * v;
        }
    }
  return choi;
}

FloatOperator channel_choi(const ChannelRep& n) { return to_float(channel_choi_exact(n)); }

bool covariance_identity_check(const ChannelRep& n, const Permutation& pi, int dH, int dK) {
  const int letters = pi.n();
  const std::size_t din = tensor_dimension(dH, letters);
  const std::size_t dout = tensor_dimension(dK, letters);
  if (n.dim_in != din || n.dim_out != dout)
    throw DimensionError("channel does not map n-fold dH systems to n-fold dK systems");

  const ExactOperator u_out = permutation_matrix(pi, dK);
  const ExactOperator v_in_inv = permutation_matrix(inverse(pi), dH);
  ChannelRep composed;
  composed.dim_in = din;
  composed.dim_out = dout;
  for (const auto& [w, k] : n.terms) composed.terms.push_back({w, u_out * k * v_in_inv});

  const ExactOperator lhs = channel_choi_exact(composed);
  const ExactOperator base = channel_choi_exact(n);

  const auto table_out = action_index_table(pi, dK);
  const auto table_in = action_index_table(pi, dH);
  ExactOperator rhs(dout * din);
  for (std::size_t a = 0; a < dout; ++a)
    for (std::size_t x = 0; x < din; ++x)
      for (std::size_t b = 0; b < dout; ++b)
        for (std::size_t y = 0; y < din; ++y)
          rhs.at(table_out[a] * din + table_in[x], table_out[b] * din + table_in[y]) =
              base.at(a * din + x, b * din + y);
  return lhs == rhs;
}

bool verify_channel_design(const DistributionOverSn& candidate, int dH, int dK,
                           int spot_trials, std::uint64_t seed) {
  if (dH < 1 || dK < 1) throw ContractError("dimensions must be positive");
  const int n = candidate.n();
  const ConstraintSystem sys = ConstraintSystem::build(dK * dH, n);
  const bool as_state_design = verify_design(candidate, sys).ok;

  const std::size_t din = tensor_dimension(dH, n);
  const std::size_t dout = tensor_dimension(dK, n);
  if (spot_trials > 0 && din <= 16 && dout <= 16) {
    std::mt19937_64 rng(seed);
    const auto perms = enumerate_permutations(n);
    const Rational u(Integer(1), factorial(static_cast<unsigned>(n)));
    for (int t = 0; t < spot_trials; ++t) {
      const ChannelRep chan = ChannelRep::random_mixed_unitary(din, 2, rng);
      // both averages compared through their exact Choi states
      ExactOperator diff(dout * din);
      for (const auto& pi : perms) {
        const Rational coeff = u - candidate.weight(pi);
        if (coeff == 0) continue;
        ChannelRep composed;
        composed.dim_in = din;
        composed.dim_out = dout;
        const ExactOperator u_out = permutation_matrix(pi, dK);
        const ExactOperator v_in_inv = permutation_matrix(inverse(pi), dH);
        for (const auto& [w, k] : chan.terms)
          composed.terms.push_back({w, u_out * k * v_in_inv});
        diff += coeff * channel_choi_exact(composed);
      }
      const bool direct = diff.is_zero();
      if (direct != as_state_design)
        throw std::logic_error("channel-design reduction disagrees with the direct check");
    }
  }
  return as_state_design;
}

Rational diamond_upper_via_l1(const DistributionOverSn& q) {
  const Rational u(Integer(1), factorial(static_cast<unsigned>(q.n())));
  Rational sum = 0;
  for (const auto& pi : enumerate_permutations(q.n())) {
    const Rational diff = u - q.weight(pi);
    sum += diff < 0 ? Rational(-diff) : diff;
  }
  return sum;
}

DiamondLower diamond_lower_via_inputs(const DistributionOverSn& q, int d,
                                      std::size_t max_dim) {
  const int n = q.n();
  const std::size_t dim = tensor_dimension(d, n);
  if (dim > max_dim) throw SizeLimitError("d^n exceeds limit");

  DiamondLower best;

  for (const TypeDistribution& mu : enumerate_types(n, d)) {
    const std::size_t b = tuple_to_index(type_representative(mu));
    const ExactOperator e = ExactOperator::matrix_unit(dim, b, b);
    const ExactOperator delta = uniform_twirl(e, d, n) - weighted_twirl(q, e, d);
    const double value = trace_norm(to_float(delta));
    if (value > best.value) {
      std::ostringstream label;
      label << "type (";
      for (std::size_t i = 0; i < mu.counts().size(); ++i)
        label << (i ? "," : "") << mu.counts()[i];
      label << ")";
      best.value = value;
      best.witness = label.str();
    }
  }

  if (dim * dim <= max_dim) {
    // difference channel applied to half of the maximally entangled state,
    // accumulated exactly so that true designs give a hard zero
    const Rational amp(Integer(1), Integer(dim));
    const Rational u(Integer(1), factorial(static_cast<unsigned>(n)));
    std::map<std::uint64_t, Rational> entries;
    for (const auto& pi : enumerate_permutations(n)) {
      const Rational coeff = u - q.weight(pi);
      if (coeff == 0) continue;
      const auto table = action_index_table(pi, d);
      const Rational mass = coeff * amp;
      for (std::size_t x = 0; x < dim; ++x)
        for (std::size_t y = 0; y < dim; ++y)
          entries[static_cast<std::uint64_t>(x * dim + table[x]) * (dim * dim) +
                  (y * dim + table[y])] += mass;
    }
    FloatOperator t = FloatOperator::Zero(static_cast<Eigen::Index>(dim * dim),
                                          static_cast<Eigen::Index>(dim * dim));
    for (const auto& [key, v] : entries)
      t(static_cast<Eigen::Index>(key / (dim * dim)),
        static_cast<Eigen::Index>(key % (dim * dim))) = to_double(v);
    const double value = trace_norm(t);
    if (value > best.value) {
      best.value = value;
      best.witness = "maximally entangled";
    }
  }
  if (best.value == 0.0) best.witness = "none (all probes agree)";
  return best;
}

DiamondBracket diamond_bracket(const DistributionOverSn& q, int d) {
  DiamondBracket bracket;
  const DiamondLower lower = diamond_lower_via_inputs(q, d);
  bracket.lower = lower.value;
  bracket.upper = to_double(diamond_upper_via_l1(q));
  bracket.witness = lower.witness;
  if (bracket.lower > bracket.upper + 1e-9)
    throw std::logic_error("diamond bracket inverted");
  return bracket;
}

std::string ApproxDesignReport::to_json() const {
  nlohmann::json j;
  j["H_rate"] = entropy_rate;
  j["eps_lower"] = eps_lower;
  j["eps_upper"] = eps_upper;
  j["rhs_at_lower"] = rhs_at_lower;
  j["rhs_at_upper"] = rhs_at_upper;
  j["vacuous"] = vacuous;
  return j.dump(2) + "\n";
}

ApproxDesignReport approx_design_report(const DistributionOverSn& q, int d) {
  const int n = q.n();
  const DiamondBracket bracket = diamond_bracket(q, d);
  ApproxDesignReport r;
  r.entropy_rate = shannon_entropy(q) / static_cast<double>(n);
  r.eps_lower = bracket.lower;
  r.eps_upper = std::min(bracket.upper, 2.0);
  r.witness = bracket.witness;
  // on a one-dimensional space entropies cannot move, so the continuity
  // penalty is vacuous and the floor is the plain rate floor
  const auto floor_at = [&](double eps) {
    return d == 1 ? entropy_rate_lower(d, n) : entropy_rate_lower_approx(d, n, eps);
  };
  r.rhs_at_lower = floor_at(r.eps_lower);
  r.rhs_at_upper = floor_at(r.eps_upper);
  r.vacuous = r.rhs_at_upper < 0.0;
  r.consistent = r.entropy_rate >= r.rhs_at_upper - 1e-9;
  if (!r.consistent)
    throw std::logic_error("entropy rate fell below the certified floor");
  return r;
}

}  // namespace symtwirl
