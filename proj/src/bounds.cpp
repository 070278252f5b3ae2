#include "symtwirl/bounds.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "symtwirl/errors.hpp"

namespace symtwirl {

double shannon_entropy(const std::vector<double>& p) {
  if (p.empty()) throw ContractError("empty probability vector");
  double sum = 0.0;
  for (double x : p) {
    if (x < -1e-12) throw ContractError("negative probability");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw ContractError("probabilities do not sum to 1");
  double h = 0.0;
  for (double x : p)
    if (x > 0.0) h -= x * std::log2(x);
  return h < 0.0 ? 0.0 : h;
}

double shannon_entropy(const DistributionOverSn& q) {
  double h = 0.0;
  for (const auto& [pi, w] : q.weights()) {
    const double x = to_double(w);
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h < 0.0 ? 0.0 : h;
}

double binary_entropy(double x) {
  if (x < 0.0 || x > 1.0) throw ContractError("binary entropy argument outside [0, 1]");
  double h = 0.0;
  if (x > 0.0) h -= x * std::log2(x);
  if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
  return h < 0.0 ? 0.0 : h;
}

Integer support_upper_bound(int d, int n) {
  if (d < 1 || n < 1) throw ContractError("d and n must be positive");
  return integer_pow(Integer(d), static_cast<unsigned>(4 * n)) + 1;
}

Integer sym_dimension(int d, int n) {
  if (d < 1 || n < 1) throw ContractError("d and n must be positive");
  return binomial(static_cast<unsigned>(d + n - 1), static_cast<unsigned>(d - 1));
}

Integer support_lower_bound(int d, int n) {
  return integer_pow(Integer(d), static_cast<unsigned>(n)) - sym_dimension(d, n);
}

double entropy_rate_upper(int d) {
  if (d < 1) throw ContractError("d must be positive");
  return 4.0 * std::log2(static_cast<double>(d) + 1.0);
}

double entropy_rate_lower(int d, int n) {
  if (d < 1 || n < 1) throw ContractError("d and n must be positive");
  return std::log2(static_cast<double>(d)) -
         2.0 * static_cast<double>(d) * std::log2(static_cast<double>(n) + 1.0) /
             static_cast<double>(n);
}

double audenaert_f(double eps, const Integer& D) {
  if (eps < 0.0 || eps > 1.0) throw ContractError("continuity modulus argument outside [0, 1]");
  if (D < 2) throw ContractError("continuity modulus needs dimension >= 2");
  const double logd = std::log2((D - 1).convert_to<double>());
  return 2.0 * eps * logd + 2.0 * binary_entropy(eps);
}

double entropy_rate_lower_approx(int d, int n, double eps, AudenaertDim dim) {
  if (eps < 0.0 || eps > 2.0)
    throw ContractError("diamond-norm distance outside [0, 2]");
  const double clamped = std::min(eps, 1.0);
  const Integer D = dim == AudenaertDim::kFullSpace
                        ? integer_pow(Integer(d), static_cast<unsigned>(n))
                        : Integer(d);
  return entropy_rate_lower(d, n) - audenaert_f(clamped, D) / static_cast<double>(n);
}

double channel_entropy_rate_lower(int dK, int dH, int n) {
  if (dK < 1 || dH < 1) throw ContractError("dimensions must be positive");
  return entropy_rate_lower(dK * dH, n);
}

double almost_convexity_gap(const std::vector<double>& p,
                            const std::vector<FloatOperator>& states) {
  if (p.size() != states.size() || p.empty())
    throw ContractError("mixture needs matching nonempty weights and states");
  const double hp = shannon_entropy(p);
  const Eigen::Index dim = states.front().rows();
  FloatOperator mix = FloatOperator::Zero(dim, dim);
  double avg = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].rows() != dim || states[i].cols() != dim)
      throw ContractError("mixture states have unequal dimensions");
    avg += p[i] * von_neumann_entropy(states[i]);
    mix += p[i] * states[i];
  }
  return avg + hp - von_neumann_entropy(mix);
}

std::string BoundsReport::to_json() const {
  nlohmann::json j;
  j["d"] = d;
  j["n"] = n;
  if (eps) j["eps"] = *eps;
  j["eq4_support_upper"] = eq_support_upper.str();
  j["eq17_support_lower"] = eq_support_lower.str();
  j["eq17_floor_exceeds_group"] = support_floor_exceeds_group;
  j["sym_dimension"] = sym_dim.str();
  j["eq9_entropy_rate_upper"] = eq_entropy_rate_upper;
  j["eq10_entropy_rate_lower_raw"] = eq_entropy_rate_lower_raw;
  j["eq10_entropy_rate_lower_clamped"] = eq_entropy_rate_lower_clamped;
  j["eq10_vacuous"] = entropy_lower_vacuous;
  j["eq16_channel_entropy_rate_lower"] = eq_channel_entropy_rate_lower;
  if (eq_entropy_rate_lower_approx) {
    j["eq13_entropy_rate_lower_approx"] = *eq_entropy_rate_lower_approx;
    j["eq13_eps_clamped"] = eps_clamped;
  }
  if (design_support) {
    j["design_support"] = *design_support;
    j["design_entropy_bits"] = *design_entropy_bits;
    j["design_entropy_rate"] = *design_entropy_rate;
    j["verdict_entropy_rate"] = *verdict_entropy_rate;
    j["verdict_support_bracket"] = *verdict_support_bracket;
  }
  return j.dump(2) + "\n";
}

BoundsReport bounds_report(int d, int n, const std::optional<WeightedDesign>& design,
                           std::optional<double> eps) {
  if (d < 1 || n < 1) throw ContractError("d and n must be positive");
  BoundsReport r;
  r.d = d;
  r.n = n;
  r.eps = eps;
  r.eq_support_upper = support_upper_bound(d, n);
  r.eq_support_lower = support_lower_bound(d, n);
  r.support_floor_exceeds_group = r.eq_support_lower > factorial(static_cast<unsigned>(n));
  r.sym_dim = sym_dimension(d, n);
  r.eq_entropy_rate_upper = entropy_rate_upper(d);
  r.eq_entropy_rate_lower_raw = entropy_rate_lower(d, n);
  r.eq_entropy_rate_lower_clamped = std::max(0.0, r.eq_entropy_rate_lower_raw);
  r.entropy_lower_vacuous = r.eq_entropy_rate_lower_raw < 0.0;
  r.eq_channel_entropy_rate_lower = channel_entropy_rate_lower(d, d, n);
  if (eps) {
    if (d >= 2) {
      r.eq_entropy_rate_lower_approx = entropy_rate_lower_approx(d, n, *eps);
      r.eps_clamped = *eps > 1.0;
    }
  }

  if (design) {
    if (design->d != d || design->n() != n)
      throw ContractError("design parameters do not match the report request");
    const ConstraintSystem sys = ConstraintSystem::build(d, n);
    if (!verify_design(design->distribution, sys).ok)
      throw ContractError("bounds report requires a verified design");
    r.design_support = design->support_size();
    r.design_entropy_bits = shannon_entropy(design->distribution);
    r.design_entropy_rate = *r.design_entropy_bits / static_cast<double>(n);
    r.verdict_entropy_rate = *r.design_entropy_rate >= r.eq_entropy_rate_lower_raw - 1e-9;
    const Integer support(design->support_size());
    Integer cap = factorial(static_cast<unsigned>(n));
    if (r.eq_support_upper < cap) cap = r.eq_support_upper;
    r.verdict_support_bracket =
        support <= cap && (r.support_floor_exceeds_group || support >= r.eq_support_lower);
  }
  return r;
}

}  // namespace symtwirl
