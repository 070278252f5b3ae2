#include <doctest.h>

#include <cmath>

#include "symtwirl/bounds.hpp"
#include "symtwirl/errors.hpp"

using namespace symtwirl;

TEST_CASE("shannon entropy") {
  CHECK(shannon_entropy(std::vector<double>{1.0}) == doctest::Approx(0.0));
  CHECK(shannon_entropy(std::vector<double>{0.5, 0.25, 0.25}) == doctest::Approx(1.5));
  std::vector<double> u120(120, 1.0 / 120.0);
  CHECK(shannon_entropy(u120) == doctest::Approx(std::log2(120.0)));
  CHECK(shannon_entropy(u120) <= std::log2(120.0) + 1e-12);
  CHECK(shannon_entropy(DistributionOverSn::uniform(5)) == doctest::Approx(std::log2(120.0)));
  CHECK(shannon_entropy(DistributionOverSn::point_mass(Permutation::identity(4))) ==
        doctest::Approx(0.0));
  CHECK_THROWS_AS(shannon_entropy(std::vector<double>{0.5, 0.2}), ContractError);
  CHECK_THROWS_AS(shannon_entropy(std::vector<double>{1.5, -0.5}), ContractError);
}

TEST_CASE("binary entropy") {
  CHECK(binary_entropy(0.0) == doctest::Approx(0.0));
  CHECK(binary_entropy(1.0) == doctest::Approx(0.0));
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
  CHECK(binary_entropy(0.25) == doctest::Approx(0.811278124459133));
  CHECK_THROWS_AS(binary_entropy(-0.1), ContractError);
  CHECK_THROWS_AS(binary_entropy(1.1), ContractError);
}

TEST_CASE("support caps and floors") {
  CHECK(support_upper_bound(2, 1) == 17);
  CHECK(support_upper_bound(2, 2) == 257);
  CHECK(support_upper_bound(2, 5) == 1048577);
  CHECK(support_upper_bound(1, 3) == 2);
  CHECK(support_upper_bound(1, 7) == 2);

  CHECK(support_lower_bound(2, 2) == 1);
  CHECK(support_lower_bound(2, 3) == 4);
  CHECK(support_lower_bound(2, 5) == 26);

  CHECK(sym_dimension(2, 2) == 3);
  CHECK(sym_dimension(2, 5) == 6);
  CHECK(sym_dimension(3, 2) == 6);
  CHECK(sym_dimension(3, 3) == 10);
}

TEST_CASE("entropy rate cap") {
  CHECK(entropy_rate_upper(1) == doctest::Approx(4.0));
  CHECK(std::abs(entropy_rate_upper(2) - 4.0 * std::log2(3.0)) <= 1e-12);
  CHECK(entropy_rate_upper(3) == doctest::Approx(8.0));
}

TEST_CASE("entropy rate floor") {
  CHECK(std::abs(entropy_rate_lower(2, 5) - (1.0 - 0.8 * std::log2(6.0))) <= 1e-12);
  CHECK(entropy_rate_lower(1, 4) < 0.0);
  CHECK(entropy_rate_lower(2, 1000000) == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(entropy_rate_lower(2, 1000000) > 0.9999);
}

TEST_CASE("continuity modulus") {
  CHECK(audenaert_f(0.0, Integer(32)) == doctest::Approx(0.0));
  CHECK(audenaert_f(0.5, Integer(4)) == doctest::Approx(std::log2(3.0) + 2.0));
  CHECK(audenaert_f(1.0, Integer(2)) == doctest::Approx(0.0));
  CHECK_THROWS_AS(audenaert_f(1.5, Integer(4)), ContractError);
  CHECK_THROWS_AS(audenaert_f(0.5, Integer(1)), ContractError);
}

TEST_CASE("approximate entropy rate floor") {
  CHECK(entropy_rate_lower_approx(2, 5, 0.0) == entropy_rate_lower(2, 5));

  // hand-evaluated at eps = 0.1 with the full-space dimension 2^5
  const double f = 0.2 * std::log2(31.0) + 2.0 * binary_entropy(0.1);
  CHECK(entropy_rate_lower_approx(2, 5, 0.1) ==
        doctest::Approx(entropy_rate_lower(2, 5) - f / 5.0).epsilon(1e-12));
  CHECK(entropy_rate_lower_approx(2, 5, 0.1) == doctest::Approx(-1.4535).epsilon(1e-3));

  // a larger distance never raises the floor
  double prev = entropy_rate_lower_approx(2, 5, 0.0);
  for (double eps = 0.01; eps <= 0.5; eps += 0.01) {
    const double cur = entropy_rate_lower_approx(2, 5, eps);
    CHECK(cur <= prev + 1e-12);
    prev = cur;
  }

  // distances beyond 1 clamp to the trace-distance domain
  CHECK(entropy_rate_lower_approx(2, 5, 1.7) == entropy_rate_lower_approx(2, 5, 1.0));
  CHECK_THROWS_AS(entropy_rate_lower_approx(2, 5, 2.5), ContractError);

  // the literal single-letter dimension option
  CHECK(entropy_rate_lower_approx(2, 5, 0.1, AudenaertDim::kLocal) ==
        doctest::Approx(entropy_rate_lower(2, 5) -
                        (0.2 * std::log2(1.0) + 2.0 * binary_entropy(0.1)) / 5.0));
}

TEST_CASE("channel entropy rate floor") {
  CHECK(channel_entropy_rate_lower(2, 2, 5) == entropy_rate_lower(4, 5));
  CHECK(std::abs(channel_entropy_rate_lower(2, 2, 5) - (2.0 - 1.6 * std::log2(6.0))) <= 1e-12);
  CHECK(channel_entropy_rate_lower(1, 3, 7) == entropy_rate_lower(3, 7));
  CHECK(channel_entropy_rate_lower(2, 2, 1000000) == doctest::Approx(2.0).epsilon(1e-3));
}

TEST_CASE("uniform randomness rate clears the floor everywhere tested") {
  for (int n = 1; n <= 7; ++n) {
    double log2_fact = 0.0;
    for (int k = 2; k <= n; ++k) log2_fact += std::log2(static_cast<double>(k));
    for (int d = 1; d <= 4; ++d)
      CHECK(log2_fact / n >= entropy_rate_lower(d, n) - 1e-9);
  }
}

TEST_CASE("almost-convexity gap") {
  FloatOperator e0 = FloatOperator::Zero(2, 2);
  e0(0, 0) = 1.0;
  FloatOperator e1 = FloatOperator::Zero(2, 2);
  e1(1, 1) = 1.0;

  CHECK(almost_convexity_gap({1.0}, {e0}) == doctest::Approx(0.0));
  // orthogonal pure states mixed uniformly: equality case
  CHECK(almost_convexity_gap({0.5, 0.5}, {e0, e1}) == doctest::Approx(0.0));
  // identical states: the label entropy is pure overhead
  CHECK(almost_convexity_gap({0.5, 0.5}, {e0, e0}) == doctest::Approx(1.0));
  CHECK_THROWS_AS(almost_convexity_gap({0.5, 0.5}, {e0}), ContractError);
}

TEST_CASE("bounds report") {
  {
    const BoundsReport r = bounds_report(2, 5);
    CHECK(r.eq_support_upper == 1048577);
    CHECK(r.eq_support_lower == 26);
    CHECK(r.sym_dim == 6);
    CHECK(r.entropy_lower_vacuous);
    CHECK(!r.design_support.has_value());
    const std::string json = r.to_json();
    CHECK(json.find("1048577") != std::string::npos);
    CHECK(json.find("\"eq17_support_lower\": \"26\"") != std::string::npos);
  }
  {
    const BoundsReport r = bounds_report(2, 5, {}, 0.1);
    REQUIRE(r.eq_entropy_rate_lower_approx.has_value());
    CHECK(*r.eq_entropy_rate_lower_approx == doctest::Approx(-1.4535).epsilon(1e-3));
    CHECK(!r.eps_clamped);
    CHECK(bounds_report(2, 5, {}, 1.5).eps_clamped);
  }
  {
    const WeightedDesign uniform{2, DistributionOverSn::uniform(2)};
    const BoundsReport r = bounds_report(2, 2, uniform);
    CHECK(*r.design_entropy_rate == doctest::Approx(0.5));
    CHECK(r.eq_entropy_rate_lower_raw == doctest::Approx(1.0 - 2.0 * std::log2(3.0)));
    CHECK(*r.verdict_entropy_rate);
    CHECK(*r.verdict_support_bracket);
  }
  {
    // an unverified candidate is refused
    const WeightedDesign fake{2, DistributionOverSn::point_mass(Permutation::identity(2))};
    CHECK_THROWS_AS(bounds_report(2, 2, fake), ContractError);
  }
  {
    // the floor formula exceeds |S_3| at d=3: flagged, and the verdict for
    // the (perfectly valid) uniform design is not poisoned by it
    const WeightedDesign uniform{3, DistributionOverSn::uniform(3)};
    const BoundsReport r = bounds_report(3, 3, uniform);
    CHECK(r.eq_support_lower == 17);
    CHECK(r.support_floor_exceeds_group);
    CHECK(*r.verdict_support_bracket);
    CHECK(!bounds_report(2, 5).support_floor_exceeds_group);
  }
}
