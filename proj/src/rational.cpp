#include "symtwirl/rational.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

#include "symtwirl/errors.hpp"

namespace symtwirl {

std::string fraction_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_fraction(const std::string& text) {
  if (text.empty()) throw ContractError("empty fraction string");
  try {
    Rational r(text);
    return r;
  } catch (const std::exception&) {
    throw ContractError("malformed fraction string: " + text);
  }
}

namespace {

// |x - p/q| as an exact comparison helper, using a high-precision rational
// image of x (x is a double, hence exactly representable as a rational).
Rational abs_error(const Rational& x, const Rational& approx) {
  Rational e = x - approx;
  return e < 0 ? Rational(-e) : e;
}

}  // namespace

Rational nearest_rational(double x, std::uint64_t max_denominator) {
  if (!std::isfinite(x)) throw ContractError("cannot approximate a non-finite value");
  if (max_denominator == 0) throw ContractError("max_denominator must be positive");

  const Rational target(x);  // exact: doubles are dyadic rationals
  const bool negative = target < 0;
  Rational v = negative ? Rational(-target) : target;

  // Continued-fraction expansion of v; stop at the last convergent whose
  // denominator fits, then try the best semiconvergent past it.
  Integer p0 = 0, q0 = 1;  // previous convergent
  Integer p1 = 1, q1 = 0;  // current convergent
  Rational rest = v;
  const Integer qmax(max_denominator);
  while (true) {
    Integer a = numerator(rest) / denominator(rest);  // floor for rest >= 0
    Integer p2 = a * p1 + p0;
    Integer q2 = a * q1 + q0;
    if (q2 > qmax) {
      if (q1 > 0) {
        Integer k = (qmax - q0) / q1;
        if (k > 0) {
          Rational semi(p0 + k * p1, q0 + k * q1);
          Rational conv(p1, q1);
          if (abs_error(v, semi) < abs_error(v, conv)) {
            p1 = numerator(semi);
            q1 = denominator(semi);
          }
        }
      }
      break;
    }
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    Rational frac = rest - Rational(a);
    if (frac == 0) break;  // exact representation reached
    rest = Rational(1) / frac;
  }
  if (q1 == 0) return Rational(0);
  Rational best(p1, q1);
  return negative ? Rational(-best) : best;
}

Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Integer num = 1, den = 1;
  for (unsigned i = 0; i < k; ++i) {
    num *= (n - i);
    den *= (i + 1);
  }
  return num / den;
}

Integer integer_pow(const Integer& base, unsigned exp) {
  Integer r = 1, b = base;
  while (exp) {
    if (exp & 1u) r *= b;
    b *= b;
    exp >>= 1u;
  }
  return r;
}

}  // namespace symtwirl
