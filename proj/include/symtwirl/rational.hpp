#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <complex>
#include <cstdint>
#include <string>

namespace symtwirl {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Exact complex number with rational real and imaginary parts.
/// mpq_rational keeps itself in canonical reduced form, so equality is
/// plain component comparison.
struct ComplexRational {
  Rational re;
  Rational im;

  ComplexRational() = default;
  ComplexRational(Rational r) : re(std::move(r)) {}  // NOLINT: implicit real embedding
  ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  ComplexRational(long r, long i) : re(r), im(i) {}

  bool is_zero() const { return re == 0 && im == 0; }
  ComplexRational conj() const { return {re, -im}; }

  ComplexRational& operator+=(const ComplexRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ComplexRational& operator-=(const ComplexRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
  friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
  friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexRational operator*(const Rational& s, const ComplexRational& a) {
    return {s * a.re, s * a.im};
  }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const ComplexRational& a, const ComplexRational& b) { return !(a == b); }
};

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::complex<double> to_complex(const ComplexRational& z) {
  return {to_double(z.re), to_double(z.im)};
}

/// Canonical "p/q" string, plain "p" when the denominator is one.
std::string fraction_string(const Rational& r);

/// Parses "p/q" or "p". Throws ContractError on malformed input or q == 0.
Rational parse_fraction(const std::string& text);

/// Best rational approximation to x with denominator <= max_denominator
/// (continued-fraction convergents/semiconvergents).
Rational nearest_rational(double x, std::uint64_t max_denominator);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);
Integer integer_pow(const Integer& base, unsigned exp);

}  // namespace symtwirl
