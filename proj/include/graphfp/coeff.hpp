#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <utility>

namespace graphfp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical text form "p/q" with q > 0 and gcd(p,q) = 1, e.g. "-3/2", "5/1".
std::string rational_to_string(const Rational& r);

// Accepts "p" or "p/q" (optional leading sign on p). Throws ValidationError.
Rational rational_from_string(std::string_view text);

// Exact complex coefficient with rational real and imaginary parts.
struct Coeff {
  Rational re{0};
  Rational im{0};

  Coeff() = default;
  Coeff(long long n) : re(n) {}             // NOLINT: implicit by design
  explicit Coeff(Rational r) : re(std::move(r)) {}
  Coeff(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  Coeff conjugate() const { return {re, -im}; }

  Coeff operator-() const { return {-re, -im}; }
  Coeff& operator+=(const Coeff& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Coeff& operator-=(const Coeff& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
  friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
  friend Coeff operator*(const Coeff& a, const Coeff& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const Coeff& a, const Coeff& b) = default;
};

}  // namespace graphfp
