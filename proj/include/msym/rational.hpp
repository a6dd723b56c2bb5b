#ifndef MSYM_RATIONAL_HPP
#define MSYM_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace msym {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "n" or "n/d" (d != 0). Throws ValidationError otherwise.
Rational parse_rational(std::string_view text);

/// Always "num/den" in lowest terms, e.g. "2/1", "-3/4".
std::string format_rational(const Rational& value);

/// Element of Q(i).
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussianRational& operator*=(const Rational& s) {
    re *= s;
    im *= s;
    return *this;
  }
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator*(GaussianRational a, const Rational& s) { return a *= s; }
  friend GaussianRational operator-(GaussianRational a) {
    a.re = -a.re;
    a.im = -a.im;
    return a;
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// i^k for integer k.
GaussianRational i_power(int k);

}  // namespace msym

#endif  // MSYM_RATIONAL_HPP
