#pragma once

#include <gmpxx.h>

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gkz {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Canonical "p/q" (q > 0, reduced) or "p" when q = 1.
std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

/// Accepts "p", "p/q" with optional sign; throws Error(InvalidInput).
Rational parse_rational(std::string_view text);

bool is_integral(const Rational& value);
Integer floor(const Rational& value);
Integer ceil(const Rational& value);

Integer gcd(std::span<const Integer> values);
Integer lcm_of_denominators(std::span<const Rational> values);

/// Exact complex rational re + im*i. Equality is exact.
class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(Rational re) : re_(std::move(re)) { re_.canonicalize(); }
  GaussRat(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }
  GaussRat(const Integer& re) : re_(re) {}
  GaussRat(long re) : re_(re) {}

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_real() const { return im_ == 0; }
  /// Rational integer: zero imaginary part and integral real part.
  bool is_rational_integer() const { return is_real() && is_integral(re_); }

  GaussRat operator-() const { return {-re_, -im_}; }
  GaussRat& operator+=(const GaussRat& other);
  GaussRat& operator-=(const GaussRat& other);
  GaussRat& operator*=(const Rational& factor);

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const Rational& b) { return a *= b; }
  friend GaussRat operator*(const Rational& b, GaussRat a) { return a *= b; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

std::string to_string(const GaussRat& value);

using Parameter = std::vector<GaussRat>;

Parameter to_parameter(std::span<const Integer> values);
Parameter to_parameter(std::span<const Rational> values);

/// <coefficients, value> for an integer functional evaluated on a parameter.
GaussRat evaluate(std::span<const Integer> functional, std::span<const GaussRat> point);
Rational evaluate(std::span<const Integer> functional, std::span<const Rational> point);
Integer evaluate(std::span<const Integer> functional, std::span<const Integer> point);

}  // namespace gkz
