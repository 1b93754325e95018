#include "gkz/scalar.hpp"

#include "gkz/error.hpp"

#include <cctype>

namespace gkz {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotFullRank: return "NotFullRank";
    case ErrorKind::LatticeIndex: return "LatticeIndex";
    case ErrorKind::NotPointed: return "NotPointed";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::NotInCoset: return "NotInCoset";
    case ErrorKind::NotUpwardClosed: return "NotUpwardClosed";
    case ErrorKind::EmptyFace: return "EmptyFace";
    case ErrorKind::LambdaInfeasible: return "LambdaInfeasible";
    case ErrorKind::ScaleLimit: return "ScaleLimit";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  Rational r = value;
  r.canonicalize();
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) fail(ErrorKind::InvalidInput, "malformed rational '" + std::string(whole) + "'");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      fail(ErrorKind::InvalidInput, "malformed rational '" + std::string(whole) + "'");
    }
  }
  Integer value(std::string(text.substr(pos)), 10);
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  Integer num = parse_integer(text.substr(0, slash), text);
  Integer den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) fail(ErrorKind::InvalidInput, "zero denominator in '" + std::string(text) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

bool is_integral(const Rational& value) {
  Rational r = value;
  r.canonicalize();
  return r.get_den() == 1;
}

Integer floor(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& value) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Integer gcd(std::span<const Integer> values) {
  Integer g = 0;
  for (const auto& v : values) g = ::gcd(g, v);
  return g;
}

Integer lcm_of_denominators(std::span<const Rational> values) {
  Integer l = 1;
  for (const auto& v : values) l = ::lcm(l, v.get_den());
  return l;
}

GaussRat& GaussRat::operator+=(const GaussRat& other) {
  re_ += other.re_;
  im_ += other.im_;
  return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& other) {
  re_ -= other.re_;
  im_ -= other.im_;
  return *this;
}

GaussRat& GaussRat::operator*=(const Rational& factor) {
  re_ *= factor;
  im_ *= factor;
  return *this;
}

std::string to_string(const GaussRat& value) {
  if (value.is_real()) return to_string(value.re());
  return to_string(value.re()) + (value.im() < 0 ? "-" : "+") + to_string(Rational(abs(value.im()))) + "i";
}

Parameter to_parameter(std::span<const Integer> values) {
  return Parameter(values.begin(), values.end());
}

Parameter to_parameter(std::span<const Rational> values) {
  return Parameter(values.begin(), values.end());
}

GaussRat evaluate(std::span<const Integer> functional, std::span<const GaussRat> point) {
  Rational re = 0, im = 0;
  for (std::size_t j = 0; j < functional.size(); ++j) {
    re += Rational(functional[j]) * point[j].re();
    im += Rational(functional[j]) * point[j].im();
  }
  return {re, im};
}

Rational evaluate(std::span<const Integer> functional, std::span<const Rational> point) {
  Rational sum = 0;
  for (std::size_t j = 0; j < functional.size(); ++j) sum += Rational(functional[j]) * point[j];
  return sum;
}

Integer evaluate(std::span<const Integer> functional, std::span<const Integer> point) {
  Integer sum = 0;
  for (std::size_t j = 0; j < functional.size(); ++j) sum += functional[j] * point[j];
  return sum;
}

}  // namespace gkz
