#include "acyclic/bounds.hpp"

#include <algorithm>

#include "acyclic/errors.hpp"

namespace acyclic {

using boost::multiprecision::cpp_rational;

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
    : Rational(BigInt(numerator), BigInt(denominator)) {}

Rational::Rational(BigInt numerator, BigInt denominator) {
  if (denominator == 0) throw InvalidParameter("zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  value_ = cpp_rational(std::move(numerator), std::move(denominator));
}

BigInt Rational::numerator() const { return boost::multiprecision::numerator(value_); }
BigInt Rational::denominator() const { return boost::multiprecision::denominator(value_); }

BigInt Rational::floor() const {
  BigInt q = numerator() / denominator();  // truncates toward zero
  if (q * denominator() > numerator()) --q;
  return q;
}

BigInt Rational::ceil() const {
  BigInt q = floor();
  if (q * denominator() < numerator()) ++q;
  return q;
}

std::string Rational::str() const {
  if (denominator() == 1) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

Rational operator+(const Rational& a, const Rational& b) { return Rational(cpp_rational(a.value_ + b.value_)); }
Rational operator-(const Rational& a, const Rational& b) { return Rational(cpp_rational(a.value_ - b.value_)); }
Rational operator*(const Rational& a, const Rational& b) { return Rational(cpp_rational(a.value_ * b.value_)); }

Rational operator/(const Rational& a, const Rational& b) {
  if (b.value_ == 0) throw InvalidParameter("division by zero");
  return Rational(cpp_rational(a.value_ / b.value_));
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (a.value_ > b.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::int64_t theorem_bound(std::int64_t n, std::int64_t g) {
  if (n < 1) throw InvalidParameter("order must be at least 1");
  if (g < 3) throw InvalidParameter("digirth must be at least 3");
  const std::int64_t numerator = n * (g - 2) + 1;
  return (numerator + (g - 1) - 1) / (g - 1);
}

Rational gr_bound(std::int64_t n, std::int64_t g) {
  if (g < 4) throw InvalidParameter("the two-term bound is stated for digirth at least 4");
  return std::max(Rational(n * (g - 3) + 6, g), Rational(n * (2 * g - 3) + 6, 3 * g));
}

Rational table1_bound(std::int64_t n, std::int64_t g) {
  if (n < 1) throw InvalidParameter("order must be at least 1");
  switch (g) {
    case 0:
    case 1:
    case 2:
      throw InvalidParameter("digirth must be at least 3");
    case 3:
      return Rational(2 * n, 5);
    case 4:
      return Rational(5 * n, 12);
    case 5:
      return Rational(n, 2);
    default:
      if (g < 0) throw InvalidParameter("digirth must be at least 3");
      return Rational(n * (g - 3) + 6, g);
  }
}

}  // namespace acyclic
