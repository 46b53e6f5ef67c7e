#pragma once

// Exact evaluation of the cited lower bounds on acyclic sets in planar
// oriented graphs, and the matching upper bound realised by construct().

#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace acyclic {

using BigInt = boost::multiprecision::cpp_int;

/// Reduced fraction with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator = 1);  // NOLINT(google-explicit-constructor)
  Rational(BigInt numerator, BigInt denominator);

  BigInt numerator() const;
  BigInt denominator() const;
  BigInt floor() const;
  BigInt ceil() const;
  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  explicit Rational(boost::multiprecision::cpp_rational v) : value_(std::move(v)) {}
  boost::multiprecision::cpp_rational value_;
};

/// ceil((n(g-2)+1)/(g-1)); the largest acyclic set of construct(g, f) at
/// order n = f(g-1)+1, and an upper bound for every order via padding.
std::int64_t theorem_bound(std::int64_t n, std::int64_t g);

/// max((n(g-3)+6)/g, (n(2g-3)+6)/(3g)) for digirth g >= 4.
Rational gr_bound(std::int64_t n, std::int64_t g);

/// Tabulated lower bound by digirth: 2n/5, 5n/12, n/2, then (n(g-3)+6)/g.
Rational table1_bound(std::int64_t n, std::int64_t g);

}  // namespace acyclic
