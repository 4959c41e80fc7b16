#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

#include "condagg/error.hpp"

namespace condagg {

// Exact scalar type for measure values, aggregation values, vector components
// and thresholds. Always stored gcd-reduced with a positive denominator, so
// equality of values (tie detection) is structural equality.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts integers ("3", "-12"), decimals ("0.25", "-3.7", ".5") and
// fractions ("7/2"). Throws Error(ParseError) on anything else.
Rational parse_rational(const std::string& text);

// "7/2" for non-integers, "3" for integers.
std::string to_fraction_string(const Rational& r);

// Decimal rendering; exact when the expansion terminates within the digit
// budget, rounded half-up otherwise.
std::string to_decimal_string(const Rational& r, int significant_digits = 6);

// A rational extended with +infinity, which compares strictly greater than
// every finite value.
struct ExtRational {
  Rational value;
  bool infinite = false;

  ExtRational() = default;
  ExtRational(Rational v) : value(std::move(v)) {}  // NOLINT: implicit finite
  static ExtRational infinity() {
    ExtRational e;
    e.infinite = true;
    return e;
  }

  bool is_finite() const { return !infinite; }
  const Rational& finite() const;  // throws on infinity

  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    if (a.infinite || b.infinite) return a.infinite == b.infinite;
    return a.value == b.value;
  }
  friend bool operator!=(const ExtRational& a, const ExtRational& b) { return !(a == b); }
  friend bool operator<(const ExtRational& a, const ExtRational& b) {
    if (a.infinite) return false;
    if (b.infinite) return true;
    return a.value < b.value;
  }
  friend bool operator>(const ExtRational& a, const ExtRational& b) { return b < a; }
  friend bool operator<=(const ExtRational& a, const ExtRational& b) { return !(b < a); }
  friend bool operator>=(const ExtRational& a, const ExtRational& b) { return !(a < b); }
};

std::string to_fraction_string(const ExtRational& e);  // "inf" for infinity
std::string to_decimal_string(const ExtRational& e, int significant_digits = 6);

}  // namespace condagg
