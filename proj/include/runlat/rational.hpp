#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace runlat {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised when an input violates a documented precondition (maps to exit 2).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a requested space exceeds the element budget (maps to exit 3).
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Accepts "7", "-3" and "num/den". Floating-point syntax is rejected so that
// exactness-sensitive inputs (p, k, gains) can never silently lose precision.
Rational parse_rational(const std::string& text);

// "3/4" for proper fractions, plain "2" when the denominator is 1.
std::string format_rational(const Rational& q);

double to_double(const Rational& q);

Int binomial(unsigned n, unsigned k);

}  // namespace runlat
