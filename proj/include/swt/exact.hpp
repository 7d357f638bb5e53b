#ifndef SWT_EXACT_HPP
#define SWT_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include "swt/error.hpp"

namespace swt {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

inline Integer to_integer(const Rational& r) {
  if (!is_integral(r))
    throw InvariantViolation("expected an integer, got " + r.str());
  return boost::multiprecision::numerator(r);
}

/// (-1)^k for any integer k.
constexpr int sign_of_power(long long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace swt

#endif  // SWT_EXACT_HPP
