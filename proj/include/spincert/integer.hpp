#pragma once

// Exact integer and rational arithmetic used throughout the library.

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace spincert {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<std::vector<Integer>>;

/// Quotient rounded toward negative infinity. `den` must be nonzero.
Integer floor_div(const Integer& num, const Integer& den);
/// Quotient rounded toward positive infinity. `den` must be nonzero.
Integer ceil_div(const Integer& num, const Integer& den);
/// Representative of `a` in [0, |m|).
Integer mod(const Integer& a, const Integer& m);

Integer floor(const Rational& r);
Integer ceil(const Rational& r);

/// floor(sqrt(n)) for n >= 0.
Integer isqrt(const Integer& n);

bool is_even(const Integer& a);
Integer gcd(const Integer& a, const Integer& b);

struct ExtendedGcd {
  Integer g;  // non-negative
  Integer x;  // g == a*x + b*y
  Integer y;
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

std::string to_string(const Integer& a);
std::string to_string(const Rational& r);

IntVector to_integers(const std::vector<long long>& values);

/// Fits in a signed 64-bit machine word.
bool fits_int64(const Integer& a);

}  // namespace spincert
