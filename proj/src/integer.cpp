#include "spincert/integer.hpp"

#include <limits>

#include "spincert/error.hpp"

namespace spincert {

Integer floor_div(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::InvalidInput, "division by zero");
  Integer q = num / den;
  Integer r = num % den;
  if (r != 0 && ((r < 0) != (den < 0))) --q;
  return q;
}

Integer ceil_div(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::InvalidInput, "division by zero");
  Integer q = num / den;
  Integer r = num % den;
  if (r != 0 && ((r < 0) == (den < 0))) ++q;
  return q;
}

Integer mod(const Integer& a, const Integer& m) {
  Integer mm = abs(m);
  Integer r = a % mm;
  if (r < 0) r += mm;
  return r;
}

Integer floor(const Rational& r) {
  return floor_div(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
}

Integer ceil(const Rational& r) {
  return ceil_div(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw Error(ErrorCode::InvalidInput, "isqrt of a negative number");
  if (n < 2) return n;
  Integer s = boost::multiprecision::sqrt(n);
  while (s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s;
}

bool is_even(const Integer& a) { return (a % 2) == 0; }

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

std::string to_string(const Integer& a) { return a.str(); }

std::string to_string(const Rational& r) {
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + den.str();
}

IntVector to_integers(const std::vector<long long>& values) {
  IntVector out;
  out.reserve(values.size());
  for (long long v : values) out.emplace_back(v);
  return out;
}

bool fits_int64(const Integer& a) {
  return a >= std::numeric_limits<std::int64_t>::min() &&
         a <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace spincert
