#pragma once

// Exact decision of "f(t) <= 0 for every integer t in a polyhedral domain"
// for quadratic polynomials f in at most two integer variables.

#include <optional>
#include <string>
#include <vector>

#include "spincert/integer.hpp"

namespace spincert {

/// xx*x^2 + xy*x*y + yy*y^2 + x_*x + y_*y + c; unused variables have zero coefficients.
struct QuadraticPolynomial {
  std::size_t arity = 0;
  Integer xx, xy, yy;
  Integer x, y;
  Integer c;

  Integer operator()(const std::vector<Integer>& t) const;
  std::string to_string(const std::vector<std::string>& names = {"x", "y"}) const;

  friend bool operator==(const QuadraticPolynomial& a, const QuadraticPolynomial& b) {
    return a.arity == b.arity && a.xx == b.xx && a.xy == b.xy && a.yy == b.yy && a.x == b.x &&
           a.y == b.y && a.c == b.c;
  }
};

/// a*x + b*y >= bound.
struct LinearConstraint {
  Integer a, b;
  Integer bound;

  bool admits(const std::vector<Integer>& t) const;
};

struct QuadraticDecision {
  bool holds = true;
  /// A domain point with f > 0 whenever holds is false.
  std::optional<std::vector<Integer>> witness;
};

/// Throws UndecidableForm when the quadratic part is not negative definite,
/// the domain is infinite and no witness turns up.
QuadraticDecision decide_quadratic_nonpositive(const QuadraticPolynomial& f,
                                               const std::vector<LinearConstraint>& domain = {});

/// Exact max of a*x^2 + b*x + c over the integers of [lo, hi] (either end may
/// be open). When unbounded, argmax is some point with a positive value.
struct UnivariateMax {
  bool empty = false;
  bool unbounded = false;
  Integer value;
  Integer argmax;
};
UnivariateMax maximize_univariate(const Integer& a, const Integer& b, const Integer& c,
                                  const std::optional<Integer>& lo,
                                  const std::optional<Integer>& hi);

}  // namespace spincert
