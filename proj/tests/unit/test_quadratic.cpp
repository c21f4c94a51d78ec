#include <doctest.h>

#include "generators.hpp"

using namespace spincert;
using spincert::testing::Gen;

namespace {

QuadraticPolynomial uni(long long a, long long b, long long c) {
  QuadraticPolynomial f;
  f.arity = 1;
  f.xx = a;
  f.x = b;
  f.c = c;
  return f;
}

QuadraticPolynomial bi(long long xx, long long xy, long long yy, long long x, long long y, long long c) {
  QuadraticPolynomial f;
  f.arity = 2;
  f.xx = xx;
  f.xy = xy;
  f.yy = yy;
  f.x = x;
  f.y = y;
  f.c = c;
  return f;
}

// Exhaustive check over [-R, R]^k.
bool brute_holds(const QuadraticPolynomial& f, const std::vector<LinearConstraint>& dom, int R) {
  if (f.arity == 0) return f({}) <= 0;
  for (int x = -R; x <= R; ++x) {
    if (f.arity == 1) {
      std::vector<Integer> t{x};
      bool ok = true;
      for (const auto& k : dom) ok = ok && k.admits(t);
      if (ok && f(t) > 0) return false;
      continue;
    }
    for (int y = -R; y <= R; ++y) {
      std::vector<Integer> t{x, y};
      bool ok = true;
      for (const auto& k : dom) ok = ok && k.admits(t);
      if (ok && f(t) > 0) return false;
    }
  }
  return true;
}

void check_witness(const QuadraticPolynomial& f, const std::vector<LinearConstraint>& dom,
                   const QuadraticDecision& d) {
  REQUIRE(d.witness.has_value());
  CHECK(f(*d.witness) > 0);
  for (const auto& k : dom) CHECK(k.admits(*d.witness));
}

}  // namespace

TEST_CASE("univariate examples") {
  auto d = decide_quadratic_nonpositive(uni(-8, 5, 0));
  CHECK(d.holds);
  d = decide_quadratic_nonpositive(uni(1, 0, -4));
  CHECK_FALSE(d.holds);
  check_witness(uni(1, 0, -4), {}, d);
  CHECK(d.witness->at(0) * d.witness->at(0) > 4);
  // The family -8x^2 + 6x <= x, positive over the reals only inside (0, 5/8).
  CHECK(decide_quadratic_nonpositive(uni(-8, 5, 0)).holds);
  CHECK_FALSE(decide_quadratic_nonpositive(uni(-8, 9, 0)).holds);
}

TEST_CASE("maximize_univariate") {
  auto m = maximize_univariate(-8, 5, 0, std::nullopt, std::nullopt);
  CHECK_FALSE(m.unbounded);
  CHECK(m.value == 0);
  m = maximize_univariate(1, 0, -4, std::nullopt, std::nullopt);
  CHECK(m.unbounded);
  CHECK(m.argmax == 3);
  m = maximize_univariate(1, 0, -4, Integer(-1), Integer(1));
  CHECK_FALSE(m.unbounded);
  CHECK(m.value == -3);
  m = maximize_univariate(0, 1, 0, Integer(3), Integer(2));
  CHECK(m.empty);
  m = maximize_univariate(0, -2, 5, Integer(-4), std::nullopt);
  CHECK(m.value == 13);
  CHECK(m.argmax == -4);
}

TEST_CASE("bivariate examples") {
  CHECK(decide_quadratic_nonpositive(bi(-2, 0, -1, 4, 0, -2)).holds);
  CHECK(decide_quadratic_nonpositive(bi(-2, 0, -1, 0, 0, 0)).holds);
  auto f = bi(-2, 0, -1, 4, 0, -1);
  auto d = decide_quadratic_nonpositive(f);
  CHECK_FALSE(d.holds);
  check_witness(f, {}, d);
}

TEST_CASE("semidefinite and indefinite forms") {
  // -(x - y)^2 + 1 : positive on the diagonal.
  auto f = bi(-1, 2, -1, 0, 0, 1);
  auto d = decide_quadratic_nonpositive(f);
  CHECK_FALSE(d.holds);
  check_witness(f, {}, d);
  // -(x - y)^2: holds.
  CHECK(decide_quadratic_nonpositive(bi(-1, 2, -1, 0, 0, 0)).holds);
  // -(x - y)^2 + x: unbounded along the kernel.
  f = bi(-1, 2, -1, 1, 0, 0);
  d = decide_quadratic_nonpositive(f);
  CHECK_FALSE(d.holds);
  check_witness(f, {}, d);
  // -(2x + y)^2 - 1 over all of Z^2.
  CHECK(decide_quadratic_nonpositive(bi(-4, -4, -1, 0, 0, -1)).holds);
  // Indefinite x y on the unconstrained plane.
  f = bi(0, 1, 0, 0, 0, 0);
  d = decide_quadratic_nonpositive(f);
  CHECK_FALSE(d.holds);
  check_witness(f, {}, d);
  // x y with x >= 0, y <= 0 is indefinite on an infinite domain: refused.
  try {
    decide_quadratic_nonpositive(bi(0, 1, 0, 0, 0, 0), {{1, 0, 0}, {0, -1, 0}});
    FAIL("decided an indefinite form on a cone");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UndecidableForm);
  }
  // Linear with bounded domain.
  CHECK(decide_quadratic_nonpositive(bi(0, 0, 0, 1, 1, -10), {{-1, 0, -4}, {0, -1, -5}}).holds);
  CHECK_FALSE(decide_quadratic_nonpositive(bi(0, 0, 0, 1, 1, -10), {{-1, 0, -5}, {0, -1, -6}}).holds);
  // Linear on a half-plane where f <= -1 throughout.
  CHECK(decide_quadratic_nonpositive(bi(0, 0, 0, 2, 2, -1), {{-1, -1, 0}}).holds);
  // No integer point on the thin strip 1 <= 2x + 2y <= 1.
  CHECK(decide_quadratic_nonpositive(bi(0, 0, 0, 2, 2, 0), {{-2, -2, -1}}).holds);
}

TEST_CASE("positive definite part on an infinite domain fails with a witness") {
  auto f = bi(1, 0, 1, 0, 0, -1000);
  auto d = decide_quadratic_nonpositive(f, {{1, 0, 0}});
  CHECK_FALSE(d.holds);
  check_witness(f, {{1, 0, 0}}, d);
}

TEST_CASE("constant and empty domains") {
  QuadraticPolynomial z;
  z.c = 0;
  CHECK(decide_quadratic_nonpositive(z).holds);
  z.c = 1;
  CHECK_FALSE(decide_quadratic_nonpositive(z).holds);
  // Infeasible domain: x >= 1 and -x >= 0.
  CHECK(decide_quadratic_nonpositive(uni(5, 0, 5), {{1, 0, 1}, {-1, 0, 0}}).holds);
}

TEST_CASE("property: agreement with exhaustive search on small boxes") {
  Gen g(0x5eed31);
  for (int trial = 0; trial < 3000; ++trial) {
    const bool two = g.range(0, 1);
    QuadraticPolynomial f = two ? bi(g.range(-6, 3), g.range(-6, 6), g.range(-6, 3), g.range(-20, 20),
                                     g.range(-20, 20), g.range(-30, 10))
                                : uni(g.range(-6, 3), g.range(-20, 20), g.range(-30, 10));
    // Box constraints keep the domain finite so the brute force is exact.
    const long long R = g.range(0, 6);
    std::vector<LinearConstraint> dom = {{1, 0, -R}, {-1, 0, -R}};
    if (two) {
      dom.push_back({0, 1, -R});
      dom.push_back({0, -1, -R});
      if (g.range(0, 1)) dom.push_back({g.integer(-3, 3), g.integer(-3, 3), g.integer(-4, 4)});
    }
    CAPTURE(f.to_string());
    const auto d = decide_quadratic_nonpositive(f, dom);
    CHECK(d.holds == brute_holds(f, dom, static_cast<int>(R)));
    if (!d.holds) check_witness(f, dom, d);
  }
}
