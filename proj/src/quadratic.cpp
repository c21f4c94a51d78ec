#include "spincert/quadratic.hpp"

#include <algorithm>
#include <sstream>

#include "spincert/error.hpp"

namespace spincert {

namespace {

// Columns or rows scanned before a bounded search is abandoned.
const Integer kScanLimit = 10'000'000;

Integer eval1(const Integer& a, const Integer& b, const Integer& c, const Integer& t) {
  return (a * t + b) * t + c;
}

void append_term(std::ostringstream& os, bool& first, const Integer& coef, const std::string& mono) {
  if (coef == 0) return;
  if (coef < 0) os << (first ? "-" : " - ");
  else if (!first) os << " + ";
  const Integer m = abs(coef);
  if (m != 1 || mono.empty()) os << m;
  os << mono;
  first = false;
}

// Smallest integer t >= lo with a t^2 + b t + c > 0, for a leading part that
// grows to +infinity upward (a > 0, or a == 0 and b > 0).
Integer upward_witness(const Integer& a, const Integer& b, const Integer& c,
                       const std::optional<Integer>& lo) {
  Integer t;
  if (a == 0) {
    t = floor_div(-c, b) + 1;
  } else {
    const Integer disc = b * b - 4 * a * c;
    if (disc < 0) t = floor_div(-b, 2 * a);
    else t = floor_div(-b + isqrt(disc), 2 * a);
  }
  if (lo && *lo > t) t = *lo;
  while (eval1(a, b, c, t) <= 0) ++t;
  return t;
}

struct Interval {
  bool empty = false;
  std::optional<Integer> lo, hi;
};

void tighten_lower(Interval& iv, const Integer& v) {
  if (!iv.lo || v > *iv.lo) iv.lo = v;
}
void tighten_upper(Interval& iv, const Integer& v) {
  if (!iv.hi || v < *iv.hi) iv.hi = v;
}
void settle(Interval& iv) {
  if (iv.lo && iv.hi && *iv.lo > *iv.hi) iv.empty = true;
}

// The integers t with coef * t >= rhs, added to an interval.
void restrict(Interval& iv, const Integer& coef, const Integer& rhs) {
  if (coef == 0) {
    if (rhs > 0) iv.empty = true;
  } else if (coef > 0) {
    tighten_lower(iv, ceil_div(rhs, coef));
  } else {
    tighten_upper(iv, floor_div(rhs, coef));
  }
}

// y-range of a fixed column x.
Interval column(const Integer& x, const std::vector<LinearConstraint>& dom) {
  Interval iv;
  for (const auto& k : dom) restrict(iv, k.b, k.bound - k.a * x);
  settle(iv);
  return iv;
}

std::vector<LinearConstraint> swapped(const std::vector<LinearConstraint>& dom) {
  std::vector<LinearConstraint> out;
  out.reserve(dom.size());
  for (const auto& k : dom) out.push_back({k.b, k.a, k.bound});
  return out;
}

QuadraticPolynomial swapped(const QuadraticPolynomial& f) {
  QuadraticPolynomial g = f;
  std::swap(g.xx, g.yy);
  std::swap(g.x, g.y);
  return g;
}

QuadraticDecision unswap(QuadraticDecision d) {
  if (d.witness) std::swap((*d.witness)[0], (*d.witness)[1]);
  return d;
}

QuadraticDecision fails_at(std::vector<Integer> w) {
  QuadraticDecision d;
  d.holds = false;
  d.witness = std::move(w);
  return d;
}

// Scan columns x in [lo, hi], solving the one-variable problem in y exactly.
QuadraticDecision scan_columns(const QuadraticPolynomial& f, const std::vector<LinearConstraint>& dom,
                               const Integer& lo, const Integer& hi) {
  if (hi - lo > kScanLimit)
    throw Error(ErrorCode::SearchExhausted,
                "column range " + lo.str() + ".." + hi.str() + " exceeds the scan budget");
  for (Integer x = lo; x <= hi; ++x) {
    const Interval iv = column(x, dom);
    if (iv.empty) continue;
    const UnivariateMax m = maximize_univariate(f.yy, f.xy * x + f.y, (f.xx * x + f.x) * x + f.c,
                                                iv.lo, iv.hi);
    if (m.empty) continue;
    if (m.unbounded || m.value > 0) return fails_at({x, m.argmax});
  }
  return {};
}

enum class Extent { Empty, Unbounded, Bounded };

struct AxisExtent {
  Extent kind = Extent::Unbounded;
  Integer lo, hi;
};

bool admits_rational(const LinearConstraint& k, const Rational& x, const Rational& y) {
  return Rational(k.a) * x + Rational(k.b) * y >= Rational(k.bound);
}

// Primitive (p, q) with every constraint normal a multiple of it, if any.
std::optional<std::pair<Integer, Integer>> common_normal(const std::vector<LinearConstraint>& live) {
  if (live.empty()) return std::nullopt;
  const Integer g = gcd(live[0].a, live[0].b);
  const Integer p = live[0].a / g, q = live[0].b / g;
  for (const auto& k : live)
    if (k.a * q - k.b * p != 0) return std::nullopt;
  return std::make_pair(p, q);
}

// Integer values of s = p x + q y allowed by constraints all normal to (p, q).
Interval strip(const std::vector<LinearConstraint>& live, const Integer& p, const Integer& q) {
  Interval iv;
  for (const auto& k : live) restrict(iv, p != 0 ? k.a / p : k.b / q, k.bound);
  settle(iv);
  return iv;
}

bool strip_feasible_real(const std::vector<LinearConstraint>& live, const Integer& p, const Integer& q) {
  std::optional<Rational> lo, hi;
  for (const auto& k : live) {
    const Integer lam = p != 0 ? k.a / p : k.b / q;
    const Rational v = Rational(k.bound) / Rational(lam);
    if (lam > 0) {
      if (!lo || v > *lo) lo = v;
    } else {
      if (!hi || v < *hi) hi = v;
    }
  }
  return !lo || !hi || *lo <= *hi;
}

bool has_feasible_vertex(const std::vector<LinearConstraint>& live);

// Extent of the x-coordinate over the real polygon cut out by the constraints.
AxisExtent x_extent(const std::vector<LinearConstraint>& dom) {
  std::vector<LinearConstraint> live;
  for (const auto& k : dom) {
    if (k.a == 0 && k.b == 0) {
      if (k.bound > 0) return {Extent::Empty, 0, 0};
    } else {
      live.push_back(k);
    }
  }
  if (live.empty()) return {};
  // Candidate generators of the recession cone: normals and their perpendiculars.
  auto in_cone = [&](const Integer& dx, const Integer& dy) {
    for (const auto& k : live)
      if (k.a * dx + k.b * dy < 0) return false;
    return true;
  };
  for (const auto& k : live) {
    const Integer cands[3][2] = {{k.a, k.b}, {-k.b, k.a}, {k.b, -k.a}};
    for (const auto& d : cands)
      if (d[0] != 0 && in_cone(d[0], d[1])) {
        // Unbounded if nonempty. Without a vertex the polygon contains a line,
        // so all normals are parallel.
        if (auto n = common_normal(live))
          return strip_feasible_real(live, n->first, n->second) ? AxisExtent{} : AxisExtent{Extent::Empty, 0, 0};
        return has_feasible_vertex(live) ? AxisExtent{} : AxisExtent{Extent::Empty, 0, 0};
      }
  }
  bool pure = std::all_of(live.begin(), live.end(), [](const auto& k) { return k.b == 0; });
  if (pure) {
    Interval iv;
    for (const auto& k : live) restrict(iv, k.a, k.bound);
    settle(iv);
    if (iv.empty || !iv.lo || !iv.hi) return {Extent::Empty, 0, 0};
    return {Extent::Bounded, *iv.lo, *iv.hi};
  }
  std::optional<Rational> mn, mx;
  for (std::size_t i = 0; i < live.size(); ++i)
    for (std::size_t j = i + 1; j < live.size(); ++j) {
      const auto& p = live[i];
      const auto& q = live[j];
      const Integer det = p.a * q.b - p.b * q.a;
      if (det == 0) continue;
      const Rational x = Rational(p.bound * q.b - p.b * q.bound) / Rational(det);
      const Rational y = Rational(p.a * q.bound - p.bound * q.a) / Rational(det);
      bool ok = true;
      for (const auto& k : live)
        if (!admits_rational(k, x, y)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      if (!mn || x < *mn) mn = x;
      if (!mx || x > *mx) mx = x;
    }
  if (!mn) return {Extent::Empty, 0, 0};
  return {Extent::Bounded, floor(*mn), ceil(*mx)};
}

bool has_feasible_vertex(const std::vector<LinearConstraint>& live) {
  for (std::size_t i = 0; i < live.size(); ++i)
    for (std::size_t j = i + 1; j < live.size(); ++j) {
      const auto& p = live[i];
      const auto& q = live[j];
      const Integer det = p.a * q.b - p.b * q.a;
      if (det == 0) continue;
      const Rational x = Rational(p.bound * q.b - p.b * q.bound) / Rational(det);
      const Rational y = Rational(p.a * q.bound - p.bound * q.a) / Rational(det);
      if (std::all_of(live.begin(), live.end(), [&](const auto& k) { return admits_rational(k, x, y); }))
        return true;
    }
  return false;
}

QuadraticDecision decide_negative_definite(const QuadraticPolynomial& f,
                                           const std::vector<LinearConstraint>& dom) {
  const Integer &A = f.xx, &B = f.xy, &C = f.yy, &D = f.x, &E = f.y, &F = f.c;
  // Columns where max_y f > 0 are exactly those with N(x) < 0.
  const Integer alpha = 4 * A * C - B * B;
  const Integer beta = 4 * C * D - 2 * B * E;
  const Integer gamma = 4 * C * F - E * E;
  const Integer disc = beta * beta - 4 * alpha * gamma;
  if (disc <= 0) return {};
  Integer s = isqrt(disc);
  if (s * s != disc) ++s;
  Integer lo = floor_div(-beta - s, 2 * alpha);
  Integer hi = ceil_div(-beta + s, 2 * alpha);
  const AxisExtent ext = x_extent(dom);
  if (ext.kind == Extent::Empty) return {};
  if (ext.kind == Extent::Bounded) {
    lo = std::max(lo, ext.lo);
    hi = std::min(hi, ext.hi);
  }
  if (lo > hi) return {};
  return scan_columns(f, dom, lo, hi);
}

QuadraticDecision decide_unconstrained(const QuadraticPolynomial& f) {
  const Integer &A = f.xx, &B = f.xy, &C = f.yy, &D = f.x, &E = f.y, &F = f.c;
  const Integer disc = B * B - 4 * A * C;
  if (A == 0 && B == 0 && C == 0) {
    if (D != 0) {
      const UnivariateMax m = maximize_univariate(0, D, F, std::nullopt, std::nullopt);
      return fails_at({m.argmax, 0});
    }
    if (E != 0) {
      const UnivariateMax m = maximize_univariate(0, E, F, std::nullopt, std::nullopt);
      return fails_at({0, m.argmax});
    }
    if (F > 0) return fails_at({0, 0});
    return {};
  }
  if (A <= 0 && C <= 0 && disc == 0) {
    // Q = -k (p x + q y)^2; pass to unimodular coordinates u = p x + q y, v = r x + s y.
    Integer p, q;
    if (A != 0) {
      const Integer g = gcd(2 * A, B);
      p = 2 * A / g;
      q = B / g;
    } else {
      p = 0;
      q = 1;
    }
    if (p < 0 || (p == 0 && q < 0)) {
      p = -p;
      q = -q;
    }
    const ExtendedGcd eg = extended_gcd(p, q);
    const Integer s = eg.x, r = -eg.y;
    const Integer k = A != 0 ? -A / (p * p) : -C / (q * q);
    const Integer Lu = D * s - E * r;
    const Integer Lv = -D * q + E * p;
    if (Lv != 0) {
      const UnivariateMax m = maximize_univariate(0, Lv, F, std::nullopt, std::nullopt);
      return fails_at({-q * m.argmax, p * m.argmax});
    }
    const UnivariateMax m = maximize_univariate(-k, Lu, F, std::nullopt, std::nullopt);
    if (m.value > 0) return fails_at({s * m.argmax, -r * m.argmax});
    return {};
  }
  // Some integer direction d has Q(d) > 0, and f grows without bound along it.
  Integer dx, dy;
  if (A > 0) {
    dx = 1;
    dy = 0;
  } else if (C > 0) {
    dx = 0;
    dy = 1;
  } else if (C < 0) {
    dx = -2 * C;
    dy = B;
  } else {
    dx = 1;
    dy = (abs(A) + 1) * (B > 0 ? 1 : -1);
  }
  const Integer qd = A * dx * dx + B * dx * dy + C * dy * dy;
  const UnivariateMax m = maximize_univariate(qd, D * dx + E * dy, F, std::nullopt, std::nullopt);
  return fails_at({m.argmax * dx, m.argmax * dy});
}

// Searches growing boxes for a violating point; never proves the inequality.
std::optional<std::vector<Integer>> box_witness(const QuadraticPolynomial& f,
                                                const std::vector<LinearConstraint>& dom) {
  for (Integer R = 1; R <= 4096; R *= 2) {
    for (Integer x = -R; x <= R; ++x) {
      Interval iv = column(x, dom);
      if (iv.empty) continue;
      tighten_lower(iv, -R);
      tighten_upper(iv, R);
      settle(iv);
      if (iv.empty) continue;
      const UnivariateMax m = maximize_univariate(f.yy, f.xy * x + f.y, (f.xx * x + f.x) * x + f.c,
                                                  iv.lo, iv.hi);
      if (!m.empty && m.value > 0) return std::vector<Integer>{x, m.argmax};
    }
  }
  return std::nullopt;
}

QuadraticDecision decide_bivariate(const QuadraticPolynomial& f,
                                   const std::vector<LinearConstraint>& dom) {
  const Integer disc = f.xy * f.xy - 4 * f.xx * f.yy;
  if (f.xx < 0 && disc < 0) return decide_negative_definite(f, dom);

  const AxisExtent ex = x_extent(dom);
  if (ex.kind == Extent::Empty) return {};
  if (ex.kind == Extent::Bounded) return scan_columns(f, dom, ex.lo, ex.hi);
  const auto sdom = swapped(dom);
  const AxisExtent ey = x_extent(sdom);
  if (ey.kind == Extent::Empty) return {};
  if (ey.kind == Extent::Bounded) return unswap(scan_columns(swapped(f), sdom, ey.lo, ey.hi));

  bool unconstrained = std::all_of(dom.begin(), dom.end(), [](const auto& k) {
    return k.a == 0 && k.b == 0;
  });
  if (unconstrained) return decide_unconstrained(f);

  if (f.xx == 0 && f.xy == 0 && f.yy == 0) {
    // Linear: f > 0 exactly on the polygon with D x + E y >= 1 - F added.
    auto cut = dom;
    cut.push_back({f.x, f.y, 1 - f.c});
    const AxisExtent cx = x_extent(cut);
    if (cx.kind == Extent::Empty) return {};
    if (cx.kind == Extent::Bounded) return scan_columns(f, cut, cx.lo, cx.hi);
    const auto scut = swapped(cut);
    const AxisExtent cy = x_extent(scut);
    if (cy.kind == Extent::Empty) return {};
    if (cy.kind == Extent::Bounded) return unswap(scan_columns(swapped(f), scut, cy.lo, cy.hi));
    std::vector<LinearConstraint> live;
    for (const auto& k : cut)
      if (k.a != 0 || k.b != 0) live.push_back(k);
    if (auto n = common_normal(live)) {
      // A strip: any integer s in range is hit by some integer point.
      const auto [p, q] = *n;
      const Interval iv = strip(live, p, q);
      if (iv.empty) return {};
      const Integer s0 = iv.lo ? *iv.lo : *iv.hi;
      const ExtendedGcd eg = extended_gcd(p, q);
      return fails_at({eg.x * s0, eg.y * s0});
    }
  }

  if (auto w = box_witness(f, dom)) return fails_at(std::move(*w));
  throw Error(ErrorCode::UndecidableForm,
              "quadratic part of " + f.to_string() +
                  " is not negative definite on an infinite domain and no witness was found");
}

}  // namespace

Integer QuadraticPolynomial::operator()(const std::vector<Integer>& t) const {
  const Integer x0 = arity >= 1 ? t.at(0) : Integer(0);
  const Integer y0 = arity >= 2 ? t.at(1) : Integer(0);
  return xx * x0 * x0 + xy * x0 * y0 + yy * y0 * y0 + x * x0 + y * y0 + c;
}

std::string QuadraticPolynomial::to_string(const std::vector<std::string>& names) const {
  const std::string& u = names.size() > 0 ? names[0] : "x";
  const std::string& v = names.size() > 1 ? names[1] : "y";
  std::ostringstream os;
  bool first = true;
  append_term(os, first, xx, u + "^2");
  append_term(os, first, xy, u + v);
  append_term(os, first, yy, v + "^2");
  append_term(os, first, x, u);
  append_term(os, first, y, v);
  append_term(os, first, c, "");
  if (first) os << "0";
  return os.str();
}

bool LinearConstraint::admits(const std::vector<Integer>& t) const {
  const Integer x0 = t.size() > 0 ? t[0] : Integer(0);
  const Integer y0 = t.size() > 1 ? t[1] : Integer(0);
  return a * x0 + b * y0 >= bound;
}

UnivariateMax maximize_univariate(const Integer& a, const Integer& b, const Integer& c,
                                  const std::optional<Integer>& lo,
                                  const std::optional<Integer>& hi) {
  UnivariateMax out;
  if (lo && hi && *lo > *hi) {
    out.empty = true;
    return out;
  }
  auto take = [&](const Integer& t) {
    out.argmax = t;
    out.value = eval1(a, b, c, t);
  };
  auto clamp = [&](Integer t) {
    if (lo && t < *lo) t = *lo;
    if (hi && t > *hi) t = *hi;
    return t;
  };
  const bool grows_up = a > 0 || (a == 0 && b > 0);
  const bool grows_down = a > 0 || (a == 0 && b < 0);
  if ((grows_up && !hi) || (grows_down && !lo)) {
    out.unbounded = true;
    if (grows_up && !hi) {
      take(upward_witness(a, b, c, lo));
    } else {
      // Mirror t -> -t.
      std::optional<Integer> mlo;
      if (hi) mlo = -*hi;
      take(-upward_witness(a, -b, c, mlo));
    }
    return out;
  }
  if (a < 0) {
    const Integer v0 = floor_div(-b, 2 * a);
    const Integer t0 = clamp(v0), t1 = clamp(v0 + 1);
    const Integer f0 = eval1(a, b, c, t0), f1 = eval1(a, b, c, t1);
    if (f1 > f0) take(t1);
    else take(t0);
    return out;
  }
  if (a == 0 && b == 0) {
    take(lo ? *lo : (hi ? *hi : Integer(0)));
    return out;
  }
  // Convex or linear with both relevant ends closed: the max sits at an end.
  if (lo && hi) {
    const Integer flo = eval1(a, b, c, *lo), fhi = eval1(a, b, c, *hi);
    if (fhi > flo) take(*hi);
    else take(*lo);
  } else if (hi) {
    take(*hi);
  } else {
    take(*lo);
  }
  return out;
}

QuadraticDecision decide_quadratic_nonpositive(const QuadraticPolynomial& f,
                                               const std::vector<LinearConstraint>& domain) {
  if (f.arity > 2) throw Error(ErrorCode::InvalidInput, "at most two variables are supported");
  if (f.arity == 0) {
    for (const auto& k : domain)
      if (Integer(0) < k.bound) return {};
    if (f.c > 0) return fails_at({});
    return {};
  }
  if (f.arity == 1) {
    if (f.xy != 0 || f.yy != 0 || f.y != 0)
      throw Error(ErrorCode::InvalidInput, "univariate polynomial uses the second variable");
    Interval iv;
    for (const auto& k : domain) {
      if (k.b != 0) throw Error(ErrorCode::InvalidInput, "univariate domain uses the second variable");
      restrict(iv, k.a, k.bound);
    }
    settle(iv);
    if (iv.empty) return {};
    const UnivariateMax m = maximize_univariate(f.xx, f.x, f.c, iv.lo, iv.hi);
    if (m.empty) return {};
    if (m.unbounded || m.value > 0) return fails_at({m.argmax});
    return {};
  }
  return decide_bivariate(f, domain);
}

}  // namespace spincert
