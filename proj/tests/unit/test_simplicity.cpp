#include <doctest.h>

#include <map>

#include "generators.hpp"

using namespace spincert;
using spincert::testing::Gen;

namespace {

std::vector<LatticeClass> bases(const std::vector<CurveFamily>& fams) {
  std::vector<LatticeClass> out;
  for (const auto& f : fams) {
    CHECK(f.arity() == 0);
    out.push_back(f.base);
  }
  return out;
}

// Nonnegative rational combination of the generators, for simplicial complete cones.
bool in_cone(const SurfaceModel& S, const LatticeClass& C) {
  const auto& gens = S.effective_generators();
  if (!S.effective_cone_complete()) return true;
  const std::size_t n = S.pic().rank();
  REQUIRE(gens.size() == n);
  // Solve sum a_i g_i = C over the rationals by Cramer's rule.
  IntMatrix M(n, IntVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) M[i][j] = gens[j][i];
  const Integer det = determinant(M);
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix Mj = M;
    for (std::size_t i = 0; i < n; ++i) Mj[i][j] = C[i];
    const Integer dj = determinant(Mj);
    if ((dj < 0 && det > 0) || (dj > 0 && det < 0)) return false;
  }
  return true;
}

struct Case {
  Preset preset;
  IntVector H;
  IntVector c1;
  bool nef;
};

Polarization polarization(const SurfaceModel& S, const Case& c) {
  const auto h = S.make_class(c.H);
  return c.nef ? Polarization::nef(S, h) : Polarization::ample(S, h);
}

}  // namespace

TEST_CASE("candidate systems on the fake plane partner") {
  const auto S = preset(Preset::FakePlanePartner);
  const auto H = Polarization::ample(S, S.make_class({1}));
  CHECK(bases(candidate_systems(S, H, S.make_class({5}))) ==
        std::vector<LatticeClass>{S.pic().zero(), S.make_class({1}), S.make_class({2})});
  CHECK(bases(candidate_systems(S, H, S.make_class({1}))) == std::vector<LatticeClass>{S.pic().zero()});
  CHECK(candidate_systems(S, H, S.make_class({-1})).empty());
}

TEST_CASE("h is h-simple on the fake plane partner") {
  const auto S = preset(Preset::FakePlanePartner);
  const auto H = Polarization::ample(S, S.make_class({1}));
  const auto cert = check_simple(S, H, S.make_class({1}));
  CHECK(cert.semisimple);
  CHECK(cert.simple);
  REQUIRE(cert.partner);
  CHECK(cert.partner->class_checked == S.make_class({5}));
  // 5h: h gives 4 <= 5, 2h gives 10 <= 10.
  std::map<std::string, std::pair<Integer, Integer>> seen;
  for (const auto& f : cert.partner->families) seen[f.family.base.to_string()] = {*f.lhs, *f.rhs};
  CHECK(seen.at("h") == std::pair<Integer, Integer>(4, 5));
  CHECK(seen.at("2h") == std::pair<Integer, Integer>(10, 10));
  CHECK(seen.at("0") == std::pair<Integer, Integer>(0, 0));
}

TEST_CASE("h is K-simple on the F1 partner") {
  const auto S = preset(Preset::F1Partner);
  const auto H = Polarization::ample(S, S.canonical());
  const auto h = S.make_class({1, 0});
  const auto fams = candidate_systems(S, H, h);
  // c1.H = 3: slices of degree 0 and 1; only C.K = 1 survives C.K >= 1.
  const CurveFamily* one = nullptr;
  for (const auto& f : fams)
    if (!f.zero_family) one = &f;
  REQUIRE(one != nullptr);
  REQUIRE(one->arity() == 1);
  // The family is C = x h - (3x - 1) e, i.e. y = 3x - 1.
  for (int x = -5; x <= 5; ++x) {
    bool found = false;
    for (int t = -40; t <= 40 && !found; ++t)
      found = one->at({Integer(t)}) == S.make_class({x, -(3 * x - 1)});
    CHECK(found);
  }
  const auto q = inequality_polynomial(S, h, *one);
  // In the x-parameter: -8x^2 + 6x - x; check agreement pointwise.
  for (int t = -10; t <= 10; ++t) {
    const auto C = one->at({Integer(t)});
    const Integer x = C[0];
    CHECK(q({Integer(t)}) == -8 * x * x + 6 * x - x);
  }
  const auto cert = check_simple(S, H, h);
  CHECK(cert.semisimple);
  CHECK(cert.simple);
  CHECK(cert.partner->class_checked == S.make_class({5, -2}));
}

TEST_CASE("hp + hm + E is H-simple on the quadric blow-up partner") {
  const auto S = preset(Preset::QuadricBlowupPartner);
  const auto H = Polarization::nef(S, S.make_class({1, 1, 0}));
  const auto c1 = S.make_class({1, 1, 1});
  const auto cert = check_simple(S, H, c1);
  CHECK(cert.semisimple);
  CHECK(cert.simple);
  std::size_t two_param = 0;
  for (const auto& f : cert.families) {
    CHECK(f.holds);
    two_param += f.family.arity() == 2;
  }
  CHECK(two_param >= 1);
  for (const auto& f : cert.partner->families) CHECK(f.holds);
  // At degree 0 the excess is -2m^2 - n^2 in suitable coordinates.
  const CurveFamily* d0 = nullptr;
  for (const auto& f : cert.families)
    if (f.family.degree == 0 && f.family.arity() == 2) d0 = &f.family;
  REQUIRE(d0 != nullptr);
  for (int m = -3; m <= 3; ++m)
    for (int n = -3; n <= 3; ++n) {
      const auto C = S.make_class({m, -m, n});
      const Integer lhs = pair(C, S.canonical()) + square(C);
      CHECK(lhs == -2 * m * m - n * n - n);
      CHECK(pair(c1, C) == -n);
    }
}

TEST_CASE("check_inequality on explicit families") {
  const auto S = preset(Preset::QuadricBlowupPartner);
  const auto c1 = S.make_class({1, 1, 1});
  CurveFamily fam{S.pic().zero(), {S.make_class({1, -1, 0}), S.make_class({0, 0, 1})}, {}, {}, Integer(0), false};
  auto chk = check_inequality(S, c1, fam);
  CHECK(chk.holds);
  CHECK(chk.excess.xx == -2);
  CHECK(chk.excess.yy == -1);
  CurveFamily zero{S.pic().zero(), {}, {}, {}, Integer(0), true};
  chk = check_inequality(S, c1, zero);
  CHECK(chk.holds);
  CHECK(*chk.lhs == 0);
  CHECK(*chk.rhs == 0);
  // A failing single class carries an empty witness.
  const auto P = preset(Preset::FakePlanePartner);
  CurveFamily big{P.make_class({3}), {}, {}, {}, Integer(3), false};
  chk = check_inequality(P, P.make_class({5}), big);
  CHECK_FALSE(chk.holds);
  CHECK(chk.witness.has_value());
}

TEST_CASE("a failing family yields a violating witness") {
  const auto S = preset(Preset::F1Partner);
  const auto H = Polarization::ample(S, S.canonical());
  // A large c1 with many slices, some of which fail.
  const auto c1 = S.make_class({9, 0});
  const auto cert = check_semisimple(S, H, c1);
  for (const auto& f : cert.families) {
    if (f.holds) continue;
    REQUIRE(f.witness.has_value());
    const auto C = f.family.at(*f.witness);
    CHECK(f.family.admits(*f.witness));
    CHECK(pair(C, S.canonical()) + square(C) > pair(c1, C));
  }
}

TEST_CASE("unsupported models are refused") {
  IntMatrix g = {{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}};
  IntersectionLattice L(g, {"l", "E1", "E2", "E3"});
  SurfaceModel S("dP", L, L.make_class({-3, 1, 1, 1}), 0);
  try {
    candidate_systems(S, Polarization::positive(L.make_class({3, -1, -1, -1})), L.make_class({1, 0, 0, 0}));
    FAIL("accepted rank 4");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnboundedDegree);
  }
}

TEST_CASE("property: families cover each small eligible class exactly once") {
  const std::vector<Case> cases = {
      {Preset::FakePlanePartner, {1}, {5}, false},   {Preset::FakePlanePartner, {1}, {9}, false},
      {Preset::CP2, {1}, {7}, false},                {Preset::F1Partner, {3, -1}, {1, 0}, false},
      {Preset::F1Partner, {3, -1}, {5, -2}, false},  {Preset::F1Partner, {3, -1}, {4, 1}, false},
      {Preset::F1, {3, -1}, {3, 0}, false},          {Preset::F1, {2, -1}, {5, -1}, false},
      {Preset::Quadric, {1, 1}, {3, 2}, false},      {Preset::QuadricPartner, {1, 1}, {3, 3}, false},
      {Preset::QuadricBlowupPartner, {1, 1, 0}, {1, 1, 1}, true},
      {Preset::QuadricBlowupPartner, {1, 1, 0}, {3, 3, 1}, true},
      {Preset::QuadricBlowup, {3, 3, -1}, {3, 2, 0}, false},
  };
  const long long R = 12;
  for (const auto& c : cases) {
    const auto S = preset(c.preset);
    const auto H = polarization(S, c);
    const auto c1 = S.make_class(c.c1);
    CAPTURE(S.name());
    CAPTURE(c1.to_string());
    const auto fams = candidate_systems(S, H, c1);
    const Integer c1H = pair(c1, H.h());
    // Count family points with small coordinates.
    std::map<IntVector, int> hits;
    int off_degree = 0;
    for (const auto& f : fams) {
      CHECK(Integer(2) * f.degree < c1H);
      const long long T = f.arity() == 0 ? 0 : (f.arity() == 1 ? 400 : 120);
      std::vector<Integer> t(f.arity(), Integer(-T));
      for (;;) {
        if (f.admits(t)) {
          const auto C = f.at(t);
          bool small = true;
          for (const auto& x : C.coords()) small = small && abs(x) <= R;
          if (small) ++hits[C.coords()];
          off_degree += pair(C, H.h()) != f.degree;
        }
        std::size_t i = 0;
        while (i < t.size() && t[i] == T) t[i++] = -T;
        if (i == t.size()) break;
        ++t[i];
      }
    }
    CHECK(off_degree == 0);
    // Enumerate eligible classes.
    const std::size_t n = S.pic().rank();
    IntVector v(n, Integer(-R));
    for (;;) {
      const auto C = S.make_class(v);
      const Integer deg = pair(C, H.h());
      const bool eligible = C.is_zero() || (S.satisfies_constraints(C) && in_cone(S, C) && deg >= 0 &&
                                            Integer(2) * deg < c1H);
      const auto it = hits.find(v);
      const int count = it == hits.end() ? 0 : it->second;
      CAPTURE(C.to_string());
      CHECK(count == (eligible ? 1 : 0));
      std::size_t i = 0;
      while (i < n && v[i] == R) v[i++] = -R;
      if (i == n) break;
      ++v[i];
    }
  }
}

TEST_CASE("property: holds verdicts survive brute force on the parameter box") {
  const std::vector<Case> cases = {
      {Preset::FakePlanePartner, {1}, {5}, false},  {Preset::F1Partner, {3, -1}, {1, 0}, false},
      {Preset::F1Partner, {3, -1}, {5, -2}, false}, {Preset::QuadricBlowupPartner, {1, 1, 0}, {1, 1, 1}, true},
      {Preset::QuadricBlowupPartner, {1, 1, 0}, {3, 3, 1}, true}, {Preset::F1, {3, -1}, {3, 0}, false},
  };
  for (const auto& c : cases) {
    const auto S = preset(c.preset);
    const auto H = polarization(S, c);
    const auto c1 = S.make_class(c.c1);
    const auto cert = check_semisimple(S, H, c1);
    for (const auto& f : cert.families) {
      if (!f.holds) {
        REQUIRE(f.witness.has_value());
        CHECK(f.excess(*f.witness) > 0);
        continue;
      }
      const long long T = f.family.arity() == 1 ? 10000 : 300;
      std::vector<Integer> t(f.family.arity(), Integer(-T));
      int violations = 0;
      for (;;) {
        if (f.family.admits(t)) {
          const auto C = f.family.at(t);
          violations += pair(C, S.canonical()) + square(C) > pair(c1, C);
        }
        std::size_t i = 0;
        while (i < t.size() && t[i] == T) t[i++] = -T;
        if (i == t.size()) break;
        ++t[i];
      }
      CHECK(violations == 0);
    }
  }
}
