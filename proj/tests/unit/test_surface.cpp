#include <doctest.h>

#include "generators.hpp"

using namespace spincert;
using spincert::testing::Gen;

TEST_CASE("presets carry the expected canonical classes") {
  CHECK(preset(Preset::F1Partner).canonical().to_string() == "3h-e");
  CHECK(preset(Preset::CP2).canonical().to_string() == "-3l");
  CHECK(preset(Preset::QuadricBlowupPartner).canonical().to_string() == "2hp+2hm+E");
  CHECK(preset(Preset::F1).canonical().to_string() == "-3l+E");
  CHECK(preset(Preset::FakePlanePartner).canonical().to_string() == "3h");
  for (auto p : all_presets()) {
    const auto S = preset(p);
    CAPTURE(S.name());
    CHECK(S.pg() == 0);
    CHECK(S.b2_plus_consistent());
    CHECK(is_characteristic(S.canonical()));
    CHECK_NOTHROW(make_spin_c(-S.canonical()));
    CHECK(preset_from_name(preset_name(p)) == p);
  }
  CHECK(scenario_presets().size() == 5);
}

TEST_CASE("blow_up") {
  const auto Q = blow_up(preset(Preset::QuadricPartner));
  const auto P = preset(Preset::QuadricBlowupPartner);
  CHECK(Q.pic() == P.pic());
  CHECK(Q.canonical() == P.canonical());
  const auto F = blow_up(preset(Preset::CP2));
  CHECK(F.pic() == preset(Preset::F1).pic());
  CHECK(F.canonical().coords() == preset(Preset::F1).canonical().coords());
  CHECK(F.oracle() == SectionOracle::FirstHirzebruch);
  for (auto p : all_presets()) {
    const auto S = preset(p);
    const auto B = blow_up(S);
    CHECK(B.pic().rank() == S.pic().rank() + 1);
    CHECK(square(B.canonical()) == square(S.canonical()) - 1);
    CHECK(B.pg() == S.pg());
  }
}

TEST_CASE("riemann_roch_chi") {
  const auto P = preset(Preset::CP2);
  CHECK(riemann_roch_chi(P, P.make_class({5}) + P.canonical()) == 6);
  CHECK(riemann_roch_chi(P, P.pic().zero()) == P.chi_O());
  const auto F = preset(Preset::F1);
  CHECK(riemann_roch_chi(F, F.make_class({1, 0})) == 3);
}

TEST_CASE("h0 oracles") {
  const auto P = preset(Preset::CP2);
  CHECK(h0(P, P.make_class({2})) == Integer(6));
  CHECK(h0(P, P.make_class({-1})) == Integer(0));
  const auto F = preset(Preset::F1);
  CHECK(h0(F, F.make_class({-1, 0})) == Integer(0));
  CHECK(h0(F, F.make_class({1, 0})) == Integer(3));
  // Fixed component E: h0(l + E) = h0(l).
  CHECK(h0(F, F.make_class({1, -1})) == Integer(2));
  CHECK(h0(F, F.make_class({0, 1})) == Integer(1));
  CHECK(h0(F, F.make_class({0, -1})) == Integer(0));
  const auto Q = preset(Preset::Quadric);
  CHECK(h0(Q, Q.make_class({2, 3})) == Integer(12));
  CHECK(h0(Q, Q.make_class({-1, 3})) == Integer(0));
  // Negative degree against an ample class.
  const auto S = preset(Preset::FakePlanePartner);
  CHECK(h0(S, S.make_class({-2}), S.make_class({1})) == Integer(0));
  CHECK_FALSE(h0(S, S.make_class({2})).has_value());
}

TEST_CASE("h0 agrees with Riemann-Roch where higher cohomology vanishes") {
  const auto P = preset(Preset::CP2);
  for (int d = 0; d <= 20; ++d) CHECK(*h0(P, P.make_class({d})) == riemann_roch_chi(P, P.make_class({d})));
  const auto Q = preset(Preset::Quadric);
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b)
      CHECK(*h0(Q, Q.make_class({a, b})) == riemann_roch_chi(Q, Q.make_class({a, b})));
  // Nef classes a l - b E with a >= b >= 0 on F1.
  const auto F = preset(Preset::F1);
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; b <= a; ++b)
      CHECK(*h0(F, F.make_class({a, -b})) == riemann_roch_chi(F, F.make_class({a, -b})));
}

TEST_CASE("polarizations") {
  const auto F = preset(Preset::F1Partner);
  CHECK_NOTHROW(Polarization::ample(F, F.canonical()));
  CHECK_THROWS_AS(Polarization::ample(F, F.make_class({0, 1})), Error);
  const auto Q = preset(Preset::Quadric);
  CHECK(is_numerically_ample(Q, Q.make_class({1, 1})));
  CHECK_FALSE(is_numerically_ample(Q, Q.make_class({1, 0})));
  CHECK_THROWS_AS(Polarization::nef(Q, Q.make_class({1, 0})), Error);
  const auto B = preset(Preset::QuadricBlowup);
  const auto nef = Polarization::nef(B, B.make_class({1, 1, 0}));
  CHECK_FALSE(nef.strictly_ample());
  CHECK_THROWS_AS(Polarization::ample(B, B.make_class({1, 1, 0})), Error);
  CHECK(Polarization::nef(B, B.make_class({3, 3, -1})).strictly_ample());
}

TEST_CASE("require_full_lattice rejects even b2+") {
  IntMatrix g = {{1, 0}, {0, 1}};
  IntersectionLattice L(g, {"a", "b"});
  SurfaceModel S("two", L, L.make_class({1, 1}), 0);
  try {
    S.require_full_lattice();
    FAIL("accepted b2+ = 2");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EvenB2Plus);
  }
}

TEST_CASE("property: Euler characteristics of L and K - L agree") {
  Gen g(0x5eed11);
  for (auto p : all_presets()) {
    const auto S = preset(p);
    for (int trial = 0; trial < 200; ++trial) {
      const auto L = g.vec(S.pic(), 25);
      CHECK(riemann_roch_chi(S, L) == riemann_roch_chi(S, S.canonical() - L));
    }
  }
}
