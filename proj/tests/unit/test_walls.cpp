#include <doctest.h>

#include <set>

#include "generators.hpp"

using namespace spincert;
using spincert::testing::Gen;

namespace {

struct BruteWalls {
  std::vector<LatticeClass> separating, on_h1;
};

// Every wall class in the box [-R, R]^n, canonical sign, sorted: those
// separating H1 and H2 and those lying on H1. Plain int64 arithmetic.
BruteWalls brute_walls(const IntersectionLattice& L, const LatticeClass& c1, const Integer& c2,
                       const LatticeClass& H1, const LatticeClass& H2, long long R) {
  const std::size_t n = L.rank();
  std::vector<std::vector<long long>> G(n, std::vector<long long>(n));
  std::vector<long long> c(n), h1(n, 0), h2(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) G[i][j] = L.gram()[i][j].convert_to<long long>();
    c[i] = c1.coords()[i].convert_to<long long>();
  }
  // Pairing against H is a dot product with G H.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      h1[i] += G[i][j] * H1.coords()[j].convert_to<long long>();
      h2[i] += G[i][j] * H2.coords()[j].convert_to<long long>();
    }
  const long long lo = (square(c1) - 4 * c2).convert_to<long long>();
  BruteWalls out;
  std::vector<long long> v(n, -R);
  for (;;) {
    bool canonical = false, zero = true, parity = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (zero && v[i] != 0) canonical = v[i] > 0;
      zero = zero && v[i] == 0;
      parity = parity && ((v[i] - c[i]) % 2 == 0);
    }
    if (canonical && parity) {
      long long sq = 0, a = 0, b = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) sq += v[i] * G[i][j] * v[j];
        a += v[i] * h1[i];
        b += v[i] * h2[i];
      }
      if (sq <= 0 && sq >= lo) {
        IntVector iv(v.begin(), v.end());
        if ((a > 0 && b < 0) || (a < 0 && b > 0)) out.separating.push_back(L.make_class(iv));
        if (a == 0) out.on_h1.push_back(L.make_class(iv));
      }
    }
    std::size_t i = 0;
    while (i < n && v[i] == R) v[i++] = -R;
    if (i == n) break;
    ++v[i];
  }
  std::sort(out.separating.begin(), out.separating.end());
  std::sort(out.on_h1.begin(), out.on_h1.end());
  return out;
}

std::vector<LatticeClass> classes_of(const std::vector<Wall>& ws) {
  std::vector<LatticeClass> out;
  for (const auto& w : ws) out.push_back(w.e);
  return out;
}

LatticeClass random_positive(Gen& g, const IntersectionLattice& L, const LatticeClass& reference, long long bound) {
  for (;;) {
    auto h = g.vec(L, bound);
    if (square(h) > 0 && pair(h, reference) > 0) return h;
  }
}

}  // namespace

TEST_CASE("wall classes") {
  const auto F = preset(Preset::F1).pic();
  const auto l = F.make_class({1, 0});
  CHECK(is_wall_class(F.make_class({1, -2}), l, 1));
  CHECK_FALSE(is_wall_class(F.make_class({1, 0}), l, 1));   // e^2 > 0
  CHECK_FALSE(is_wall_class(F.make_class({2, -2}), l, 1));  // wrong parity
  CHECK_FALSE(is_wall_class(F.make_class({1, -2}), l, 0));  // e^2 < c1^2 - 4 c2
  const auto w = make_wall(F.make_class({-1, 2}), l, 1);
  CHECK(w.e == F.make_class({1, -2}));
  CHECK(w.e_square == -3);
  CHECK_THROWS_AS(make_wall(F.make_class({2, 0}), l, 1), Error);
}

TEST_CASE("rank one lattices have no walls") {
  const auto P = preset(Preset::CP2);
  const auto H = Polarization::ample(P, P.make_class({1}));
  for (int c2 = -5; c2 <= 20; ++c2) {
    CHECK(wall_on_ray(P.pic(), P.make_class({1}), c2, H).empty());
    CHECK(enumerate_separating_walls(P.pic(), P.make_class({1}), c2, H, H).same_chamber);
  }
}

TEST_CASE("F1 with c1 = l and c2 = 1") {
  const auto S = preset(Preset::F1);
  const auto& L = S.pic();
  const auto l = L.make_class({1, 0});
  const auto H1 = Polarization::positive(L.make_class({3, -1}));
  const auto H2 = Polarization::positive(L.make_class({1, 0}));
  auto sep = enumerate_separating_walls(L, l, 1, H1, H2);
  CHECK(sep.same_chamber);
  CHECK(sep.separating_walls.empty());
  // The complete wall set: both walls separate 5l + 4E from 5l - 4E.
  sep = enumerate_separating_walls(L, l, 1, Polarization::positive(L.make_class({5, 4})),
                                   Polarization::positive(L.make_class({5, -4})));
  REQUIRE(sep.separating_walls.size() == 2);
  CHECK(sep.separating_walls[0].e == L.make_class({1, -2}));
  CHECK(sep.separating_walls[1].e == L.make_class({1, 2}));
  for (const auto& w : sep.separating_walls) CHECK(w.e_square == -3);
  CHECK_FALSE(sep.same_chamber);
  // 2l - E lies on l - 2E.
  const auto on = wall_on_ray(L, l, 1, Polarization::positive(L.make_class({2, -1})));
  REQUIRE(on.size() == 1);
  CHECK(on[0].e == L.make_class({1, -2}));
  CHECK(wall_on_ray(L, l, 1, H1).empty());
  CHECK(enumerate_separating_walls(L, l, 1, H1, H1).separating_walls.empty());
}

TEST_CASE("wall search refuses b2+ != 1 and opposite cones") {
  IntersectionLattice two({{Integer(1), Integer(0)}, {Integer(0), Integer(1)}});
  try {
    wall_search_box(two.make_class({1, 1}), 1, two.make_class({1, 0}), std::nullopt);
    FAIL("accepted b2+ = 2");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InfiniteEnumeration);
  }
  const auto L = preset(Preset::F1).pic();
  CHECK_THROWS_AS(wall_search_box(L.make_class({1, 0}), 1, L.make_class({1, 0}), L.make_class({-1, 0})),
                  Error);
}

TEST_CASE("property: wall enumeration matches brute force") {
  Gen g(0x5eed41);
  const std::vector<SurfaceModel> models = {preset(Preset::F1), preset(Preset::QuadricBlowup),
                                            preset(Preset::Quadric), preset(Preset::F1Partner),
                                            preset(Preset::QuadricBlowupPartner)};
  for (const auto& S : models) {
    const auto& L = S.pic();
    // A positive-cone reference picks the component.
    LatticeClass ref = L.zero();
    for (const auto& gen : S.effective_generators()) ref = ref + gen;
    if (square(ref) <= 0) ref = -S.canonical();
    if (square(ref) <= 0 || pair(ref, ref) <= 0) ref = S.canonical();
    REQUIRE(square(ref) > 0);
    for (int trial = 0; trial < 20; ++trial) {
      const auto h1 = random_positive(g, L, ref, 4);
      const auto h2 = random_positive(g, L, ref, 4);
      const auto c1 = g.vec(L, 3);
      for (int c2 = -4; c2 <= 4; ++c2) {
        const auto box = wall_search_box(c1, c2, h1, h2);
        long long R = 0;
        for (const auto& b : box) R = std::max(R, b.convert_to<long long>());
        R = std::max<long long>(R + 2, 8);
        CAPTURE(h1.to_string());
        CAPTURE(h2.to_string());
        CAPTURE(c1.to_string());
        CAPTURE(c2);
        const auto brute = brute_walls(L, c1, c2, h1, h2, R);
        const auto sep = enumerate_separating_walls(L, c1, Integer(c2), Polarization::positive(h1),
                                                    Polarization::positive(h2));
        CHECK(classes_of(sep.separating_walls) == brute.separating);
        CHECK(sep.same_chamber == sep.separating_walls.empty());
        const auto on = wall_on_ray(L, c1, Integer(c2), Polarization::positive(h1));
        CHECK(classes_of(on) == brute.on_h1);
        for (const auto& w : sep.separating_walls) {
          CHECK(halve(w.e - c1).has_value());
          CHECK(w.e_square >= square(c1) - 4 * c2);
          CHECK(w.e_square <= 0);
        }
        // Determinism.
        const auto again = enumerate_separating_walls(L, c1, Integer(c2), Polarization::positive(h1),
                                                      Polarization::positive(h2));
        CHECK(classes_of(again.separating_walls) == classes_of(sep.separating_walls));
      }
    }
  }
}

TEST_CASE("important walls") {
  const auto F = preset(Preset::F1);
  const auto& L = F.pic();
  const auto C = make_spin_c(L.make_class({3, -1}));
  const auto l = L.make_class({1, 0});
  auto imp = important_wall(L.make_class({1, -2}), C, l, 1);
  CHECK(imp.sigma_plus == L.make_class({1, -1}));
  CHECK(imp.chi_plus == 2);
  CHECK(imp.important);
  // Found by search: for c2 >= 9, e = l + 6E splits as (l + 3E) + (-3E)
  // with both line bundles of non-positive chi.
  imp = important_wall(L.make_class({1, 6}), C, l, 1);
  CHECK(imp.chi_plus == 0);
  CHECK(imp.chi_minus == -5);
  CHECK_FALSE(imp.important);
  CHECK(is_wall_class(L.make_class({1, 6}), l, 9));
  // The literal reading splits as L_e + L_{c1 - e}.
  imp = important_wall(L.make_class({1, -2}), C, l, 1, SplittingReading::Literal);
  CHECK(imp.sigma_plus == L.make_class({1, -2}));
  CHECK(imp.sigma_minus == L.make_class({0, 2}));
  // A trivial factor is always important.
  CHECK(chi_c_line(L.zero(), C, 1) == 1);
}

TEST_CASE("close polarization") {
  const auto P = preset(Preset::CP2);
  auto cp = close_polarization(P, Polarization::ample(P, P.make_class({1})), P.make_class({1}), 7, {});
  CHECK(cp.h.h() == P.make_class({1}));
  CHECK(cp.scale == 1);

  const auto S = preset(Preset::F1Partner);
  const auto K = S.canonical();
  const auto h = S.make_class({1, 0});
  const auto H = Polarization::ample(S, K);
  for (int c2 = 1; c2 <= 9; ++c2) {
    const auto deg = degree_constraint_classes(S, H, h);
    cp = close_polarization(S, H, h, c2, deg);
    const auto& he = cp.h.h();
    CAPTURE(c2);
    CHECK(is_numerically_ample(S, he));
    CHECK(verify_close_polarization(S, H, he, h, c2, deg));
    // Independent re-checks of the three postconditions.
    CHECK(wall_on_ray(S.pic(), h, c2, cp.h).empty());
    const auto partner = serre_partner(S, {h, c2});
    CHECK(wall_on_ray(S.pic(), partner.c1, partner.c2, cp.h).empty());
    for (const auto& C : deg)
      if (Integer(2) * pair(C, H.h()) < pair(h, H.h())) CHECK(Integer(2) * pair(C, he) < pair(h, he));
    const auto through = wall_on_ray(S.pic(), h, c2, H);
    const auto sep = enumerate_separating_walls(S.pic(), h, c2, H, cp.h);
    for (const auto& w : sep.separating_walls) CHECK(std::find(through.begin(), through.end(), w) != through.end());
  }
}

TEST_CASE("close polarization moves off walls through the base class") {
  const auto S = preset(Preset::QuadricBlowupPartner);
  const auto H0 = S.make_class({1, 1, 0});
  const auto c1 = S.make_class({1, 1, 1});
  const auto H = Polarization::positive(H0);
  CHECK_FALSE(wall_on_ray(S.pic(), c1, 7, H).empty());
  const auto cp = close_polarization(S, H, c1, 7, {});
  CHECK(wall_on_ray(S.pic(), c1, 7, cp.h).empty());
  const auto partner = serre_partner(S, {c1, 7});
  CHECK(wall_on_ray(S.pic(), partner.c1, partner.c2, cp.h).empty());
  CHECK(pair(cp.h.h(), H0) > 0);
}

TEST_CASE("close polarization reports an exhausted budget") {
  const auto S = preset(Preset::QuadricBlowupPartner);
  const auto c1 = S.make_class({1, 1, 1});
  try {
    close_polarization(S, Polarization::positive(S.make_class({1, 1, 0})), c1, 7, {}, {1, 0});
    FAIL("found a polarization with no budget");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SearchExhausted);
  }
}
