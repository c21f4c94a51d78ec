#include "spincert/walls.hpp"

#include <algorithm>
#include <functional>

#include "spincert/error.hpp"

namespace spincert {

namespace {

LatticeClass canonical_sign(const LatticeClass& e) {
  for (std::size_t i = 0; i < e.rank(); ++i) {
    if (e[i] > 0) return e;
    if (e[i] < 0) return -e;
  }
  return e;
}

bool has_canonical_sign(const IntVector& v) {
  for (const auto& x : v) {
    if (x > 0) return true;
    if (x < 0) return false;
  }
  return false;
}

bool congruent_mod_two(const LatticeClass& e, const LatticeClass& c1) {
  for (std::size_t i = 0; i < e.rank(); ++i)
    if (!is_even(e[i] - c1[i])) return false;
  return true;
}

int sign(const Integer& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

void require_wall_lattice(const IntersectionLattice& L) {
  if (L.b2_plus() != 1)
    throw Error(ErrorCode::InfiniteEnumeration,
                "walls are enumerated only for b2+ = 1, got " + std::to_string(L.b2_plus()));
}

// Visits every class in the box |e_i| <= B_i with e = c1 (mod 2), e != 0,
// canonical sign and c1^2 - 4 c2 <= e^2 <= 0.
void for_each_wall_candidate(const IntersectionLattice& L, const LatticeClass& c1,
                             const Integer& c2, const IntVector& box,
                             const std::function<void(const Wall&)>& visit) {
  const Integer D = square(c1) - 4 * c2;
  if (D > 0) return;
  const std::size_t n = L.rank();
  IntVector start(n), e(n);
  for (std::size_t i = 0; i < n; ++i) {
    start[i] = -box[i];
    if (!is_even(start[i] - c1[i])) ++start[i];
    if (start[i] > box[i]) return;
    e[i] = start[i];
  }
  while (true) {
    if (has_canonical_sign(e)) {
      LatticeClass cls(L, e);
      const Integer sq = square(cls);
      if (sq <= 0 && sq >= D) visit(Wall{cls, sq});
    }
    std::size_t i = n;
    while (i > 0) {
      --i;
      e[i] += 2;
      if (e[i] <= box[i]) break;
      e[i] = start[i];
      if (i == 0) return;
    }
  }
}

}  // namespace

bool is_wall_class(const LatticeClass& e, const LatticeClass& c1, const Integer& c2) {
  require_same_lattice(e, c1);
  if (e.is_zero() || !congruent_mod_two(e, c1)) return false;
  const Integer sq = square(e);
  return sq <= 0 && sq >= square(c1) - 4 * c2;
}

Wall make_wall(const LatticeClass& e, const LatticeClass& c1, const Integer& c2) {
  if (!is_wall_class(e, c1, c2))
    throw Error(ErrorCode::InvalidInput, e.to_string() + " is not a wall of type (" +
                                             c1.to_string() + ", " + c2.str() + ")");
  LatticeClass c = canonical_sign(e);
  const Integer sq = square(c);
  return Wall{std::move(c), sq};
}

IntVector wall_search_box(const LatticeClass& c1, const Integer& c2, const LatticeClass& H1,
                          const std::optional<LatticeClass>& H2) {
  const IntersectionLattice& L = H1.lattice();
  require_wall_lattice(L);
  const std::size_t n = L.rank();
  const Integer D = square(c1) - 4 * c2;
  if (D > 0) return IntVector(n, Integer(0));
  const Integer absD = -D;
  const Integer s1 = square(H1);
  if (s1 <= 0) throw Error(ErrorCode::NotPolarization, "H1 has non-positive square");
  // Majorant A = -G + 2 w w^T / H1^2 with w = G H1; e^T A e <= R on the search region.
  Rational R(absD);
  if (H2) {
    const Integer s2 = square(*H2);
    const Integer p = pair(H1, *H2);
    if (s2 <= 0) throw Error(ErrorCode::NotPolarization, "H2 has non-positive square");
    if (p <= 0)
      throw Error(ErrorCode::InvalidInput, "H1 and H2 lie in opposite halves of the positive cone");
    const Integer M = std::max(s1, p);
    const Integer m = std::min(s1, s2);
    R += Rational(2 * absD * M * M) / Rational(m * s1);
  }
  const IntMatrix& Gi = L.inverse_gram();
  IntVector box(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational ainv = Rational(-Gi[i][i]) + Rational(2 * H1[i] * H1[i]) / Rational(s1);
    box[i] = isqrt(floor(R * ainv));
  }
  return box;
}

ChamberSeparation enumerate_separating_walls(const IntersectionLattice& lattice,
                                             const LatticeClass& c1, const Integer& c2,
                                             const Polarization& H1, const Polarization& H2) {
  require_wall_lattice(lattice);
  if (H1.h().lattice() != lattice || H2.h().lattice() != lattice || c1.lattice() != lattice)
    throw Error(ErrorCode::LatticeMismatch, "wall data from different lattices");
  ChamberSeparation out;
  if (H1.h() == H2.h()) return out;
  const IntVector box = wall_search_box(c1, c2, H1.h(), H2.h());
  for_each_wall_candidate(lattice, c1, c2, box, [&](const Wall& w) {
    if (sign(pair(w.e, H1.h())) * sign(pair(w.e, H2.h())) < 0) out.separating_walls.push_back(w);
  });
  std::sort(out.separating_walls.begin(), out.separating_walls.end());
  out.same_chamber = out.separating_walls.empty();
  return out;
}

std::vector<Wall> wall_on_ray(const IntersectionLattice& lattice, const LatticeClass& c1,
                              const Integer& c2, const Polarization& H) {
  require_wall_lattice(lattice);
  if (H.h().lattice() != lattice || c1.lattice() != lattice)
    throw Error(ErrorCode::LatticeMismatch, "wall data from different lattices");
  std::vector<Wall> out;
  const IntVector box = wall_search_box(c1, c2, H.h(), std::nullopt);
  for_each_wall_candidate(lattice, c1, c2, box, [&](const Wall& w) {
    if (pair(w.e, H.h()) == 0) out.push_back(w);
  });
  std::sort(out.begin(), out.end());
  return out;
}

Integer chi_c_line(const LatticeClass& sigma, const SpinCStructure& C, const Integer& chi_L0) {
  return pair(sigma, sigma + C.c()) / 2 + chi_L0;
}

WallImportance important_wall(const LatticeClass& e, const SpinCStructure& C,
                              const LatticeClass& c1, const Integer& chi_L0,
                              SplittingReading reading) {
  require_same_lattice(e, c1);
  std::optional<LatticeClass> plus, minus;
  if (reading == SplittingReading::HalfSum) {
    plus = halve(c1 + e);
    minus = halve(c1 - e);
    if (!plus || !minus)
      throw Error(ErrorCode::InvalidInput, "e is not congruent to c1 mod 2");
  } else {
    plus = e;
    minus = c1 - e;
  }
  WallImportance w{false, *plus, *minus, chi_c_line(*plus, C, chi_L0),
                   chi_c_line(*minus, C, chi_L0)};
  w.important = w.chi_plus > 0 || w.chi_minus > 0;
  return w;
}

namespace {

LatticeClass primitive(const LatticeClass& x) {
  Integer g = 0;
  for (const auto& c : x.coords()) g = gcd(g, c);
  if (g <= 1) return x;
  IntVector v = x.coords();
  for (auto& c : v) c /= g;
  return LatticeClass(x.lattice(), std::move(v));
}

}  // namespace

bool verify_close_polarization(const SurfaceModel& S, const Polarization& H,
                               const LatticeClass& candidate, const LatticeClass& c1,
                               const Integer& c2,
                               const std::vector<LatticeClass>& degree_classes) {
  if (!is_numerically_ample(S, candidate)) return false;
  if (pair(candidate, H.h()) <= 0) return false;
  const Polarization Heps = Polarization::positive(candidate);
  const IntersectionLattice& L = S.pic();
  if (!wall_on_ray(L, c1, c2, Heps).empty()) return false;
  // The Serre partner type has the same discriminant and parity, so the same
  // walls; it is checked anyway so the result does not lean on that identity.
  const BundleTopology partner = serre_partner(S, {c1, c2});
  if (!wall_on_ray(L, partner.c1, partner.c2, Heps).empty()) return false;
  const Integer c1H = pair(c1, H.h());
  const Integer c1He = pair(c1, candidate);
  for (const auto& C : degree_classes)
    if (2 * pair(C, H.h()) < c1H && !(2 * pair(C, candidate) < c1He)) return false;
  return enumerate_separating_walls(L, c1, c2, H, Heps).same_chamber;
}

ClosePolarization close_polarization(const SurfaceModel& S, const Polarization& H,
                                     const LatticeClass& c1, const Integer& c2,
                                     const std::vector<LatticeClass>& degree_classes,
                                     const CloseSearchBudget& budget) {
  const IntersectionLattice& L = S.pic();
  if (L.b2_plus() != 1)
    throw Error(ErrorCode::InfiniteEnumeration, "close polarizations need b2+ = 1");
  const std::size_t n = L.rank();
  for (int N = 1; N <= budget.max_scale; ++N) {
    for (int r = 0; r <= budget.max_correction; ++r) {
      // Corrections with sup-norm exactly r, in lexicographic order.
      std::vector<long long> k(n, -r);
      while (true) {
        bool on_shell = false;
        for (long long v : k) on_shell = on_shell || v == r || v == -r;
        if (on_shell && !(N > 1 && r == 0)) {
          LatticeClass kappa(L, to_integers(k));
          LatticeClass cand = primitive(Integer(N) * H.h() + kappa);
          if (verify_close_polarization(S, H, cand, c1, c2, degree_classes))
            return ClosePolarization{Polarization::ample(S, cand), Integer(N), kappa};
        }
        std::size_t i = n;
        bool done = true;
        while (i > 0) {
          --i;
          if (++k[i] <= r) {
            done = false;
            break;
          }
          k[i] = -r;
        }
        if (done) break;
      }
    }
  }
  throw Error(ErrorCode::SearchExhausted,
              "no polarization close to " + H.h().to_string() + " within scale " +
                  std::to_string(budget.max_scale) + " and correction box " +
                  std::to_string(budget.max_correction));
}

}  // namespace spincert
