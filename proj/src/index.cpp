#include "spincert/index.hpp"

#include "spincert/error.hpp"

namespace spincert {

Integer chi_c_L0(const SpinCStructure& C) {
  const Integer num = C.square() - C.lattice().signature();
  // Divisibility is the mod-8 invariant of the structure.
  return num / 8;
}

Integer chi_c_L0(const SurfaceModel& S, const SpinCStructure& C) {
  const Integer chi = chi_c_L0(C);
  if (C.c() == -S.canonical() && chi != S.chi_O())
    throw Error(ErrorCode::InconsistentModel, "chi_{-K}(L0) = " + chi.str() +
                                                  " but chi(O_S) = " + S.chi_O().str());
  return chi;
}

Integer chi_c(const BundleTopology& E, const SpinCStructure& C, const Integer& chi_L0) {
  const Integer twice = pair(E.c1, E.c1 + C.c());
  if (!is_even(twice))
    throw Error(ErrorCode::ParityViolation, "c1(c1 + C) is odd for c1 = " + E.c1.to_string());
  return twice / 2 + 2 * chi_L0 - E.c2;
}

BundleTopology twist(const BundleTopology& E, const LatticeClass& delta) {
  return {E.c1 + Integer(2) * delta, E.c2 + pair(E.c1, delta) + square(delta)};
}

Integer spin_c_change_chi(const BundleTopology& E, const SpinCStructure& C,
                          const LatticeClass& delta, const Integer& chi_L0) {
  return chi_c(twist(E, delta), C, chi_L0);
}

Integer spin_c_change_correction(const BundleTopology& E, const SpinCStructure& C,
                                 const LatticeClass& delta) {
  return pair(E.c1, delta) + pair(delta, delta + C.c());
}

IndexReport vdim(const BundleTopology& E, const SpinCStructure& C, const Integer& chi_L0) {
  const std::size_t bp = C.lattice().b2_plus();
  if (bp % 2 == 0) throw Error(ErrorCode::EvenB2Plus, "b2+ = " + std::to_string(bp));
  IndexReport r;
  r.chi_C_L0 = chi_L0;
  r.chi_C_E = chi_c(E, C, chi_L0);
  r.d = 4 * E.c2 - square(E.c1) - 3 * Integer(bp + 1) / 2;
  r.d1 = r.d - (1 - r.chi_C_E);
  r.vcodim = 2 - 2 * r.chi_C_E;
  return r;
}

Integer anticanonical_d1(const SurfaceModel& S, const BundleTopology& E) {
  const Integer twice = pair(E.c1, E.c1 + S.canonical());
  if (!is_even(twice)) throw Error(ErrorCode::ParityViolation, "c1(c1 + K) is odd");
  return 3 * E.c2 - 1 - twice / 2 - S.chi_O();
}

Integer rank_two_riemann_roch(const SurfaceModel& S, const BundleTopology& E) {
  const Integer twice = square(E.c1) - pair(E.c1, S.canonical());
  if (!is_even(twice)) throw Error(ErrorCode::ParityViolation, "c1^2 - c1.K is odd");
  return 2 * S.chi_O() + twice / 2 - E.c2;
}

CompactnessBound compactness_bound(const BundleTopology& E, const SpinCStructure& C,
                                   std::size_t b2_plus, const Integer& chi_L0) {
  CompactnessBound b;
  b.threshold = Rational(3 * Integer(b2_plus + 1), 2) - Rational(pair(E.c1, C.c()), 2) +
                Rational(2 * chi_L0);
  b.ceiling = ceil(b.threshold);
  b.satisfied = Rational(E.c2) >= b.threshold;
  return b;
}

Rational anticanonical_compactness_threshold(const SurfaceModel& S, const LatticeClass& c1) {
  return Rational(5 * S.chi_O()) + Rational(pair(c1, S.canonical()), 2);
}

std::string_view to_string(ParityMode m) { return m == ParityMode::Sum ? "Sum" : "Difference"; }

namespace {

Integer half_c1_c1_minus_K(const SurfaceModel& S, const LatticeClass& c1) {
  const Integer twice = square(c1) - pair(c1, S.canonical());
  if (!is_even(twice)) throw Error(ErrorCode::ParityViolation, "c1^2 - c1.K is odd");
  return twice / 2;
}

}  // namespace

ParityMode parity_mode(const SurfaceModel& S, const BundleTopology& E) {
  return mod(E.c2 - half_c1_c1_minus_K(S, E.c1) - 1, 2) == 0 ? ParityMode::Sum
                                                            : ParityMode::Difference;
}

bool nonvanishing_parity(const SurfaceModel& S, const BundleTopology& E) {
  return mod(E.c2 - half_c1_c1_minus_K(S, E.c1) - S.pg(), 2) == 0;
}

bool vanishing_test(const SurfaceModel& S, const Polarization& H, const LatticeClass& c1) {
  const Integer c1H = pair(c1, H.h());
  return 2 * pair(S.canonical(), H.h()) <= c1H && c1H <= 0;
}

BundleTopology serre_partner(const SurfaceModel& S, const BundleTopology& E) {
  const LatticeClass& K = S.canonical();
  return {Integer(2) * K - E.c1, E.c2 - pair(E.c1, K) + square(K)};
}

}  // namespace spincert
