#pragma once

// Index, dimension, parity and vanishing bookkeeping for rank-2 bundle types.

#include "spincert/lattice.hpp"
#include "spincert/surface.hpp"

namespace spincert {

/// Topological type (2, c1, c2); the rank is always two.
struct BundleTopology {
  LatticeClass c1;
  Integer c2;

  static constexpr int rank = 2;

  friend bool operator==(const BundleTopology& a, const BundleTopology& b) {
    return a.c1 == b.c1 && a.c2 == b.c2;
  }
  friend bool operator!=(const BundleTopology& a, const BundleTopology& b) { return !(a == b); }
};

struct IndexReport {
  Integer chi_C_E;
  Integer chi_C_L0;
  Integer d;       // half the expected dimension of the ASD moduli space
  Integer d1;      // half the expected dimension of the Brill-Noether stratum
  Integer vcodim;  // 2 - 2 chi_C(E)
};

/// (C^2 - I)/8.
Integer chi_c_L0(const SpinCStructure& C);
/// Same, and when C = -K also checks the result against pg + 1.
Integer chi_c_L0(const SurfaceModel& S, const SpinCStructure& C);

/// chi_C(E) = c1(c1 + C)/2 + 2 chi_C(L0) - c2.
Integer chi_c(const BundleTopology& E, const SpinCStructure& C, const Integer& chi_L0);

/// Chern classes of E tensored with the line bundle of delta.
BundleTopology twist(const BundleTopology& E, const LatticeClass& delta);

/// chi_{C + 2 delta}(E), evaluated as chi_C of the twisted bundle.
Integer spin_c_change_chi(const BundleTopology& E, const SpinCStructure& C,
                          const LatticeClass& delta, const Integer& chi_L0);
/// The closed-form difference c1.delta + delta(delta + C).
Integer spin_c_change_correction(const BundleTopology& E, const SpinCStructure& C,
                                 const LatticeClass& delta);

/// Throws EvenB2Plus when b2+ of C's lattice is even.
IndexReport vdim(const BundleTopology& E, const SpinCStructure& C, const Integer& chi_L0);

/// 3 c2 - 1 - c1(c1 + K)/2 - (pg + 1): d1 for C = -K written in surface terms.
Integer anticanonical_d1(const SurfaceModel& S, const BundleTopology& E);

/// 2 chi(O) + (c1^2 - c1.K)/2 - c2.
Integer rank_two_riemann_roch(const SurfaceModel& S, const BundleTopology& E);

struct CompactnessBound {
  Rational threshold;
  Integer ceiling;
  bool satisfied;  // c2 >= threshold
};

/// (3/2)(b2+ + 1) - c1.C/2 + 2 chi_C(L0).
CompactnessBound compactness_bound(const BundleTopology& E, const SpinCStructure& C,
                                   std::size_t b2_plus, const Integer& chi_L0);
/// 5 (pg + 1) + c1.K/2, the same threshold for C = -K.
Rational anticanonical_compactness_threshold(const SurfaceModel& S, const LatticeClass& c1);

enum class ParityMode { Sum, Difference };
std::string_view to_string(ParityMode m);

/// Sum iff c2 = (c1^2 - c1.K)/2 + 1 (mod 2).
ParityMode parity_mode(const SurfaceModel& S, const BundleTopology& E);
/// c2 = (c1^2 - c1.K)/2 + pg (mod 2), the parity under which the invariant can be nonzero.
bool nonvanishing_parity(const SurfaceModel& S, const BundleTopology& E);

/// 2 K.H <= c1.H <= 0.
bool vanishing_test(const SurfaceModel& S, const Polarization& H, const LatticeClass& c1);

/// (2, 2K - c1, c2 - c1.K + K^2).
BundleTopology serre_partner(const SurfaceModel& S, const BundleTopology& E);

}  // namespace spincert
