#include "spincert/gam.hpp"

#include <algorithm>

#include "spincert/error.hpp"

namespace spincert {

BundleTopology gam_shift(const BundleTopology& E, const LatticeClass& Ci) {
  return {E.c1 - Integer(2) * Ci, E.c2 - pair(E.c1, Ci) + square(Ci)};
}

Integer tail_term(const SurfaceModel& S, const LatticeClass& c1, const LatticeClass& Ci) {
  return pair(Ci, S.canonical()) + square(Ci) - pair(c1, Ci);
}

GamReport gam_dimension_report(const SurfaceModel& S, const BundleTopology& E,
                               const std::vector<LatticeClass>& classes) {
  const LatticeClass L = E.c1 + S.canonical();
  const Integer chi = riemann_roch_chi(S, L);
  GamReport r;
  r.fibre_dim_generic = E.c2 - chi - 1;
  r.target_vdim = r.fibre_dim_generic + 2 * E.c2;
  r.h0_c1_plus_K = h0(S, L);
  if (r.h0_c1_plus_K) {
    const Integer& h = *r.h0_c1_plus_K;
    r.delta_locus_bound = E.c2 + h - 1;
    r.c2_threshold_delta = 2 * h + 1;
    // h^2(L) = h^0(K - L) = h^0(-c1).
    if (auto h2 = h0(S, -E.c1)) {
      const Integer h1 = h + *h2 - chi;
      r.delta_preimage_bound = 2 * E.c2 - 2 + h + h1;
    }
  }
  for (const auto& Ci : classes) r.tail_terms.emplace_back(Ci, tail_term(S, E.c1, Ci));
  return r;
}

namespace {

void add(AsymptoticThreshold& t, const std::string& name, const Integer& value) {
  t.contributions[name] = value;
}

// Least c2 with c2 > 2 h0(shifted c1 + K) after undoing the shift and offset.
void add_delta_bounds(AsymptoticThreshold& t, const SurfaceModel& S, const Polarization& H,
                      const LatticeClass& c1, const Integer& c2_offset, const std::string& prefix) {
  const LatticeClass& K = S.canonical();
  if (auto h = h0(S, c1 + K, H.h()))
    add(t, prefix + "delta_locus", 2 * *h + c2_offset + 1);
  else
    t.unknown.push_back(prefix + "delta_locus: no section oracle for " + (c1 + K).to_string());
  for (const auto& fam : candidate_systems(S, H, c1)) {
    if (fam.arity() == 0 && fam.base.is_zero()) continue;
    if (fam.arity() > 0) {
      t.unknown.push_back(prefix + "delta_locus[" + fam.describe() + "]: parametric family");
      continue;
    }
    const LatticeClass& Ci = fam.base;
    const LatticeClass shifted = c1 - Integer(2) * Ci + K;
    const std::string name = prefix + "delta_locus[" + Ci.to_string() + "]";
    if (auto h = h0(S, shifted, H.h()))
      add(t, name, 2 * *h + pair(c1, Ci) - square(Ci) + c2_offset + 1);
    else
      t.unknown.push_back(name + ": no section oracle for " + shifted.to_string());
  }
}

}  // namespace

AsymptoticThreshold asymptotic_threshold(const SurfaceModel& S, const Polarization& H,
                                         const LatticeClass& c1, const SpinCStructure& C) {
  S.require_full_lattice();
  const Integer chiL0 = chi_c_L0(S, C);
  AsymptoticThreshold t;
  const BundleTopology E0{c1, Integer(0)};
  add(t, "compactness", compactness_bound(E0, C, S.pic().b2_plus(), chiL0).ceiling);
  // d1 grows by 3 per unit of c2.
  const Integer d1_at_zero = vdim(E0, C, chiL0).d1;
  add(t, "positive_d1", floor_div(-d1_at_zero, 3) + 1);
  if (C.c() == -S.canonical()) {
    add_delta_bounds(t, S, H, c1, 0, "");
    const LatticeClass& K = S.canonical();
    // c2' = c2 - c1.K + K^2 on the partner side.
    add_delta_bounds(t, S, H, Integer(2) * K - c1, pair(c1, K) - square(K), "serre_");
  } else {
    t.unknown.push_back("delta_locus: only defined for C = -K");
  }
  t.n_h_c1 = t.contributions.begin()->second;
  for (const auto& [name, v] : t.contributions) t.n_h_c1 = std::max(t.n_h_c1, v);
  return t;
}

}  // namespace spincert
