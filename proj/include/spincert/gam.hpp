#pragma once

// Dimension counts for extension varieties and the explicit asymptotic
// threshold N(H, c1) assembled from named bounds.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spincert/index.hpp"
#include "spincert/simplicity.hpp"

namespace spincert {

/// (2, c1 - 2 Ci, c2 - c1.Ci + Ci^2).
BundleTopology gam_shift(const BundleTopology& E, const LatticeClass& Ci);

/// Ci.K + Ci^2 - c1.Ci.
Integer tail_term(const SurfaceModel& S, const LatticeClass& c1, const LatticeClass& Ci);

struct GamReport {
  Integer target_vdim;        // 3 c2 - 1 - c1(c1 + K)/2 - (pg + 1)
  Integer fibre_dim_generic;  // c2 - chi(c1 + K) - 1
  std::optional<Integer> h0_c1_plus_K;
  std::optional<Integer> delta_locus_bound;     // c2 + h0(c1 + K) - 1
  std::optional<Integer> delta_preimage_bound;  // 2 c2 - 2 + h0 + h1 of c1 + K
  std::optional<Integer> c2_threshold_delta;    // least c2 with c2 > 2 h0(c1 + K)
  std::vector<std::pair<LatticeClass, Integer>> tail_terms;

  bool extension_space_empty() const { return fibre_dim_generic < 0; }
};

/// Tail terms are taken over the given classes (usually single-class candidate systems).
GamReport gam_dimension_report(const SurfaceModel& S, const BundleTopology& E,
                               const std::vector<LatticeClass>& classes = {});

struct AsymptoticThreshold {
  Integer n_h_c1;
  std::map<std::string, Integer> contributions;
  std::vector<std::string> unknown;  // bounds that could not be evaluated
  bool warning() const { return !unknown.empty(); }
};

AsymptoticThreshold asymptotic_threshold(const SurfaceModel& S, const Polarization& H,
                                         const LatticeClass& c1, const SpinCStructure& C);

}  // namespace spincert
