#pragma once

// Algebraic surfaces seen through their Picard lattice: canonical class,
// geometric genus, numerical effectivity data and section-count oracles.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spincert/lattice.hpp"

namespace spincert {

/// Linear condition functional.C >= bound, required of every nonzero
/// effective class C.
struct NumericalConstraint {
  LatticeClass functional;
  Integer bound;
  std::string label;
};

/// Closed formulas for h^0 of line bundles, available on a few rational surfaces.
enum class SectionOracle { None, ProjectivePlane, FirstHirzebruch, Quadric };

class SurfaceModel {
 public:
  /// Throws NotCharacteristic when K is not characteristic in pic.
  SurfaceModel(std::string name, IntersectionLattice pic, LatticeClass K, Integer pg,
               std::vector<LatticeClass> effective_generators = {},
               bool effective_cone_complete = false,
               std::vector<NumericalConstraint> constraints = {},
               SectionOracle oracle = SectionOracle::None);

  const std::string& name() const { return name_; }
  const IntersectionLattice& pic() const { return pic_; }
  const LatticeClass& canonical() const { return K_; }
  const Integer& pg() const { return pg_; }
  Integer chi_O() const { return pg_ + 1; }
  const std::vector<LatticeClass>& effective_generators() const { return generators_; }
  /// True when the generators span the whole effective cone, not only part of it.
  bool effective_cone_complete() const { return cone_complete_; }
  const std::vector<NumericalConstraint>& constraints() const { return constraints_; }
  SectionOracle oracle() const { return oracle_; }

  LatticeClass make_class(IntVector coords) const { return pic_.make_class(std::move(coords)); }
  LatticeClass make_class(std::initializer_list<long long> coords) const {
    return pic_.make_class(coords);
  }

  /// b2+ of the Picard lattice equals 2 pg + 1, which is what the index
  /// formulas need when Pic S is the whole of H^2.
  bool b2_plus_consistent() const;
  /// Throws EvenB2Plus / InconsistentModel when the model cannot stand in for H^2.
  void require_full_lattice() const;

  /// Nonzero C passes every numerical constraint.
  bool satisfies_constraints(const LatticeClass& C) const;

 private:
  std::string name_;
  IntersectionLattice pic_;
  LatticeClass K_;
  Integer pg_;
  std::vector<LatticeClass> generators_;
  bool cone_complete_;
  std::vector<NumericalConstraint> constraints_;
  SectionOracle oracle_;
};

enum class Preset {
  CP2,
  FakePlanePartner,
  F1,
  F1Partner,
  QuadricBlowupPartner,
  Quadric,
  QuadricPartner,
  QuadricBlowup,
};

SurfaceModel preset(Preset p);
std::optional<Preset> preset_from_name(std::string_view name);
std::string_view preset_name(Preset p);
/// The five surfaces of the fake-surface scenarios, in declaration order.
std::vector<Preset> scenario_presets();
std::vector<Preset> all_presets();

/// Adds an exceptional class E (E^2 = -1, orthogonal to the old lattice)
/// and sends K to K + E. Numerical constraints are dropped because they
/// need not survive on the blow-up; E joins the generators.
SurfaceModel blow_up(const SurfaceModel& S, const std::string& exceptional_name = "E");

/// chi(L) = chi(O_S) + (L^2 - L.K)/2.
Integer riemann_roch_chi(const SurfaceModel& S, const LatticeClass& L);

/// Exact h^0(L) from the preset oracle; nullopt when no oracle exists.
std::optional<Integer> h0(const SurfaceModel& S, const LatticeClass& L);
/// Same, but answers 0 without an oracle when L.H < 0 for an ample H.
std::optional<Integer> h0(const SurfaceModel& S, const LatticeClass& L, const LatticeClass& H);

/// Numerically positive class used as a polarization.
class Polarization {
 public:
  /// H^2 > 0 and H.g > 0 for every effective generator.
  static Polarization ample(const SurfaceModel& S, const LatticeClass& h);
  /// H^2 > 0 and H.g >= 0: a nef and big class, used only as a base ray.
  static Polarization nef(const SurfaceModel& S, const LatticeClass& h);
  /// Only H^2 > 0; for lattice-level wall computations.
  static Polarization positive(const LatticeClass& h);

  const LatticeClass& h() const { return h_; }
  bool strictly_ample() const { return strict_; }

 private:
  Polarization(LatticeClass h, bool strict) : h_(std::move(h)), strict_(strict) {}
  LatticeClass h_;
  bool strict_;
};

bool is_numerically_ample(const SurfaceModel& S, const LatticeClass& h);

}  // namespace spincert
