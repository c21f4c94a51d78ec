#pragma once

// Zero / nonzero / unknown status of the invariant for a bundle type, transport
// across a hypothetical diffeomorphism, and the two-sided contradiction report.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spincert/gam.hpp"
#include "spincert/index.hpp"
#include "spincert/simplicity.hpp"
#include "spincert/surface.hpp"
#include "spincert/walls.hpp"

namespace spincert {

enum class Status { CertifiedZero, CertifiedNonzero, Unknown };
std::string_view to_string(Status s);

/// One named check with its outcome and the numbers behind it.
struct Reason {
  std::string rule;
  bool passed = false;
  std::string detail;
};

struct Verdict {
  Status status = Status::Unknown;
  std::vector<Reason> reasons;
  BundleTopology bundle;
  LatticeClass spin_c;
  LatticeClass base_polarization;
  std::optional<LatticeClass> close_polarization;
  bool chamber_warning = false;
  std::vector<Wall> walls_through_base;
  std::optional<SimplicityCertificate> simplicity;
  std::optional<AsymptoticThreshold> threshold;
  std::optional<GamReport> gam;
};

/// Runs the vanishing criterion, then (for C = -K and c1.H > 0) simplicity at
/// H, the nonvanishing parity, the asymptotic threshold and the off-wall
/// check at a close polarization. Certificate failures become Unknown.
Verdict spin_poly_status(const SurfaceModel& S, const Polarization& H, const SpinCStructure& C,
                         const BundleTopology& E, const CloseSearchBudget& budget = {});

/// Classes C of candidate families at small parameters, used to keep the
/// degree inequalities when moving to a close polarization.
std::vector<LatticeClass> degree_constraint_classes(const SurfaceModel& S, const Polarization& H,
                                                    const LatticeClass& c1);

/// f^* from the target (partner) lattice to the source (rational) lattice.
/// Columns of the pullback matrix are the images of the target basis.
class DiffeoHypothesis {
 public:
  /// Throws NonIsometry or NonCharacteristicImage.
  DiffeoHypothesis(SurfaceModel source, SurfaceModel target, IntMatrix pullback);

  const SurfaceModel& source() const { return source_; }
  const SurfaceModel& target() const { return target_; }
  const IntMatrix& pullback() const { return pullback_; }
  /// (f^* K_target - K_source)/2.
  const LatticeClass& canonical_increment() const { return increment_; }

  LatticeClass pull(const LatticeClass& target_class) const;

 private:
  SurfaceModel source_;
  SurfaceModel target_;
  IntMatrix pullback_;
  LatticeClass increment_;
};

struct Transported {
  BundleTopology bundle;  // on the source lattice
  SpinCStructure spin_c;  // -K_source
  LatticeClass delta;     // twist applied after pulling back
};

/// Pulls (C, c1) back and twists so that the Spin^c structure becomes -K_source.
Transported transport(const DiffeoHypothesis& hyp, const BundleTopology& E_target,
                      const SpinCStructure& C_target);

enum class Outcome { Contradiction, Inconclusive };
std::string_view to_string(Outcome o);

struct ContradictionReport {
  Outcome outcome = Outcome::Inconclusive;
  Verdict target;
  Verdict source;
  std::optional<Transported> transported;
  std::vector<Reason> notes;
};

ContradictionReport contradiction_report(const DiffeoHypothesis& hyp,
                                         const BundleTopology& E_target,
                                         const Polarization& H_target,
                                         const std::optional<LatticeClass>& source_reference = {},
                                         const CloseSearchBudget& budget = {});

struct Scenario {
  std::string name;
  DiffeoHypothesis hypothesis;
  LatticeClass c1;  // on the target
  Integer c2;
  LatticeClass H;  // base polarization on the target
  std::optional<LatticeClass> source_reference;
};

/// fake-plane, fake-f1, fake-quadric and control-identity.
std::vector<std::string> scenario_names();
Scenario scenario(std::string_view name);
ContradictionReport run_scenario(const Scenario& sc, const CloseSearchBudget& budget = {});

}  // namespace spincert
