#pragma once

// H-semisimplicity and H-simplicity certificates: every effective C of small
// H-degree must satisfy C.K + C^2 <= c1.C.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "spincert/quadratic.hpp"
#include "spincert/surface.hpp"

namespace spincert {

/// C = base + t_1 * directions[0] + t_2 * directions[1], for integer t in
/// the domain cut out by the constraints.
struct CurveFamily {
  LatticeClass base;
  std::vector<LatticeClass> directions;
  std::vector<LinearConstraint> constraints;
  std::vector<std::string> constraint_labels;
  Integer degree;  // C.H on the whole family
  bool zero_family = false;

  std::size_t arity() const { return directions.size(); }
  LatticeClass at(const std::vector<Integer>& t) const;
  bool admits(const std::vector<Integer>& t) const;
  std::string describe() const;
};

/// C.K + C^2 - c1.C as a polynomial in the family parameters.
QuadraticPolynomial inequality_polynomial(const SurfaceModel& S, const LatticeClass& c1,
                                          const CurveFamily& family);

struct FamilyCheck {
  CurveFamily family;
  QuadraticPolynomial excess;  // C.K + C^2 - c1.C; must stay <= 0
  bool holds = true;
  std::optional<std::vector<Integer>> witness;
  // Both sides of C.K + C^2 <= c1.C, filled in for single classes.
  std::optional<Integer> lhs;
  std::optional<Integer> rhs;
};

/// Every class C with 2 C.H < c1.H that passes the model's numerical
/// constraints lies in exactly one returned family. Empty when c1.H <= 0.
/// Throws UnboundedDegree when b2+ of Pic S is not 1.
std::vector<CurveFamily> candidate_systems(const SurfaceModel& S, const Polarization& H,
                                           const LatticeClass& c1);

/// Decides the inequality on the whole family; a failing verdict carries a witness.
FamilyCheck check_inequality(const SurfaceModel& S, const LatticeClass& c1,
                             const CurveFamily& family);

struct SimplicityCertificate {
  LatticeClass class_checked;
  LatticeClass polarization;
  std::vector<FamilyCheck> families;
  bool semisimple = false;
  bool simple = false;
  /// Certificate for 2K - c1, present on results of check_simple.
  std::shared_ptr<const SimplicityCertificate> partner;
};

SimplicityCertificate check_semisimple(const SurfaceModel& S, const Polarization& H,
                                       const LatticeClass& c1);
SimplicityCertificate check_simple(const SurfaceModel& S, const Polarization& H,
                                   const LatticeClass& c1);

}  // namespace spincert
