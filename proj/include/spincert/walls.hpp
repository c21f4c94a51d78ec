#pragma once

// Walls of type (c1, c2) in the positive cone of a b2+ = 1 lattice,
// chamber comparison of polarizations and the close-polarization search.

#include <optional>
#include <vector>

#include "spincert/index.hpp"
#include "spincert/lattice.hpp"
#include "spincert/surface.hpp"

namespace spincert {

struct Wall {
  LatticeClass e;  // canonical sign: first nonzero coordinate positive
  Integer e_square;

  friend bool operator==(const Wall& a, const Wall& b) { return a.e == b.e; }
  friend bool operator<(const Wall& a, const Wall& b) { return a.e < b.e; }
};

/// Checks the wall conditions and normalizes the sign; throws InvalidInput otherwise.
Wall make_wall(const LatticeClass& e, const LatticeClass& c1, const Integer& c2);
bool is_wall_class(const LatticeClass& e, const LatticeClass& c1, const Integer& c2);

struct ChamberSeparation {
  std::vector<Wall> separating_walls;
  bool same_chamber = true;
};

/// Coordinatewise bound B with |e_i| <= B_i for every wall separating H1
/// from H2 (or every wall through H1 when H2 is absent).
IntVector wall_search_box(const LatticeClass& c1, const Integer& c2, const LatticeClass& H1,
                          const std::optional<LatticeClass>& H2);

/// All walls e with e.H1 and e.H2 of strictly opposite signs, sorted.
ChamberSeparation enumerate_separating_walls(const IntersectionLattice& lattice,
                                             const LatticeClass& c1, const Integer& c2,
                                             const Polarization& H1, const Polarization& H2);

/// All walls with e.H = 0, sorted.
std::vector<Wall> wall_on_ray(const IntersectionLattice& lattice, const LatticeClass& c1,
                              const Integer& c2, const Polarization& H);

/// Which splitting classes a wall e stands for: (c1 + e)/2 and (c1 - e)/2,
/// or the literal pair e and c1 - e.
enum class SplittingReading { HalfSum, Literal };

struct WallImportance {
  bool important = false;
  LatticeClass sigma_plus;
  LatticeClass sigma_minus;
  Integer chi_plus;
  Integer chi_minus;
};

/// chi_C(L_sigma) = sigma(sigma + C)/2 + chi_C(L0).
Integer chi_c_line(const LatticeClass& sigma, const SpinCStructure& C, const Integer& chi_L0);

WallImportance important_wall(const LatticeClass& e, const SpinCStructure& C,
                              const LatticeClass& c1, const Integer& chi_L0,
                              SplittingReading reading = SplittingReading::HalfSum);

struct CloseSearchBudget {
  int max_scale = 64;
  int max_correction = 8;
};

/// Result of the close-polarization search with the data it was checked against.
struct ClosePolarization {
  Polarization h;
  Integer scale;
  LatticeClass correction;
};

/// Finds a primitive ample class N*H + kappa that lies on no wall of type
/// (c1, c2) or of the Serre partner type, keeps every strict inequality
/// 2 C.H < c1.H for C in degree_classes, and is separated from H by no wall.
/// Throws SearchExhausted when the budget runs out.
ClosePolarization close_polarization(const SurfaceModel& S, const Polarization& H,
                                     const LatticeClass& c1, const Integer& c2,
                                     const std::vector<LatticeClass>& degree_classes,
                                     const CloseSearchBudget& budget = {});

/// Re-checks the three postconditions of close_polarization independently.
bool verify_close_polarization(const SurfaceModel& S, const Polarization& H,
                               const LatticeClass& candidate, const LatticeClass& c1,
                               const Integer& c2,
                               const std::vector<LatticeClass>& degree_classes);

}  // namespace spincert
