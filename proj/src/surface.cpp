#include "spincert/surface.hpp"

#include "spincert/error.hpp"

namespace spincert {

SurfaceModel::SurfaceModel(std::string name, IntersectionLattice pic, LatticeClass K, Integer pg,
                           std::vector<LatticeClass> effective_generators,
                           bool effective_cone_complete,
                           std::vector<NumericalConstraint> constraints, SectionOracle oracle)
    : name_(std::move(name)),
      pic_(std::move(pic)),
      K_(std::move(K)),
      pg_(std::move(pg)),
      generators_(std::move(effective_generators)),
      cone_complete_(effective_cone_complete),
      constraints_(std::move(constraints)),
      oracle_(oracle) {
  if (K_.lattice() != pic_) throw Error(ErrorCode::LatticeMismatch, "K is not a class of Pic S");
  if (!is_characteristic(K_))
    throw Error(ErrorCode::NotCharacteristic, "canonical class " + K_.to_string() +
                                                  " is not characteristic");
  if (pg_ < 0) throw Error(ErrorCode::InvalidInput, "pg must be non-negative");
  for (const auto& g : generators_) {
    if (g.lattice() != pic_) throw Error(ErrorCode::LatticeMismatch, "generator outside Pic S");
    if (g.is_zero()) throw Error(ErrorCode::InvalidInput, "zero effective generator");
  }
  for (const auto& c : constraints_)
    if (c.functional.lattice() != pic_)
      throw Error(ErrorCode::LatticeMismatch, "constraint functional outside Pic S");
}

bool SurfaceModel::b2_plus_consistent() const {
  return Integer(pic_.b2_plus()) == 2 * pg_ + 1;
}

void SurfaceModel::require_full_lattice() const {
  if (pic_.b2_plus() % 2 == 0)
    throw Error(ErrorCode::EvenB2Plus, name_ + ": b2+ = " + std::to_string(pic_.b2_plus()));
  if (!b2_plus_consistent())
    throw Error(ErrorCode::InconsistentModel,
                name_ + ": b2+ = " + std::to_string(pic_.b2_plus()) + " but pg = " + pg_.str());
}

bool SurfaceModel::satisfies_constraints(const LatticeClass& C) const {
  if (C.is_zero()) return true;
  for (const auto& c : constraints_)
    if (pair(c.functional, C) < c.bound) return false;
  return true;
}

namespace {

IntersectionLattice plane_lattice(const char* name) {
  return IntersectionLattice({{Integer(1)}}, {name});
}

IntersectionLattice f1_lattice(const char* a, const char* b) {
  return IntersectionLattice({{Integer(1), Integer(0)}, {Integer(0), Integer(-1)}}, {a, b});
}

IntersectionLattice hyperbolic_lattice() {
  return IntersectionLattice({{Integer(0), Integer(1)}, {Integer(1), Integer(0)}}, {"hp", "hm"});
}

NumericalConstraint canonical_degree_at_least_one(const LatticeClass& K) {
  return {K, Integer(1), "C.K >= 1"};
}

}  // namespace

SurfaceModel preset(Preset p) {
  switch (p) {
    case Preset::CP2: {
      auto L = plane_lattice("l");
      return SurfaceModel("CP2", L, L.make_class({-3}), 0, {L.make_class({1})}, true, {},
                          SectionOracle::ProjectivePlane);
    }
    case Preset::FakePlanePartner: {
      auto L = plane_lattice("h");
      auto K = L.make_class({3});
      return SurfaceModel("FakePlanePartner", L, K, 0, {L.make_class({1})}, true,
                          {canonical_degree_at_least_one(K)});
    }
    case Preset::F1: {
      auto L = f1_lattice("l", "E");
      return SurfaceModel("F1", L, L.make_class({-3, 1}), 0,
                          {L.make_class({0, 1}), L.make_class({1, -1})}, true, {},
                          SectionOracle::FirstHirzebruch);
    }
    case Preset::F1Partner: {
      auto L = f1_lattice("h", "e");
      auto K = L.make_class({3, -1});
      return SurfaceModel("F1Partner", L, K, 0, {}, false, {canonical_degree_at_least_one(K)});
    }
    case Preset::Quadric: {
      auto L = hyperbolic_lattice();
      return SurfaceModel("Quadric", L, L.make_class({-2, -2}), 0,
                          {L.make_class({1, 0}), L.make_class({0, 1})}, true, {},
                          SectionOracle::Quadric);
    }
    case Preset::QuadricPartner: {
      auto L = hyperbolic_lattice();
      auto K = L.make_class({2, 2});
      return SurfaceModel("QuadricPartner", L, K, 0, {}, false,
                          {canonical_degree_at_least_one(K)});
    }
    case Preset::QuadricBlowup: {
      SurfaceModel b = blow_up(preset(Preset::Quadric));
      const auto& L = b.pic();
      // The blow-up of a point on the quadric: E and the strict transforms
      // of the two rulings through it.
      return SurfaceModel("QuadricBlowup", L, b.canonical(), b.pg(),
                          {L.make_class({0, 0, 1}), L.make_class({1, 0, -1}),
                           L.make_class({0, 1, -1})},
                          true);
    }
    case Preset::QuadricBlowupPartner: {
      SurfaceModel b = blow_up(preset(Preset::QuadricPartner));
      return SurfaceModel("QuadricBlowupPartner", b.pic(), b.canonical(), b.pg(),
                          b.effective_generators(), false, {});
    }
  }
  throw Error(ErrorCode::InvalidInput, "unknown preset");
}

std::string_view preset_name(Preset p) {
  switch (p) {
    case Preset::CP2: return "CP2";
    case Preset::FakePlanePartner: return "FakePlanePartner";
    case Preset::F1: return "F1";
    case Preset::F1Partner: return "F1Partner";
    case Preset::QuadricBlowupPartner: return "QuadricBlowupPartner";
    case Preset::Quadric: return "Quadric";
    case Preset::QuadricPartner: return "QuadricPartner";
    case Preset::QuadricBlowup: return "QuadricBlowup";
  }
  return "";
}

std::vector<Preset> scenario_presets() {
  return {Preset::CP2, Preset::FakePlanePartner, Preset::F1, Preset::F1Partner,
          Preset::QuadricBlowupPartner};
}

std::vector<Preset> all_presets() {
  return {Preset::CP2,           Preset::FakePlanePartner, Preset::F1,
          Preset::F1Partner,     Preset::QuadricBlowupPartner, Preset::Quadric,
          Preset::QuadricPartner, Preset::QuadricBlowup};
}

std::optional<Preset> preset_from_name(std::string_view name) {
  for (Preset p : all_presets())
    if (preset_name(p) == name) return p;
  return std::nullopt;
}

SurfaceModel blow_up(const SurfaceModel& S, const std::string& exceptional_name) {
  IntersectionLattice L = S.pic().with_exceptional_class(exceptional_name);
  auto lift = [&](const LatticeClass& x) {
    IntVector v = x.coords();
    v.push_back(0);
    return L.make_class(std::move(v));
  };
  LatticeClass E = L.basis(L.rank() - 1);
  std::vector<LatticeClass> gens;
  for (const auto& g : S.effective_generators()) gens.push_back(lift(g));
  gens.push_back(E);
  SectionOracle oracle = S.oracle() == SectionOracle::ProjectivePlane
                             ? SectionOracle::FirstHirzebruch
                             : SectionOracle::None;
  return SurfaceModel(S.name() + "~", L, lift(S.canonical()) + E, S.pg(), std::move(gens), false,
                      {}, oracle);
}

Integer riemann_roch_chi(const SurfaceModel& S, const LatticeClass& L) {
  const Integer twice = square(L) - pair(L, S.canonical());
  if (!is_even(twice))
    throw Error(ErrorCode::ParityViolation, "L^2 - L.K is odd for L = " + L.to_string());
  return S.chi_O() + twice / 2;
}

namespace {

Integer plane_sections(const Integer& d) {
  if (d < 0) return 0;
  return (d + 1) * (d + 2) / 2;
}

}  // namespace

std::optional<Integer> h0(const SurfaceModel& S, const LatticeClass& L) {
  if (L.lattice() != S.pic()) throw Error(ErrorCode::LatticeMismatch, "class outside Pic S");
  switch (S.oracle()) {
    case SectionOracle::None: return std::nullopt;
    case SectionOracle::ProjectivePlane: return plane_sections(L[0]);
    case SectionOracle::FirstHirzebruch: {
      // a l - m E: plane curves of degree a through the point with multiplicity m.
      const Integer& a = L[0];
      const Integer m = -L[1];
      if (a < 0) return Integer(0);
      if (m <= 0) return plane_sections(a);
      if (m > a) return Integer(0);
      return plane_sections(a) - m * (m + 1) / 2;
    }
    case SectionOracle::Quadric: {
      if (L[0] < 0 || L[1] < 0) return Integer(0);
      return (L[0] + 1) * (L[1] + 1);
    }
  }
  return std::nullopt;
}

std::optional<Integer> h0(const SurfaceModel& S, const LatticeClass& L, const LatticeClass& H) {
  if (pair(L, H) < 0) return Integer(0);
  return h0(S, L);
}

bool is_numerically_ample(const SurfaceModel& S, const LatticeClass& h) {
  if (square(h) <= 0) return false;
  for (const auto& g : S.effective_generators())
    if (pair(h, g) <= 0) return false;
  return true;
}

Polarization Polarization::ample(const SurfaceModel& S, const LatticeClass& h) {
  if (h.lattice() != S.pic()) throw Error(ErrorCode::LatticeMismatch, "polarization outside Pic S");
  if (square(h) <= 0)
    throw Error(ErrorCode::NotPolarization, h.to_string() + " has non-positive square");
  for (const auto& g : S.effective_generators())
    if (pair(h, g) <= 0)
      throw Error(ErrorCode::NotPolarization,
                  h.to_string() + " is not positive on the generator " + g.to_string());
  return Polarization(h, true);
}

Polarization Polarization::nef(const SurfaceModel& S, const LatticeClass& h) {
  if (h.lattice() != S.pic()) throw Error(ErrorCode::LatticeMismatch, "polarization outside Pic S");
  if (square(h) <= 0)
    throw Error(ErrorCode::NotPolarization, h.to_string() + " has non-positive square");
  for (const auto& g : S.effective_generators())
    if (pair(h, g) < 0)
      throw Error(ErrorCode::NotPolarization,
                  h.to_string() + " is negative on the generator " + g.to_string());
  return Polarization(h, is_numerically_ample(S, h));
}

Polarization Polarization::positive(const LatticeClass& h) {
  if (square(h) <= 0)
    throw Error(ErrorCode::NotPolarization, h.to_string() + " has non-positive square");
  return Polarization(h, false);
}

}  // namespace spincert
