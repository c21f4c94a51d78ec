#include "spincert/verdict.hpp"

#include <sstream>

#include "spincert/error.hpp"

namespace spincert {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::CertifiedZero: return "CertifiedZero";
    case Status::CertifiedNonzero: return "CertifiedNonzero";
    case Status::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string_view to_string(Outcome o) {
  return o == Outcome::Contradiction ? "Contradiction" : "Inconclusive";
}

std::vector<LatticeClass> degree_constraint_classes(const SurfaceModel& S, const Polarization& H,
                                                    const LatticeClass& c1) {
  std::vector<LatticeClass> out;
  for (const auto& fam : candidate_systems(S, H, c1)) {
    if (fam.arity() == 0) {
      out.push_back(fam.base);
      continue;
    }
    std::vector<Integer> t(fam.arity(), Integer(-1));
    while (true) {
      if (fam.admits(t)) out.push_back(fam.at(t));
      std::size_t i = t.size();
      bool done = true;
      while (i > 0) {
        --i;
        if (++t[i] <= 1) {
          done = false;
          break;
        }
        t[i] = -1;
      }
      if (done) break;
    }
  }
  return out;
}

namespace {

std::string walls_string(const std::vector<Wall>& walls) {
  std::string s;
  for (const auto& w : walls) {
    if (!s.empty()) s += ", ";
    s += w.e.to_string();
  }
  return s;
}

}  // namespace

Verdict spin_poly_status(const SurfaceModel& S, const Polarization& H, const SpinCStructure& C,
                         const BundleTopology& E, const CloseSearchBudget& budget) {
  Verdict v{Status::Unknown, {}, E, C.c(), H.h(), std::nullopt, false, {}, std::nullopt,
            std::nullopt, std::nullopt};
  auto note = [&](std::string rule, bool ok, std::string detail) {
    v.reasons.push_back({std::move(rule), ok, std::move(detail)});
  };
  const LatticeClass& K = S.canonical();
  const bool anticanonical = C.c() == -K;

  try {
    S.require_full_lattice();
    v.walls_through_base = wall_on_ray(S.pic(), E.c1, E.c2, H);
    v.chamber_warning = !v.walls_through_base.empty();
    if (v.chamber_warning)
      note("chamber_warning", false, "H lies on the walls " + walls_string(v.walls_through_base));
  } catch (const Error& e) {
    note("model", false, e.what());
    return v;
  }

  const Integer c1H = pair(E.c1, H.h());
  const Integer KH = pair(K, H.h());
  {
    std::ostringstream os;
    os << "2K.H = " << 2 * KH << ", c1.H = " << c1H;
    if (!anticanonical) {
      note("vanishing_degree_window", false, "not applicable: C is not -K");
    } else if (vanishing_test(S, H, E.c1)) {
      note("vanishing_degree_window", true, os.str() + ": 2K.H <= c1.H <= 0");
      v.status = Status::CertifiedZero;
      return v;
    } else {
      note("vanishing_degree_window", false, os.str() + ": window 2K.H <= c1.H <= 0 fails");
    }
  }

  if (!anticanonical) {
    note("nonvanishing", false, "nonvanishing certificates are only issued for C = -K");
    return v;
  }
  if (c1H <= 0) {
    note("nonvanishing", false, "c1.H = " + c1H.str() + " is not positive");
    return v;
  }

  bool ok = true;
  try {
    v.simplicity = check_simple(S, H, E.c1);
    note("simplicity", v.simplicity->simple,
         E.c1.to_string() + " and " + (Integer(2) * K - E.c1).to_string() +
             (v.simplicity->simple ? " are both" : " are not both") + " H-semisimple at H = " +
             H.h().to_string());
    ok = ok && v.simplicity->simple;
  } catch (const Error& e) {
    note("simplicity", false, e.what());
    ok = false;
  }

  {
    const bool par = nonvanishing_parity(S, E);
    const Integer half = (square(E.c1) - pair(E.c1, K)) / 2;
    note("nonvanishing_parity", par,
         "c2 = " + E.c2.str() + ", (c1^2 - c1.K)/2 + pg = " + to_string(mod(Integer(half + S.pg()), 2)) + " (mod 2)");
    ok = ok && par;
  }

  try {
    v.threshold = asymptotic_threshold(S, H, E.c1, C);
    const bool above = E.c2 >= v.threshold->n_h_c1;
    std::string detail = "c2 = " + E.c2.str() + ", N(H,c1) = " + v.threshold->n_h_c1.str();
    if (v.threshold->warning())
      detail += " (" + std::to_string(v.threshold->unknown.size()) +
                " bounds not evaluable, excluded)";
    note("asymptotic_threshold", above, detail);
    ok = ok && above;
  } catch (const Error& e) {
    note("asymptotic_threshold", false, e.what());
    ok = false;
  }

  try {
    v.gam = gam_dimension_report(S, E);
  } catch (const Error&) {
  }

  try {
    const ClosePolarization cp = close_polarization(
        S, H, E.c1, E.c2, degree_constraint_classes(S, H, E.c1), budget);
    v.close_polarization = cp.h.h();
    const auto on = wall_on_ray(S.pic(), E.c1, E.c2, cp.h);
    note("off_walls", on.empty(),
         "H^eps = " + cp.h.h().to_string() + " (scale " + cp.scale.str() + ", correction " +
             cp.correction.to_string() + ")" + (on.empty() ? " lies on no wall" : " lies on walls"));
    ok = ok && on.empty();
  } catch (const Error& e) {
    note("off_walls", false, e.what());
    ok = false;
  }

  if (ok) v.status = Status::CertifiedNonzero;
  return v;
}

namespace {

LatticeClass apply(const IntMatrix& P, const IntersectionLattice& L, const LatticeClass& x) {
  IntVector out(P.size());
  for (std::size_t i = 0; i < P.size(); ++i)
    for (std::size_t j = 0; j < x.rank(); ++j) out[i] += P[i][j] * x[j];
  return L.make_class(std::move(out));
}

}  // namespace

DiffeoHypothesis::DiffeoHypothesis(SurfaceModel source, SurfaceModel target, IntMatrix pullback)
    : source_(std::move(source)),
      target_(std::move(target)),
      pullback_(std::move(pullback)),
      increment_(source_.pic().zero()) {
  const std::size_t n = source_.pic().rank();
  if (target_.pic().rank() != n || pullback_.size() != n)
    throw Error(ErrorCode::NonIsometry, "source and target ranks differ");
  for (const auto& row : pullback_)
    if (row.size() != n) throw Error(ErrorCode::NonIsometry, "pullback matrix is not square");
  // P^T G_source P = G_target.
  const auto& Gs = source_.pic().gram();
  const auto& Gt = target_.pic().gram();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Integer s = 0;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) s += pullback_[a][i] * Gs[a][b] * pullback_[b][j];
      if (s != Gt[i][j])
        throw Error(ErrorCode::NonIsometry, "pullback does not preserve the intersection form");
    }
  if (abs(determinant(pullback_)) != 1)
    throw Error(ErrorCode::NonIsometry, "pullback is not invertible over the integers");
  const LatticeClass pulledK = pull(target_.canonical());
  if (!is_characteristic(pulledK))
    throw Error(ErrorCode::NonCharacteristicImage,
                "f^*K_target = " + pulledK.to_string() + " is not characteristic");
  auto half = halve(pulledK - source_.canonical());
  if (!half)
    throw Error(ErrorCode::NonCharacteristicImage, "canonical increment is not integral");
  increment_ = *half;
}

LatticeClass DiffeoHypothesis::pull(const LatticeClass& target_class) const {
  if (target_class.lattice() != target_.pic())
    throw Error(ErrorCode::LatticeMismatch, "class is not on the target lattice");
  return apply(pullback_, source_.pic(), target_class);
}

Transported transport(const DiffeoHypothesis& hyp, const BundleTopology& E_target,
                      const SpinCStructure& C_target) {
  const LatticeClass pulledC = hyp.pull(C_target.c());
  if (!is_characteristic(pulledC))
    throw Error(ErrorCode::NonCharacteristicImage, pulledC.to_string() + " is not characteristic");
  const LatticeClass& Ks = hyp.source().canonical();
  // -K_source = f^*C - 2 delta, so chi_{-K}(twist(f^*E, delta)) = chi_{f^*C}(f^*E).
  auto delta = halve(pulledC + Ks);
  if (!delta) throw Error(ErrorCode::NonCharacteristicImage, "f^*C + K_source is not even");
  const BundleTopology pulled{hyp.pull(E_target.c1), E_target.c2};
  return Transported{twist(pulled, *delta), make_spin_c(-Ks), *delta};
}

ContradictionReport contradiction_report(const DiffeoHypothesis& hyp,
                                         const BundleTopology& E_target,
                                         const Polarization& H_target,
                                         const std::optional<LatticeClass>& source_reference,
                                         const CloseSearchBudget& budget) {
  const SurfaceModel& T = hyp.target();
  const SurfaceModel& Src = hyp.source();
  const SpinCStructure C_target = make_spin_c(-T.canonical());

  Verdict target = spin_poly_status(T, H_target, C_target, E_target, budget);
  const Transported tr = transport(hyp, E_target, C_target);

  // The source side is evaluated on the ray matching the target's close polarization.
  std::vector<Reason> notes;
  LatticeClass Htgt = target.close_polarization.value_or(H_target.h());
  if (!target.close_polarization) {
    try {
      Htgt = close_polarization(T, H_target, E_target.c1, E_target.c2,
                                degree_constraint_classes(T, H_target, E_target.c1), budget)
                 .h.h();
    } catch (const Error& e) {
      notes.push_back({"close_polarization", false, e.what()});
    }
  }
  const LatticeClass Hsrc = hyp.pull(Htgt);
  std::optional<Verdict> source;
  try {
    const Polarization P = Polarization::ample(Src, Hsrc);
    notes.push_back({"transported_polarization", true,
                     "f^*H^eps = " + Hsrc.to_string() + " is ample on " + Src.name()});
    source = spin_poly_status(Src, P, tr.spin_c, tr.bundle, budget);
    if (source_reference) {
      const auto sep = enumerate_separating_walls(Src.pic(), tr.bundle.c1, tr.bundle.c2, P,
                                                  Polarization::positive(*source_reference));
      notes.push_back({"reference_chamber", sep.same_chamber,
                       "f^*H^eps and " + source_reference->to_string() +
                           (sep.same_chamber ? " lie in one chamber"
                                             : " are separated by " +
                                                   std::to_string(sep.separating_walls.size()) +
                                                   " walls")});
    }
  } catch (const Error& e) {
    notes.push_back({"transported_polarization", false, e.what()});
  }
  if (!source) {
    source = Verdict{Status::Unknown, {{"source", false, "source side not evaluated"}},
                     tr.bundle, tr.spin_c.c(), Hsrc, std::nullopt, false, {}, std::nullopt,
                     std::nullopt, std::nullopt};
  }

  // Transport must preserve chi and the dimensions.
  {
    const Integer chiT = chi_c(E_target, C_target, chi_c_L0(C_target));
    const Integer chiS = chi_c(tr.bundle, tr.spin_c, chi_c_L0(tr.spin_c));
    notes.push_back({"transport_preserves_chi", chiT == chiS,
                     "chi target = " + chiT.str() + ", chi source = " + chiS.str()});
  }

  ContradictionReport rep{Outcome::Inconclusive, std::move(target), std::move(*source), tr,
                          std::move(notes)};
  const Status a = rep.target.status, b = rep.source.status;
  if ((a == Status::CertifiedNonzero && b == Status::CertifiedZero) ||
      (a == Status::CertifiedZero && b == Status::CertifiedNonzero))
    rep.outcome = Outcome::Contradiction;
  return rep;
}

std::vector<std::string> scenario_names() {
  return {"fake-plane", "fake-f1", "fake-quadric", "control-identity"};
}

namespace {

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, IntVector(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

Scenario scenario(std::string_view name) {
  if (name == "fake-plane") {
    DiffeoHypothesis hyp(preset(Preset::CP2), preset(Preset::FakePlanePartner), identity(1));
    const auto& L = hyp.target().pic();
    return {std::string(name), hyp, L.make_class({1}), Integer(7), L.make_class({1}), {}};
  }
  if (name == "fake-f1") {
    DiffeoHypothesis hyp(preset(Preset::F1), preset(Preset::F1Partner), identity(2));
    const auto& L = hyp.target().pic();
    return {std::string(name), hyp, L.make_class({1, 0}), Integer(7), L.make_class({3, -1}), {}};
  }
  if (name == "fake-quadric") {
    DiffeoHypothesis hyp(preset(Preset::QuadricBlowup), preset(Preset::QuadricBlowupPartner),
                         identity(3));
    const auto& L = hyp.target().pic();
    return {std::string(name), hyp, L.make_class({1, 1, 1}), Integer(7), L.make_class({1, 1, 0}),
            {}};
  }
  if (name == "control-identity") {
    DiffeoHypothesis hyp(preset(Preset::CP2), preset(Preset::CP2), identity(1));
    const auto& L = hyp.target().pic();
    return {std::string(name), hyp, L.make_class({1}), Integer(7), L.make_class({1}), {}};
  }
  throw Error(ErrorCode::InvalidInput, "unknown scenario " + std::string(name));
}

ContradictionReport run_scenario(const Scenario& sc, const CloseSearchBudget& budget) {
  const SurfaceModel& T = sc.hypothesis.target();
  const Polarization H = Polarization::nef(T, sc.H);
  ContradictionReport rep = contradiction_report(sc.hypothesis, {sc.c1, sc.c2}, H,
                                                 sc.source_reference, budget);
  if (sc.name == "fake-quadric") {
    // On the quadric itself every expected dimension is odd, which is why the
    // argument passes to the blow-up.
    const SurfaceModel Q = preset(Preset::QuadricPartner);
    const SpinCStructure C = make_spin_c(-Q.canonical());
    const IndexReport r = vdim({Q.make_class({1, 1}), sc.c2}, C, chi_c_L0(C));
    rep.notes.push_back({"unblown_quadric_dimension_odd", !is_even(r.d),
                         "d = " + r.d.str() + " for (2, hp+hm, " + sc.c2.str() + ") on the quadric"});
  }
  return rep;
}

}  // namespace spincert
