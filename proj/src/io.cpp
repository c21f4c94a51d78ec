#include "spincert/io.hpp"

#include <fstream>
#include <sstream>

#include "spincert/error.hpp"

namespace spincert {

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_number_unsigned()) return Integer(j.get<unsigned long long>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    try {
      return Integer(s);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidInput, "not an integer: " + s);
    }
  }
  throw Error(ErrorCode::InvalidInput, "expected an integer, got " + j.dump());
}

IntVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidInput, "expected an integer array, got " + j.dump());
  IntVector v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidInput, "expected a matrix, got " + j.dump());
  IntMatrix m;
  for (const auto& row : j) m.push_back(vector_from_json(row));
  return m;
}

Json to_json(const Integer& x) {
  if (fits_int64(x)) return Json(x.convert_to<long long>());
  return Json(x.str());
}

Json to_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

IntVector parse_vector(const std::string& text) {
  IntVector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw Error(ErrorCode::InvalidInput, "empty entry in '" + text + "'");
    const std::string t = item.substr(b, e - b + 1);
    if (t.find_first_not_of("+-0123456789") != std::string::npos)
      throw Error(ErrorCode::InvalidInput, "not an integer: '" + t + "'");
    try {
      v.emplace_back(t);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidInput, "not an integer: '" + t + "'");
    }
  }
  if (v.empty()) throw Error(ErrorCode::InvalidInput, "empty vector");
  return v;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidInput, path + ": " + e.what());
  }
}

namespace {

std::vector<std::string> names_from_json(const Json& j) {
  std::vector<std::string> names;
  for (const auto& s : j) names.push_back(s.get<std::string>());
  return names;
}

struct ConstraintSpec {
  bool canonical = false;
  IntVector coords;
  Integer bound;
  std::string label;
};

}  // namespace

IntersectionLattice lattice_from_json(const Json& j) {
  if (!j.contains("gram")) throw Error(ErrorCode::InvalidInput, "missing 'gram'");
  IntMatrix g = matrix_from_json(j.at("gram"));
  if (j.contains("rank") && Integer(g.size()) != integer_from_json(j.at("rank")))
    throw Error(ErrorCode::DimensionMismatch, "'rank' does not match the gram matrix");
  std::vector<std::string> names;
  if (j.contains("basis")) names = names_from_json(j.at("basis"));
  if (j.contains("b2_plus") || j.contains("b2_minus")) {
    if (!j.contains("b2_plus") || !j.contains("b2_minus"))
      throw Error(ErrorCode::InvalidInput, "give both b2_plus and b2_minus");
    return IntersectionLattice(std::move(g), j.at("b2_plus").get<std::size_t>(),
                               j.at("b2_minus").get<std::size_t>(), std::move(names));
  }
  return IntersectionLattice(std::move(g), std::move(names));
}

SurfaceModel surface_from_json(const Json& j) {
  if (j.is_string()) {
    auto p = preset_from_name(j.get<std::string>());
    if (!p) throw Error(ErrorCode::InvalidInput, "unknown preset " + j.dump());
    return preset(*p);
  }
  if (!j.is_object()) throw Error(ErrorCode::InvalidInput, "surface must be an object or preset name");

  std::string name = "surface";
  std::optional<IntMatrix> gram;
  std::vector<std::string> names;
  std::optional<IntVector> K;
  Integer pg = 0;
  std::vector<IntVector> gens;
  bool complete = false;
  std::vector<ConstraintSpec> constraints;
  SectionOracle oracle = SectionOracle::None;

  if (j.contains("preset")) {
    const std::string pname = j.at("preset").get<std::string>();
    auto p = preset_from_name(pname);
    if (!p) throw Error(ErrorCode::InvalidInput, "unknown preset " + pname);
    const SurfaceModel base = preset(*p);
    name = base.name();
    gram = base.pic().gram();
    names = base.pic().basis_names();
    K = base.canonical().coords();
    pg = base.pg();
    for (const auto& g : base.effective_generators()) gens.push_back(g.coords());
    complete = base.effective_cone_complete();
    for (const auto& c : base.constraints())
      constraints.push_back({c.functional == base.canonical(), c.functional.coords(), c.bound,
                             c.label});
    oracle = base.oracle();
  }
  bool changed = false;
  if (j.contains("name")) name = j.at("name").get<std::string>();
  if (j.contains("gram")) {
    gram = matrix_from_json(j.at("gram"));
    changed = true;
  }
  if (j.contains("basis")) names = names_from_json(j.at("basis"));
  if (!gram) throw Error(ErrorCode::InvalidInput, "surface needs 'gram' or 'preset'");
  if (j.contains("rank") && Integer(gram->size()) != integer_from_json(j.at("rank")))
    throw Error(ErrorCode::DimensionMismatch, "'rank' does not match the gram matrix");
  if (!names.empty() && names.size() != gram->size()) names.clear();
  if (j.contains("K")) {
    K = vector_from_json(j.at("K"));
    changed = true;
  }
  if (!K) throw Error(ErrorCode::InvalidInput, "surface needs 'K'");
  if (j.contains("pg")) pg = integer_from_json(j.at("pg"));
  if (j.contains("effective_generators")) {
    gens.clear();
    for (const auto& g : j.at("effective_generators")) gens.push_back(vector_from_json(g));
    complete = false;
  }
  if (j.contains("effective_cone_complete")) complete = j.at("effective_cone_complete").get<bool>();
  if (j.contains("constraints")) {
    constraints.clear();
    for (const auto& c : j.at("constraints")) {
      const std::string type = c.value("type", "dot_ge");
      if (type != "dot_ge") throw Error(ErrorCode::InvalidInput, "unknown constraint type " + type);
      ConstraintSpec spec;
      const Json& cls = c.at("class");
      if (cls.is_string()) {
        if (cls.get<std::string>() != "K")
          throw Error(ErrorCode::InvalidInput, "constraint class must be \"K\" or a vector");
        spec.canonical = true;
      } else {
        spec.coords = vector_from_json(cls);
      }
      spec.bound = integer_from_json(c.at("bound"));
      spec.label = c.value("label", std::string());
      constraints.push_back(std::move(spec));
    }
  }
  if (changed) oracle = SectionOracle::None;

  IntersectionLattice L(std::move(*gram), std::move(names));
  LatticeClass Kc = L.make_class(std::move(*K));
  std::vector<LatticeClass> gen_classes;
  for (auto& g : gens) gen_classes.push_back(L.make_class(std::move(g)));
  std::vector<NumericalConstraint> ncs;
  for (auto& c : constraints) {
    LatticeClass f = c.canonical ? Kc : L.make_class(std::move(c.coords));
    std::string label = c.label.empty() ? "C." + (c.canonical ? std::string("K") : f.to_string()) +
                                              " >= " + c.bound.str()
                                        : c.label;
    ncs.push_back({f, c.bound, label});
  }
  return SurfaceModel(name, L, Kc, pg, std::move(gen_classes), complete, std::move(ncs), oracle);
}

Scenario scenario_from_json(const Json& j) {
  for (const char* key : {"source", "target", "pullback", "c1", "c2", "H"})
    if (!j.contains(key)) throw Error(ErrorCode::InvalidInput, std::string("scenario needs '") + key + "'");
  DiffeoHypothesis hyp(surface_from_json(j.at("source")), surface_from_json(j.at("target")),
                       matrix_from_json(j.at("pullback")));
  const auto& L = hyp.target().pic();
  std::optional<LatticeClass> ref;
  if (j.contains("source_reference_H"))
    ref = hyp.source().make_class(vector_from_json(j.at("source_reference_H")));
  return Scenario{j.value("name", std::string("custom")), hyp,
                  L.make_class(vector_from_json(j.at("c1"))), integer_from_json(j.at("c2")),
                  L.make_class(vector_from_json(j.at("H"))), ref};
}

Json to_json(const LatticeClass& x) {
  return Json{{"class", x.to_string()}, {"coords", to_json(x.coords())}};
}

Json to_json(const BundleTopology& E) {
  return Json{{"rank", 2}, {"c1", to_json(E.c1)}, {"c2", to_json(E.c2)}};
}

Json to_json(const IndexReport& r) {
  return Json{{"chi_C_E", to_json(r.chi_C_E)},
              {"chi_C_L0", to_json(r.chi_C_L0)},
              {"d", to_json(r.d)},
              {"d1", to_json(r.d1)},
              {"vcodim", to_json(r.vcodim)}};
}

Json to_json(const Wall& w) {
  return Json{{"e", to_json(w.e)}, {"e_square", to_json(w.e_square)}};
}

Json to_json(const ChamberSeparation& s) {
  Json walls = Json::array();
  for (const auto& w : s.separating_walls) walls.push_back(to_json(w));
  return Json{{"same_chamber", s.same_chamber}, {"separating_walls", walls}};
}

Json to_json(const FamilyCheck& f) {
  Json dirs = Json::array();
  for (const auto& d : f.family.directions) dirs.push_back(to_json(d));
  Json cons = Json::array();
  for (std::size_t i = 0; i < f.family.constraints.size(); ++i) {
    const auto& k = f.family.constraints[i];
    cons.push_back(Json{{"a", to_json(k.a)},
                        {"b", to_json(k.b)},
                        {"bound", to_json(k.bound)},
                        {"from", f.family.constraint_labels.at(i)}});
  }
  Json out{{"family", f.family.describe()},
           {"base", to_json(f.family.base)},
           {"directions", dirs},
           {"degree", to_json(f.family.degree)},
           {"parameter_constraints", cons},
           {"excess", f.excess.to_string()},
           {"holds", f.holds}};
  if (f.lhs) out["lhs"] = to_json(*f.lhs);
  if (f.rhs) out["rhs"] = to_json(*f.rhs);
  if (f.witness) {
    out["witness"] = to_json(*f.witness);
    out["witness_class"] = to_json(f.family.at(*f.witness));
  }
  return out;
}

Json to_json(const SimplicityCertificate& c) {
  Json fams = Json::array();
  for (const auto& f : c.families) fams.push_back(to_json(f));
  Json out{{"class_checked", to_json(c.class_checked)},
           {"polarization", to_json(c.polarization)},
           {"semisimple", c.semisimple},
           {"families", fams}};
  if (c.partner) {
    out["simple"] = c.simple;
    out["partner"] = to_json(*c.partner);
  }
  return out;
}

namespace {

Json opt(const std::optional<Integer>& x) { return x ? to_json(*x) : Json(nullptr); }

}  // namespace

Json to_json(const GamReport& g) {
  Json tails = Json::array();
  for (const auto& [C, t] : g.tail_terms) tails.push_back(Json{{"C", to_json(C)}, {"tail", to_json(t)}});
  return Json{{"target_vdim", to_json(g.target_vdim)},
              {"fibre_dim_generic", to_json(g.fibre_dim_generic)},
              {"extension_space_empty", g.extension_space_empty()},
              {"h0_c1_plus_K", opt(g.h0_c1_plus_K)},
              {"delta_locus_bound", opt(g.delta_locus_bound)},
              {"delta_preimage_bound", opt(g.delta_preimage_bound)},
              {"c2_threshold_delta", opt(g.c2_threshold_delta)},
              {"tail_terms", tails}};
}

Json to_json(const AsymptoticThreshold& t) {
  Json contrib = Json::object();
  for (const auto& [k, v] : t.contributions) contrib[k] = to_json(v);
  return Json{{"n_h_c1", to_json(t.n_h_c1)},
              {"contributions", contrib},
              {"warning", t.warning()},
              {"unknown", t.unknown}};
}

Json to_json(const Verdict& v) {
  Json reasons = Json::array();
  for (const auto& r : v.reasons)
    reasons.push_back(Json{{"rule", r.rule}, {"passed", r.passed}, {"detail", r.detail}});
  Json walls = Json::array();
  for (const auto& w : v.walls_through_base) walls.push_back(to_json(w));
  Json out{{"status", std::string(to_string(v.status))},
           {"bundle", to_json(v.bundle)},
           {"spin_c", to_json(v.spin_c)},
           {"base_polarization", to_json(v.base_polarization)},
           {"close_polarization",
            v.close_polarization ? to_json(*v.close_polarization) : Json(nullptr)},
           {"chamber_warning", v.chamber_warning},
           {"walls_through_base", walls},
           {"reasons", reasons}};
  if (v.simplicity) out["simplicity_certificate"] = to_json(*v.simplicity);
  if (v.threshold) out["threshold"] = to_json(*v.threshold);
  if (v.gam) out["gam"] = to_json(*v.gam);
  return out;
}

Json to_json(const ContradictionReport& r) {
  Json notes = Json::array();
  for (const auto& n : r.notes)
    notes.push_back(Json{{"rule", n.rule}, {"passed", n.passed}, {"detail", n.detail}});
  Json out{{"outcome", std::string(to_string(r.outcome))}};
  if (r.transported)
    out["transport"] = Json{{"bundle", to_json(r.transported->bundle)},
                            {"spin_c", to_json(r.transported->spin_c.c())},
                            {"delta", to_json(r.transported->delta)}};
  out["target"] = to_json(r.target);
  out["source"] = to_json(r.source);
  out["notes"] = notes;
  return out;
}

Json to_json(const SurfaceModel& S) {
  Json gens = Json::array();
  for (const auto& g : S.effective_generators()) gens.push_back(to_json(g.coords()));
  Json cons = Json::array();
  for (const auto& c : S.constraints())
    cons.push_back(Json{{"type", "dot_ge"},
                        {"class", to_json(c.functional.coords())},
                        {"bound", to_json(c.bound)},
                        {"label", c.label}});
  Json gram = Json::array();
  for (const auto& row : S.pic().gram()) gram.push_back(to_json(row));
  return Json{{"name", S.name()},
              {"rank", S.pic().rank()},
              {"gram", gram},
              {"basis", S.pic().basis_names()},
              {"K", to_json(S.canonical().coords())},
              {"pg", to_json(S.pg())},
              {"effective_generators", gens},
              {"effective_cone_complete", S.effective_cone_complete()},
              {"constraints", cons}};
}

std::string render_text(const Verdict& v, const std::string& indent) {
  std::ostringstream os;
  os << indent << "status: " << to_string(v.status) << "\n";
  os << indent << "bundle: (2, " << v.bundle.c1.to_string() << ", " << v.bundle.c2 << ")"
     << "  Spin^c: " << v.spin_c.to_string() << "\n";
  os << indent << "polarization: " << v.base_polarization.to_string();
  if (v.close_polarization) os << "  close: " << v.close_polarization->to_string();
  os << "\n";
  for (const auto& r : v.reasons)
    os << indent << "  [" << (r.passed ? "ok" : "--") << "] " << r.rule << ": " << r.detail << "\n";
  return os.str();
}

std::string render_text(const ContradictionReport& r) {
  std::ostringstream os;
  os << "outcome: " << to_string(r.outcome) << "\n";
  if (r.transported)
    os << "transported type: (2, " << r.transported->bundle.c1.to_string() << ", "
       << r.transported->bundle.c2 << ") via delta = " << r.transported->delta.to_string() << "\n";
  os << "target side:\n" << render_text(r.target, "  ");
  os << "source side:\n" << render_text(r.source, "  ");
  for (const auto& n : r.notes)
    os << "note [" << (n.passed ? "ok" : "--") << "] " << n.rule << ": " << n.detail << "\n";
  return os.str();
}

std::string render_text(const SimplicityCertificate& c) {
  std::ostringstream os;
  auto one = [&](const SimplicityCertificate& s) {
    os << s.class_checked.to_string() << " at H = " << s.polarization.to_string() << ": "
       << (s.semisimple ? "semisimple" : "not certified semisimple") << "\n";
    for (const auto& f : s.families) {
      os << "  " << f.family.describe() << "\n    ";
      if (f.lhs) os << "C.K + C^2 = " << *f.lhs << " <= c1.C = " << *f.rhs;
      else os << f.excess.to_string() << " <= 0";
      os << (f.holds ? "  holds" : "  fails");
      if (f.witness && !f.witness->empty()) os << " at " << f.family.at(*f.witness).to_string();
      os << "\n";
    }
  };
  one(c);
  if (c.partner) {
    one(*c.partner);
    os << "simple: " << (c.simple ? "yes" : "no") << "\n";
  }
  return os.str();
}

}  // namespace spincert
