// Python bindings. Queries and results cross the boundary as JSON text so that
// integers of any size survive; the package wrapper turns them into dicts.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spincert/io.hpp"
#include "spincert/spincert.hpp"

namespace py = pybind11;
using namespace spincert;

namespace {

Json parse(const std::string& text) { return Json::parse(text); }

LatticeClass class_of(const SurfaceModel& S, const Json& j) { return S.make_class(vector_from_json(j)); }

std::string lattice_check(const std::string& text) {
  const Json in = parse(text);
  const IntersectionLattice L =
      in.contains("K") || in.contains("preset") ? surface_from_json(in).pic() : lattice_from_json(in);
  return Json{{"rank", L.rank()},
              {"b2_plus", L.b2_plus()},
              {"b2_minus", L.b2_minus()},
              {"signature", L.signature()},
              {"even", L.is_even()},
              {"determinant", to_json(L.determinant())}}
      .dump();
}

std::string index_report(const std::string& text) {
  const Json in = parse(text);
  const SurfaceModel S = surface_from_json(in.at("surface"));
  const BundleTopology E{class_of(S, in.at("c1")), integer_from_json(in.at("c2"))};
  const SpinCStructure C = make_spin_c(in.contains("C") ? class_of(S, in.at("C")) : -S.canonical());
  const Integer chiL0 = chi_c_L0(S, C);
  const CompactnessBound cb = compactness_bound(E, C, S.pic().b2_plus(), chiL0);
  Json out{{"bundle", to_json(E)}, {"spin_c", to_json(C.c())}, {"index", to_json(vdim(E, C, chiL0))}};
  out["compactness"] = Json{{"threshold", to_string(cb.threshold)}, {"satisfied", cb.satisfied}};
  out["parity_mode"] = std::string(to_string(parity_mode(S, E)));
  out["gam"] = to_json(gam_dimension_report(S, E));
  return out.dump();
}

std::string walls(const std::string& text) {
  const Json in = parse(text);
  const SurfaceModel S = surface_from_json(in.at("surface"));
  const LatticeClass c1 = class_of(S, in.at("c1"));
  const Integer c2 = integer_from_json(in.at("c2"));
  const auto H1 = Polarization::positive(class_of(S, in.at("H1")));
  if (!in.contains("H2")) {
    Json arr = Json::array();
    for (const auto& w : wall_on_ray(S.pic(), c1, c2, H1)) arr.push_back(to_json(w));
    return Json{{"walls_through_H1", arr}}.dump();
  }
  const auto H2 = Polarization::positive(class_of(S, in.at("H2")));
  return to_json(enumerate_separating_walls(S.pic(), c1, c2, H1, H2)).dump();
}

std::string simplicity(const std::string& text) {
  const Json in = parse(text);
  const SurfaceModel S = surface_from_json(in.at("surface"));
  const LatticeClass h = class_of(S, in.at("H"));
  const Polarization H = in.value("nef", false) ? Polarization::nef(S, h) : Polarization::ample(S, h);
  const LatticeClass c1 = class_of(S, in.at("c1"));
  return to_json(in.value("semisimple_only", false) ? check_semisimple(S, H, c1) : check_simple(S, H, c1)).dump();
}

std::string verdict(const std::string& text) {
  const Json in = parse(text);
  const SurfaceModel S = surface_from_json(in.at("surface"));
  const LatticeClass h = class_of(S, in.at("H"));
  const Polarization H = in.value("nef", false) ? Polarization::nef(S, h) : Polarization::ample(S, h);
  const SpinCStructure C = make_spin_c(in.contains("C") ? class_of(S, in.at("C")) : -S.canonical());
  const BundleTopology E{class_of(S, in.at("c1")), integer_from_json(in.at("c2"))};
  return to_json(spin_poly_status(S, H, C, E)).dump();
}

std::string scenario_report(const std::string& text) {
  const Json in = parse(text);
  Scenario sc = in.contains("source") ? scenario_from_json(in) : scenario(in.at("name").get<std::string>());
  if (in.contains("c2")) sc.c2 = integer_from_json(in.at("c2"));
  Json out{{"scenario", sc.name}};
  const Json report = to_json(run_scenario(sc));
  for (const auto& [k, v] : report.items()) out[k] = v;
  return out.dump();
}

std::string decide_quadratic(const std::string& text) {
  const Json in = parse(text);
  QuadraticPolynomial f;
  f.arity = in.at("arity").get<std::size_t>();
  for (const char* key : {"xx", "xy", "yy", "x", "y", "c"}) {
    if (!in.contains(key)) continue;
    const Integer v = integer_from_json(in.at(key));
    const std::string k = key;
    if (k == "xx") f.xx = v;
    else if (k == "xy") f.xy = v;
    else if (k == "yy") f.yy = v;
    else if (k == "x") f.x = v;
    else if (k == "y") f.y = v;
    else f.c = v;
  }
  std::vector<LinearConstraint> dom;
  for (const auto& k : in.value("constraints", Json::array()))
    dom.push_back({integer_from_json(k.at(0)), integer_from_json(k.at(1)), integer_from_json(k.at(2))});
  const QuadraticDecision d = decide_quadratic_nonpositive(f, dom);
  Json out{{"holds", d.holds}, {"witness", nullptr}};
  if (d.witness) out["witness"] = to_json(IntVector(*d.witness));
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact lattice and index computations for rank-two bundle invariants";

  py::register_exception<Error>(m, "SpincertError", PyExc_ValueError);

  m.def("preset_names", [] {
    std::vector<std::string> out;
    for (auto p : all_presets()) out.emplace_back(preset_name(p));
    return out;
  });
  m.def("preset_json", [](const std::string& name) { return to_json(surface_from_json(Json(name))).dump(); });
  m.def("scenario_names", &scenario_names);
  m.def("lattice_check", &lattice_check);
  m.def("index_report", &index_report);
  m.def("walls", &walls);
  m.def("simplicity", &simplicity);
  m.def("verdict", &verdict);
  m.def("scenario_report", &scenario_report);
  m.def("decide_quadratic", &decide_quadratic);
}
