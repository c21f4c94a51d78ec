// spincert command-line front end.
// Exit codes: 0 computed, 2 certificate refused, 1 input error.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "spincert/io.hpp"
#include "spincert/spincert.hpp"

using namespace spincert;

namespace {

constexpr int kComputed = 0;
constexpr int kInputError = 1;
constexpr int kRefused = 2;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

LatticeClass class_arg(const SurfaceModel& S, const std::string& text) {
  return S.make_class(parse_vector(text));
}

bool refused_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::UndecidableForm:
    case ErrorCode::SearchExhausted:
    case ErrorCode::UnboundedDegree:
    case ErrorCode::InfiniteEnumeration:
      return true;
    default:
      return false;
  }
}

struct Common {
  std::string file;
  bool json = false;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice-level certificates for Spin-polynomial invariants"};
  app.require_subcommand(1);

  // lattice check
  auto* lattice = app.add_subcommand("lattice", "Intersection lattice utilities");
  lattice->require_subcommand(1);
  auto* lcheck = lattice->add_subcommand("check", "Validate a lattice or surface description");
  std::string lfile;
  bool ljson = false;
  lcheck->add_option("file", lfile, "JSON file")->required();
  lcheck->add_flag("--json", ljson);

  // index
  auto* index = app.add_subcommand("index", "Index of the coupled Dirac operator");
  Common ic;
  std::string i_c1, i_c2, i_C;
  index->add_option("file", ic.file)->required();
  index->add_option("--c1", i_c1)->required();
  index->add_option("--c2", i_c2)->required();
  index->add_option("--C", i_C, "Spin^c class; defaults to -K");
  index->add_flag("--json", ic.json);

  // dims
  auto* dims = app.add_subcommand("dims", "Virtual dimensions and extension-space estimates");
  Common dc;
  std::string d_c1, d_c2, d_C, d_H;
  dims->add_option("file", dc.file)->required();
  dims->add_option("--c1", d_c1)->required();
  dims->add_option("--c2", d_c2)->required();
  dims->add_option("--C", d_C, "Spin^c class; defaults to -K");
  dims->add_option("--H", d_H, "polarization for the threshold and degree slicing");
  dims->add_flag("--json", dc.json);

  // walls
  auto* walls = app.add_subcommand("walls", "Walls of type (c1, c2) separating two polarizations");
  Common wc;
  std::string w_c1, w_c2, w_H1, w_H2;
  walls->add_option("file", wc.file)->required();
  walls->add_option("--c1", w_c1)->required();
  walls->add_option("--c2", w_c2)->required();
  walls->add_option("--H1", w_H1)->required();
  walls->add_option("--H2", w_H2, "omit to list walls through H1");
  walls->add_flag("--json", wc.json);

  // simplicity
  auto* simp = app.add_subcommand("simplicity", "H-simplicity certificate for c1");
  Common sc;
  std::string s_H, s_c1;
  bool s_nef = false, s_semi = false;
  simp->add_option("file", sc.file)->required();
  simp->add_option("--H", s_H)->required();
  simp->add_option("--c1", s_c1)->required();
  simp->add_flag("--nef", s_nef, "accept a nef polarization (H.C >= 0 on generators)");
  simp->add_flag("--semisimple-only", s_semi, "skip the Serre partner 2K - c1");
  simp->add_flag("--json", sc.json);

  // verdict
  auto* verdict = app.add_subcommand("verdict", "Vanishing / nonvanishing verdict or contradiction report");
  Common vc;
  std::string v_scenario, v_c2;
  int v_max_scale = CloseSearchBudget{}.max_scale;
  int v_max_corr = CloseSearchBudget{}.max_correction;
  verdict->add_option("file", vc.file, "surface query or scenario JSON");
  auto* scen_opt = verdict->add_option("--scenario", v_scenario, "built-in scenario name");
  verdict->add_option("--c2", v_c2, "override c2");
  verdict->add_option("--max-scale", v_max_scale)->check(CLI::PositiveNumber);
  verdict->add_option("--max-correction", v_max_corr)->check(CLI::NonNegativeNumber);
  verdict->add_flag("--json", vc.json);
  (void)scen_opt;

  auto* list = app.add_subcommand("presets", "List built-in surface presets and scenarios");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  try {
    if (*list) {
      Json j{{"presets", Json::array()}, {"scenarios", scenario_names()}};
      for (auto p : all_presets()) j["presets"].push_back(to_json(preset(p)));
      emit(j);
      return kComputed;
    }

    if (*lcheck) {
      const Json in = read_json_file(lfile);
      Json out;
      if (in.contains("K") || in.contains("preset")) {
        const SurfaceModel S = surface_from_json(in);
        const auto& L = S.pic();
        out = Json{{"valid", true},
                   {"rank", L.rank()},
                   {"b2_plus", L.b2_plus()},
                   {"b2_minus", L.b2_minus()},
                   {"signature", L.signature()},
                   {"even", L.is_even()},
                   {"determinant", to_json(L.determinant())},
                   {"K_characteristic", is_characteristic(S.canonical())},
                   {"b2_plus_consistent", S.b2_plus_consistent()}};
        make_spin_c(-S.canonical());
      } else {
        const IntersectionLattice L = lattice_from_json(in);
        out = Json{{"valid", true},
                   {"rank", L.rank()},
                   {"b2_plus", L.b2_plus()},
                   {"b2_minus", L.b2_minus()},
                   {"signature", L.signature()},
                   {"even", L.is_even()},
                   {"determinant", to_json(L.determinant())}};
      }
      if (ljson) {
        emit(out);
      } else {
        std::cout << "valid unimodular lattice: rank " << out["rank"] << ", b2+ = " << out["b2_plus"]
                  << ", b2- = " << out["b2_minus"] << ", " << (out["even"].get<bool>() ? "even" : "odd")
                  << "\n";
      }
      return kComputed;
    }

    if (*index || *dims) {
      const bool is_index = index->parsed();
      const Common& c = is_index ? ic : dc;
      const SurfaceModel S = surface_from_json(read_json_file(c.file));
      const std::string& c1s = is_index ? i_c1 : d_c1;
      const std::string& c2s = is_index ? i_c2 : d_c2;
      const std::string& Cs = is_index ? i_C : d_C;
      const BundleTopology E{class_arg(S, c1s), Integer(c2s)};
      const SpinCStructure C = make_spin_c(Cs.empty() ? -S.canonical() : class_arg(S, Cs));
      const Integer chiL0 = chi_c_L0(S, C);
      const IndexReport r = vdim(E, C, chiL0);
      const CompactnessBound cb = compactness_bound(E, C, S.pic().b2_plus(), chiL0);
      Json out{{"bundle", to_json(E)}, {"spin_c", to_json(C.c())}, {"index", to_json(r)}};
      out["compactness"] = Json{{"threshold", to_string(cb.threshold)}, {"satisfied", cb.satisfied}};
      out["parity_mode"] = std::string(to_string(parity_mode(S, E)));
      if (C.c() == -S.canonical()) out["riemann_roch"] = to_json(rank_two_riemann_roch(S, E));
      if (!is_index) {
        std::vector<LatticeClass> classes;
        if (!d_H.empty()) {
          const Polarization H = Polarization::nef(S, class_arg(S, d_H));
          for (const auto& f : candidate_systems(S, H, E.c1))
            if (f.arity() == 0 && !f.base.is_zero()) classes.push_back(f.base);
          const AsymptoticThreshold t = asymptotic_threshold(S, H, E.c1, C);
          out["threshold"] = to_json(t);
        }
        out["gam"] = to_json(gam_dimension_report(S, E, classes));
      }
      if (c.json) {
        emit(out);
      } else {
        std::cout << "chi_C(E) = " << r.chi_C_E << "  chi_C(L0) = " << r.chi_C_L0 << "\n"
                  << "d = " << r.d << "  d1 = " << r.d1 << "  vcodim = " << r.vcodim << "\n"
                  << "compactness: c2 >= " << to_string(cb.threshold)
                  << (cb.satisfied ? " (satisfied)" : " (not satisfied)") << "\n";
        if (!is_index) std::cout << out["gam"].dump(2) << "\n";
        if (out.contains("threshold")) std::cout << out["threshold"].dump(2) << "\n";
      }
      return kComputed;
    }

    if (*walls) {
      const SurfaceModel S = surface_from_json(read_json_file(wc.file));
      const LatticeClass c1 = class_arg(S, w_c1);
      const Integer c2(w_c2);
      const Polarization H1 = Polarization::positive(class_arg(S, w_H1));
      Json out;
      std::vector<Wall> list_w;
      if (w_H2.empty()) {
        list_w = wall_on_ray(S.pic(), c1, c2, H1);
        Json arr = Json::array();
        for (const auto& w : list_w) arr.push_back(to_json(w));
        out = Json{{"walls_through_H1", arr}};
      } else {
        const Polarization H2 = Polarization::positive(class_arg(S, w_H2));
        const ChamberSeparation sep = enumerate_separating_walls(S.pic(), c1, c2, H1, H2);
        list_w = sep.separating_walls;
        out = to_json(sep);
      }
      if (wc.json) {
        emit(out);
      } else {
        for (const auto& w : list_w) std::cout << w.e.to_string() << "  e^2 = " << w.e_square << "\n";
        std::cout << list_w.size() << " wall(s)\n";
      }
      return kComputed;
    }

    if (*simp) {
      const SurfaceModel S = surface_from_json(read_json_file(sc.file));
      const LatticeClass h = class_arg(S, s_H);
      const Polarization H = s_nef ? Polarization::nef(S, h) : Polarization::ample(S, h);
      const LatticeClass c1 = class_arg(S, s_c1);
      const SimplicityCertificate cert = s_semi ? check_semisimple(S, H, c1) : check_simple(S, H, c1);
      if (sc.json) emit(to_json(cert));
      else std::cout << render_text(cert);
      const bool ok = s_semi ? cert.semisimple : cert.simple;
      return ok ? kComputed : kRefused;
    }

    if (*verdict) {
      const CloseSearchBudget budget{v_max_scale, v_max_corr};
      if (v_scenario.empty() == vc.file.empty())
        throw Error(ErrorCode::InvalidInput, "give exactly one of <file> or --scenario");
      std::optional<Json> in;
      if (!vc.file.empty()) in = read_json_file(vc.file);
      if (!v_scenario.empty() || in->contains("source")) {
        Scenario s = v_scenario.empty() ? scenario_from_json(*in) : scenario(v_scenario);
        if (!v_c2.empty()) s.c2 = Integer(v_c2);
        const ContradictionReport r = run_scenario(s, budget);
        if (vc.json) {
          Json out{{"scenario", s.name}};
          const Json report = to_json(r);
          for (const auto& [k, v] : report.items()) out[k] = v;
          emit(out);
        } else {
          std::cout << "scenario: " << s.name << "\n" << render_text(r);
        }
        return r.outcome == Outcome::Contradiction ? kComputed : kRefused;
      }
      for (const char* key : {"surface", "c1", "c2", "H"})
        if (!in->contains(key)) throw Error(ErrorCode::InvalidInput, std::string("query needs '") + key + "'");
      const SurfaceModel S = surface_from_json(in->at("surface"));
      const LatticeClass h = S.make_class(vector_from_json(in->at("H")));
      const Polarization H = in->value("nef", false) ? Polarization::nef(S, h) : Polarization::ample(S, h);
      const SpinCStructure C =
          make_spin_c(in->contains("C") ? S.make_class(vector_from_json(in->at("C"))) : -S.canonical());
      BundleTopology E{S.make_class(vector_from_json(in->at("c1"))), integer_from_json(in->at("c2"))};
      if (!v_c2.empty()) E.c2 = Integer(v_c2);
      const Verdict v = spin_poly_status(S, H, C, E, budget);
      if (vc.json) emit(to_json(v));
      else std::cout << render_text(v);
      return v.status == Status::Unknown ? kRefused : kComputed;
    }
  } catch (const Error& e) {
    std::cerr << "spincert: " << e.what() << "\n";
    return refused_code(e.code()) ? kRefused : kInputError;
  } catch (const std::exception& e) {
    std::cerr << "spincert: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
