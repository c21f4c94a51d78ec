#pragma once

// JSON ingestion of surfaces and scenarios, and JSON/text rendering of results.

#include <string>

#include <json.hpp>

#include "spincert/verdict.hpp"

namespace spincert {

using Json = nlohmann::ordered_json;

Integer integer_from_json(const Json& j);
IntVector vector_from_json(const Json& j);
IntMatrix matrix_from_json(const Json& j);
Json to_json(const Integer& x);
Json to_json(const IntVector& v);

/// "3,-1" -> {3, -1}.
IntVector parse_vector(const std::string& text);

Json read_json_file(const std::string& path);

/// Surface description; a "preset" name supplies defaults that explicit fields override.
SurfaceModel surface_from_json(const Json& j);
/// Lattice part only: gram, optional b2_plus/b2_minus and basis names.
IntersectionLattice lattice_from_json(const Json& j);

/// {"source": surface, "target": surface, "pullback": [[...]], "c1": [...],
///  "c2": n, "H": [...], "source_reference_H": [...]}.
Scenario scenario_from_json(const Json& j);

Json to_json(const LatticeClass& x);
Json to_json(const BundleTopology& E);
Json to_json(const IndexReport& r);
Json to_json(const Wall& w);
Json to_json(const ChamberSeparation& s);
Json to_json(const FamilyCheck& f);
Json to_json(const SimplicityCertificate& c);
Json to_json(const GamReport& g);
Json to_json(const AsymptoticThreshold& t);
Json to_json(const Verdict& v);
Json to_json(const ContradictionReport& r);
Json to_json(const SurfaceModel& S);

std::string render_text(const Verdict& v, const std::string& indent = "");
std::string render_text(const ContradictionReport& r);
std::string render_text(const SimplicityCertificate& c);

}  // namespace spincert
