#pragma once

// JSON and text renderings of verdicts, oracle results and family reports.
// Key order is fixed by nlohmann::ordered_json so output is byte-stable.

#include "alcoved/compat.hpp"
#include "alcoved/families.hpp"
#include "alcoved/geom.hpp"
#include "alcoved/pdgraph.hpp"

#include <json.hpp>

#include <string>

namespace alcoved::report {

using Json = nlohmann::ordered_json;

/// "1432", "125634" or "145236".
std::string_view pattern_name(InterlacingKind k);

Json to_json(const InterlacingWitness& w);
Json to_json(const CycleWitness& c);
Json to_json(const FacetWitness& f);
/// null for std::monostate.
Json to_json(const Witness& w);
Json to_json(const Verdict& v);
Json to_json(const AlcovedHRep& h);
Json to_json(const FamilyReport& r, bool timings = false);
Json to_json(const ConeIntersection& c);

/// Oracle report: alcovedness, dimension, vertex and facet counts, non-root
/// facet normals and, when alcoved, the inequality description.
Json oracle_json(const VPolytope& sum, const AlcovedResult& r);

std::string witness_text(const Witness& w);
std::string verdict_text(const Verdict& v);
std::string oracle_text(const VPolytope& sum, const AlcovedResult& r);
std::string family_text(const FamilyReport& r, bool timings = false);
std::string cones_text(const ConeIntersection& c, int n);

/// Sum of roots along the upper edges of a cycle, e.g. "e12+e34". Labels of
/// two or more digits are written e(10,2).
std::string ray_label(const CycleWitness& c);

std::string vector_text(const IntVector& v);

}  // namespace alcoved::report
