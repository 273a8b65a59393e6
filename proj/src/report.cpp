#include "alcoved/report.hpp"

#include <algorithm>
#include <sstream>

namespace alcoved::report {

std::string_view pattern_name(InterlacingKind k) {
  switch (k) {
    case InterlacingKind::Four: return "1432";
    case InterlacingKind::SixFirst: return "125634";
    case InterlacingKind::SixSecond: return "145236";
  }
  return "?";
}

Json to_json(const InterlacingWitness& w) {
  return Json{{"kind", "interlacing"}, {"pattern", pattern_name(w.kind)}, {"elements", w.elements}};
}

Json to_json(const CycleWitness& c) {
  Json edges = Json::array();
  for (const auto& e : c.edges)
    edges.push_back({std::to_string(e.from), std::to_string(e.to), std::string(to_string(e.layer))});
  return Json{{"kind", "cycle"}, {"edges", std::move(edges)}, {"vertices", c.vertex_sequence}};
}

Json to_json(const FacetWitness& f) {
  return Json{{"kind", "facet"},
              {"normal", f.normal},
              {"offset", exact::format_rational(f.offset)},
              {"lineality", f.lineality}};
}

Json to_json(const Witness& w) {
  return std::visit(
      [](const auto& x) -> Json {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, std::monostate>) {
          return nullptr;
        } else {
          return to_json(x);
        }
      },
      w);
}

Json to_json(const Verdict& v) {
  Json j{{"compatible", v.compatible}, {"method", to_string(v.method)}, {"witness", to_json(v.witness)}};
  if (!v.subset.empty()) j["subset"] = v.subset;
  if (v.pair) j["pair"] = {v.pair->first, v.pair->second};
  return j;
}

Json to_json(const AlcovedHRep& h) {
  Json bounds = Json::array();
  for (int i = 1; i <= h.n(); ++i) {
    for (int j = 1; j <= h.n(); ++j) {
      if (i == j || !h.a(i, j)) continue;
      bounds.push_back({i, j, exact::format_rational(*h.a(i, j))});
    }
  }
  return Json{{"n", h.n()}, {"bounds", std::move(bounds)}};
}

Json to_json(const FamilyReport& r, bool timings) {
  Json summands = Json::array();
  for (const auto& p : r.spec.summands) summands.push_back(p.to_string());
  Json j{{"family", r.spec.name},
         {"n", r.spec.n},
         {"mode", to_string(r.mode)},
         {"summands", std::move(summands)},
         {"verdict", to_json(r.verdict)},
         {"witness", to_json(r.verdict.witness)}};
  if (r.mode == VerifyMode::Pairwise) {
    j["pairs_checked"] = r.pairs_checked;
  } else {
    j["vertices"] = r.vertices;
    if (r.hrep) j["hrep"] = to_json(*r.hrep);
  }
  if (timings) j["seconds"] = r.seconds;
  return j;
}

Json to_json(const ConeIntersection& c) {
  Json cycles = Json::array();
  for (const auto& cy : c.cycles) cycles.push_back(to_json(cy));
  return Json{{"is_root_cone", c.is_root_cone},
              {"rays", c.rays},
              {"cycles", std::move(cycles)},
              {"witness", c.witness ? to_json(*c.witness) : Json(nullptr)}};
}

Json oracle_json(const VPolytope& sum, const AlcovedResult& r) {
  Json non_root = Json::array();
  for (const auto& f : r.facets)
    if (!f.is_root) non_root.push_back(f.normal);
  Json j{{"alcoved", r.alcoved},
         {"dimension", r.dimension},
         {"points", sum.points.size()},
         {"facets", r.facets.size()},
         {"non_root_normals", std::move(non_root)},
         {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)}};
  if (r.hrep) j["hrep"] = to_json(*r.hrep);
  return j;
}

std::string vector_text(const IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

std::string ray_label(const CycleWitness& c) {
  std::string out;
  for (const auto& e : c.edges) {
    if (e.layer != Layer::Upper) continue;
    if (!out.empty()) out += "+";
    if (e.from < 10 && e.to < 10) {
      out += "e" + std::to_string(e.from) + std::to_string(e.to);
    } else {
      out += "e(" + std::to_string(e.from) + "," + std::to_string(e.to) + ")";
    }
  }
  return out;
}

std::string witness_text(const Witness& w) {
  if (const auto* i = std::get_if<InterlacingWitness>(&w)) {
    std::string out = std::string(pattern_name(i->kind)) + "-interlacing on";
    for (int x : i->elements) out += " " + std::to_string(x);
    return out;
  }
  if (const auto* c = std::get_if<CycleWitness>(&w)) return "violating cycle " + c->to_string();
  if (const auto* f = std::get_if<FacetWitness>(&w)) {
    if (f->lineality) return "lineality space is not a root subspace";
    return "non-root facet normal " + vector_text(f->normal) + " offset " + exact::format_rational(f->offset);
  }
  return "none";
}

std::string verdict_text(const Verdict& v) {
  std::ostringstream out;
  out << (v.compatible ? "compatible" : "incompatible") << " [" << to_string(v.method) << "]\n";
  if (!v.compatible) {
    if (v.pair) out << "pair: " << v.pair->first << " " << v.pair->second << "\n";
    if (!v.subset.empty()) {
      out << "subset:";
      for (int x : v.subset) out << " " << x;
      out << "\n";
    }
    out << "witness: " << witness_text(v.witness) << "\n";
  }
  return out.str();
}

std::string oracle_text(const VPolytope& sum, const AlcovedResult& r) {
  std::ostringstream out;
  out << (r.alcoved ? "alcoved" : "not alcoved") << "\n";
  out << "dimension: " << r.dimension << "\npoints: " << sum.points.size() << "\nfacets: " << r.facets.size() << "\n";
  for (const auto& f : r.facets)
    if (!f.is_root) out << "non-root normal: " << vector_text(f.normal) << "\n";
  if (r.witness && r.witness->lineality) out << "lineality space is not a root subspace\n";
  return out.str();
}

std::string family_text(const FamilyReport& r, bool timings) {
  std::ostringstream out;
  out << r.spec.name << " n=" << r.spec.n << " mode=" << to_string(r.mode) << " summands=" << r.spec.summands.size()
      << "\n";
  if (r.mode == VerifyMode::Pairwise) {
    out << "pairs checked: " << r.pairs_checked << "\n";
    out << verdict_text(r.verdict);
  } else {
    out << "vertices: " << r.vertices << "\n";
    out << (r.verdict.compatible ? "alcoved" : "not alcoved") << "\n";
    if (!r.verdict.compatible) out << "witness: " << witness_text(r.verdict.witness) << "\n";
  }
  if (timings) out << "seconds: " << r.seconds << "\n";
  return out.str();
}

std::string cones_text(const ConeIntersection& c, int n) {
  std::ostringstream out;
  out << (c.is_root_cone ? "root cone" : "not a root cone") << "\n";
  std::vector<IntVector> seen;
  for (const auto& cy : c.cycles) {
    auto ray = cycle_point(cy, n);
    if (std::find(seen.begin(), seen.end(), ray) != seen.end()) continue;
    out << "ray " << ray_label(cy) << " " << vector_text(ray) << "\n";
    seen.push_back(std::move(ray));
  }
  if (c.witness) out << "witness: " << c.witness->to_string() << "\n";
  return out.str();
}

}  // namespace alcoved::report
