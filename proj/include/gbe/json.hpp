#pragma once

// JSON views of the library's results, used by the command-line tool. Field
// names match the schemas shipped in schemas/.

#include <string>
#include <vector>

#include <json.hpp>

#include "gbe/cone.hpp"
#include "gbe/graph.hpp"
#include "gbe/grid.hpp"
#include "gbe/groebner.hpp"
#include "gbe/monomial.hpp"
#include "gbe/registry.hpp"
#include "gbe/resolution.hpp"
#include "gbe/sagbi.hpp"

namespace gbe {

using Json = nlohmann::ordered_json;

inline Json params_json(const GridParams& p) { return Json{{"m", p.m}, {"n", p.n}}; }

inline Json graph_json(const Graph& g) {
  Json verts = Json::array(), edges = Json::array();
  for (const auto& v : g.vertices()) verts.push_back(v.str());
  for (const auto& [a, b] : g.labeled_edges()) edges.push_back(Json::array({a.str(), b.str()}));
  return Json{{"vertices", verts}, {"edges", edges}};
}

inline Json matrix_json(const IntMatrix& a) { return Json(a.to_rows()); }

inline Json zvector_json(const ZVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

inline Json monomials_json(const std::vector<Monomial>& ms, const GridParams& p) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(monomial_str(m, &p));
  return out;
}

inline Json ideal_json(const MonomialIdeal& I, const GridParams& p) {
  return Json{{"nvars", I.nvars()}, {"generators", monomials_json(I.generators(), p)}};
}

inline Json betti_json(const BettiTable& t) {
  Json rows = Json::array();
  for (int r = 0; r <= t.regularity(); ++r) {
    Json row = Json::array();
    for (int i = 0; i <= t.proj_dim(); ++i) row.push_back(t.at(i, i + r));
    rows.push_back(row);
  }
  return Json{{"regularity", t.regularity()}, {"proj_dim", t.proj_dim()}, {"depth", t.depth()}, {"table", rows}};
}

inline Json polynomial_json(const Polynomial& f, const GridParams* p) {
  Json terms = Json::array();
  for (const auto& [m, c] : f.terms()) terms.push_back(Json{{"coeff", c.get_str()}, {"monomial", monomial_str(m, p)}});
  return Json{{"text", f.str(p)}, {"terms", terms}};
}

inline Json groebner_log_json(const GroebnerLog& log) {
  return Json{{"pairs_processed", log.pairs_processed},
              {"reductions_to_zero", log.reductions_to_zero},
              {"coprime_skips", log.coprime_skips},
              {"basis_peak", log.basis_peak}};
}

inline Json sagbi_json(const SagbiReport& r) {
  Json fam = Json::object();
  for (auto f : all_sagbi_families()) fam[to_string(f)] = Json{{"checked", r.checked.at(f)}, {"failed", r.failed.at(f)}};
  return Json{{"params", params_json(r.params)},
              {"checked", r.total_checked()},
              {"failed", r.total_failed()},
              {"families", fam},
              {"failures", r.failures}};
}

inline Json facets_json(const EdgeCone& c, const FacetDescription& fd) {
  Json eq = Json::array(), fc = Json::array(), gens = Json::array(), gaps = Json::array();
  for (const auto& e : fd.equalities) eq.push_back(zvector_json(e));
  for (const auto& f : fd.facets) fc.push_back(zvector_json(f));
  for (const auto& g : c.generators) gens.push_back(zvector_json(g));
  for (const auto& g : fd.lattice_gaps) gaps.push_back(g.get_si());
  return Json{{"params", params_json(c.params)},
              {"ambient_dim", c.ambient_dim()},
              {"dimension", fd.dimension},
              {"generators", gens},
              {"equalities", eq},
              {"facets", fc},
              {"lattice_gaps", gaps},
              {"all_primitive", fd.all_primitive()},
              {"log", Json{{"rays_peak", fd.log.rays_peak}, {"adjacency_tests", fd.log.adjacency_tests}}}};
}

inline Json a_invariant_json(const GridParams& p, const AInvariantResult& r) {
  Json out{{"params", params_json(p)}, {"mode", to_string(r.mode)}, {"value", r.value}};
  if (r.mode == AInvariantMode::Certificate) {
    out["lower"] = r.lower;
    out["upper"] = r.upper;
  } else {
    out["facets"] = r.facets;
    out["normals_primitive"] = r.normals_primitive;
    out["witness"] = zvector_json(r.witness);
    out["search"] = Json{{"nodes", r.ilp_log.nodes},
                         {"infeasible_nodes", r.ilp_log.infeasible_nodes},
                         {"pruned_by_bound", r.ilp_log.pruned_by_bound},
                         {"improvements", r.ilp_log.improvements},
                         {"root_bound", r.ilp_log.root_bound.get_str()}};
  }
  return out;
}

inline Json report_json(const VerificationReport& rep, bool timings = false) {
  Json entries = Json::array();
  for (const auto& e : rep.entries) {
    Json j{{"check", e.check},
           {"m", e.params.m},
           {"n", e.params.n},
           {"t", e.params.t},
           {"formula", e.formula},
           {"oracle", e.oracle},
           {"agree", e.agree()},
           {"status", to_string(e.status)}};
    if (!e.note.empty()) j["note"] = e.note;
    if (timings) j["seconds"] = e.seconds;
    entries.push_back(j);
  }
  return Json{{"all_agree", rep.all_agree()}, {"entries", entries}};
}

}  // namespace gbe
