// Command-line front end. Standard output depends only on the arguments;
// diagnostics go to standard error. Exit codes: 0 success, 1 a check
// failed, 2 usage or input error, 3 a computation budget was exceeded.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include "gbe/gbe.hpp"
#include "gbe/json.hpp"

using namespace gbe;

namespace {

constexpr int kOk = 0, kCheckFailed = 1, kUsage = 2, kBudget = 3;

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::BudgetExceeded:
    case ErrorCode::TooLarge:
      return kBudget;
    case ErrorCode::IdentityFailure:
    case ErrorCode::CertificateInvalid:
    case ErrorCode::BoundsMismatch:
    case ErrorCode::PEOFailure:
    case ErrorCode::Infeasible:
    case ErrorCode::Unbounded:
      return kCheckFailed;
    default:
      return kUsage;
  }
}

struct Options {
  int m = 3, n = 3, t = 1, k = 1;
  std::string format = "text";
  bool with_vertices = false;
  bool timings = false;
  bool list = false;
  int field_char = 0;
  std::size_t lattice_cap = ResolutionOptions{}.lattice_cap;
  std::size_t max_pairs = GroebnerOptions{}.max_pairs;
  std::size_t max_terms = GroebnerOptions{}.max_terms;
  std::size_t max_rays = DdOptions{}.max_rays;
  std::size_t max_nodes = IlpOptions{}.max_nodes;
  int max_len = -1;
  int sequence = 0;
  std::string object, mode = "certificate", grid;

  GridParams params() const { return GridParams(m, n); }
  ResolutionOptions resolution() const { return {field_char, lattice_cap}; }
  GroebnerOptions groebner() const { return {max_pairs, max_terms}; }
  bool json() const { return format == "json"; }
};

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::string matrix_text(const IntMatrix& a) {
  std::ostringstream s;
  for (const auto& row : a.to_rows()) {
    for (std::size_t k = 0; k < row.size(); ++k) s << (k ? " " : "") << row[k];
    s << "\n";
  }
  return s.str();
}

std::string prime_text(const PrimeSupport& pr, const GridParams& p) {
  std::string s;
  for (int v : pr.variables) s += (s.empty() ? "" : " ") + ("x" + std::to_string(p.row_of(v)) + std::to_string(p.col_of(v)));
  return s;
}

int cmd_construct(const Options& o, std::ostream& out) {
  GridParams p = o.params();
  auto emit_graph = [&](const Graph& g) {
    if (o.json()) print_json(out, Json{{"params", params_json(p)}, {"object", o.object}, {"graph", graph_json(g)}});
    else out << to_edge_list(g, o.with_vertices);
  };
  if (o.object == "H") emit_graph(build_H(p));
  else if (o.object == "Hk") emit_graph(build_Hk(p, o.k));
  else if (o.object == "Hprime") emit_graph(build_Hprime(p));
  else if (o.object == "matching") {
    Graph h = build_H(p);
    Matching mt = canonical_matching(p);
    if (o.json()) {
      Json edges = Json::array();
      for (auto [a, b] : mt.edges) edges.push_back(Json::array({h.label(a).str(), h.label(b).str()}));
      print_json(out, Json{{"params", params_json(p)}, {"object", "matching"}, {"size", mt.size()}, {"edges", edges}});
    } else {
      for (auto [a, b] : mt.edges) out << h.label(a).str() << " " << h.label(b).str() << "\n";
    }
  } else if (o.object == "A" || o.object == "uhat") {
    IntMatrix a = o.object == "A" ? matrix_A(p) : vector_u_hat(p);
    if (o.json()) print_json(out, Json{{"params", params_json(p)}, {"object", o.object}, {"matrix", matrix_json(a)}});
    else out << matrix_text(a);
  } else if (o.object == "subgraphs") {
    UTypeSubgraphs s = u_type_subgraphs(p);
    const Graph* gs[] = {&s.h1, &s.h2, &s.h3};
    if (o.json()) {
      Json j{{"params", params_json(p)}, {"object", "subgraphs"}};
      for (int k = 0; k < 3; ++k) j["h" + std::to_string(k + 1)] = graph_json(*gs[k]);
      print_json(out, j);
    } else {
      for (int k = 0; k < 3; ++k) out << "# h" << k + 1 << "\n" << to_edge_list(*gs[k], false);
    }
  } else if (o.object == "cochord") {
    auto pieces = cochord_cover(p);
    Json arr = Json::array();
    for (const auto& piece : pieces) {
      std::vector<std::string> order;
      for (int v : piece.order.order) order.push_back(piece.subgraph.label(v).str());
      if (o.json()) arr.push_back(Json{{"zone", piece.zone}, {"graph", graph_json(piece.subgraph)}, {"peo", order}});
      else {
        out << "zone " << piece.zone << ":";
        for (const auto& s : order) out << " " << s;
        out << "\n";
      }
    }
    if (o.json()) print_json(out, Json{{"params", params_json(p)}, {"object", "cochord"}, {"pieces", arr}});
  }
  return kOk;
}

int cmd_ideal(const Options& o, std::ostream& out) {
  GridParams p = o.params();
  MonomialIdeal I = edge_ideal_H(p);
  if (o.object == "primes") {
    auto primes = minimal_primes(I);
    if (o.json()) {
      Json arr = Json::array();
      for (const auto& pr : primes) arr.push_back(prime_text(pr, p));
      print_json(out, Json{{"params", params_json(p)}, {"object", "primes"}, {"count", primes.size()}, {"primes", arr}});
    } else {
      for (const auto& pr : primes) out << prime_text(pr, p) << "\n";
    }
    return kOk;
  }
  MonomialIdeal r;
  if (o.object == "generators") r = I;
  else if (o.object == "power") r = power(I, o.t);
  else if (o.object == "symbolic") r = symbolic_power(I, o.t);
  else if (o.object == "colon") r = colon(power(I, o.t + 1), I);
  else r = intersect_initial_components(p);
  if (o.json()) {
    Json j{{"params", params_json(p)}, {"object", o.object}, {"t", o.t}};
    j["ideal"] = ideal_json(r, p);
    print_json(out, j);
  } else {
    for (const auto& g : r.generators()) out << monomial_str(g, &p) << "\n";
  }
  return kOk;
}

int cmd_betti(const Options& o, std::ostream& out) {
  GridParams p = o.params();
  BettiTable t = betti_table(power(edge_ideal_H(p), o.t), o.resolution());
  if (o.json()) {
    Json j{{"params", params_json(p)}, {"t", o.t}, {"field_char", o.field_char}};
    j["betti"] = betti_json(t);
    print_json(out, j);
  } else {
    out << t.to_csv();
  }
  return kOk;
}

int cmd_reg(const Options& o, std::ostream& out) {
  GridParams p = o.params();
  int reg = regularity(power(edge_ideal_H(p), o.t), o.resolution());
  if (o.json())
    print_json(out, Json{{"params", params_json(p)}, {"t", o.t}, {"regularity", reg}, {"formula", reg_power_formula(p.n, o.t)}});
  else out << reg << "\n";
  return kOk;
}

int cmd_depth(const Options& o, std::ostream& out) {
  GridParams p = o.params();
  MonomialIdeal I = edge_ideal_H(p);
  if (o.sequence > 0) {
    auto seq = depth_sequence(I, o.sequence, o.resolution());
    if (o.json())
      print_json(out, Json{{"params", params_json(p)}, {"sequence", seq}, {"limit", depth_limit(p.m, p.n)}});
    else
      for (std::size_t k = 0; k < seq.size(); ++k) out << k + 1 << " " << seq[k] << "\n";
    return kOk;
  }
  int d = depth_quotient(power(I, o.t), o.resolution());
  if (o.json()) print_json(out, Json{{"params", params_json(p)}, {"t", o.t}, {"depth", d}});
  else out << d << "\n";
  return kOk;
}

int cmd_match(const Options& o, std::ostream& out) {
  GridParams p = o.params();
  Graph h = build_H(p);
  Matching mt = max_matching(h);
  if (o.json()) {
    Json edges = Json::array();
    for (auto [a, b] : mt.edges) edges.push_back(Json::array({h.label(a).str(), h.label(b).str()}));
    print_json(out, Json{{"params", params_json(p)}, {"size", mt.size()}, {"formula", match_formula(p.m, p.n)}, {"edges", edges}});
  } else {
    out << mt.size() << "\n";
  }
  return kOk;
}

int cmd_cochord(const Options& o, std::ostream& out) {
  GridParams p = o.params();
  auto pieces = cochord_cover(p);  // throws PEOFailure on an invalid certificate
  int valid = 0;
  for (const auto& piece : pieces) valid += verify_peo(complement(piece.subgraph), piece.order);
  bool ok = valid == static_cast<int>(pieces.size());
  if (o.json())
    print_json(out, Json{{"params", params_json(p)}, {"pieces", pieces.size()}, {"valid", valid}, {"bound", cochord_bound(p.n)}});
  else out << pieces.size() << "\n";
  return ok ? kOk : kCheckFailed;
}

int cmd_chordless(const Options& o, std::ostream& out) {
  GridParams p = o.params();
  Graph h = build_H(p);
  auto cycles = chordless_cycles(h, o.max_len);
  bool all4 = true;
  for (const auto& c : cycles) all4 = all4 && c.size() == 4;
  if (o.json()) {
    Json arr = Json::array();
    for (const auto& c : cycles) {
      Json cyc = Json::array();
      for (int v : c) cyc.push_back(h.label(v).str());
      arr.push_back(cyc);
    }
    print_json(out, Json{{"params", params_json(p)}, {"count", cycles.size()}, {"all_length_four", all4}, {"cycles", arr}});
  } else {
    for (const auto& c : cycles) {
      for (std::size_t k = 0; k < c.size(); ++k) out << (k ? " " : "") << h.label(c[k]).str();
      out << "\n";
    }
  }
  return kOk;
}

int cmd_groebner(const Options& o, std::ostream& out) {
  GridParams p = o.params();
  GroebnerResult gb = buchberger(path_ideal_generators(p), o.groebner());
  MonomialIdeal ini = lead_term_ideal(gb.basis);
  bool matches = ini == edge_ideal_H(p);
  if (o.json()) {
    Json basis = Json::array();
    for (const auto& f : gb.basis) basis.push_back(polynomial_json(f, &p));
    print_json(out, Json{{"params", params_json(p)},
                         {"basis", basis},
                         {"initial_ideal", ideal_json(ini, p)},
                         {"initial_equals_edge_ideal", matches},
                         {"log", groebner_log_json(gb.log)}});
  } else {
    for (const auto& f : gb.basis) out << f.str(&p) << "\n";
  }
  return kOk;
}

int cmd_sagbi(const Options& o, std::ostream& out) {
  GridParams p = o.params();
  SagbiReport r = verify_sagbi_identities(p);
  if (o.json()) {
    print_json(out, sagbi_json(r));
  } else {
    if (o.list)
      for (const auto& id : sagbi_identities(p)) {
        out << id.label() << ":";
        for (const auto& t : id.lhs) out << " " << t.str();
        out << " =";
        for (const auto& t : id.rhs) out << " " << t.str();
        out << "\n";
      }
    for (auto f : all_sagbi_families()) out << to_string(f) << " " << r.checked.at(f) << " " << r.failed.at(f) << "\n";
    for (const auto& f : r.failures) out << "FAIL " << f << "\n";
  }
  return r.ok() ? kOk : kCheckFailed;
}

int cmd_ini_power(const Options& o, std::ostream& out) {
  GridParams p = o.params();
  PowerCheck c = ini_power_check(p, o.t, o.groebner());
  if (o.json())
    print_json(out, Json{{"params", params_json(p)},
                         {"t", o.t},
                         {"commutes", c.commutes},
                         {"initial_generators", c.initial_of_power.generators().size()},
                         {"power_generators", c.power_of_initial.generators().size()},
                         {"log", groebner_log_json(c.log)}});
  else out << (c.commutes ? "true" : "false") << "\n";
  return c.commutes ? kOk : kCheckFailed;
}

int cmd_cone(const Options& o, std::ostream& out) {
  GridParams p = o.params();
  EdgeCone c = edge_cone(p);
  if (o.object == "dim") {
    int d = cone_dimension(c);
    if (o.json()) print_json(out, Json{{"params", params_json(p)}, {"dimension", d}, {"generators", c.generators.size()}});
    else out << d << "\n";
  } else if (o.object == "generators") {
    if (o.json()) {
      Json gens = Json::array();
      for (const auto& g : c.generators) gens.push_back(zvector_json(g));
      print_json(out, Json{{"params", params_json(p)}, {"generators", gens}});
    } else {
      for (const auto& g : c.generators) {
        for (std::size_t k = 0; k < g.size(); ++k) out << (k ? " " : "") << g[k];
        out << "\n";
      }
    }
  } else {
    FacetDescription fd = facet_description(c, DdOptions{o.max_rays});
    if (o.json()) {
      print_json(out, facets_json(c, fd));
    } else {
      auto row = [&](const char* tag, const ZVector& v) {
        out << tag;
        for (const auto& x : v) out << " " << x;
        out << "\n";
      };
      for (const auto& e : fd.equalities) row("eq", e);
      for (const auto& f : fd.facets) row("ge", f);
    }
  }
  return kOk;
}

int cmd_a_invariant(const Options& o, std::ostream& out) {
  GridParams p = o.params();
  AInvariantOptions opt;
  opt.dd.max_rays = o.max_rays;
  opt.ilp.max_nodes = o.max_nodes;
  AInvariantMode mode = o.mode == "certificate" ? AInvariantMode::Certificate : AInvariantMode::BruteForce;
  AInvariantResult r = a_invariant(p, mode, opt);
  if (o.json()) print_json(out, a_invariant_json(p, r));
  else out << r.value << "\n";
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<GridPoint> grid;
  if (o.grid == "acceptance") grid = acceptance_grid();
  else grid.push_back({o.m, o.n, o.t});
  VerifyOptions opt;
  opt.resolution = o.resolution();
  opt.groebner = o.groebner();
  VerificationReport rep = verify_all(grid, opt);
  if (o.json()) print_json(out, report_json(rep, o.timings));
  else out << render_table(rep, o.timings);
  if (rep.any_failure()) return kCheckFailed;
  if (rep.any_skipped()) return kBudget;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge ideals, binomial edge ideals and edge cones of the grid graphs H(m,n)"};
  app.require_subcommand(1);
  Options o;

  auto grid_opts = [&](CLI::App* s) {
    s->add_option("--m", o.m, "rows of the grid (m >= 2)")->check(CLI::Range(2, 64));
    s->add_option("--n", o.n, "columns of the grid (n >= 2)")->check(CLI::Range(2, 64));
  };
  auto power_opt = [&](CLI::App* s) { s->add_option("--t", o.t, "power exponent (t >= 1)")->check(CLI::Range(1, 64)); };
  auto format_opt = [&](CLI::App* s, std::vector<std::string> allowed) {
    s->add_option("--format", o.format, "output format")->check(CLI::IsMember(allowed));
  };
  auto resolution_opts = [&](CLI::App* s) {
    s->add_option("--field-char", o.field_char, "coefficient field characteristic (0 or a prime)")->check(CLI::NonNegativeNumber);
    s->add_option("--lattice-cap", o.lattice_cap, "largest lcm lattice to build");
  };
  auto groebner_opts = [&](CLI::App* s) {
    s->add_option("--max-pairs", o.max_pairs, "S-pair budget");
    s->add_option("--max-terms", o.max_terms, "largest intermediate polynomial");
  };

  std::vector<std::pair<CLI::App*, int (*)(const Options&, std::ostream&)>> verbs;
  auto verb = [&](const char* name, const char* help, int (*fn)(const Options&, std::ostream&)) {
    CLI::App* s = app.add_subcommand(name, help);
    verbs.emplace_back(s, fn);
    return s;
  };

  auto* construct = verb("construct", "build H, H_k, H', the matching, A, u-hat, u-type subgraphs or the cochord cover", cmd_construct);
  construct->add_option("object", o.object, "what to build")
      ->required()
      ->check(CLI::IsMember({"H", "Hk", "Hprime", "matching", "A", "uhat", "subgraphs", "cochord"}));
  grid_opts(construct);
  construct->add_option("--k", o.k, "zone index for Hk");
  format_opt(construct, {"text", "edgelist", "json"});
  construct->add_flag("--with-vertices", o.with_vertices, "list vertices first when needed to round-trip");

  auto* ideal = verb("ideal", "generators, powers, symbolic powers, colons and primes of I(H)", cmd_ideal);
  ideal->add_option("op", o.object, "which ideal")
      ->required()
      ->check(CLI::IsMember({"generators", "power", "symbolic", "colon", "primes", "initial-components"}));
  grid_opts(ideal);
  power_opt(ideal);
  format_opt(ideal, {"text", "json"});

  auto* betti = verb("betti", "graded Betti numbers of S/I(H)^t", cmd_betti);
  grid_opts(betti);
  power_opt(betti);
  resolution_opts(betti);
  format_opt(betti, {"text", "csv", "json"});

  auto* reg = verb("reg", "regularity of S/I(H)^t", cmd_reg);
  grid_opts(reg);
  power_opt(reg);
  resolution_opts(reg);
  format_opt(reg, {"text", "json"});

  auto* depth = verb("depth", "depth of S/I(H)^t", cmd_depth);
  grid_opts(depth);
  power_opt(depth);
  resolution_opts(depth);
  depth->add_option("--sequence", o.sequence, "print depth S/I(H)^t for t = 1..T instead")->check(CLI::Range(1, 64));
  format_opt(depth, {"text", "json"});

  auto* match = verb("match", "maximum matching of H", cmd_match);
  grid_opts(match);
  format_opt(match, {"text", "json"});

  auto* cochord = verb("cochord", "validate the co-chordal cover of H", cmd_cochord);
  grid_opts(cochord);
  format_opt(cochord, {"text", "json"});

  auto* chordless = verb("chordless", "chordless cycles of H", cmd_chordless);
  grid_opts(chordless);
  chordless->add_option("--max-len", o.max_len, "longest cycle to report");
  format_opt(chordless, {"text", "json"});

  auto* groebner = verb("groebner", "reduced Groebner basis of J_{K_m,P_n}", cmd_groebner);
  grid_opts(groebner);
  groebner_opts(groebner);
  format_opt(groebner, {"text", "json"});

  auto* sagbi = verb("sagbi-identities", "check the lead-term relations of the minors", cmd_sagbi);
  grid_opts(sagbi);
  sagbi->add_flag("--list", o.list, "print every identity");
  format_opt(sagbi, {"text", "json"});

  auto* ini = verb("ini-power", "compare ini(J^t) with I(H)^t", cmd_ini_power);
  grid_opts(ini);
  power_opt(ini);
  groebner_opts(ini);
  format_opt(ini, {"text", "json"});

  auto* cone = verb("cone", "edge cone of H': facets, dimension or generators", cmd_cone);
  cone->add_option("what", o.object, "facets, dim or generators")
      ->required()
      ->check(CLI::IsMember({"facets", "dim", "generators"}));
  grid_opts(cone);
  cone->add_option("--max-rays", o.max_rays, "double description budget");
  format_opt(cone, {"text", "json"});

  auto* ainv = verb("a-invariant", "-a(K[H]) by certificates or by integer programming", cmd_a_invariant);
  grid_opts(ainv);
  ainv->add_option("--mode", o.mode, "certificate or brute-force")->check(CLI::IsMember({"certificate", "brute-force"}));
  ainv->add_option("--max-rays", o.max_rays, "double description budget");
  ainv->add_option("--max-nodes", o.max_nodes, "branch and bound budget");
  format_opt(ainv, {"text", "json"});

  auto* verify = verb("verify", "check every closed form against the computations", cmd_verify);
  grid_opts(verify);
  power_opt(verify);
  resolution_opts(verify);
  groebner_opts(verify);
  verify->add_option("--grid", o.grid, "named grid instead of a single point")->check(CLI::IsMember({"acceptance"}));
  verify->add_flag("--timings", o.timings, "include run times (output is then not reproducible)");
  format_opt(verify, {"text", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (o.field_char != 0 && !is_prime(o.field_char)) throw Error(ErrorCode::BadParams, "--field-char must be 0 or a prime");
    for (auto& [sub, fn] : verbs)
      if (sub->parsed()) return fn(o, std::cout);
  } catch (const Error& e) {
    std::cerr << "gbe: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "gbe: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
