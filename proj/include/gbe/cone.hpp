#pragma once

// The edge cone of H' in Mat_{m x n}(Q): generators, dimension, an exact
// facet description by double description, and the two certificates that
// pin down the minimum of |v|/2 over lattice points v in its relative
// interior (directed cuts from below, u-hat from above).

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gbe/error.hpp"
#include "gbe/graph.hpp"
#include "gbe/grid.hpp"
#include "gbe/linalg.hpp"
#include "gbe/lp.hpp"

namespace gbe {

struct EdgeCone {
  GridParams params;
  std::vector<LabeledEdge> edges;      // edges of H', in graph order
  std::vector<ZVector> generators;     // e_{i,j} + e_{i',j+1}, row-major over the grid

  int ambient_dim() const { return params.num_vars(); }
};

inline EdgeCone edge_cone(const GridParams& p) {
  EdgeCone c{p, build_Hprime(p).labeled_edges(), {}};
  for (const auto& [a, b] : c.edges) {
    ZVector g(p.num_vars(), 0);
    g[p.var(a.row, a.col)] = 1;
    g[p.var(b.row, b.col)] = 1;
    c.generators.push_back(std::move(g));
  }
  return c;
}

inline mpz_class dot(const ZVector& a, const ZVector& b) {
  mpz_class s = 0;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != 0 && b[k] != 0) s += a[k] * b[k];
  return s;
}

inline ZVector flatten(const IntMatrix& m) {
  ZVector v;
  for (long long x : m.flat()) v.emplace_back(static_cast<long>(x));
  return v;
}

namespace detail {

inline QMatrix to_q(const std::vector<ZVector>& rows) {
  QMatrix out;
  for (const auto& r : rows) {
    QVector q;
    for (const auto& z : r) q.emplace_back(z);
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace detail

inline int cone_dimension(const EdgeCone& c) {
  if (c.generators.empty()) return 0;
  return rank(detail::to_q(c.generators));
}

struct DdOptions {
  std::size_t max_rays = 100000;
};

struct DdLog {
  std::size_t rays_peak = 0;
  std::size_t adjacency_tests = 0;
};

struct FacetDescription {
  int dimension = 0;
  std::vector<ZVector> equalities;   // integer basis of the functionals vanishing on the cone
  std::vector<ZVector> facets;       // primitive inward normals
  /// Smallest positive value of each facet functional on the lattice points
  /// of the linear span; 1 when the normal is primitive on that lattice.
  std::vector<mpz_class> lattice_gaps;
  DdLog log;

  bool all_primitive() const {
    return std::all_of(lattice_gaps.begin(), lattice_gaps.end(), [](const mpz_class& g) { return g == 1; });
  }
};

namespace detail {

struct DdRay {
  ZVector r;
  std::vector<char> tight;  // tight[i]: constraint i holds with equality
};

inline void make_primitive(ZVector& v) {
  mpz_class g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
}

}  // namespace detail

/// Facets of the edge cone by double description. The cone is projected onto
/// a set of coordinates on which its span maps isomorphically, so it becomes
/// full dimensional; there the facet normals are the extreme rays of
/// { f : f . g >= 0 for every generator g }, processed in generator order.
inline FacetDescription facet_description(const EdgeCone& c, const DdOptions& opt = {}) {
  FacetDescription out;
  const int amb = c.ambient_dim();
  const int ng = static_cast<int>(c.generators.size());
  QMatrix gq = detail::to_q(c.generators);

  for (const auto& v : nullspace(gq, amb)) out.equalities.push_back(primitive_integer(v));
  if (ng == 0) return out;

  QMatrix ech = gq;
  std::vector<int> pivots = rref(ech);
  const int d = static_cast<int>(pivots.size());
  out.dimension = d;

  // Constraint rows: generators restricted to the pivot coordinates.
  std::vector<ZVector> a(ng, ZVector(d));
  for (int i = 0; i < ng; ++i)
    for (int k = 0; k < d; ++k) a[i][k] = c.generators[i][pivots[k]];

  auto rank_of = [&](const std::vector<int>& rows) {
    QMatrix m;
    for (int i : rows) {
      QVector q;
      for (const auto& z : a[i]) q.emplace_back(z);
      m.push_back(std::move(q));
    }
    return m.empty() ? 0 : rank(std::move(m));
  };

  // Initial basis: the first d linearly independent constraints.
  std::vector<int> basis;
  std::vector<char> processed(ng, 0);
  for (int i = 0; i < ng && static_cast<int>(basis.size()) < d; ++i) {
    basis.push_back(i);
    if (rank_of(basis) < static_cast<int>(basis.size())) basis.pop_back();
  }
  // Rays of { f : B f >= 0 } are the columns of B^{-1}.
  QMatrix aug(d, QVector(2 * d, 0));
  for (int r = 0; r < d; ++r) {
    for (int k = 0; k < d; ++k) aug[r][k] = a[basis[r]][k];
    aug[r][d + r] = 1;
  }
  rref(aug);
  std::vector<detail::DdRay> rays;
  for (int col = 0; col < d; ++col) {
    QVector v(d);
    for (int r = 0; r < d; ++r) v[r] = aug[r][d + col];
    detail::DdRay ray{primitive_integer(v), std::vector<char>(ng, 0)};
    for (int r = 0; r < d; ++r)
      if (r != col) ray.tight[basis[r]] = 1;
    rays.push_back(std::move(ray));
  }
  for (int i : basis) processed[i] = 1;

  for (int i = 0; i < ng; ++i) {
    if (processed[i]) continue;
    std::vector<detail::DdRay> pos, neg, next;
    std::vector<mpz_class> pos_val, neg_val;
    for (auto& ray : rays) {
      mpz_class s = dot(a[i], ray.r);
      if (s == 0) {
        ray.tight[i] = 1;
        next.push_back(std::move(ray));
      } else if (s > 0) {
        pos.push_back(std::move(ray));
        pos_val.push_back(s);
      } else {
        neg.push_back(std::move(ray));
        neg_val.push_back(s);
      }
    }
    for (std::size_t p = 0; p < pos.size(); ++p)
      for (std::size_t q = 0; q < neg.size(); ++q) {
        std::vector<int> common;
        for (int k = 0; k < ng; ++k)
          if (processed[k] && pos[p].tight[k] && neg[q].tight[k]) common.push_back(k);
        if (static_cast<int>(common.size()) < d - 2) continue;
        ++out.log.adjacency_tests;
        if (rank_of(common) != d - 2) continue;
        detail::DdRay nr{ZVector(d), std::vector<char>(ng, 0)};
        for (int k = 0; k < d; ++k) nr.r[k] = pos_val[p] * neg[q].r[k] - neg_val[q] * pos[p].r[k];
        detail::make_primitive(nr.r);
        for (int k : common) nr.tight[k] = 1;
        nr.tight[i] = 1;
        next.push_back(std::move(nr));
        if (next.size() + pos.size() > opt.max_rays)
          throw Error(ErrorCode::BudgetExceeded, "double description exceeded " + std::to_string(opt.max_rays) + " rays");
      }
    for (auto& r : pos) next.push_back(std::move(r));
    rays = std::move(next);
    processed[i] = 1;
    out.log.rays_peak = std::max(out.log.rays_peak, rays.size());
  }
  out.log.rays_peak = std::max(out.log.rays_peak, rays.size());

  for (const auto& ray : rays) {
    ZVector f(amb, 0);
    for (int k = 0; k < d; ++k) f[pivots[k]] = ray.r[k];
    out.facets.push_back(std::move(f));
  }
  std::sort(out.facets.begin(), out.facets.end());

  // Validation: every generator satisfies every relation, and each facet is
  // tight on d - 1 independent generators.
  for (const auto& g : c.generators) {
    for (const auto& e : out.equalities)
      if (dot(e, g) != 0) throw Error(ErrorCode::CertificateInvalid, "generator violates an equality");
    for (const auto& f : out.facets)
      if (dot(f, g) < 0) throw Error(ErrorCode::CertificateInvalid, "generator violates a facet inequality");
  }
  for (const auto& f : out.facets) {
    std::vector<int> tight;
    mpz_class gap = 0;
    for (int i = 0; i < ng; ++i) {
      mpz_class s = dot(f, c.generators[i]);
      if (s == 0) tight.push_back(i);
      gap = gcd(gap, s);
    }
    if (rank_of(tight) != d - 1) throw Error(ErrorCode::CertificateInvalid, "facet is not tight on d-1 generators");
    // The incidence matrix of a bipartite graph is totally unimodular, so the
    // generators span the lattice points of their span and the gcd over the
    // generators is the gap over all lattice points.
    out.lattice_gaps.push_back(gap);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Certificates

struct CutCertificate {
  std::vector<DirectedCut> cuts;
  int bound = 0;
};

/// The path-family directed cuts, checked to be nonempty, pairwise
/// edge-disjoint, and without entering edges; each cut functional is then 1
/// on its own cut edges and 0 on every other generator.
inline CutCertificate directed_cut_certificate(const GridParams& p) {
  require_m4(p, "directed_cut_lower_bound");
  CutCertificate cert{directed_cut_family(p), 0};
  const auto oriented = oriented_Hprime_edges(p);
  std::set<LabeledEdge> used;
  for (const auto& cut : cert.cuts) {
    std::set<Vertex> in(cut.source_set.begin(), cut.source_set.end());
    if (cut.edges.empty()) throw Error(ErrorCode::CertificateInvalid, "empty directed cut");
    for (const auto& [t, h] : oriented) {
      if (!in.count(t) && in.count(h))
        throw Error(ErrorCode::CertificateInvalid, "cut has entering edge " + t.str() + " -> " + h.str());
      int phi = static_cast<int>(in.count(t)) - static_cast<int>(in.count(h));
      bool member = std::find(cut.edges.begin(), cut.edges.end(), LabeledEdge{t, h}) != cut.edges.end();
      if (phi != (member ? 1 : 0)) throw Error(ErrorCode::CertificateInvalid, "cut functional disagrees with cut edges");
    }
    for (const auto& e : cut.edges)
      if (!used.insert(e).second)
        throw Error(ErrorCode::CertificateInvalid, "edge " + e.first.str() + " -> " + e.second.str() + " in two cuts");
  }
  cert.bound = static_cast<int>(cert.cuts.size());
  return cert;
}

inline int directed_cut_lower_bound(const GridParams& p) { return directed_cut_certificate(p).bound; }

struct UHatCertificate {
  IntMatrix u_hat;
  UTypeSubgraphs subgraphs;
  int bound = 0;  // |u-hat| / 2
};

/// Checks that u-hat is the degree matrix of each of the three u-type
/// subgraphs (so u-hat is in the cone) and that their union spans and
/// connects H' (so no proper face contains u-hat).
inline UHatCertificate u_hat_certificate(const GridParams& p) {
  require_m4(p, "u_hat_upper_bound");
  UHatCertificate cert{vector_u_hat(p), u_type_subgraphs(p), 0};
  const Graph* subs[] = {&cert.subgraphs.h1, &cert.subgraphs.h2, &cert.subgraphs.h3};
  std::vector<LabeledEdge> all;
  for (int k = 0; k < 3; ++k) {
    IntMatrix d;
    try {
      d = degree_matrix(*subs[k], p);
    } catch (const Error& e) {
      throw Error(ErrorCode::CertificateInvalid, e.what());
    }
    if (d != cert.u_hat)
      throw Error(ErrorCode::CertificateInvalid, "degree matrix of u-type subgraph " + std::to_string(k + 1) + " is not u-hat");
    for (const auto& e : subs[k]->labeled_edges()) all.push_back(e);
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  Graph hhat = edge_subgraph(build_Hprime(p), all);
  if (!is_connected(hhat))
    throw Error(ErrorCode::CertificateInvalid, "union of the u-type subgraphs does not connect H'");
  if (cert.u_hat.total() % 2 != 0) throw Error(ErrorCode::CertificateInvalid, "|u-hat| is odd");
  cert.bound = static_cast<int>(cert.u_hat.total() / 2);
  return cert;
}

inline int u_hat_upper_bound(const GridParams& p) { return u_hat_certificate(p).bound; }

// ---------------------------------------------------------------------------
// The minimum of |v|/2 over lattice points in the relative interior

enum class AInvariantMode { Certificate, BruteForce };

inline const char* to_string(AInvariantMode m) { return m == AInvariantMode::Certificate ? "certificate" : "brute-force"; }

struct AInvariantOptions {
  DdOptions dd;
  IlpOptions ilp;
};

struct AInvariantResult {
  AInvariantMode mode = AInvariantMode::Certificate;
  int value = 0;
  int lower = 0;                 // certificate mode
  int upper = 0;                 // certificate mode
  std::size_t facets = 0;        // brute-force mode
  bool normals_primitive = true; // brute-force mode
  IlpLog ilp_log;                // brute-force mode
  ZVector witness;               // a minimizer (brute-force mode)
};

/// min sum(v) over v with E v = 0 and F_i(v) >= gap_i; its integer optimum is
/// the smallest |v| over lattice points in the relative interior.
inline LinearProgram shift_polyhedron_program(const EdgeCone& c, const FacetDescription& fd) {
  const int n = c.ambient_dim();
  LinearProgram lp(n);
  lp.objective.assign(n, 1);
  lp.integral = true;
  auto q = [](const ZVector& z) {
    QVector v;
    for (const auto& x : z) v.emplace_back(x);
    return v;
  };
  for (const auto& e : fd.equalities) lp.add(q(e), Sense::Equal, 0);
  for (std::size_t k = 0; k < fd.facets.size(); ++k) lp.add(q(fd.facets[k]), Sense::GreaterEq, mpq_class(fd.lattice_gaps[k]));
  return lp;
}

inline AInvariantResult a_invariant_certificate(const GridParams& p) {
  AInvariantResult r;
  r.mode = AInvariantMode::Certificate;
  r.lower = directed_cut_lower_bound(p);
  r.upper = u_hat_upper_bound(p);
  if (r.lower != r.upper)
    throw Error(ErrorCode::BoundsMismatch,
                "lower bound " + std::to_string(r.lower) + " differs from upper bound " + std::to_string(r.upper));
  r.value = r.lower;
  return r;
}

inline AInvariantResult a_invariant_brute_force(const GridParams& p, const AInvariantOptions& opt = {}) {
  EdgeCone c = edge_cone(p);
  FacetDescription fd = facet_description(c, opt.dd);
  LinearProgram lp = shift_polyhedron_program(c, fd);

  auto feasible = [&](const ZVector& v) {
    for (const auto& e : fd.equalities)
      if (dot(e, v) != 0) return false;
    for (std::size_t k = 0; k < fd.facets.size(); ++k)
      if (dot(fd.facets[k], v) < fd.lattice_gaps[k]) return false;
    return true;
  };
  // Starting point: u-hat when it is defined, else the sum of all generators,
  // which is strictly positive on every facet.
  ZVector start(c.ambient_dim(), 0);
  if (p.m >= 4) {
    start = flatten(vector_u_hat(p));
    if (!feasible(start)) throw Error(ErrorCode::CertificateInvalid, "u-hat violates a facet inequality");
  } else {
    for (const auto& g : c.generators)
      for (std::size_t k = 0; k < g.size(); ++k) start[k] += g[k];
    if (!feasible(start)) throw Error(ErrorCode::CertificateInvalid, "sum of generators is not interior");
  }
  IlpOptions ilp = opt.ilp;
  QVector inc;
  for (const auto& z : start) inc.emplace_back(z);
  ilp.incumbent = inc;

  IlpSolution sol = exact_ilp_solve(lp, ilp);
  AInvariantResult r;
  r.mode = AInvariantMode::BruteForce;
  r.facets = fd.facets.size();
  r.normals_primitive = fd.all_primitive();
  r.ilp_log = sol.log;
  for (const auto& x : sol.x) r.witness.push_back(x.get_num());
  mpz_class total = sol.value.get_num();
  if (sol.value.get_den() != 1 || total % 2 != 0)
    throw Error(ErrorCode::CertificateInvalid, "optimal |v| is not an even integer");
  r.value = static_cast<int>(total.get_si() / 2);
  return r;
}

inline AInvariantResult a_invariant(const GridParams& p, AInvariantMode mode, const AInvariantOptions& opt = {}) {
  return mode == AInvariantMode::Certificate ? a_invariant_certificate(p) : a_invariant_brute_force(p, opt);
}

}  // namespace gbe
