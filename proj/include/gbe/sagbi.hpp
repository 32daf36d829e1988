#pragma once

// Explicit polynomial identities that lift every binomial relation among the
// lead terms of the Rees algebra generators x_{i,j} and [i,j|k,k+1]T. Each
// identity is a sum of signed products of variables and 2-minors on both
// sides. Checking one means expanding both sides exactly and comparing lead
// terms under tau' (T-degree first, then tau).

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gbe/error.hpp"
#include "gbe/grid.hpp"
#include "gbe/monomial.hpp"
#include "gbe/polynomial.hpp"

namespace gbe {

struct Minor {
  int i, j, k, l;  // [i,j | k,l]
  std::string str() const {
    return "[" + std::to_string(i) + "," + std::to_string(j) + "|" + std::to_string(k) + "," + std::to_string(l) + "]";
  }
};

/// coeff * (product of variables) * (product of minors).
struct SagbiProduct {
  int coeff = 1;
  std::vector<std::pair<int, int>> vars;  // x_{i,j}
  std::vector<Minor> minors;

  std::string str() const {
    std::string s = coeff < 0 ? "-" : "+";
    for (const auto& [i, j] : vars) s += "x" + std::to_string(i) + std::to_string(j);
    for (const auto& m : minors) s += m.str();
    return s;
  }
};

/// Families of relations among the lead terms, named by their shape.
enum class SagbiFamily {
  DisjointEdges,        // u v T_{e2} - u' v' T_{e1} for disjoint edges
  SharedRightVertex,    // common vertex in column k+1
  SharedLeftVertex,     // common vertex in column k
  PathThroughMiddle,    // common vertex in the middle of three columns
  CycleThreeColumns,    // 4-cycle spanning columns k, k+1, k+2
  CycleTwoColumns,      // 4-cycle inside one zone (a Pluecker relation)
};

inline const char* to_string(SagbiFamily f) {
  switch (f) {
    case SagbiFamily::DisjointEdges: return "disjoint_edges";
    case SagbiFamily::SharedRightVertex: return "shared_right_vertex";
    case SagbiFamily::SharedLeftVertex: return "shared_left_vertex";
    case SagbiFamily::PathThroughMiddle: return "path_through_middle";
    case SagbiFamily::CycleThreeColumns: return "cycle_three_columns";
    case SagbiFamily::CycleTwoColumns: return "cycle_two_columns";
  }
  return "?";
}

inline const std::vector<SagbiFamily>& all_sagbi_families() {
  static const std::vector<SagbiFamily> f{SagbiFamily::DisjointEdges,     SagbiFamily::SharedRightVertex,
                                          SagbiFamily::SharedLeftVertex,  SagbiFamily::PathThroughMiddle,
                                          SagbiFamily::CycleThreeColumns, SagbiFamily::CycleTwoColumns};
  return f;
}

struct SagbiIdentity {
  SagbiFamily family;
  std::vector<int> tuple;  // the row/column indices that instantiate it
  std::vector<SagbiProduct> lhs, rhs;

  std::string label() const {
    std::string s = std::string(to_string(family)) + "(";
    for (std::size_t k = 0; k < tuple.size(); ++k) s += (k ? "," : "") + std::to_string(tuple[k]);
    return s + ")";
  }
};

namespace detail {

inline SagbiProduct prod(int c, std::vector<std::pair<int, int>> v, std::vector<Minor> m) {
  return SagbiProduct{c, std::move(v), std::move(m)};
}

}  // namespace detail

/// Every instance of the six families admissible in the m x n grid.
inline std::vector<SagbiIdentity> sagbi_identities(const GridParams& p) {
  using detail::prod;
  std::vector<SagbiIdentity> out;
  const int m = p.m, n = p.n;

  // Disjoint edges e1 = {x_{i,k}, x_{j,k+1}}, e2 = {x_{i',k'}, x_{j',k'+1}}.
  std::vector<std::tuple<int, int, int>> edges;  // (i, j, k)
  for (int k = 1; k < n; ++k)
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j) edges.emplace_back(i, j, k);
  for (std::size_t a = 0; a < edges.size(); ++a)
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      auto [i, j, k] = edges[a];
      auto [i2, j2, k2] = edges[b];
      std::set<std::pair<int, int>> va{{i, k}, {j, k + 1}}, vb{{i2, k2}, {j2, k2 + 1}};
      bool disjoint = std::none_of(va.begin(), va.end(), [&](const auto& v) { return vb.count(v); });
      if (!disjoint) continue;
      Minor e1{i, j, k, k + 1}, e2{i2, j2, k2, k2 + 1};
      out.push_back({SagbiFamily::DisjointEdges,
                     {i, j, k, i2, j2, k2},
                     {prod(1, {{i, k}, {j, k + 1}}, {e2}), prod(-1, {{i2, k2}, {j2, k2 + 1}}, {e1})},
                     {prod(1, {{i, k + 1}, {j, k}}, {e2}), prod(-1, {{i2, k2 + 1}, {j2, k2}}, {e1})}});
    }

  for (int k = 1; k < n; ++k)
    for (int i1 = 1; i1 <= m; ++i1)
      for (int i2 = i1 + 1; i2 <= m; ++i2)
        for (int i3 = i2 + 1; i3 <= m; ++i3) {
          // Two edges of zone k meeting at x_{i3,k+1}.
          out.push_back({SagbiFamily::SharedRightVertex,
                         {i1, i2, i3, k},
                         {prod(1, {{i2, k}}, {{i1, i3, k, k + 1}}), prod(-1, {{i1, k}}, {{i2, i3, k, k + 1}})},
                         {prod(1, {{i3, k}}, {{i1, i2, k, k + 1}})}});
          // Two edges of zone k meeting at x_{i1,k}.
          out.push_back({SagbiFamily::SharedLeftVertex,
                         {i1, i2, i3, k},
                         {prod(1, {{i2, k + 1}}, {{i1, i3, k, k + 1}}), prod(-1, {{i3, k + 1}}, {{i1, i2, k, k + 1}})},
                         {prod(1, {{i1, k + 1}}, {{i2, i3, k, k + 1}})}});
        }

  for (int k = 1; k + 2 <= n; ++k)
    for (int i1 = 1; i1 <= m; ++i1)
      for (int i2 = i1 + 1; i2 <= m; ++i2)
        for (int i3 = i2 + 1; i3 <= m; ++i3)
          out.push_back({SagbiFamily::PathThroughMiddle,
                         {i1, i2, i3, k},
                         {prod(1, {{i3, k + 2}}, {{i1, i2, k, k + 1}}), prod(-1, {{i1, k}}, {{i2, i3, k + 1, k + 2}})},
                         {prod(1, {{i3, k}}, {{i1, i2, k + 1, k + 2}}), prod(1, {{i2, k + 2}}, {{i1, i3, k, k + 1}}),
                          prod(-1, {{i2, k}}, {{i1, i3, k + 1, k + 2}}), prod(-1, {{i1, k + 2}}, {{i2, i3, k, k + 1}})}});

  // 4-cycles x_{i1,k} - x_{i2,k+1} - x_{i3,k+2} - x_{i4,k+1} with i1<i2<i4<i3.
  for (int k = 1; k + 2 <= n; ++k)
    for (int i1 = 1; i1 <= m; ++i1)
      for (int i2 = i1 + 1; i2 <= m; ++i2)
        for (int i4 = i2 + 1; i4 <= m; ++i4)
          for (int i3 = i4 + 1; i3 <= m; ++i3) {
            const int a = k, b = k + 1, c = k + 2;
            out.push_back({SagbiFamily::CycleThreeColumns,
                           {i1, i2, i4, i3, k},
                           {prod(1, {}, {{i1, i2, a, b}, {i4, i3, b, c}}), prod(-1, {}, {{i1, i4, a, b}, {i2, i3, b, c}})},
                           {prod(-1, {}, {{i1, i2, b, c}, {i4, i3, a, b}}), prod(1, {}, {{i1, i4, b, c}, {i2, i3, a, b}}),
                            prod(-1, {}, {{i2, i4, a, b}, {i1, i3, b, c}}),
                            prod(-1, {}, {{i2, i4, b, c}, {i1, i3, a, b}})}});
          }

  // 4-cycles inside zone k: rows i1 < i3 in column k, i2 < i4 in column k+1, i3 < i2.
  for (int k = 1; k < n; ++k)
    for (int i1 = 1; i1 <= m; ++i1)
      for (int i3 = i1 + 1; i3 <= m; ++i3)
        for (int i2 = i3 + 1; i2 <= m; ++i2)
          for (int i4 = i2 + 1; i4 <= m; ++i4)
            out.push_back({SagbiFamily::CycleTwoColumns,
                           {i1, i3, i2, i4, k},
                           {prod(1, {}, {{i1, i2, k, k + 1}, {i3, i4, k, k + 1}}),
                            prod(-1, {}, {{i1, i4, k, k + 1}, {i3, i2, k, k + 1}})},
                           {prod(1, {}, {{i1, i3, k, k + 1}, {i2, i4, k, k + 1}})}});
  return out;
}

/// Expansion of a product in S (the T-degree is the number of minors).
inline Polynomial expand(const GridParams& p, const SagbiProduct& t) {
  const int nv = p.num_vars();
  Monomial vm(nv);
  for (const auto& [i, j] : t.vars) vm = vm * Monomial::var(nv, p.var(i, j));
  Polynomial f = Polynomial::term(vm, t.coeff);
  for (const auto& m : t.minors) f = f * minor2(p, m.i, m.j, m.k, m.l);
  return f;
}

/// Lead monomial of a product: variables times the lead terms of the minors.
inline Monomial product_lead(const GridParams& p, const SagbiProduct& t) {
  Monomial lm(p.num_vars());
  for (const auto& [i, j] : t.vars) lm = lm * Monomial::var(p.num_vars(), p.var(i, j));
  for (const auto& m : t.minors) lm = lm * minor2(p, m.i, m.j, m.k, m.l).lead_monomial();
  return lm;
}

struct IdentityCheck {
  bool equal = false;     // LHS - RHS expands to zero
  bool lead_ok = false;   // the tau' lead-term side condition
  std::string detail;
};

/// Checks one identity. The side condition requires:
///   - all products have the same T-degree (so tau' compares by tau),
///   - the LHS products share one lead monomial, which cancels in F,
///   - the RHS lead monomials are pairwise distinct and each lies strictly
///     below that cancelled monomial and at most the lead term of F.
inline IdentityCheck check_identity(const GridParams& p, const SagbiIdentity& id) {
  IdentityCheck r;
  Polynomial lhs(p.num_vars()), rhs(p.num_vars());
  for (const auto& t : id.lhs) lhs += expand(p, t);
  for (const auto& t : id.rhs) rhs += expand(p, t);
  Polynomial diff = lhs - rhs;
  r.equal = diff.is_zero();
  if (!r.equal) r.detail = "LHS - RHS = " + diff.str(&p);

  std::ostringstream why;
  const std::size_t tdeg = id.lhs.front().minors.size();
  bool ok = true;
  for (const auto* side : {&id.lhs, &id.rhs})
    for (const auto& t : *side)
      if (t.minors.size() != tdeg) {
        ok = false;
        why << "mixed T-degree; ";
      }
  Monomial cancelled = product_lead(p, id.lhs.front());
  for (const auto& t : id.lhs)
    if (product_lead(p, t) != cancelled) {
      ok = false;
      why << "LHS lead terms differ; ";
    }
  std::set<Monomial> seen;
  for (const auto& t : id.rhs) {
    Monomial lm = product_lead(p, t);
    if (!seen.insert(lm).second) {
      ok = false;
      why << "repeated RHS lead term " << monomial_str(lm, &p) << "; ";
    }
    if (!(lm < cancelled)) {
      ok = false;
      why << "RHS lead term " << monomial_str(lm, &p) << " not below the cancelled term; ";
    }
    if (!lhs.is_zero() && lhs.lead_monomial() < lm) {
      ok = false;
      why << "RHS lead term above ini(F); ";
    }
  }
  r.lead_ok = ok;
  if (!ok) r.detail += (r.detail.empty() ? "" : " | ") + why.str();
  return r;
}

struct SagbiReport {
  GridParams params;
  std::map<SagbiFamily, int> checked;
  std::map<SagbiFamily, int> failed;
  std::vector<std::string> failures;  // label: detail

  int total_checked() const {
    int s = 0;
    for (const auto& [f, c] : checked) s += c;
    return s;
  }
  int total_failed() const {
    int s = 0;
    for (const auto& [f, c] : failed) s += c;
    return s;
  }
  bool ok() const { return total_failed() == 0; }
};

inline SagbiReport verify_sagbi_identities(const GridParams& p) {
  SagbiReport rep{p, {}, {}, {}};
  for (auto f : all_sagbi_families()) {
    rep.checked[f] = 0;
    rep.failed[f] = 0;
  }
  for (const auto& id : sagbi_identities(p)) {
    ++rep.checked[id.family];
    IdentityCheck c = check_identity(p, id);
    if (!c.equal || !c.lead_ok) {
      ++rep.failed[id.family];
      rep.failures.push_back(id.label() + ": " + c.detail);
    }
  }
  return rep;
}

/// Like verify_sagbi_identities but throws IdentityFailure on the first bad tuple.
inline SagbiReport require_sagbi_identities(const GridParams& p) {
  SagbiReport rep = verify_sagbi_identities(p);
  if (!rep.ok()) throw Error(ErrorCode::IdentityFailure, rep.failures.front());
  return rep;
}

}  // namespace gbe
