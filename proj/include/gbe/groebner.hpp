#pragma once

// Buchberger's algorithm over Q with integer arithmetic, for the lex order
// tau. Polynomials are kept primitive during reduction, so binomials stay
// binomials with small coefficients.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <tuple>
#include <vector>

#include "gbe/error.hpp"
#include "gbe/graph.hpp"
#include "gbe/monomial.hpp"
#include "gbe/polynomial.hpp"

namespace gbe {

struct GroebnerOptions {
  std::size_t max_pairs = 100000;       // S-pairs reduced before giving up
  std::size_t max_terms = 200000;       // largest intermediate polynomial
};

struct GroebnerLog {
  std::size_t pairs_processed = 0;
  std::size_t reductions_to_zero = 0;
  std::size_t coprime_skips = 0;
  std::size_t basis_peak = 0;
};

struct GroebnerResult {
  std::vector<Polynomial> basis;  // reduced, primitive, decreasing lead terms
  GroebnerLog log;
};

namespace detail {

inline void check_size(const Polynomial& f, const GroebnerOptions& opt) {
  if (f.size() > opt.max_terms)
    throw Error(ErrorCode::BudgetExceeded, "intermediate polynomial has " + std::to_string(f.size()) + " terms");
}

/// Fully reduces f modulo g (every term, not only the lead term). The result
/// is primitive and equals c*f - sum(q_i g_i) for some positive integer c.
inline Polynomial reduce_full(Polynomial f, const std::vector<Polynomial>& g, const GroebnerOptions& opt,
                              std::size_t skip = static_cast<std::size_t>(-1)) {
  Polynomial done(f.nvars());
  while (!f.is_zero()) {
    const Monomial lm = f.lead_monomial();
    const mpz_class lc = f.lead_coeff();
    const Polynomial* div = nullptr;
    for (std::size_t k = 0; k < g.size(); ++k)
      if (k != skip && g[k].lead_monomial().divides(lm)) {
        div = &g[k];
        break;
      }
    if (!div) {
      done.add_term(lm, lc);
      f.add_term(lm, -lc);
      continue;
    }
    const mpz_class& dc = div->lead_coeff();
    mpz_class gg = gcd(lc, dc);
    mpz_class a = dc / gg;  // multiply f (and done) by a
    mpz_class b = lc / gg;  // subtract b * (lm / LT) * div
    if (a != 1) {
      f = f.scaled(a);
      done = done.scaled(a);
    }
    f -= div->scaled(b, lm / div->lead_monomial());
    check_size(f, opt);
    mpz_class c = gcd(f.is_zero() ? mpz_class(0) : f.content(), done.is_zero() ? mpz_class(0) : done.content());
    if (c > 1) {
      Polynomial nf(f.nvars()), nd(done.nvars());
      for (const auto& [m, k] : f.terms()) nf.add_term(m, k / c);
      for (const auto& [m, k] : done.terms()) nd.add_term(m, k / c);
      f = std::move(nf);
      done = std::move(nd);
    }
  }
  return done.primitive();
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  Monomial l = lcm(f.lead_monomial(), g.lead_monomial());
  mpz_class gg = gcd(f.lead_coeff(), g.lead_coeff());
  return f.scaled(g.lead_coeff() / gg, l / f.lead_monomial()) - g.scaled(f.lead_coeff() / gg, l / g.lead_monomial());
}

inline bool coprime(const Monomial& a, const Monomial& b) { return gcd(a, b).is_one(); }

}  // namespace detail

/// Reduced Groebner basis: minimal lead terms, every polynomial fully reduced
/// against the others, primitive with positive lead coefficient, sorted by
/// decreasing lead term.
inline std::vector<Polynomial> reduce_basis(std::vector<Polynomial> g, const GroebnerOptions& opt = {}) {
  std::sort(g.begin(), g.end(), [](const Polynomial& a, const Polynomial& b) {
    if (a.lead_monomial().degree() != b.lead_monomial().degree())
      return a.lead_monomial().degree() < b.lead_monomial().degree();
    return a.lead_monomial() < b.lead_monomial();
  });
  std::vector<Polynomial> minimal;
  for (const auto& f : g) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                 [&](const Polynomial& h) { return h.lead_monomial().divides(f.lead_monomial()); });
    if (!redundant) minimal.push_back(f);
  }
  std::vector<Polynomial> out;
  for (std::size_t k = 0; k < minimal.size(); ++k) out.push_back(detail::reduce_full(minimal[k], minimal, opt, k));
  std::sort(out.begin(), out.end(),
            [](const Polynomial& a, const Polynomial& b) { return a.lead_monomial() > b.lead_monomial(); });
  return out;
}

/// Buchberger with the normal selection strategy (smallest lcm first, by
/// degree then tau) and the coprime lead term criterion.
inline GroebnerResult buchberger(const std::vector<Polynomial>& input, const GroebnerOptions& opt = {}) {
  GroebnerResult res;
  std::vector<Polynomial> g;
  for (const auto& f : input)
    if (!f.is_zero()) g.push_back(f.primitive());
  if (g.empty()) return res;

  // Pairs keyed by (deg lcm, lcm, i, j) so the set iterates in selection order.
  using Pair = std::tuple<int, Monomial, std::size_t, std::size_t>;
  auto cmp = [](const Pair& a, const Pair& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
    return std::tie(std::get<2>(a), std::get<3>(a)) < std::tie(std::get<2>(b), std::get<3>(b));
  };
  std::set<Pair, decltype(cmp)> pairs(cmp);
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (detail::coprime(g[i].lead_monomial(), g[j].lead_monomial())) {
        ++res.log.coprime_skips;
        continue;
      }
      Monomial l = lcm(g[i].lead_monomial(), g[j].lead_monomial());
      pairs.emplace(l.degree(), l, i, j);
    }
  };
  for (std::size_t j = 0; j < g.size(); ++j) add_pairs_for(j);

  while (!pairs.empty()) {
    auto [deg, l, i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    if (++res.log.pairs_processed > opt.max_pairs)
      throw Error(ErrorCode::BudgetExceeded, "more than " + std::to_string(opt.max_pairs) + " S-pairs");
    Polynomial h = detail::reduce_full(detail::s_polynomial(g[i], g[j]), g, opt);
    if (h.is_zero()) {
      ++res.log.reductions_to_zero;
      continue;
    }
    g.push_back(std::move(h));
    res.log.basis_peak = std::max(res.log.basis_peak, g.size());
    add_pairs_for(g.size() - 1);
  }
  res.log.basis_peak = std::max(res.log.basis_peak, g.size());
  res.basis = reduce_basis(std::move(g), opt);
  return res;
}

/// Whether every S-pair of g reduces to zero modulo g.
inline bool is_groebner_basis(const std::vector<Polynomial>& g, const GroebnerOptions& opt = {}) {
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      if (detail::coprime(g[i].lead_monomial(), g[j].lead_monomial())) continue;
      if (!detail::reduce_full(detail::s_polynomial(g[i], g[j]), g, opt).is_zero()) return false;
    }
  return true;
}

/// Normal form of f modulo g (primitive, up to a positive rational factor).
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& g, const GroebnerOptions& opt = {}) {
  return detail::reduce_full(f, g, opt);
}

inline MonomialIdeal lead_term_ideal(const std::vector<Polynomial>& g) {
  if (g.empty()) return MonomialIdeal();
  std::vector<Monomial> lt;
  for (const auto& f : g) lt.push_back(f.lead_monomial());
  return MonomialIdeal(g.front().nvars(), std::move(lt));
}

/// All t-fold products of the given generators (multisets), deduplicated.
inline std::vector<Polynomial> generator_products(const std::vector<Polynomial>& gens, int t) {
  if (t < 1) throw Error(ErrorCode::BadParams, "power exponent must be >= 1");
  std::vector<Polynomial> out;
  std::vector<std::size_t> idx(t, 0);
  auto rec = [&](auto&& self, int pos, std::size_t from, const Polynomial& acc) -> void {
    if (pos == t) {
      out.push_back(acc.primitive());
      return;
    }
    for (std::size_t k = from; k < gens.size(); ++k) self(self, pos + 1, k, pos == 0 ? gens[k] : acc * gens[k]);
  };
  if (!gens.empty()) rec(rec, 0, 0, Polynomial(gens.front().nvars()));
  std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) { return a.terms() > b.terms(); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct PowerCheck {
  bool commutes = false;
  MonomialIdeal initial_of_power;   // ini(J^t)
  MonomialIdeal power_of_initial;   // (ini J)^t = I(H)^t
  GroebnerLog log;
};

/// Compares ini(J^t) computed by Buchberger with I(H)^t.
inline PowerCheck ini_power_check(const GridParams& p, int t, const GroebnerOptions& opt = {}) {
  PowerCheck out;
  auto gb = buchberger(generator_products(path_ideal_generators(p), t), opt);
  out.initial_of_power = lead_term_ideal(gb.basis);
  out.power_of_initial = power(edge_ideal_H(p), t);
  out.log = gb.log;
  out.commutes = out.initial_of_power == out.power_of_initial;
  return out;
}

inline bool ini_power_commutes(const GridParams& p, int t, const GroebnerOptions& opt = {}) {
  return ini_power_check(p, t, opt).commutes;
}

/// Toric binomials T_{C+} - T_{C-} of the chordless cycles of a bipartite
/// graph. T-variable k is the k-th edge of g; T_0 ranks highest, and each
/// binomial is signed so that its lead coefficient is positive.
inline std::vector<Polynomial> presentation_cycle_binomials(const Graph& g) {
  if (!is_bipartite(g)) throw Error(ErrorCode::NonBipartite, "presentation binomials need a bipartite graph");
  const int ne = g.num_edges();
  auto edge_index = [&](int a, int b) {
    Edge e = make_edge(a, b);
    auto it = std::lower_bound(g.edges().begin(), g.edges().end(), e);
    return static_cast<int>(it - g.edges().begin());
  };
  std::vector<Polynomial> out;
  for (const auto& c : chordless_cycles(g)) {
    Monomial plus(ne), minus(ne);
    for (std::size_t k = 0; k < c.size(); ++k) {
      int e = edge_index(c[k], c[(k + 1) % c.size()]);
      if (k % 2 == 0) plus = plus * Monomial::var(ne, e);
      else minus = minus * Monomial::var(ne, e);
    }
    Polynomial f = Polynomial::term(plus, 1) - Polynomial::term(minus, 1);
    out.push_back(f.primitive());
  }
  return out;
}

}  // namespace gbe
