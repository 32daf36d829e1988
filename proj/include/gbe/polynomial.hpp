#pragma once

// Sparse multivariate polynomials with exact integer coefficients. Terms are
// kept in decreasing lex order (variable 0 largest), so the first term is the
// lead term under tau.

#include <gmpxx.h>

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gbe/error.hpp"
#include "gbe/graph.hpp"
#include "gbe/grid.hpp"
#include "gbe/monomial.hpp"

namespace gbe {

class Polynomial {
 public:
  using TermMap = std::map<Monomial, mpz_class, std::greater<>>;

  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial term(const Monomial& m, const mpz_class& c) {
    Polynomial p(m.nvars());
    if (c != 0) p.terms_.emplace(m, c);
    return p;
  }

  static Polynomial variable(int nvars, int v) { return term(Monomial::var(nvars, v), 1); }
  static Polynomial constant(int nvars, const mpz_class& c) { return term(Monomial(nvars), c); }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  const Monomial& lead_monomial() const {
    if (is_zero()) throw Error(ErrorCode::BadParams, "lead term of the zero polynomial");
    return terms_.begin()->first;
  }
  const mpz_class& lead_coeff() const {
    if (is_zero()) throw Error(ErrorCode::BadParams, "lead coefficient of the zero polynomial");
    return terms_.begin()->second;
  }

  int degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  void add_term(const Monomial& m, const mpz_class& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  /// c * m * p.
  Polynomial scaled(const mpz_class& c, const Monomial& m) const {
    Polynomial r(nvars_);
    if (c == 0) return r;
    for (const auto& [t, k] : terms_) r.terms_.emplace_hint(r.terms_.end(), t * m, k * c);
    return r;
  }

  Polynomial scaled(const mpz_class& c) const { return scaled(c, Monomial(nvars_)); }

  mpz_class content() const {
    mpz_class g = 0;
    for (const auto& [m, c] : terms_) g = gcd(g, c);
    return g;
  }

  /// Divided by its content, with a positive lead coefficient.
  Polynomial primitive() const {
    if (is_zero()) return *this;
    mpz_class g = content();
    if (lead_coeff() < 0) g = -g;
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, c / g);
    return r;
  }

  /// Substitute zero for every variable v with keep(v) false.
  Polynomial restrict_to(const std::function<bool(int)>& keep) const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
      bool ok = true;
      for (int v : m.support())
        if (!keep(v)) {
          ok = false;
          break;
        }
      if (ok) r.terms_.emplace_hint(r.terms_.end(), m, c);
    }
    return r;
  }

  bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  std::string str(const GridParams* grid = nullptr) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      mpz_class a = abs(c);
      if (first) out += c < 0 ? "-" : "";
      else out += c < 0 ? " - " : " + ";
      first = false;
      bool unit = a == 1 && !m.is_one();
      if (!unit) out += a.get_str();
      if (!m.is_one()) out += (unit ? "" : "*") + monomial_str(m, grid);
    }
    return out;
  }

 private:
  int nvars_ = 0;
  TermMap terms_;
};

/// The 2-minor [i,j | k,l] = x_{i,k} x_{j,l} - x_{i,l} x_{j,k} of the generic
/// m x n matrix (1-based indices; no ordering assumed).
inline Polynomial minor2(const GridParams& p, int i, int j, int k, int l) {
  const int nv = p.num_vars();
  auto x = [&](int r, int c) { return Monomial::var(nv, p.var(r, c)); };
  Polynomial f = Polynomial::term(x(i, k) * x(j, l), 1);
  f.add_term(x(i, l) * x(j, k), -1);
  return f;
}

/// Generators p_{(e,f)} of the binomial edge ideal of the pair (g1, g2): one
/// minor [i,j|k,l] per edge e = {i<j} of g1 and f = {k<l} of g2, where i, j
/// and k, l are 1-based vertex positions. Lives in the ring of the
/// |V(g1)| x |V(g2)| grid.
inline std::vector<Polynomial> pair_generators(const Graph& g1, const Graph& g2) {
  GridParams p(std::max(2, g1.num_vertices()), std::max(2, g2.num_vertices()));
  if (g1.num_vertices() < 2 || g2.num_vertices() < 2) return {};
  std::vector<Polynomial> out;
  for (const auto& [i, j] : g1.edges())
    for (const auto& [k, l] : g2.edges()) out.push_back(minor2(p, i + 1, j + 1, k + 1, l + 1));
  return out;
}

/// Generators of J_{K_m,P_n} in the ring of the m x n grid.
inline std::vector<Polynomial> path_ideal_generators(const GridParams& p) {
  return pair_generators(Graph::complete(p.m), Graph::path(p.n));
}

/// Substitutes zero for the variables outside rows x cols.
inline Polynomial retraction_map(const Polynomial& f, const GridParams& p, const std::vector<int>& keep_rows,
                                 const std::vector<int>& keep_cols) {
  std::vector<char> row(p.m + 1, 0), col(p.n + 1, 0);
  for (int r : keep_rows) {
    if (r < 1 || r > p.m) throw Error(ErrorCode::BadParams, "row " + std::to_string(r) + " out of range");
    row[r] = 1;
  }
  for (int c : keep_cols) {
    if (c < 1 || c > p.n) throw Error(ErrorCode::BadParams, "column " + std::to_string(c) + " out of range");
    col[c] = 1;
  }
  return f.restrict_to([&](int v) { return row[p.row_of(v)] && col[p.col_of(v)]; });
}

}  // namespace gbe
