#pragma once

// Monomials over a fixed number of variables and monomial ideals stored by
// their minimal generators. Variable 0 is the largest variable; comparison is
// lexicographic, so for grid rings it is the order tau.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "gbe/error.hpp"
#include "gbe/graph.hpp"
#include "gbe/grid.hpp"

namespace gbe {

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars) : exp_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : exp_(std::move(exps)) {
    for (int e : exp_)
      if (e < 0) throw Error(ErrorCode::BadParams, "negative exponent");
  }

  static Monomial var(int nvars, int v, int power = 1) {
    Monomial m(nvars);
    m.exp_.at(v) = power;
    return m;
  }

  int nvars() const { return static_cast<int>(exp_.size()); }
  int operator[](int v) const { return exp_[v]; }
  const std::vector<int>& exponents() const { return exp_; }

  int degree() const {
    int d = 0;
    for (int e : exp_) d += e;
    return d;
  }

  std::vector<int> support() const {
    std::vector<int> s;
    for (int v = 0; v < nvars(); ++v)
      if (exp_[v] > 0) s.push_back(v);
    return s;
  }

  bool is_squarefree() const {
    return std::all_of(exp_.begin(), exp_.end(), [](int e) { return e <= 1; });
  }

  bool is_one() const {
    return std::all_of(exp_.begin(), exp_.end(), [](int e) { return e == 0; });
  }

  bool divides(const Monomial& o) const {
    for (int v = 0; v < nvars(); ++v)
      if (exp_[v] > o.exp_[v]) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r(*this);
    for (int v = 0; v < nvars(); ++v) r.exp_[v] += o.exp_[v];
    return r;
  }

  /// Exact quotient; requires o | *this.
  Monomial operator/(const Monomial& o) const {
    Monomial r(*this);
    for (int v = 0; v < nvars(); ++v) {
      r.exp_[v] -= o.exp_[v];
      if (r.exp_[v] < 0) throw Error(ErrorCode::BadParams, "monomial division is not exact");
    }
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (int v = 0; v < a.nvars(); ++v) r.exp_[v] = std::max(a.exp_[v], b.exp_[v]);
    return r;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (int v = 0; v < a.nvars(); ++v) r.exp_[v] = std::min(a.exp_[v], b.exp_[v]);
    return r;
  }

  bool operator==(const Monomial&) const = default;
  /// Lexicographic with variable 0 largest (the term order tau on grid rings).
  std::strong_ordering operator<=>(const Monomial& o) const { return exp_ <=> o.exp_; }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (int e : exp_) h = (h ^ static_cast<std::size_t>(e)) * 1099511628211ull;
    return h;
  }

 private:
  std::vector<int> exp_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Variable naming for human-readable output: grid rings print x_{i,j}.
inline std::string monomial_str(const Monomial& m, const GridParams* grid = nullptr) {
  if (m.is_one()) return "1";
  std::string out;
  for (int v = 0; v < m.nvars(); ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += grid ? "x" + std::to_string(grid->row_of(v)) + std::to_string(grid->col_of(v)) : "v" + std::to_string(v);
    if (m[v] > 1) out += "^" + std::to_string(m[v]);
  }
  return out;
}

/// Sorted variable indices of a monomial prime ideal.
struct PrimeSupport {
  std::vector<int> variables;
  auto operator<=>(const PrimeSupport&) const = default;
};

class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  explicit MonomialIdeal(int nvars) : nvars_(nvars) {}

  MonomialIdeal(int nvars, std::vector<Monomial> gens) : nvars_(nvars), gens_(std::move(gens)) {
    for (const auto& g : gens_)
      if (g.nvars() != nvars_) throw Error(ErrorCode::BadParams, "generator has wrong variable count");
    minimalize();
  }

  int nvars() const { return nvars_; }
  /// Minimal generators, largest first under the lex order.
  const std::vector<Monomial>& generators() const { return gens_; }
  int num_generators() const { return static_cast<int>(gens_.size()); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

  bool contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
  }

  bool contains(const MonomialIdeal& o) const {
    return std::all_of(o.gens_.begin(), o.gens_.end(), [&](const Monomial& g) { return contains(g); });
  }

  bool is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
  }

  int max_degree() const {
    int d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
  }

  Monomial total_lcm() const {
    Monomial l(nvars_);
    for (const auto& g : gens_) l = lcm(l, g);
    return l;
  }

  bool operator==(const MonomialIdeal& o) const = default;

 private:
  void minimalize() {
    std::sort(gens_.begin(), gens_.end(), [](const Monomial& a, const Monomial& b) {
      if (a.degree() != b.degree()) return a.degree() < b.degree();
      return a > b;
    });
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    std::vector<Monomial> kept;
    for (const auto& g : gens_) {
      bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
      if (!redundant) kept.push_back(g);
    }
    std::sort(kept.begin(), kept.end(), std::greater<>());
    gens_ = std::move(kept);
  }

  int nvars_ = 0;
  std::vector<Monomial> gens_;
};

// ---------------------------------------------------------------------------
// Ideal arithmetic

inline MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  auto g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.nvars(), std::move(g));
}

inline MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> g;
  g.reserve(a.generators().size() * b.generators().size());
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) g.push_back(x * y);
  return MonomialIdeal(a.nvars(), std::move(g));
}

inline MonomialIdeal power(const MonomialIdeal& I, int t) {
  if (t < 1) throw Error(ErrorCode::BadParams, "power exponent must be >= 1");
  MonomialIdeal r = I;
  for (int k = 1; k < t; ++k) r = product(r, I);
  return r;
}

inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> g;
  g.reserve(a.generators().size() * b.generators().size());
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) g.push_back(lcm(x, y));
  return MonomialIdeal(a.nvars(), std::move(g));
}

/// I : m, generated by g / gcd(g, m).
inline MonomialIdeal colon(const MonomialIdeal& I, const Monomial& m) {
  std::vector<Monomial> g;
  for (const auto& x : I.generators()) g.push_back(x / gcd(x, m));
  return MonomialIdeal(I.nvars(), std::move(g));
}

/// I : J as the intersection of I : g over the generators g of J.
inline MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (J.is_zero()) return MonomialIdeal(I.nvars(), {Monomial(I.nvars())});
  MonomialIdeal r = colon(I, J.generators().front());
  for (std::size_t k = 1; k < J.generators().size(); ++k) r = intersect(r, colon(I, J.generators()[k]));
  return r;
}

inline MonomialIdeal prime_ideal(int nvars, const PrimeSupport& p) {
  std::vector<Monomial> g;
  for (int v : p.variables) g.push_back(Monomial::var(nvars, v));
  return MonomialIdeal(nvars, std::move(g));
}

/// Edge ideal with vertex index v mapped to variable var_of(v).
inline MonomialIdeal edge_ideal(const Graph& g, int nvars, const std::function<int(int)>& var_of) {
  std::vector<Monomial> gens;
  for (const auto& [u, v] : g.edges()) {
    int a = var_of(u), b = var_of(v);
    if (a == b) throw Error(ErrorCode::BadParams, "vertex-to-variable map is not injective");
    Monomial m(nvars);
    m = Monomial::var(nvars, a) * Monomial::var(nvars, b);
    gens.push_back(m);
  }
  return MonomialIdeal(nvars, std::move(gens));
}

/// Edge ideal of a graph on grid labels inside the ring of the grid p.
inline MonomialIdeal edge_ideal(const Graph& g, const GridParams& p) {
  return edge_ideal(g, p.num_vars(), [&](int v) {
    const Vertex& l = g.label(v);
    if (!l.is_grid() || l.row > p.m || l.col < 1 || l.col > p.n)
      throw Error(ErrorCode::BadParams, "vertex " + l.str() + " is not a grid variable");
    return p.var(l.row, l.col);
  });
}

/// Edge ideal using vertex index as variable index.
inline MonomialIdeal edge_ideal(const Graph& g) {
  return edge_ideal(g, g.num_vertices(), [](int v) { return v; });
}

// ---------------------------------------------------------------------------
// Minimal primes and symbolic powers

/// Minimal vertex covers of the hypergraph of supports, by branching on the
/// variables of the first uncovered generator.
inline std::vector<PrimeSupport> minimal_primes(const MonomialIdeal& I, std::size_t cap = 100000) {
  if (!I.is_squarefree()) throw Error(ErrorCode::NotSquarefree, "minimal_primes needs a squarefree ideal");
  if (I.is_zero()) return {};
  std::vector<std::vector<int>> supports;
  for (const auto& g : I.generators()) supports.push_back(g.support());
  const int nv = I.nvars();

  std::set<std::vector<int>> covers;
  std::vector<char> chosen(nv, 0);
  std::size_t nodes = 0;
  auto branch = [&](auto&& self) -> void {
    if (++nodes > 50 * cap) throw Error(ErrorCode::BudgetExceeded, "minimal prime search");
    const std::vector<int>* open = nullptr;
    for (const auto& s : supports) {
      if (std::none_of(s.begin(), s.end(), [&](int v) { return chosen[v]; })) {
        open = &s;
        break;
      }
    }
    if (!open) {
      std::vector<int> c;
      for (int v = 0; v < nv; ++v)
        if (chosen[v]) c.push_back(v);
      // Keep only irredundant covers: every chosen variable owns a generator.
      for (int v : c) {
        bool needed = false;
        for (const auto& s : supports) {
          bool only_v = true;
          bool has_v = false;
          for (int w : s) {
            if (w == v) has_v = true;
            else if (chosen[w]) only_v = false;
          }
          if (has_v && only_v) {
            needed = true;
            break;
          }
        }
        if (!needed) return;
      }
      covers.insert(std::move(c));
      if (covers.size() > cap) throw Error(ErrorCode::BudgetExceeded, "more than cap minimal primes");
      return;
    }
    for (int v : *open) {
      chosen[v] = 1;
      self(self);
      chosen[v] = 0;
    }
  };
  branch(branch);

  std::vector<PrimeSupport> out;
  for (const auto& c : covers) out.push_back({c});
  return out;
}

/// Intersection of P^t over the minimal primes P of a squarefree ideal.
inline MonomialIdeal symbolic_power(const MonomialIdeal& I, int t) {
  if (!I.is_squarefree()) throw Error(ErrorCode::NotSquarefree, "symbolic_power is only defined here for squarefree ideals");
  if (t < 1) throw Error(ErrorCode::BadParams, "symbolic power exponent must be >= 1");
  auto primes = minimal_primes(I);
  if (primes.empty()) return I;
  MonomialIdeal r = power(prime_ideal(I.nvars(), primes.front()), t);
  for (std::size_t k = 1; k < primes.size(); ++k) r = intersect(r, power(prime_ideal(I.nvars(), primes[k]), t));
  return r;
}

/// For each t in [1, t_max]: whether I^{t+1} : I == I^t.
inline std::vector<bool> strong_persistence_check(const MonomialIdeal& I, int t_max) {
  if (t_max < 1) throw Error(ErrorCode::BadParams, "t_max must be >= 1");
  std::vector<bool> out;
  MonomialIdeal pt = I;
  for (int t = 1; t <= t_max; ++t) {
    MonomialIdeal next = product(pt, I);
    out.push_back(colon(next, I) == pt);
    pt = std::move(next);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Initial-ideal side of the primary decomposition

/// Edge ideal of the comparability graph x_{i,j} ~ x_{i',j'} (i<i', j<j') on
/// the given rows and columns; the lead-term ideal of the 2-minors there.
inline MonomialIdeal comparability_initial_ideal(const GridParams& p, std::vector<int> rows, std::vector<int> cols) {
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  if (rows.size() < 2 || cols.size() < 2) throw Error(ErrorCode::TooSmall, "need at least two rows and two columns");
  std::vector<Monomial> g;
  const int nv = p.num_vars();
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = a + 1; b < rows.size(); ++b)
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t d = c + 1; d < cols.size(); ++d)
          g.push_back(Monomial::var(nv, p.var(rows[a], cols[c])) * Monomial::var(nv, p.var(rows[b], cols[d])));
  return MonomialIdeal(nv, std::move(g));
}

/// Lead-term ideal of the prime P_A(K_m, P_n): the variables of the columns in
/// A plus the comparability ideal of every run of consecutive columns of
/// P_n \ A (runs of one column contribute nothing).
inline MonomialIdeal initial_primary_component(const GridParams& p, const std::vector<int>& columns_removed) {
  std::vector<char> removed(p.n + 1, 0);
  for (int c : columns_removed) {
    if (c < 1 || c > p.n) throw Error(ErrorCode::BadParams, "column " + std::to_string(c) + " out of range");
    removed[c] = 1;
  }
  const int nv = p.num_vars();
  std::vector<Monomial> g;
  for (int c = 1; c <= p.n; ++c)
    if (removed[c])
      for (int i = 1; i <= p.m; ++i) g.push_back(Monomial::var(nv, p.var(i, c)));
  MonomialIdeal out(nv, std::move(g));
  std::vector<int> rows;
  for (int i = 1; i <= p.m; ++i) rows.push_back(i);
  int c = 1;
  while (c <= p.n) {
    if (removed[c]) {
      ++c;
      continue;
    }
    std::vector<int> run;
    while (c <= p.n && !removed[c]) run.push_back(c++);
    if (run.size() >= 2) out = sum(out, comparability_initial_ideal(p, rows, run));
  }
  return out;
}

/// The sets of columns with the cut point property in P_n, including the
/// empty set, as 1-based column lists.
inline std::vector<std::vector<int>> path_cut_sets(int n) {
  Graph pn = Graph::path(n);
  std::vector<std::vector<int>> out;
  for (const auto& s : cut_point_property_sets(pn)) {
    std::vector<int> cols;
    for (int v : s) cols.push_back(pn.label(v).col);
    out.push_back(std::move(cols));
  }
  return out;
}

/// Intersection of initial_primary_component over all cut sets of P_n.
inline MonomialIdeal intersect_initial_components(const GridParams& p) {
  auto sets = path_cut_sets(p.n);
  MonomialIdeal r = initial_primary_component(p, sets.front());
  for (std::size_t k = 1; k < sets.size(); ++k) r = intersect(r, initial_primary_component(p, sets[k]));
  return r;
}

/// I(H) in the ring of the grid.
inline MonomialIdeal edge_ideal_H(const GridParams& p) { return edge_ideal(build_H(p), p); }

}  // namespace gbe
