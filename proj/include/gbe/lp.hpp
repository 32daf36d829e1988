#pragma once

// Exact rational linear programming: a dense two-phase simplex with Bland's
// rule (so it cannot cycle) and a depth-first branch-and-bound on top of it
// for integer programs. All variables are nonnegative.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "gbe/error.hpp"
#include "gbe/linalg.hpp"

namespace gbe {

enum class Sense { LessEq, GreaterEq, Equal };

struct LinearConstraint {
  QVector coeffs;
  Sense sense = Sense::GreaterEq;
  mpq_class rhs = 0;
};

/// minimize objective . x subject to the constraints and x >= 0.
struct LinearProgram {
  int nvars = 0;
  QVector objective;
  std::vector<LinearConstraint> constraints;
  bool integral = false;

  explicit LinearProgram(int n = 0) : nvars(n), objective(n, 0) {}

  void add(QVector coeffs, Sense sense, mpq_class rhs) {
    if (static_cast<int>(coeffs.size()) != nvars)
      throw Error(ErrorCode::BadParams, "constraint has " + std::to_string(coeffs.size()) + " coefficients, expected " +
                                            std::to_string(nvars));
    constraints.push_back({std::move(coeffs), sense, std::move(rhs)});
  }

  void validate() const {
    if (static_cast<int>(objective.size()) != nvars) throw Error(ErrorCode::BadParams, "objective length mismatch");
    for (const auto& c : constraints)
      if (static_cast<int>(c.coeffs.size()) != nvars) throw Error(ErrorCode::BadParams, "constraint length mismatch");
  }
};

struct LpSolution {
  mpq_class value;
  QVector x;  // an optimal vertex
};

namespace detail {

struct Tableau {
  QMatrix a;                // constraint rows over all columns
  QVector b;                // right-hand sides, kept >= 0
  std::vector<int> basis;   // basic column of each row

  void pivot(int r, int c) {
    mpq_class inv = 1 / a[r][c];
    for (auto& v : a[r]) v *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (static_cast<int>(i) == r || a[i][c] == 0) continue;
      mpq_class f = a[i][c];
      for (std::size_t k = 0; k < a[i].size(); ++k)
        if (a[r][k] != 0) a[i][k] -= f * a[r][k];
      b[i] -= f * b[r];
    }
    basis[r] = c;
  }

  /// Minimizes cost . x over columns < allowed; false if unbounded.
  bool optimize(const QVector& cost, int allowed) {
    while (true) {
      int enter = -1;
      for (int j = 0; j < allowed && enter < 0; ++j) {
        mpq_class d = cost[j];
        for (std::size_t r = 0; r < a.size(); ++r)
          if (a[r][j] != 0) d -= cost[basis[r]] * a[r][j];
        if (d < 0) enter = j;
      }
      if (enter < 0) return true;
      int leave = -1;
      mpq_class best;
      for (std::size_t r = 0; r < a.size(); ++r) {
        if (a[r][enter] <= 0) continue;
        mpq_class ratio = b[r] / a[r][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis[r] < basis[leave])) {
          leave = static_cast<int>(r);
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace detail

/// Exact optimum of a linear program; throws Infeasible or Unbounded.
inline LpSolution exact_lp_solve(const LinearProgram& lp) {
  lp.validate();
  const int n = lp.nvars;
  int slacks = 0, artificials = 0;
  for (const auto& c : lp.constraints) {
    Sense s = c.sense;
    if (c.rhs < 0 && s != Sense::Equal) s = s == Sense::LessEq ? Sense::GreaterEq : Sense::LessEq;
    if (s != Sense::Equal) ++slacks;
    if (s != Sense::LessEq) ++artificials;
  }
  const int cols = n + slacks + artificials;
  detail::Tableau t;
  int next_slack = n, next_art = n + slacks;
  for (const auto& c : lp.constraints) {
    QVector row(cols, 0);
    mpq_class rhs = c.rhs;
    Sense s = c.sense;
    for (int j = 0; j < n; ++j) row[j] = c.coeffs[j];
    if (rhs < 0) {
      for (int j = 0; j < n; ++j) row[j] = -row[j];
      rhs = -rhs;
      if (s != Sense::Equal) s = s == Sense::LessEq ? Sense::GreaterEq : Sense::LessEq;
    }
    int basic;
    if (s == Sense::LessEq) {
      row[next_slack] = 1;
      basic = next_slack++;
    } else {
      if (s == Sense::GreaterEq) row[next_slack++] = -1;
      row[next_art] = 1;
      basic = next_art++;
    }
    t.a.push_back(std::move(row));
    t.b.push_back(rhs);
    t.basis.push_back(basic);
  }

  // Phase 1: drive the artificial variables to zero.
  QVector phase1(cols, 0);
  for (int j = n + slacks; j < cols; ++j) phase1[j] = 1;
  t.optimize(phase1, cols);
  mpq_class infeas = 0;
  for (std::size_t r = 0; r < t.a.size(); ++r)
    if (t.basis[r] >= n + slacks) infeas += t.b[r];
  if (infeas > 0) throw Error(ErrorCode::Infeasible, "linear program has no feasible point");
  // Pivot zero-level artificials out of the basis, dropping redundant rows.
  for (std::size_t r = 0; r < t.a.size();) {
    if (t.basis[r] < n + slacks) {
      ++r;
      continue;
    }
    int c = -1;
    for (int j = 0; j < n + slacks && c < 0; ++j)
      if (t.a[r][j] != 0) c = j;
    if (c >= 0) {
      t.pivot(static_cast<int>(r), c);
      ++r;
    } else {
      t.a.erase(t.a.begin() + r);
      t.b.erase(t.b.begin() + r);
      t.basis.erase(t.basis.begin() + r);
    }
  }

  QVector cost(cols, 0);
  for (int j = 0; j < n; ++j) cost[j] = lp.objective[j];
  if (!t.optimize(cost, n + slacks)) throw Error(ErrorCode::Unbounded, "linear program is unbounded below");

  LpSolution sol{0, QVector(n, 0)};
  for (std::size_t r = 0; r < t.a.size(); ++r)
    if (t.basis[r] < n) sol.x[t.basis[r]] = t.b[r];
  for (int j = 0; j < n; ++j) sol.value += lp.objective[j] * sol.x[j];
  return sol;
}

struct IlpOptions {
  std::size_t max_nodes = 200000;
  /// A known feasible integer point; the search only looks for better ones.
  std::optional<QVector> incumbent;
};

struct IlpLog {
  std::size_t nodes = 0;
  std::size_t infeasible_nodes = 0;
  std::size_t pruned_by_bound = 0;
  std::size_t improvements = 0;
  mpq_class root_bound = 0;
};

struct IlpSolution {
  mpq_class value;
  QVector x;
  IlpLog log;
};

/// Integer optimum by LP relaxation and depth-first branching on the first
/// fractional coordinate. Throws Infeasible, Unbounded or BudgetExceeded.
inline IlpSolution exact_ilp_solve(const LinearProgram& lp, const IlpOptions& opt = {}) {
  lp.validate();
  bool integer_objective = true;
  for (const auto& c : lp.objective)
    if (c.get_den() != 1) integer_objective = false;
  auto bound_of = [&](const mpq_class& v) -> mpq_class {
    if (!integer_objective) return v;
    mpz_class f;
    mpz_cdiv_q(f.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
    return mpq_class(f);
  };

  IlpSolution best;
  bool have = false;
  if (opt.incumbent) {
    if (static_cast<int>(opt.incumbent->size()) != lp.nvars) throw Error(ErrorCode::BadParams, "incumbent length mismatch");
    best.x = *opt.incumbent;
    best.value = 0;
    for (int j = 0; j < lp.nvars; ++j) best.value += lp.objective[j] * best.x[j];
    have = true;
  }

  std::vector<LinearProgram> stack{lp};
  bool root = true;
  while (!stack.empty()) {
    LinearProgram node = std::move(stack.back());
    stack.pop_back();
    if (++best.log.nodes > opt.max_nodes)
      throw Error(ErrorCode::BudgetExceeded, "branch and bound exceeded " + std::to_string(opt.max_nodes) + " nodes");
    LpSolution rel;
    try {
      rel = exact_lp_solve(node);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Infeasible && !root) {
        ++best.log.infeasible_nodes;
        continue;
      }
      throw;
    }
    if (root) {
      best.log.root_bound = rel.value;
      root = false;
    }
    if (have && bound_of(rel.value) >= best.value) {
      ++best.log.pruned_by_bound;
      continue;
    }
    int frac = -1;
    for (int j = 0; j < lp.nvars && frac < 0; ++j)
      if (rel.x[j].get_den() != 1) frac = j;
    if (frac < 0) {
      best.value = rel.value;
      best.x = rel.x;
      have = true;
      ++best.log.improvements;
      continue;
    }
    mpz_class lo;
    mpz_fdiv_q(lo.get_mpz_t(), rel.x[frac].get_num().get_mpz_t(), rel.x[frac].get_den().get_mpz_t());
    QVector e(lp.nvars, 0);
    e[frac] = 1;
    LinearProgram up = node, down = std::move(node);
    up.add(e, Sense::GreaterEq, mpq_class(lo + 1));
    down.add(e, Sense::LessEq, mpq_class(lo));
    stack.push_back(std::move(up));
    stack.push_back(std::move(down));  // explored first
  }
  if (!have) throw Error(ErrorCode::Infeasible, "integer program has no feasible point");
  return best;
}

}  // namespace gbe
