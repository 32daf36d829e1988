#pragma once

// Closed-form values for the grid graphs H(m,n) and a harness that checks
// each one against an independent computation from the other modules.

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "gbe/cone.hpp"
#include "gbe/error.hpp"
#include "gbe/graph.hpp"
#include "gbe/grid.hpp"
#include "gbe/groebner.hpp"
#include "gbe/monomial.hpp"
#include "gbe/resolution.hpp"
#include "gbe/sagbi.hpp"

namespace gbe {

struct FormulaResult {
  std::string name;
  int m = 0, n = 0, t = 0;  // 0 when the formula does not use the parameter
  long long value = 0;
  std::string statement;    // the closed form, for self-describing reports
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::BadParams, what);
}

}  // namespace detail

/// reg S/I(H)^t = 2(t-1) + (n-1).
inline long long reg_power_formula(int n, int t) {
  detail::require(n >= 2 && t >= 1, "reg_power_formula needs n >= 2, t >= 1");
  return 2LL * (t - 1) + (n - 1);
}

/// depth S/I(H) = n + m - 1.
inline long long depth_formula(int m, int n) {
  detail::require(m >= 2 && n >= 2, "depth_formula needs m, n >= 2");
  return n + m - 1;
}

/// Limit of depth S/I(H)^t as t grows: 3 for m >= 3, n + 1 for m = 2.
inline long long depth_limit(int m, int n) {
  detail::require(m >= 2 && n >= 2, "depth_limit needs m, n >= 2");
  return m >= 3 ? 3 : n + 1;
}

/// Analytic spread of I(H): mn - 3 for m >= 3, n - 1 for m = 2.
inline long long analytic_spread(int m, int n) {
  detail::require(m >= 2 && n >= 2, "analytic_spread needs m, n >= 2");
  return m >= 3 ? 1LL * m * n - 3 : n - 1;
}

/// Matching number of H(m,n).
inline long long match_formula(int m, int n) {
  detail::require(m >= 2 && n >= 2, "match_formula needs m, n >= 2");
  return 1LL * (m - 1) * (n / 2) + (n - 1) / 2;
}

/// Regularity of the Rees algebra of I(H), equal to the matching number.
inline long long rees_reg_formula(int m, int n) { return match_formula(m, n); }

/// Upper bound n - 1 on the co-chordal cover number of H(m,n).
inline long long cochord_bound(int n) {
  detail::require(n >= 2, "cochord_bound needs n >= 2");
  return n - 1;
}

/// -a(K[H]): mn/2 for even n, m(n+1)/2 - 2 for odd n.
inline long long a_inv_formula(int m, int n) {
  detail::require(m >= 4 && n >= 2, "a_inv_formula needs m >= 4, n >= 2");
  return n % 2 == 0 ? 1LL * m * n / 2 : 1LL * m * (n + 1) / 2 - 2;
}

/// reg K[H] = (mn - 3) - (-a(K[H])) for m >= 4; the fiber is a polynomial
/// ring, so of regularity 0, for m in {2, 3}.
inline long long fiber_reg_formula(int m, int n) {
  detail::require(m >= 2 && n >= 2, "fiber_reg_formula needs m, n >= 2");
  if (m <= 3) return 0;
  return analytic_spread(m, n) - a_inv_formula(m, n);
}

/// reg S/I^t <= 2t + cochord - 1 with the cochord bound n - 1.
inline long long reg_upper_bound(int n, int t) { return 2LL * t + cochord_bound(n) - 1; }

/// Every formula that applies at (m, n, t), with its statement.
inline std::vector<FormulaResult> formulas_at(int m, int n, int t) {
  std::vector<FormulaResult> out;
  out.push_back({"reg_power", 0, n, t, reg_power_formula(n, t), "reg S/I(H)^t = 2(t-1) + (n-1)"});
  out.push_back({"reg_upper_bound", 0, n, t, reg_upper_bound(n, t), "reg S/I(H)^t <= 2t + (n-1) - 1"});
  out.push_back({"depth", m, n, 0, depth_formula(m, n), "depth S/I(H) = n + m - 1"});
  out.push_back({"depth_limit", m, n, 0, depth_limit(m, n), "lim depth S/I(H)^t = 3 if m >= 3, n + 1 if m = 2"});
  out.push_back({"analytic_spread", m, n, 0, analytic_spread(m, n), "l(I(H)) = mn - 3 if m >= 3, n - 1 if m = 2"});
  out.push_back({"match", m, n, 0, match_formula(m, n), "match(H) = (m-1) floor(n/2) + floor((n-1)/2)"});
  out.push_back({"rees_reg", m, n, 0, rees_reg_formula(m, n), "reg R(I(H)) = match(H)"});
  out.push_back({"cochord_bound", 0, n, 0, cochord_bound(n), "cochord(H) <= n - 1"});
  if (m >= 4) out.push_back({"a_inv", m, n, 0, a_inv_formula(m, n), "-a(K[H]) = mn/2 (n even), m(n+1)/2 - 2 (n odd)"});
  out.push_back({"fiber_reg", m, n, 0, fiber_reg_formula(m, n), "reg K[H] = (mn-3) - (-a(K[H])) if m >= 4, 0 if m <= 3"});
  return out;
}

// ---------------------------------------------------------------------------
// Verification harness

struct GridPoint {
  int m = 2, n = 2, t = 1;
  auto operator<=>(const GridPoint&) const = default;
};

enum class CheckStatus { Agree, Disagree, Skipped, Error };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Agree: return "agree";
    case CheckStatus::Disagree: return "disagree";
    case CheckStatus::Skipped: return "skipped";
    case CheckStatus::Error: return "error";
  }
  return "?";
}

/// One comparison. Yes/no properties are encoded as formula 1 and oracle 1
/// (holds) or 0 (fails).
struct VerificationEntry {
  std::string check;
  GridPoint params;
  long long formula = 0;
  long long oracle = 0;
  CheckStatus status = CheckStatus::Error;
  double seconds = 0;
  std::string note;  // error text for skipped or failed entries

  bool agree() const { return status == CheckStatus::Agree; }
};

struct VerificationReport {
  std::vector<VerificationEntry> entries;

  bool all_agree() const {
    return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.agree(); });
  }
  bool any_failure() const {
    return std::any_of(entries.begin(), entries.end(), [](const auto& e) {
      return e.status == CheckStatus::Disagree || e.status == CheckStatus::Error;
    });
  }
  bool any_skipped() const {
    return std::any_of(entries.begin(), entries.end(), [](const auto& e) { return e.status == CheckStatus::Skipped; });
  }
};

struct VerifyOptions {
  ResolutionOptions resolution;
  GroebnerOptions groebner{20000, 200000};
  int max_sagbi_m = 5, max_sagbi_n = 5;        // identity sweep range
  int max_brute_force_vars = 20;               // ILP only when mn is at most this
  int max_groebner_vars = 16;                  // Buchberger on J only when mn is at most this
};

/// The grid of the acceptance suite: t in {1, 2}, plus t = 3 for (2,3), (2,4).
inline std::vector<GridPoint> acceptance_grid() {
  std::vector<GridPoint> g;
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {2, 5}, {3, 3}, {3, 4}, {4, 3}})
    for (int t = 1; t <= 2; ++t) g.push_back({m, n, t});
  g.push_back({2, 3, 3});
  g.push_back({2, 4, 3});
  std::sort(g.begin(), g.end());
  return g;
}

namespace detail {

/// Runs one check, turning exceptions into skipped (budget) or error entries.
inline void run_check(VerificationReport& rep, const std::string& name, const GridPoint& gp,
                      const std::function<std::pair<long long, long long>()>& body,
                      const std::function<bool(long long, long long)>& agree = {}) {
  VerificationEntry e;
  e.check = name;
  e.params = gp;
  auto start = std::chrono::steady_clock::now();
  try {
    auto [f, o] = body();
    e.formula = f;
    e.oracle = o;
    bool ok = agree ? agree(f, o) : f == o;
    e.status = ok ? CheckStatus::Agree : CheckStatus::Disagree;
  } catch (const Error& err) {
    e.status = is_budget_error(err.code()) ? CheckStatus::Skipped : CheckStatus::Error;
    e.note = err.what();
  } catch (const std::exception& err) {
    e.status = CheckStatus::Error;
    e.note = err.what();
  }
  e.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  rep.entries.push_back(std::move(e));
}

inline long long as_flag(bool b) { return b ? 1 : 0; }

}  // namespace detail

/// Checks every formula at each grid point against an oracle from another
/// module. Checks that do not depend on t run once per (m, n). Failures are
/// recorded per entry; the report is sorted by parameters.
inline VerificationReport verify_all(std::vector<GridPoint> grid, const VerifyOptions& opt = {}) {
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  VerificationReport rep;
  std::set<std::pair<int, int>> seen;
  for (const auto& gp : grid) {
    const int m = gp.m, n = gp.n, t = gp.t;
    using detail::as_flag;
    using detail::run_check;
    GridParams p;
    try {
      p = GridParams(m, n);
      if (t < 1) throw Error(ErrorCode::BadParams, "t must be >= 1");
    } catch (const Error& err) {
      rep.entries.push_back({"params", gp, 0, 0, CheckStatus::Error, 0, err.what()});
      continue;
    }
    const MonomialIdeal I = edge_ideal_H(p);

    // Betti tables of I^t and I^(t-1), computed lazily and shared.
    std::optional<BettiTable> bt, bt_prev;
    std::exception_ptr bt_error;
    auto table = [&]() -> const BettiTable& {
      if (bt_error) std::rethrow_exception(bt_error);
      if (!bt) {
        try {
          bt = betti_table(power(I, t), opt.resolution);
        } catch (...) {
          bt_error = std::current_exception();
          throw;
        }
      }
      return *bt;
    };
    run_check(rep, "reg_power", gp, [&] { return std::pair{reg_power_formula(n, t), (long long)table().regularity()}; });
    run_check(
        rep, "reg_upper_bound", gp, [&] { return std::pair{reg_upper_bound(n, t), (long long)table().regularity()}; },
        [](long long f, long long o) { return o <= f; });
    if (t == 1) {
      run_check(rep, "depth", gp, [&] { return std::pair{depth_formula(m, n), (long long)table().depth()}; });
    } else {
      run_check(
          rep, "depth_nonincreasing", gp,
          [&] {
            if (!bt_prev) bt_prev = betti_table(power(I, t - 1), opt.resolution);
            return std::pair{1LL, as_flag(table().depth() <= bt_prev->depth())};
          });
    }
    run_check(
        rep, "depth_above_limit", gp, [&] { return std::pair{depth_limit(m, n), (long long)table().depth()}; },
        [](long long f, long long o) { return o >= f; });
    run_check(rep, "strong_persistence", gp, [&] {
      MonomialIdeal pt = power(I, t);
      return std::pair{1LL, as_flag(colon(product(pt, I), I) == pt)};
    });
    run_check(rep, "symbolic_equals_ordinary", gp, [&] {
      return std::pair{1LL, as_flag(symbolic_power(I, t) == power(I, t))};
    });
    if (t >= 2) {
      run_check(rep, "ini_power_commutes", gp, [&] {
        if (p.num_vars() > opt.max_groebner_vars) throw Error(ErrorCode::TooLarge, "grid above the Groebner size limit");
        return std::pair{1LL, as_flag(ini_power_commutes(p, t, opt.groebner))};
      });
    }

    if (!seen.insert({m, n}).second) continue;
    const GridPoint mn{m, n, 0};
    Graph h = build_H(p);
    run_check(rep, "match", mn, [&] { return std::pair{match_formula(m, n), (long long)max_matching(h).size()}; });
    run_check(rep, "chordal_bipartite", mn, [&] {
      bool ok = true;
      for (const auto& c : chordless_cycles(h)) ok = ok && c.size() == 4;
      return std::pair{1LL, as_flag(ok)};
    });
    run_check(rep, "cochord_peo", mn, [&] {
      long long valid = 0;
      for (const auto& piece : cochord_cover(p)) valid += verify_peo(complement(piece.subgraph), piece.order);
      return std::pair{cochord_bound(n), valid};
    });
    run_check(rep, "prime_decomposition", mn,
              [&] { return std::pair{1LL, as_flag(intersect_initial_components(p) == I)}; });
    run_check(rep, "ini_equals_edge_ideal", mn, [&] {
      if (p.num_vars() > opt.max_groebner_vars) throw Error(ErrorCode::TooLarge, "grid above the Groebner size limit");
      return std::pair{1LL, as_flag(lead_term_ideal(buchberger(path_ideal_generators(p), opt.groebner).basis) == I)};
    });
    run_check(rep, "sagbi_identities", mn, [&] {
      if (m > opt.max_sagbi_m || n > opt.max_sagbi_n) throw Error(ErrorCode::TooLarge, "grid above the identity sweep range");
      return std::pair{1LL, as_flag(verify_sagbi_identities(p).ok())};
    });
    run_check(rep, "cone_dimension", mn,
              [&] { return std::pair{analytic_spread(m, n), (long long)cone_dimension(edge_cone(p))}; });
    if (m >= 4) {
      run_check(rep, "a_inv_certificate", mn,
                [&] { return std::pair{a_inv_formula(m, n), (long long)a_invariant_certificate(p).value}; });
      run_check(rep, "a_inv_brute_force", mn, [&] {
        if (p.num_vars() > opt.max_brute_force_vars) throw Error(ErrorCode::TooLarge, "grid above the brute-force size limit");
        return std::pair{a_inv_formula(m, n), (long long)a_invariant_brute_force(p).value};
      });
      run_check(rep, "fiber_reg", mn, [&] {
        long long dim = cone_dimension(edge_cone(p));
        return std::pair{fiber_reg_formula(m, n), dim - a_invariant_certificate(p).value};
      });
    } else {
      // The fiber is a polynomial ring exactly when the edge vectors of H' are
      // linearly independent; the oracle reports 0 then and -1 otherwise.
      run_check(rep, "fiber_reg", mn, [&] {
        EdgeCone c = edge_cone(p);
        return std::pair{fiber_reg_formula(m, n),
                         cone_dimension(c) == static_cast<int>(c.generators.size()) ? 0LL : -1LL};
      });
    }
  }
  std::stable_sort(rep.entries.begin(), rep.entries.end(),
                   [](const auto& a, const auto& b) { return a.params < b.params; });
  return rep;
}

/// Aligned plain-text rendering of a report.
inline std::string render_table(const VerificationReport& rep, bool timings = false) {
  std::vector<std::vector<std::string>> rows{{"m", "n", "t", "check", "formula", "oracle", "status"}};
  if (timings) rows[0].push_back("seconds");
  for (const auto& e : rep.entries) {
    std::vector<std::string> r{std::to_string(e.params.m), std::to_string(e.params.n),
                               e.params.t ? std::to_string(e.params.t) : "-", e.check, std::to_string(e.formula),
                               std::to_string(e.oracle), to_string(e.status)};
    if (timings) {
      std::ostringstream s;
      s.setf(std::ios::fixed);
      s.precision(3);
      s << e.seconds;
      r.push_back(s.str());
    }
    rows.push_back(std::move(r));
  }
  std::vector<std::size_t> width(rows[0].size(), 0);
  for (const auto& r : rows)
    for (std::size_t k = 0; k < r.size(); ++k) width[k] = std::max(width[k], r[k].size());
  std::ostringstream out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t k = 0; k < r.size(); ++k) {
      std::string cell = r[k];
      if (k + 1 < r.size()) cell.resize(width[k], ' ');
      line += (k ? "  " : "") + cell;
    }
    out << line << "\n";
  }
  return out.str();
}

}  // namespace gbe
