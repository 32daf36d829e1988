#pragma once

// Independent brute-force oracles shared by the test suites. They follow the
// textbook definitions directly and avoid the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <map>
#include <gmpxx.h>
#include <vector>

#include "gbe/graph.hpp"
#include "gbe/monomial.hpp"

namespace oracle {

using gbe::Graph;

/// Largest set of pairwise disjoint edges, by trying every edge subset.
inline int brute_force_matching(const Graph& g) {
  const auto& e = g.edges();
  const int k = static_cast<int>(e.size());
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << k); ++s) {
    std::uint64_t used = 0;
    bool ok = true;
    int size = 0;
    for (int i = 0; i < k && ok; ++i) {
      if (!((s >> i) & 1u)) continue;
      std::uint64_t bits = (1ull << e[i].first) | (1ull << e[i].second);
      ok = (used & bits) == 0;
      used |= bits;
      ++size;
    }
    if (ok) best = std::max(best, size);
  }
  return best;
}

/// Maximum matching by exhaustive search: the lowest free vertex is either
/// left unmatched or matched to each free neighbour in turn. Memoized on the
/// set of used vertices, which stays small for graphs with short edges.
inline int matching_by_search(const Graph& g) {
  const int n = g.num_vertices();
  std::map<std::pair<int, std::uint64_t>, int> memo;
  auto rec = [&](auto&& self, int v, std::uint64_t used) -> int {
    while (v < n && ((used >> v) & 1u)) ++v;
    if (v == n) return 0;
    auto key = std::make_pair(v, used);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int best = self(self, v + 1, used);
    for (int w : g.neighbors(v))
      if (w > v && !((used >> w) & 1u)) best = std::max(best, 1 + self(self, v + 1, used | (1ull << w)));
    memo[key] = best;
    return best;
  };
  return rec(rec, 0, 0);
}

/// Whether the vertex subset s induces a single cycle.
inline bool induces_cycle(const Graph& g, std::uint32_t s) {
  int count = __builtin_popcount(s);
  if (count < 3) return false;
  int first = __builtin_ctz(s);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (!((s >> v) & 1u)) continue;
    int deg = 0;
    for (int w : g.neighbors(v))
      if ((s >> w) & 1u) ++deg;
    if (deg != 2) return false;
  }
  std::uint32_t seen = 1u << first;
  std::vector<int> stack{first};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v))
      if (((s >> w) & 1u) && !((seen >> w) & 1u)) {
        seen |= 1u << w;
        stack.push_back(w);
      }
  }
  return seen == s;
}

inline int count_induced_cycles(const Graph& g, int min_len = 3) {
  int c = 0;
  for (std::uint32_t s = 0; s < (1u << g.num_vertices()); ++s)
    if (__builtin_popcount(s) >= min_len && induces_cycle(g, s)) ++c;
  return c;
}

inline bool has_induced_cycle_at_least(const Graph& g, int len) { return count_induced_cycles(g, len) > 0; }

/// Membership test for I = (gens): some generator divides m.
inline bool in_ideal(const std::vector<gbe::Monomial>& gens, const gbe::Monomial& m) {
  return std::any_of(gens.begin(), gens.end(), [&](const gbe::Monomial& g) { return g.divides(m); });
}

/// All monomials of total degree d in k variables.
inline std::vector<gbe::Monomial> monomials_of_degree(int k, int d) {
  std::vector<gbe::Monomial> out;
  std::vector<int> e(k, 0);
  auto rec = [&](auto&& self, int v, int left) -> void {
    if (v == k - 1) {
      e[v] = left;
      out.emplace_back(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[v] = a;
      self(self, v + 1, left - a);
    }
  };
  if (k > 0) rec(rec, 0, d);
  return out;
}

/// Minimal vertex covers of a hypergraph on k vertices, by subset enumeration.
inline std::vector<std::vector<int>> brute_force_min_covers(int k, const std::vector<std::vector<int>>& edges) {
  std::vector<std::uint32_t> covers;
  for (std::uint32_t s = 0; s < (1u << k); ++s) {
    bool ok = std::all_of(edges.begin(), edges.end(), [&](const std::vector<int>& e) {
      return std::any_of(e.begin(), e.end(), [&](int v) { return (s >> v) & 1u; });
    });
    if (ok) covers.push_back(s);
  }
  std::vector<std::vector<int>> out;
  for (auto s : covers) {
    bool minimal = std::none_of(covers.begin(), covers.end(), [&](std::uint32_t t) { return t != s && (t & s) == t; });
    if (!minimal) continue;
    std::vector<int> v;
    for (int i = 0; i < k; ++i)
      if ((s >> i) & 1u) v.push_back(i);
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Rank of a dense rational matrix by plain Gaussian elimination.
inline int dense_rank(std::vector<std::vector<mpq_class>> a) {
  int r = 0;
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = r;
    while (sel < rows && a[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[r], a[sel]);
    for (int i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      mpq_class f = a[i][c] / a[r][c];
      for (int k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  return r;
}

/// beta_{i,b}(S/I) from the order complex of the open interval (1, b) of the
/// lcm lattice: beta_{i,b}(S/I) = dim H~_{i-2}. `lattice` lists the lattice
/// elements other than 1. Indexed by i, trailing zeros trimmed.
inline std::vector<long long> interval_betti(const std::vector<gbe::Monomial>& lattice, const gbe::Monomial& b) {
  std::vector<gbe::Monomial> below;
  for (const auto& x : lattice)
    if (x != b && x.divides(b)) below.push_back(x);
  std::sort(below.begin(), below.end(), [](const auto& x, const auto& y) { return x.degree() < y.degree(); });
  const int n = static_cast<int>(below.size());
  // chains[k] = chains with k elements, each increasing in divisibility.
  std::vector<std::vector<std::vector<int>>> chains(1, {{}});
  auto extend = [&](auto&& self, std::vector<int>& c) -> void {
    for (int y = c.empty() ? 0 : c.back() + 1; y < n; ++y) {
      if (!c.empty() && !(below[c.back()].divides(below[y]) && below[c.back()] != below[y])) continue;
      c.push_back(y);
      if (chains.size() <= c.size()) chains.resize(c.size() + 1);
      chains[c.size()].push_back(c);
      self(self, c);
      c.pop_back();
    }
  };
  std::vector<int> start;
  extend(extend, start);
  const int top = static_cast<int>(chains.size()) - 1;
  std::vector<long long> rk(top + 2, 0);
  for (int k = 1; k <= top; ++k) {
    std::map<std::vector<int>, int> index;
    for (std::size_t a = 0; a < chains[k - 1].size(); ++a) index[chains[k - 1][a]] = static_cast<int>(a);
    std::vector<std::vector<mpq_class>> mat(chains[k].size(), std::vector<mpq_class>(chains[k - 1].size(), 0));
    for (std::size_t r = 0; r < chains[k].size(); ++r)
      for (int drop = 0; drop < k; ++drop) {
        std::vector<int> f = chains[k][r];
        f.erase(f.begin() + drop);
        mat[r][index.at(f)] = (drop % 2 ? -1 : 1);
      }
    rk[k] = dense_rank(std::move(mat));
  }
  std::vector<long long> beta(top + 2, 0);
  for (int k = 0; k <= top; ++k) beta[k + 1] = static_cast<long long>(chains[k].size()) - rk[k] - rk[k + 1];
  while (!beta.empty() && beta.back() == 0) beta.pop_back();
  return beta;
}

/// Whether v (row-major over the m x n grid, integer entries) is a nonnegative
/// combination of the edge vectors of H'. Since H' is bipartite between odd
/// and even columns this is a transportation problem, solved by max flow.
inline bool in_edge_cone(int m, int n, const std::vector<long long>& v) {
  auto idx = [&](int i, int j) { return (i - 1) * n + (j - 1); };
  if (v[idx(1, n)] != 0 || v[idx(m, 1)] != 0) return false;
  long long odd = 0, even = 0;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) {
      if (v[idx(i, j)] < 0) return false;
      (j % 2 ? odd : even) += v[idx(i, j)];
    }
  if (odd != even) return false;
  const int N = m * n + 2, src = m * n, snk = m * n + 1;
  const long long inf = odd + 1;
  std::vector<std::vector<long long>> cap(N, std::vector<long long>(N, 0));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j % 2) cap[src][idx(i, j)] = v[idx(i, j)];
      else cap[idx(i, j)][snk] = v[idx(i, j)];
    }
  auto corner = [&](int i, int j) { return (i == 1 && j == n) || (i == m && j == 1); };
  for (int j = 1; j < n; ++j)
    for (int i = 1; i <= m; ++i)
      for (int k = i + 1; k <= m; ++k) {
        if (corner(i, j) || corner(k, j + 1)) continue;
        int a = idx(i, j), b = idx(k, j + 1);
        if (j % 2) cap[a][b] = inf;
        else cap[b][a] = inf;
      }
  long long flow = 0;
  while (true) {
    std::vector<int> prev(N, -1);
    prev[src] = src;
    std::vector<int> queue{src};
    for (std::size_t q = 0; q < queue.size() && prev[snk] < 0; ++q)
      for (int w = 0; w < N; ++w)
        if (prev[w] < 0 && cap[queue[q]][w] > 0) {
          prev[w] = queue[q];
          queue.push_back(w);
        }
    if (prev[snk] < 0) break;
    long long aug = inf;
    for (int w = snk; w != src; w = prev[w]) aug = std::min(aug, cap[prev[w]][w]);
    for (int w = snk; w != src; w = prev[w]) {
      cap[prev[w]][w] -= aug;
      cap[w][prev[w]] += aug;
    }
    flow += aug;
  }
  return flow == odd;
}

/// Relative interior membership for integer v: v lies in the relative
/// interior exactly when every edge can carry positive weight, and by total
/// unimodularity that means v - g_e stays in the cone for every edge e.
inline bool in_edge_cone_interior(int m, int n, const std::vector<long long>& v) {
  if (!in_edge_cone(m, n, v)) return false;
  auto idx = [&](int i, int j) { return (i - 1) * n + (j - 1); };
  auto corner = [&](int i, int j) { return (i == 1 && j == n) || (i == m && j == 1); };
  for (int j = 1; j < n; ++j)
    for (int i = 1; i <= m; ++i)
      for (int k = i + 1; k <= m; ++k) {
        if (corner(i, j) || corner(k, j + 1)) continue;
        auto w = v;
        --w[idx(i, j)];
        --w[idx(k, j + 1)];
        if (!in_edge_cone(m, n, w)) return false;
      }
  return true;
}

/// Smallest |v|/2 over integer points in the relative interior, by
/// enumerating edge multisets of increasing size.
inline int min_interior_half_norm(int m, int n, int limit) {
  std::vector<std::pair<int, int>> edges;  // variable pairs
  auto idx = [&](int i, int j) { return (i - 1) * n + (j - 1); };
  auto corner = [&](int i, int j) { return (i == 1 && j == n) || (i == m && j == 1); };
  for (int j = 1; j < n; ++j)
    for (int i = 1; i <= m; ++i)
      for (int k = i + 1; k <= m; ++k)
        if (!corner(i, j) && !corner(k, j + 1)) edges.emplace_back(idx(i, j), idx(k, j + 1));
  std::vector<std::vector<long long>> level{std::vector<long long>(m * n, 0)};
  for (int k = 1; k <= limit; ++k) {
    std::vector<std::vector<long long>> next;
    for (const auto& v : level)
      for (const auto& [a, b] : edges) {
        auto w = v;
        ++w[a];
        ++w[b];
        next.push_back(std::move(w));
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    for (const auto& v : next)
      if (in_edge_cone_interior(m, n, v)) return k;
    level = std::move(next);
  }
  return -1;
}

}  // namespace oracle
