#pragma once

// The concrete objects attached to the m x n grid of variables x_{i,j}: the
// bipartite graph H whose edge ideal is the initial ideal of J_{K_m,P_n}, its
// zone subgraphs H_k, the trimmed graph H' and the certificates built on it.
//
// Grid coordinates are 1-based throughout: row i in [m], column j in [n].

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gbe/error.hpp"
#include "gbe/graph.hpp"

namespace gbe {

struct GridParams {
  int m = 2;
  int n = 2;

  GridParams() = default;
  GridParams(int rows, int cols) : m(rows), n(cols) {
    if (m < 2 || n < 2) throw Error(ErrorCode::BadParams, "grid needs m >= 2 and n >= 2");
  }

  int num_vars() const { return m * n; }
  /// Variable index of x_{i,j}; index 0 is the largest variable under tau.
  int var(int i, int j) const { return (i - 1) * n + (j - 1); }
  int row_of(int var) const { return var / n + 1; }
  int col_of(int var) const { return var % n + 1; }

  auto operator<=>(const GridParams&) const = default;
};

/// m x n integer matrix with 1-based access; holds A, u-hat, degree matrices.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols, long long fill = 0)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long long& operator()(int i, int j) { return data_[index(i, j)]; }
  long long operator()(int i, int j) const { return data_[index(i, j)]; }
  /// Row-major flat view, matching the variable order of GridParams::var.
  const std::vector<long long>& flat() const { return data_; }

  long long total() const {
    long long s = 0;
    for (auto v : data_) s += v;
    return s;
  }

  bool operator==(const IntMatrix&) const = default;

  std::vector<std::vector<long long>> to_rows() const {
    std::vector<std::vector<long long>> out(rows_, std::vector<long long>(cols_));
    for (int i = 1; i <= rows_; ++i)
      for (int j = 1; j <= cols_; ++j) out[i - 1][j - 1] = (*this)(i, j);
    return out;
  }

 private:
  std::size_t index(int i, int j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_) throw Error(ErrorCode::BadParams, "matrix index out of range");
    return static_cast<std::size_t>(i - 1) * cols_ + (j - 1);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<long long> data_;
};

using LabeledEdge = std::pair<Vertex, Vertex>;

inline Vertex xv(int i, int j) { return Vertex::grid(i, j); }

/// Grid vertices in the tau order x_{1,1} > x_{1,2} > ... > x_{m,n}.
inline std::vector<Vertex> grid_vertices(const GridParams& p) {
  std::vector<Vertex> v;
  for (int i = 1; i <= p.m; ++i)
    for (int j = 1; j <= p.n; ++j) v.push_back(xv(i, j));
  return v;
}

inline bool is_H_edge(const GridParams& p, const Vertex& a, const Vertex& b) {
  const Vertex& lo = a.col < b.col ? a : b;
  const Vertex& hi = a.col < b.col ? b : a;
  return lo.is_grid() && hi.is_grid() && hi.col == lo.col + 1 && lo.row < hi.row && lo.row >= 1 &&
         hi.row <= p.m && lo.col >= 1 && hi.col <= p.n;
}

/// H: edges {x_{i,j}, x_{i',j+1}} for i < i'.
inline Graph build_H(const GridParams& p) {
  std::vector<LabeledEdge> e;
  for (int j = 1; j < p.n; ++j)
    for (int i = 1; i <= p.m; ++i)
      for (int i2 = i + 1; i2 <= p.m; ++i2) e.emplace_back(xv(i, j), xv(i2, j + 1));
  return Graph(grid_vertices(p), e);
}

/// H_k: H induced on columns k and k+1.
inline Graph build_Hk(const GridParams& p, int k) {
  if (k < 1 || k > p.n - 1) throw Error(ErrorCode::BadZone, "zone index " + std::to_string(k));
  std::vector<Vertex> keep;
  for (int i = 1; i <= p.m; ++i) {
    keep.push_back(xv(i, k));
    keep.push_back(xv(i, k + 1));
  }
  return induced_subgraph(build_H(p), keep);
}

/// H': H without its two isolated corners x_{m,1} and x_{1,n}.
inline Graph build_Hprime(const GridParams& p) { return remove_vertices(build_H(p), {xv(p.m, 1), xv(1, p.n)}); }

inline bool is_Hprime_edge(const GridParams& p, const Vertex& a, const Vertex& b) {
  auto corner = [&](const Vertex& v) { return v == xv(p.m, 1) || v == xv(1, p.n); };
  return is_H_edge(p, a, b) && !corner(a) && !corner(b);
}

/// Edges {x_{i,j},x_{i+1,j+1}} (j odd) and {x_{1,j},x_{m,j+1}} (j even), as a
/// matching of build_H(p).
inline Matching canonical_matching(const GridParams& p) {
  Graph h = build_H(p);
  Matching mt;
  for (int j = 1; j < p.n; ++j) {
    if (j % 2 == 1) {
      for (int i = 1; i < p.m; ++i) mt.edges.push_back(make_edge(h.index_of(xv(i, j)), h.index_of(xv(i + 1, j + 1))));
    } else {
      mt.edges.push_back(make_edge(h.index_of(xv(1, j)), h.index_of(xv(p.m, j + 1))));
    }
  }
  std::sort(mt.edges.begin(), mt.edges.end());
  return mt;
}

struct CochordPiece {
  int zone = 0;
  Graph subgraph;           // H_k
  EliminationOrder order;   // PEO of the complement of H_k (indices of subgraph)
};

/// The n-1 co-chordal pieces H_k with the column-major PEO of each complement.
inline std::vector<CochordPiece> cochord_cover(const GridParams& p) {
  std::vector<CochordPiece> out;
  for (int k = 1; k < p.n; ++k) {
    CochordPiece piece{k, build_Hk(p, k), {}};
    for (int col : {k, k + 1})
      for (int i = 1; i <= p.m; ++i) piece.order.order.push_back(piece.subgraph.index_of(xv(i, col)));
    if (!verify_peo(complement(piece.subgraph), piece.order))
      throw Error(ErrorCode::PEOFailure, "zone " + std::to_string(k));
    out.push_back(std::move(piece));
  }
  return out;
}

/// A = (a_{i,j}): 0 at the two corners, +1 in odd columns, -1 in even ones.
inline IntMatrix matrix_A(const GridParams& p) {
  IntMatrix a(p.m, p.n);
  for (int i = 1; i <= p.m; ++i)
    for (int j = 1; j <= p.n; ++j) a(i, j) = (j % 2 == 1) ? 1 : -1;
  a(1, p.n) = 0;
  a(p.m, 1) = 0;
  return a;
}

inline void require_m4(const GridParams& p, const char* what) {
  if (p.m < 4) throw Error(ErrorCode::BadParams, std::string(what) + " needs m >= 4");
}

/// The extremal lattice point u-hat of the shift polyhedron.
inline IntMatrix vector_u_hat(const GridParams& p) {
  require_m4(p, "vector_u_hat");
  IntMatrix u(p.m, p.n, 1);
  u(1, p.n) = 0;
  u(p.m, 1) = 0;
  u(1, p.n - 1) = 2;
  u(p.m, 2) = (p.n % 2 == 0) ? 2 : p.m - 2;
  return u;
}

/// Degree matrix of a subgraph of H' with the two corner entries forced to 0.
inline IntMatrix degree_matrix(const Graph& sub, const GridParams& p) {
  IntMatrix d(p.m, p.n);
  for (const auto& [a, b] : sub.labeled_edges()) {
    if (!is_Hprime_edge(p, a, b)) throw Error(ErrorCode::NotSubgraph, "edge " + a.str() + " " + b.str() + " not in H'");
    ++d(a.row, a.col);
    ++d(b.row, b.col);
  }
  d(1, p.n) = 0;
  d(p.m, 1) = 0;
  return d;
}

namespace detail {

/// Zones with two long edges: odd zones for odd n, even zones for even n.
inline bool long_zone(const GridParams& p, int j) { return (j + p.n) % 2 == 0; }

inline void replace_edge(std::vector<LabeledEdge>& edges, const LabeledEdge& from, const LabeledEdge& to) {
  auto it = std::find(edges.begin(), edges.end(), from);
  if (it == edges.end())
    throw Error(ErrorCode::CertificateInvalid, "u-type construction lost edge " + from.first.str() + " " + from.second.str());
  *it = to;
}

inline std::vector<LabeledEdge> u_type_edges(const GridParams& p, int variant) {
  const int m = p.m;
  std::vector<LabeledEdge> e;
  for (int j = 1; j < p.n; ++j) {
    if (long_zone(p, j)) {
      if (variant == 2) {
        e.emplace_back(xv(1, j), xv(m, j + 1));
        e.emplace_back(xv(2, j), xv(m - 1, j + 1));
      } else {
        e.emplace_back(xv(1, j), xv(m - 1, j + 1));
        e.emplace_back(xv(2, j), xv(m, j + 1));
      }
    } else if (variant == 2) {
      e.emplace_back(xv(1, j), xv(m, j + 1));
      for (int i = 2; i <= m - 2; ++i) e.emplace_back(xv(i, j), xv(i + 1, j + 1));
    } else {
      for (int i = 1; i <= m - 2; ++i) e.emplace_back(xv(i, j), xv(i + 2, j + 1));
    }
  }
  // Fan into x_{m,2}: rows 3..m-1 when zone 1 is long, only row m-1 otherwise.
  for (int i = long_zone(p, 1) ? 3 : m - 1; i <= m - 1; ++i) e.emplace_back(xv(i, 1), xv(m, 2));
  e.emplace_back(xv(1, p.n - 1), xv(2, p.n));

  if (variant == 3) {
    for (int j = 1; j <= p.n - 2; ++j) {
      if (long_zone(p, j)) {
        replace_edge(e, {xv(1, j), xv(m - 1, j + 1)}, {xv(1, j), xv(m - 2, j + 1)});
        replace_edge(e, {xv(m - 2, j + 1), xv(m, j + 2)}, {xv(m - 1, j + 1), xv(m, j + 2)});
      } else {
        replace_edge(e, {xv(1, j), xv(3, j + 1)}, {xv(1, j), xv(2, j + 1)});
        replace_edge(e, {xv(2, j + 1), xv(m, j + 2)}, {xv(3, j + 1), xv(m, j + 2)});
      }
    }
  }
  return e;
}

}  // namespace detail

struct UTypeSubgraphs {
  Graph h1, h2, h3;

  /// H-hat: the union of the three edge sets, on the vertices of H'.
  Graph combined() const {
    std::set<LabeledEdge> all;
    for (const Graph* g : {&h1, &h2, &h3})
      for (const auto& e : g->labeled_edges()) all.insert(e);
    return Graph(h1.vertices(), std::vector<LabeledEdge>(all.begin(), all.end()));
  }
};

/// Three subgraphs of H' whose degree matrices all equal u-hat. For odd n the
/// zone-by-zone recipe is explicit; for even n the same recipe is applied
/// with the roles of odd and even zones exchanged.
inline UTypeSubgraphs u_type_subgraphs(const GridParams& p) {
  require_m4(p, "u_type_subgraphs");
  Graph hp = build_Hprime(p);
  return {edge_subgraph(hp, detail::u_type_edges(p, 1)), edge_subgraph(hp, detail::u_type_edges(p, 2)),
          edge_subgraph(hp, detail::u_type_edges(p, 3))};
}

/// delta^+(A) in H' oriented from odd columns to even columns.
struct DirectedCut {
  std::vector<Vertex> source_set;
  std::vector<LabeledEdge> edges;  // (tail in odd column, head in even column)
};

/// Oriented edges of H' as (tail, head) with the tail in an odd column.
inline std::vector<LabeledEdge> oriented_Hprime_edges(const GridParams& p) {
  std::vector<LabeledEdge> out;
  for (const auto& [a, b] : build_Hprime(p).labeled_edges()) {
    if (a.col % 2 == 1) out.emplace_back(a, b);
    else out.emplace_back(b, a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<LabeledEdge> out_edges(const GridParams& p, const std::vector<Vertex>& source) {
  std::set<Vertex> in(source.begin(), source.end());
  std::vector<LabeledEdge> out;
  for (const auto& [t, h] : oriented_Hprime_edges(p))
    if (in.count(t) && !in.count(h)) out.emplace_back(t, h);
  return out;
}

inline DirectedCut make_cut(const GridParams& p, std::vector<Vertex> source) {
  DirectedCut c{std::move(source), {}};
  c.edges = out_edges(p, c.source_set);
  return c;
}

/// Stars delta^+({u}) over the odd-column vertices of H'; for even n the star
/// of x_{1,n-1} is split into delta^+({x_{1,n-1}, x_{2,n}}) and
/// delta^+(V' \ {x_{2,n}}).
inline std::vector<DirectedCut> directed_cut_family(const GridParams& p) {
  require_m4(p, "directed_cut_family");
  Graph hp = build_Hprime(p);
  std::vector<DirectedCut> out;
  const Vertex u1 = xv(1, p.n - 1), u2 = xv(2, p.n);
  for (const auto& v : hp.vertices()) {
    if (v.col % 2 == 0) continue;
    if (p.n % 2 == 0 && v == u1) {
      out.push_back(make_cut(p, {u1, u2}));
      std::vector<Vertex> rest;
      for (const auto& w : hp.vertices())
        if (w != u2) rest.push_back(w);
      out.push_back(make_cut(p, rest));
    } else {
      out.push_back(make_cut(p, {v}));
    }
  }
  return out;
}

}  // namespace gbe
