#pragma once

// Simple undirected graphs with labeled vertices and the combinatorial
// routines the algebraic modules consume: bipartition, components, bipartite
// matching, chordality, chordless cycles and the cut point property.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gbe/error.hpp"

namespace gbe {

/// Vertex label. Grid vertices x_{i,j} use row = i >= 1, col = j; plain
/// vertices (e.g. the path P_n on [n]) use row = 0 and col = the label.
struct Vertex {
  int row = 0;
  int col = 0;

  static Vertex plain(int label) { return Vertex{0, label}; }
  static Vertex grid(int i, int j) { return Vertex{i, j}; }

  bool is_grid() const { return row != 0; }
  auto operator<=>(const Vertex&) const = default;

  std::string str() const {
    return is_grid() ? std::to_string(row) + "," + std::to_string(col) : std::to_string(col);
  }

  static Vertex parse(const std::string& s) {
    try {
      auto comma = s.find(',');
      std::size_t used = 0;
      if (comma == std::string::npos) {
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return plain(v);
      }
      std::string a = s.substr(0, comma), b = s.substr(comma + 1);
      int i = std::stoi(a, &used);
      if (used != a.size()) throw std::invalid_argument(s);
      int j = std::stoi(b, &used);
      if (used != b.size()) throw std::invalid_argument(s);
      if (i == 0) throw std::invalid_argument(s);
      return grid(i, j);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "bad vertex label '" + s + "'");
    }
  }
};

/// Edge as a pair of vertex indices with first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

class Graph {
 public:
  Graph() = default;

  /// Vertices keep the given order; edges are given by label.
  Graph(std::vector<Vertex> vertices, const std::vector<std::pair<Vertex, Vertex>>& edges)
      : vertices_(std::move(vertices)) {
    for (int i = 0; i < static_cast<int>(vertices_.size()); ++i) {
      if (!index_.emplace(vertices_[i], i).second)
        throw Error(ErrorCode::InvalidGraph, "duplicate vertex " + vertices_[i].str());
    }
    adj_.assign(vertices_.size(), {});
    for (const auto& [a, b] : edges) add_edge_checked(index_of(a), index_of(b));
    finish();
  }

  /// Index-based constructor used internally by graph transformations.
  Graph(std::vector<Vertex> vertices, const std::vector<Edge>& edges) : vertices_(std::move(vertices)) {
    for (int i = 0; i < static_cast<int>(vertices_.size()); ++i) {
      if (!index_.emplace(vertices_[i], i).second)
        throw Error(ErrorCode::InvalidGraph, "duplicate vertex " + vertices_[i].str());
    }
    adj_.assign(vertices_.size(), {});
    for (const auto& [u, v] : edges) {
      if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices())
        throw Error(ErrorCode::UnknownVertex, "edge endpoint out of range");
      add_edge_checked(u, v);
    }
    finish();
  }

  static Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(plain_vertices(n), e);
  }

  static Graph cycle(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.push_back(make_edge(i, (i + 1) % n));
    return Graph(plain_vertices(n), e);
  }

  static Graph complete(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(plain_vertices(n), e);
  }

  static Graph empty(int n) { return Graph(plain_vertices(n), std::vector<Edge>{}); }

  static std::vector<Vertex> plain_vertices(int n) {
    std::vector<Vertex> v;
    for (int i = 1; i <= n; ++i) v.push_back(Vertex::plain(i));
    return v;
  }

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Vertex& label(int v) const { return vertices_.at(v); }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

  bool has_vertex(const Vertex& v) const { return index_.count(v) != 0; }

  int index_of(const Vertex& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) throw Error(ErrorCode::UnknownVertex, "vertex " + v.str());
    return it->second;
  }

  bool adjacent(int u, int v) const { return std::binary_search(adj_[u].begin(), adj_[u].end(), v); }

  bool has_edge(const Vertex& a, const Vertex& b) const {
    if (!has_vertex(a) || !has_vertex(b)) return false;
    return adjacent(index_of(a), index_of(b));
  }

  /// Edges as label pairs, in edge order.
  std::vector<std::pair<Vertex, Vertex>> labeled_edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const auto& [u, v] : edges_) out.emplace_back(vertices_[u], vertices_[v]);
    return out;
  }

  bool operator==(const Graph& o) const { return vertices_ == o.vertices_ && edges_ == o.edges_; }

 private:
  void add_edge_checked(int u, int v) {
    if (u == v) throw Error(ErrorCode::InvalidGraph, "loop at " + vertices_[u].str());
    Edge e = make_edge(u, v);
    if (std::find(adj_[u].begin(), adj_[u].end(), v) != adj_[u].end())
      throw Error(ErrorCode::InvalidGraph, "multi-edge " + vertices_[u].str() + " " + vertices_[v].str());
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    edges_.push_back(e);
  }

  void finish() {
    for (auto& a : adj_) std::sort(a.begin(), a.end());
    std::sort(edges_.begin(), edges_.end());
  }

  std::vector<Vertex> vertices_;
  std::map<Vertex, int> index_;
  std::vector<std::vector<int>> adj_;
  std::vector<Edge> edges_;
};

/// Set of pairwise vertex-disjoint edges of a host graph (vertex indices).
struct Matching {
  std::vector<Edge> edges;
  int size() const { return static_cast<int>(edges.size()); }
};

/// A permutation of the vertex indices of a graph.
struct EliminationOrder {
  std::vector<int> order;
};

// ---------------------------------------------------------------------------
// Set-theoretic constructions

inline Graph complement(const Graph& g) {
  std::vector<Edge> e;
  for (int u = 0; u < g.num_vertices(); ++u)
    for (int v = u + 1; v < g.num_vertices(); ++v)
      if (!g.adjacent(u, v)) e.emplace_back(u, v);
  return Graph(g.vertices(), e);
}

/// Induced subgraph on the given labels; vertex order follows g.
inline Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep) {
  std::vector<char> in(g.num_vertices(), 0);
  for (const auto& v : keep) in[g.index_of(v)] = 1;
  std::vector<int> new_index(g.num_vertices(), -1);
  std::vector<Vertex> verts;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (in[v]) {
      new_index[v] = static_cast<int>(verts.size());
      verts.push_back(g.label(v));
    }
  }
  std::vector<Edge> e;
  for (const auto& [u, v] : g.edges())
    if (in[u] && in[v]) e.emplace_back(new_index[u], new_index[v]);
  return Graph(std::move(verts), e);
}

inline Graph remove_vertices(const Graph& g, const std::vector<Vertex>& drop) {
  std::vector<char> out(g.num_vertices(), 0);
  for (const auto& v : drop) out[g.index_of(v)] = 1;
  std::vector<Vertex> keep;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (!out[v]) keep.push_back(g.label(v));
  return induced_subgraph(g, keep);
}

/// Subgraph of g spanned by the given edges (all vertices of g retained).
inline Graph edge_subgraph(const Graph& g, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  for (const auto& [a, b] : edges)
    if (!g.has_edge(a, b)) throw Error(ErrorCode::NotSubgraph, "edge " + a.str() + " " + b.str());
  return Graph(g.vertices(), edges);
}

// ---------------------------------------------------------------------------
// Traversals

/// Components as lists of vertex indices; components ordered by least member.
inline std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<int> comp(g.num_vertices(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.num_vertices(); ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (int w : g.neighbors(members[k])) {
        if (comp[w] == -1) {
          comp[w] = comp[s];
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

inline int num_components(const Graph& g) { return static_cast<int>(connected_components(g).size()); }

inline bool is_connected(const Graph& g) { return g.num_vertices() == 0 || num_components(g) == 1; }

/// Two-colouring with the least vertex of each component on side one.
inline std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g) {
  std::vector<int> color(g.num_vertices(), -1);
  for (int s = 0; s < g.num_vertices(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<int> queue{s};
    for (std::size_t k = 0; k < queue.size(); ++k) {
      int u = queue[k];
      for (int w : g.neighbors(u)) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  std::pair<std::vector<int>, std::vector<int>> parts;
  for (int v = 0; v < g.num_vertices(); ++v) (color[v] == 0 ? parts.first : parts.second).push_back(v);
  return parts;
}

inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

// ---------------------------------------------------------------------------
// Matching

namespace detail {

inline bool augment(const Graph& g, int u, std::vector<char>& seen, std::vector<int>& mate) {
  for (int w : g.neighbors(u)) {
    if (seen[w]) continue;
    seen[w] = 1;
    if (mate[w] == -1 || augment(g, mate[w], seen, mate)) {
      mate[w] = u;
      mate[u] = w;
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// Maximum-cardinality matching of a bipartite graph by repeated augmenting
/// paths from the first side of the bipartition.
inline Matching max_matching(const Graph& g) {
  auto parts = bipartition(g);
  if (!parts) throw Error(ErrorCode::NonBipartite, "max_matching needs a bipartite graph");
  std::vector<int> mate(g.num_vertices(), -1);
  for (int u : parts->first) {
    std::vector<char> seen(g.num_vertices(), 0);
    detail::augment(g, u, seen, mate);
  }
  Matching m;
  for (int u : parts->first)
    if (mate[u] != -1) m.edges.push_back(make_edge(u, mate[u]));
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

inline bool is_matching(const Graph& g, const Matching& m) {
  std::vector<char> used(g.num_vertices(), 0);
  for (const auto& [u, v] : m.edges) {
    if (u < 0 || v < 0 || u >= g.num_vertices() || v >= g.num_vertices()) return false;
    if (!g.adjacent(u, v) || used[u] || used[v]) return false;
    used[u] = used[v] = 1;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Chordality

/// Later neighbours of each vertex must form a clique.
inline bool verify_peo(const Graph& g, const EliminationOrder& ord) {
  if (static_cast<int>(ord.order.size()) != g.num_vertices())
    throw Error(ErrorCode::LengthMismatch, "order length differs from vertex count");
  std::vector<int> pos(g.num_vertices(), -1);
  for (int k = 0; k < static_cast<int>(ord.order.size()); ++k) {
    int v = ord.order[k];
    if (v < 0 || v >= g.num_vertices() || pos[v] != -1)
      throw Error(ErrorCode::LengthMismatch, "order is not a permutation");
    pos[v] = k;
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    std::vector<int> later;
    for (int w : g.neighbors(v))
      if (pos[w] > pos[v]) later.push_back(w);
    for (std::size_t a = 0; a < later.size(); ++a)
      for (std::size_t b = a + 1; b < later.size(); ++b)
        if (!g.adjacent(later[a], later[b])) return false;
  }
  return true;
}

/// Perfect elimination order via maximum cardinality search, or nullopt when
/// the graph is not chordal.
inline std::optional<EliminationOrder> is_chordal(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> weight(n, 0);
  std::vector<char> done(n, 0);
  std::vector<int> visit;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!done[v] && (best == -1 || weight[v] > weight[best])) best = v;
    done[best] = 1;
    visit.push_back(best);
    for (int w : g.neighbors(best))
      if (!done[w]) ++weight[w];
  }
  EliminationOrder ord{std::vector<int>(visit.rbegin(), visit.rend())};
  if (!verify_peo(g, ord)) return std::nullopt;
  return ord;
}

/// Chordless cycles of length <= max_len, each once, as vertex-index lists
/// starting at the least index and continuing towards the smaller neighbour.
inline std::vector<std::vector<int>> chordless_cycles(const Graph& g, int max_len = -1) {
  if (max_len < 0) max_len = 2 * g.num_vertices();
  if (max_len < 3) throw Error(ErrorCode::BadParams, "max_len must be at least 3");
  std::vector<std::vector<int>> out;
  const int n = g.num_vertices();
  std::vector<int> path;
  std::vector<char> on_path(n, 0);

  // path = s, v1, ..., vk is an induced path with every vertex > s.
  auto extend = [&](auto&& self) -> void {
    const int s = path.front();
    const int last = path.back();
    const int len = static_cast<int>(path.size());
    for (int w : g.neighbors(last)) {
      if (w <= s || on_path[w]) continue;
      bool chord = false;
      for (int k = 1; k + 1 < len; ++k)
        if (g.adjacent(w, path[k])) {
          chord = true;
          break;
        }
      if (chord) continue;
      if (len >= 2 && g.adjacent(w, s)) {
        if (len + 1 <= max_len && path[1] < w) {
          auto cyc = path;
          cyc.push_back(w);
          out.push_back(std::move(cyc));
        }
        continue;
      }
      if (len + 1 >= max_len) continue;
      path.push_back(w);
      on_path[w] = 1;
      self(self);
      on_path[w] = 0;
      path.pop_back();
    }
  };

  for (int s = 0; s < n; ++s) {
    path = {s};
    on_path[s] = 1;
    extend(extend);
    on_path[s] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Cut point property

/// All A with the cut point property, including the empty set, as sorted
/// vertex-index lists in increasing bitmask order.
inline std::vector<std::vector<int>> cut_point_property_sets(const Graph& g) {
  const int n = g.num_vertices();
  if (n > 20) throw Error(ErrorCode::TooLarge, "cut point enumeration is limited to 20 vertices");

  auto components_without = [&](std::uint32_t removed) {
    std::vector<char> seen(n, 0);
    int count = 0;
    for (int s = 0; s < n; ++s) {
      if ((removed >> s) & 1u || seen[s]) continue;
      ++count;
      std::vector<int> stack{s};
      seen[s] = 1;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(u))
          if (!((removed >> w) & 1u) && !seen[w]) {
            seen[w] = 1;
            stack.push_back(w);
          }
      }
    }
    return count;
  };

  std::vector<std::vector<int>> out;
  for (std::uint32_t a = 0; a < (1u << n); ++a) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      if (!((a >> v) & 1u)) continue;
      std::uint32_t rest = a & ~(1u << v);
      ok = components_without(rest) < components_without(a);
    }
    if (!ok) continue;
    std::vector<int> set;
    for (int v = 0; v < n; ++v)
      if ((a >> v) & 1u) set.push_back(v);
    out.push_back(std::move(set));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Edge-list text format: "label1 label2" per line, grid labels as "i,j".

/// Edge lines in edge order. With vertex lines allowed, when the order of
/// first mention would not reproduce the vertex order (or a vertex is
/// isolated), every vertex is first listed on a line of its own so that
/// parsing gives back the same graph.
inline std::string to_edge_list(const Graph& g, bool vertex_lines = true) {
  std::vector<int> mention;
  std::vector<char> seen(g.num_vertices(), 0);
  for (const auto& [u, v] : g.edges())
    for (int w : {u, v})
      if (!seen[w]) {
        seen[w] = 1;
        mention.push_back(w);
      }
  bool natural = static_cast<int>(mention.size()) == g.num_vertices();
  for (int i = 0; natural && i < static_cast<int>(mention.size()); ++i) natural = mention[i] == i;
  std::string out;
  if (!natural && vertex_lines)
    for (const auto& v : g.vertices()) out += v.str() + "\n";
  for (const auto& [u, v] : g.edges()) out += g.label(u).str() + " " + g.label(v).str() + "\n";
  return out;
}

/// Lines hold either an edge "a b" or a single vertex label. Vertices appear
/// in order of first mention; blank lines and '#' comments are skipped.
inline Graph parse_edge_list(const std::string& text) {
  std::vector<Vertex> verts;
  std::map<Vertex, int> seen;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto mention = [&](const Vertex& v) {
    if (seen.emplace(v, static_cast<int>(verts.size())).second) verts.push_back(v);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a)) continue;
    if (!(ls >> b)) {
      mention(Vertex::parse(a));
      continue;
    }
    if (ls >> extra) throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": too many labels");
    Vertex va = Vertex::parse(a), vb = Vertex::parse(b);
    mention(va);
    mention(vb);
    edges.emplace_back(va, vb);
  }
  return Graph(std::move(verts), edges);
}

}  // namespace gbe
