#pragma once

// Graded Betti numbers of S/I for a monomial ideal I. Only multidegrees in the
// lcm lattice of I can carry Betti numbers; for each such b the Betti numbers
// are the reduced homology of the upper Koszul complex
//   K^b = { F subset of supp(b) : x^b / x^F in I },
// with beta_{i,b}(S/I) = dim H~_{i-2}(K^b). The complex is generated by the
// facets C_g = { v : g_v < b_v } over the generators g dividing b. When the
// facets are fewer than the vertices, homology is taken on their nerve, which
// has the same homotopy type.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "gbe/error.hpp"
#include "gbe/linalg.hpp"
#include "gbe/monomial.hpp"

namespace gbe {

struct ResolutionOptions {
  int field_char = 0;
  std::size_t lattice_cap = 50000;
};

/// The lcm lattice without its bottom element: all lcms of nonempty subsets
/// of the minimal generators, in lex order.
class LcmLattice {
 public:
  LcmLattice(const MonomialIdeal& I, std::size_t cap) {
    if (I.is_zero()) throw Error(ErrorCode::BadParams, "lcm lattice of the zero ideal");
    std::unordered_set<Monomial, MonomialHash> seen;
    std::vector<Monomial> frontier;
    for (const auto& g : I.generators())
      if (seen.insert(g).second) frontier.push_back(g);
    while (!frontier.empty()) {
      std::vector<Monomial> next;
      for (const auto& x : frontier)
        for (const auto& g : I.generators()) {
          Monomial l = lcm(x, g);
          if (seen.insert(l).second) {
            if (seen.size() > cap)
              throw Error(ErrorCode::TooLarge, "lcm lattice exceeds " + std::to_string(cap) + " elements");
            next.push_back(std::move(l));
          }
        }
      frontier = std::move(next);
    }
    elements_.assign(seen.begin(), seen.end());
    std::sort(elements_.begin(), elements_.end());
  }

  /// Elements other than the bottom 1.
  const std::vector<Monomial>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size() + 1; }

 private:
  std::vector<Monomial> elements_;
};

/// Reduced homology dimensions of a simplicial complex given by facets as
/// bitmasks over at most 64 vertices. Index j of the result is dim H~_{j-1},
/// so index 0 holds H~_{-1}.
inline std::vector<long long> reduced_homology(const std::vector<std::uint64_t>& facets, int field_char) {
  // Faces by DFS: a face F is extended by vertices above its largest vertex
  // that lie in some facet containing F, so each face is produced once.
  std::vector<std::vector<std::uint64_t>> faces(1, std::vector<std::uint64_t>{0});
  auto dfs = [&](auto&& self, std::uint64_t face, int last, const std::vector<std::uint64_t>& cand) -> void {
    std::uint64_t avail = 0;
    for (auto c : cand) avail |= c;
    if (last >= 0) avail &= (last >= 63) ? 0 : ~((std::uint64_t{2} << last) - 1);
    while (avail) {
      int w = std::countr_zero(avail);
      avail &= avail - 1;
      std::uint64_t bit = std::uint64_t{1} << w;
      std::vector<std::uint64_t> sub;
      for (auto c : cand)
        if (c & bit) sub.push_back(c);
      std::uint64_t nf = face | bit;
      std::size_t dim = std::popcount(nf);
      if (faces.size() <= dim) faces.resize(dim + 1);
      faces[dim].push_back(nf);
      self(self, nf, w, sub);
    }
  };
  dfs(dfs, 0, -1, facets);

  const int top = static_cast<int>(faces.size()) - 1;
  // rank[k] = rank of the boundary from faces with k vertices to k-1 vertices.
  std::vector<long long> rk(top + 2, 0);
  for (int k = 1; k <= top; ++k) {
    std::unordered_map<std::uint64_t, int> index;
    for (std::size_t a = 0; a < faces[k - 1].size(); ++a) index.emplace(faces[k - 1][a], static_cast<int>(a));
    if (field_char == 0) {
      std::vector<SparseRowZ> rows;
      rows.reserve(faces[k].size());
      for (auto f : faces[k]) {
        SparseRowZ row;
        int sign = 1;
        for (std::uint64_t rest = f; rest; rest &= rest - 1) {
          std::uint64_t bit = rest & (~rest + 1);
          row.emplace_back(index.at(f & ~bit), sign);
          sign = -sign;
        }
        std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        rows.push_back(std::move(row));
      }
      rk[k] = rank_rational(std::move(rows));
    } else {
      std::vector<SparseRowP> rows;
      rows.reserve(faces[k].size());
      for (auto f : faces[k]) {
        SparseRowP row;
        int sign = 1;
        for (std::uint64_t rest = f; rest; rest &= rest - 1) {
          std::uint64_t bit = rest & (~rest + 1);
          row.emplace_back(index.at(f & ~bit), sign);
          sign = -sign;
        }
        std::sort(row.begin(), row.end());
        rows.push_back(std::move(row));
      }
      rk[k] = rank_mod_p(std::move(rows), field_char);
    }
  }
  std::vector<long long> h(top + 1, 0);
  for (int k = 0; k <= top; ++k) h[k] = static_cast<long long>(faces[k].size()) - rk[k] - rk[k + 1];
  return h;
}

namespace detail {

inline std::vector<std::uint64_t> maximal_masks(std::vector<std::uint64_t> masks) {
  std::sort(masks.begin(), masks.end(), [](auto a, auto b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa > pb : a < b;
  });
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<std::uint64_t> out;
  for (auto m : masks)
    if (std::none_of(out.begin(), out.end(), [&](auto o) { return (m & o) == m; })) out.push_back(m);
  return out;
}

}  // namespace detail

/// beta_{i,b}(S/I) for i = 0.. as a vector indexed by i (b != 1).
inline std::vector<long long> multigraded_betti(const MonomialIdeal& I, const Monomial& b, int field_char = 0) {
  std::vector<int> support = b.support();
  std::vector<std::uint64_t> facets;
  for (const auto& g : I.generators()) {
    if (!g.divides(b)) continue;
    std::uint64_t mask = 0;
    for (std::size_t k = 0; k < support.size(); ++k)
      if (g[support[k]] < b[support[k]]) mask |= std::uint64_t{1} << k;
    facets.push_back(mask);
  }
  if (facets.empty()) return {};
  if (support.size() > 64) throw Error(ErrorCode::TooLarge, "multidegree support above 64 variables");
  facets = detail::maximal_masks(std::move(facets));
  const std::uint64_t full = support.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << support.size()) - 1;
  // A single facet is a simplex: acyclic unless it is the empty face alone.
  if (facets.size() == 1) {
    if (facets[0] == 0) return {0, 1};
    return {};
  }
  if (facets[0] == full) return {};
  std::uint64_t common = full;
  for (auto f : facets) common &= f;
  if (common) return {};  // a cone

  std::uint64_t used = 0;
  for (auto f : facets) used |= f;
  std::vector<long long> h;
  if (facets.size() < static_cast<std::size_t>(std::popcount(used)) && facets.size() <= 64) {
    // Nerve: vertices are facets, a set of facets is a face when they share a vertex.
    std::vector<std::uint64_t> nerve_facets;
    for (int v = 0; v < static_cast<int>(support.size()); ++v) {
      std::uint64_t owners = 0;
      for (std::size_t k = 0; k < facets.size(); ++k)
        if ((facets[k] >> v) & 1u) owners |= std::uint64_t{1} << k;
      if (owners) nerve_facets.push_back(owners);
    }
    h = reduced_homology(detail::maximal_masks(std::move(nerve_facets)), field_char);
  } else {
    h = reduced_homology(facets, field_char);
  }
  // h[k] = H~_{k-1}; beta_i = H~_{i-2} = h[i-1].
  std::vector<long long> beta(h.size() + 1, 0);
  for (std::size_t k = 0; k < h.size(); ++k) beta[k + 1] = h[k];
  while (!beta.empty() && beta.back() == 0) beta.pop_back();
  return beta;
}

/// Graded Betti numbers beta_{i,d}(S/I).
class BettiTable {
 public:
  BettiTable() = default;
  explicit BettiTable(int nvars) : nvars_(nvars) { entries_[{0, 0}] = 1; }

  void add(int i, int d, long long v) {
    if (v == 0) return;
    entries_[{i, d}] += v;
  }

  long long at(int i, int d) const {
    auto it = entries_.find({i, d});
    return it == entries_.end() ? 0 : it->second;
  }

  const std::map<std::pair<int, int>, long long>& entries() const { return entries_; }
  int nvars() const { return nvars_; }

  int regularity() const {
    int r = 0;
    for (const auto& [k, v] : entries_) r = std::max(r, k.second - k.first);
    return r;
  }

  int proj_dim() const {
    int p = 0;
    for (const auto& [k, v] : entries_) p = std::max(p, k.first);
    return p;
  }

  int depth() const { return nvars_ - proj_dim(); }

  /// Total Betti number beta_i.
  long long total(int i) const {
    long long s = 0;
    for (const auto& [k, v] : entries_)
      if (k.first == i) s += v;
    return s;
  }

  /// Macaulay layout: a header row of homological indices i, then one row
  /// per d - i with the entries beta_{i,d}.
  std::string to_csv() const {
    std::ostringstream out;
    const int pd = proj_dim(), reg = regularity();
    out << "d-i";
    for (int i = 0; i <= pd; ++i) out << "," << i;
    out << "\n";
    for (int r = 0; r <= reg; ++r) {
      out << r;
      for (int i = 0; i <= pd; ++i) out << "," << at(i, i + r);
      out << "\n";
    }
    return out.str();
  }

  bool operator==(const BettiTable&) const = default;

 private:
  int nvars_ = 0;
  std::map<std::pair<int, int>, long long> entries_;
};

inline void check_field(int field_char) {
  if (field_char != 0 && !is_prime(field_char))
    throw Error(ErrorCode::BadParams, "field characteristic must be 0 or a prime");
}

inline BettiTable betti_table(const MonomialIdeal& I, const ResolutionOptions& opt = {}) {
  check_field(opt.field_char);
  if (I.is_zero()) throw Error(ErrorCode::BadParams, "betti_table needs a nonzero ideal");
  if (I.is_unit()) throw Error(ErrorCode::BadParams, "betti_table needs a proper ideal");
  LcmLattice lattice(I, opt.lattice_cap);
  BettiTable t(I.nvars());
  for (const auto& b : lattice.elements()) {
    auto beta = multigraded_betti(I, b, opt.field_char);
    for (std::size_t i = 0; i < beta.size(); ++i) t.add(static_cast<int>(i), b.degree(), beta[i]);
  }
  return t;
}

inline int regularity(const MonomialIdeal& I, const ResolutionOptions& opt = {}) { return betti_table(I, opt).regularity(); }
inline int proj_dim(const MonomialIdeal& I, const ResolutionOptions& opt = {}) { return betti_table(I, opt).proj_dim(); }
inline int depth_quotient(const MonomialIdeal& I, const ResolutionOptions& opt = {}) { return betti_table(I, opt).depth(); }

/// depth S/I^t for t = 1..t_max.
inline std::vector<int> depth_sequence(const MonomialIdeal& I, int t_max, const ResolutionOptions& opt = {}) {
  if (t_max < 1) throw Error(ErrorCode::BadParams, "t_max must be >= 1");
  std::vector<int> out;
  MonomialIdeal pt = I;
  for (int t = 1; t <= t_max; ++t) {
    if (t > 1) pt = product(pt, I);
    out.push_back(depth_quotient(pt, opt));
  }
  return out;
}

}  // namespace gbe
