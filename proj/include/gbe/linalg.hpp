#pragma once

// Exact linear algebra: sparse integer elimination for ranks of boundary
// matrices (over Q or a prime field) and dense rational routines for the cone
// and LP code.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "gbe/error.hpp"

namespace gbe {

/// Sparse row: (column, value) pairs sorted by column, no zero values.
using SparseRowZ = std::vector<std::pair<int, mpz_class>>;
using SparseRowP = std::vector<std::pair<int, std::int64_t>>;

namespace detail {

inline void make_primitive(SparseRowZ& row) {
  mpz_class g = 0;
  for (const auto& [c, v] : row) {
    g = gcd(g, v);
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& e : row) e.second /= g;
}

/// a*row - b*pivot, merged by column.
inline SparseRowZ combine(const mpz_class& a, const SparseRowZ& row, const mpz_class& b, const SparseRowZ& pivot) {
  SparseRowZ out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.emplace_back(row[i].first, a * row[i].second);
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -b * pivot[j].second);
      ++j;
    } else {
      mpz_class v = a * row[i].second - b * pivot[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

inline std::int64_t mod_pow(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  a %= p;
  if (a < 0) a += p;
  while (e > 0) {
    if (e & 1) r = static_cast<std::int64_t>((__int128)r * a % p);
    a = static_cast<std::int64_t>((__int128)a * a % p);
    e >>= 1;
  }
  return r;
}

}  // namespace detail

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Rank over Q of the matrix with the given rows. Rows are reduced against
/// earlier pivots with fraction-free steps and kept primitive.
inline int rank_rational(std::vector<SparseRowZ> rows) {
  std::map<int, SparseRowZ> pivots;  // leading column -> reduced row
  for (auto& row : rows) {
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        if (row.front().second < 0)
          for (auto& e : row) e.second = -e.second;
        pivots.emplace(row.front().first, std::move(row));
        break;
      }
      const SparseRowZ& piv = it->second;
      const mpz_class& pv = piv.front().second;
      const mpz_class& rv = row.front().second;
      if (mpz_divisible_p(rv.get_mpz_t(), pv.get_mpz_t())) {
        mpz_class q = rv / pv;
        row = detail::combine(1, row, q, piv);
      } else {
        mpz_class g = gcd(pv, rv);
        row = detail::combine(pv / g, row, rv / g, piv);
      }
      detail::make_primitive(row);
    }
  }
  return static_cast<int>(pivots.size());
}

/// Rank over GF(p).
inline int rank_mod_p(std::vector<SparseRowP> rows, std::int64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::BadParams, "field characteristic must be 0 or a prime");
  std::map<int, SparseRowP> pivots;
  for (auto& row : rows) {
    for (auto& e : row) e.second = ((e.second % p) + p) % p;
    row.erase(std::remove_if(row.begin(), row.end(), [](const auto& e) { return e.second == 0; }), row.end());
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        std::int64_t inv = detail::mod_pow(row.front().second, p - 2, p);
        for (auto& e : row) e.second = static_cast<std::int64_t>((__int128)e.second * inv % p);
        pivots.emplace(row.front().first, std::move(row));
        break;
      }
      const SparseRowP& piv = it->second;  // leading coefficient 1
      std::int64_t f = row.front().second;
      SparseRowP out;
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < piv.size()) {
        if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
          out.push_back(row[i++]);
        } else if (i == row.size() || piv[j].first < row[i].first) {
          std::int64_t v = static_cast<std::int64_t>((p - (__int128)f * piv[j].second % p) % p);
          if (v) out.emplace_back(piv[j].first, v);
          ++j;
        } else {
          std::int64_t v = static_cast<std::int64_t>(((__int128)row[i].second - (__int128)f * piv[j].second % p + p) % p);
          if (v) out.emplace_back(row[i].first, v);
          ++i;
          ++j;
        }
      }
      row = std::move(out);
    }
  }
  return static_cast<int>(pivots.size());
}

// ---------------------------------------------------------------------------
// Dense rational matrices

using QVector = std::vector<mpq_class>;
using QMatrix = std::vector<QVector>;
using ZVector = std::vector<mpz_class>;

/// In-place reduced row echelon form; returns the pivot columns.
inline std::vector<int> rref(QMatrix& a) {
  std::vector<int> piv;
  if (a.empty()) return piv;
  const int rows = static_cast<int>(a.size()), cols = static_cast<int>(a[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(a[r], a[sel]);
    mpq_class inv = 1 / a[r][c];
    for (int k = c; k < cols; ++k) a[r][k] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class f = a[i][c];
      for (int k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

inline int rank(QMatrix a) { return static_cast<int>(rref(a).size()); }

/// Basis of {x : a x = 0}; one vector per free column.
inline QMatrix nullspace(QMatrix a, int cols) {
  if (a.empty()) {
    QMatrix id(cols, QVector(cols, 0));
    for (int i = 0; i < cols; ++i) id[i][i] = 1;
    return id;
  }
  auto piv = rref(a);
  std::vector<char> is_piv(cols, 0);
  for (int c : piv) is_piv[c] = 1;
  QMatrix basis;
  for (int f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    QVector v(cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Clears denominators and divides by the content; zero stays zero.
inline ZVector primitive_integer(const QVector& v) {
  mpz_class l = 1;
  for (const auto& x : v) l = lcm(l, mpz_class(x.get_den()));
  ZVector out;
  mpz_class g = 0;
  for (const auto& x : v) {
    mpz_class z = mpz_class(x.get_num()) * (l / mpz_class(x.get_den()));
    g = gcd(g, z);
    out.push_back(z);
  }
  if (g > 1)
    for (auto& z : out) z /= g;
  return out;
}

}  // namespace gbe
