#pragma once

// Linear algebra over Z/p^n. Z/p^n is not a field, so modules are handled
// through Howell-style echelon forms: unit-normalized pivots p^v, annihilator
// rows folded into the span, entries above a pivot reduced mod p^v. That
// makes membership decidable by back-substitution and cardinality a product
// over pivots. A plain Gaussian solver over F_p is included for n = 1 work.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cmr/integers.hpp"

namespace cmr {

using ZVec = std::vector<Int>;

struct HowellBasis {
  long p = 2;
  int n = 1;        // modulus p^n
  std::size_t cols = 0;
  std::vector<ZVec> rows;        // echelon rows
  std::vector<std::size_t> pivot_col;
  std::vector<int> pivot_val;    // pivot is p^pivot_val[i] at pivot_col[i]

  Int modulus() const { return ipow(p, n); }

  Int cardinality() const {
    Int c = 1;
    for (int v : pivot_val) c *= ipow(p, n - v);
    return c;
  }

  bool contains(ZVec vec) const {
    Int m = modulus();
    for (auto& x : vec) x = mod_pos(x, m);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Int piv = ipow(p, pivot_val[i]);
      Int e = vec[pivot_col[i]];
      if (e == 0) continue;
      if (e % piv != 0) return false;
      Int q = e / piv;
      for (std::size_t c = 0; c < cols; ++c) vec[c] = mod_pos(vec[c] - q * rows[i][c], m);
    }
    for (const auto& x : vec)
      if (x != 0) return false;
    return true;
  }
};

inline HowellBasis howell_form(std::vector<ZVec> gens, long p, int n, std::size_t cols) {
  HowellBasis h;
  h.p = p;
  h.n = n;
  h.cols = cols;
  const Int m = h.modulus();
  std::vector<ZVec> work;
  for (auto& g : gens) {
    if (g.size() != cols) throw std::invalid_argument("howell_form: row length");
    for (auto& x : g) x = mod_pos(x, m);
    work.push_back(std::move(g));
  }
  for (std::size_t col = 0; col < cols; ++col) {
    // Minimal-valuation entry in this column wins the pivot.
    std::size_t best = work.size();
    int best_v = n;
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (work[i][col] == 0) continue;
      int v = val_p(work[i][col], p, n);
      if (v < best_v) {
        best_v = v;
        best = i;
      }
    }
    if (best == work.size()) continue;
    ZVec piv = std::move(work[best]);
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(best));
    Int unit = piv[col] / ipow(p, best_v);
    Int uinv = inv_mod_pow(unit, p, n);
    for (auto& x : piv) x = mod_pos(x * uinv, m);
    const Int pv = ipow(p, best_v);
    for (auto& row : work) {
      if (row[col] == 0) continue;
      Int q = row[col] / pv;  // exact: valuation >= pivot valuation
      for (std::size_t c = 0; c < cols; ++c) row[c] = mod_pos(row[c] - q * piv[c], m);
    }
    if (best_v > 0) {
      // Annihilator multiple: same span, leading entry vanishes mod p^n.
      ZVec ann(cols);
      const Int f = ipow(p, n - best_v);
      for (std::size_t c = 0; c < cols; ++c) ann[c] = mod_pos(piv[c] * f, m);
      bool nz = false;
      for (const auto& x : ann) nz = nz || x != 0;
      if (nz) work.push_back(std::move(ann));
    }
    h.rows.push_back(std::move(piv));
    h.pivot_col.push_back(col);
    h.pivot_val.push_back(best_v);
  }
  // Back-reduction: entries above each pivot land in [0, p^v).
  for (std::size_t i = 0; i < h.rows.size(); ++i) {
    const Int pv = ipow(p, h.pivot_val[i]);
    for (std::size_t j = 0; j < i; ++j) {
      Int q = h.rows[j][h.pivot_col[i]] / pv;
      if (q == 0) continue;
      for (std::size_t c = 0; c < cols; ++c)
        h.rows[j][c] = mod_pos(h.rows[j][c] - q * h.rows[i][c], m);
    }
  }
  return h;
}

inline bool same_module(const HowellBasis& a, const HowellBasis& b) {
  if (a.p != b.p || a.n != b.n || a.cols != b.cols) return false;
  for (const auto& r : a.rows)
    if (!b.contains(r)) return false;
  for (const auto& r : b.rows)
    if (!a.contains(r)) return false;
  return true;
}

// Solve A x = rhs over F_p (A given as rows); returns a solution with free
// variables set to zero, or nullopt if inconsistent.
inline std::optional<std::vector<std::uint32_t>> solve_mod_p(std::vector<std::vector<long>> a,
                                                             std::vector<long> rhs, long p) {
  const std::size_t nrows = a.size();
  const std::size_t ncols = nrows ? a[0].size() : 0;
  std::vector<std::size_t> pivot_of_col(ncols, nrows);
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t sel = nrows;
    for (std::size_t i = r; i < nrows; ++i)
      if (a[i][c] % p != 0) {
        sel = i;
        break;
      }
    if (sel == nrows) continue;
    std::swap(a[r], a[sel]);
    std::swap(rhs[r], rhs[sel]);
    Int inv = inv_mod_pow(a[r][c], p, 1);
    long invl = inv.convert_to<long>();
    for (auto& x : a[r]) x = ((x * invl) % p + p) % p;
    rhs[r] = ((rhs[r] * invl) % p + p) % p;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == r || a[i][c] % p == 0) continue;
      long f = a[i][c] % p;
      for (std::size_t j = 0; j < ncols; ++j) a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
      rhs[i] = ((rhs[i] - f * rhs[r]) % p + p) % p;
    }
    pivot_of_col[c] = r;
    ++r;
  }
  for (std::size_t i = r; i < nrows; ++i)
    if (rhs[i] % p != 0) return std::nullopt;
  std::vector<std::uint32_t> x(ncols, 0);
  for (std::size_t c = 0; c < ncols; ++c)
    if (pivot_of_col[c] < nrows)
      x[c] = static_cast<std::uint32_t>(((rhs[pivot_of_col[c]] % p) + p) % p);
  return x;
}

// Nullspace basis of A over F_p (A given as rows mapping F_p^ncols -> F_p^nrows).
inline std::vector<std::vector<long>> nullspace_mod_p(std::vector<std::vector<long>> a, long p) {
  const std::size_t nrows = a.size();
  const std::size_t ncols = nrows ? a[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t sel = nrows;
    for (std::size_t i = r; i < nrows; ++i)
      if (a[i][c] % p != 0) {
        sel = i;
        break;
      }
    if (sel == nrows) continue;
    std::swap(a[r], a[sel]);
    long invl = inv_mod_pow(a[r][c], p, 1).convert_to<long>();
    for (auto& x : a[r]) x = ((x * invl) % p + p) % p;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == r || a[i][c] % p == 0) continue;
      long f = a[i][c] % p;
      for (std::size_t j = 0; j < ncols; ++j) a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<std::vector<long>> basis;
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  for (std::size_t fc = 0; fc < ncols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<long> v(ncols, 0);
    v[fc] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      v[pivot_col[i]] = ((-a[i][fc]) % p + p) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace cmr
