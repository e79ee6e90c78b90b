#ifndef HKSIG_LINALG_HPP
#define HKSIG_LINALG_HPP

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "hksig/prime_field.hpp"
#include "hksig/rational.hpp"

namespace hksig {

using FpMatrix = std::vector<std::vector<std::uint32_t>>;

// In-place reduced row echelon form; returns the rank and drops zero rows.
// The output is the canonical representative of the row space, so two
// matrices agree after rref iff they span the same space.
inline std::size_t rref(FpMatrix& m, const PrimeField& field) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    std::uint32_t s = field.inv(m[r][c]);
    for (std::size_t k = c; k < cols; ++k) m[r][k] = field.mul(m[r][k], s);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      std::uint32_t f = m[i][c];
      for (std::size_t k = c; k < cols; ++k)
        m[i][k] = field.sub(m[i][k], field.mul(f, m[r][k]));
    }
    ++r;
  }
  m.resize(r);
  return r;
}

inline std::vector<std::size_t> pivot_columns(const FpMatrix& rref_rows) {
  std::vector<std::size_t> pivots;
  for (const auto& row : rref_rows)
    for (std::size_t c = 0; c < row.size(); ++c)
      if (row[c] != 0) {
        pivots.push_back(c);
        break;
      }
  return pivots;
}

// Kernel basis read off an rref matrix: one vector per free column, with a
// 1 in that column. Canonical given the matrix.
inline FpMatrix kernel_basis(const FpMatrix& rref_rows, std::size_t cols,
                             const PrimeField& field) {
  std::vector<std::size_t> pivots = pivot_columns(rref_rows);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  FpMatrix out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint32_t> v(cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < rref_rows.size(); ++r) v[pivots[r]] = field.neg(rref_rows[r][f]);
    out.push_back(std::move(v));
  }
  return out;
}

// Number of j-dimensional subspaces of F_p^k (Gaussian binomial).
inline BigInt subspace_count(std::size_t k, std::size_t j, std::uint32_t p) {
  if (j > k) return 0;
  BigInt num = 1, den = 1;
  for (std::size_t i = 1; i <= j; ++i) {
    num *= int_pow(p, static_cast<unsigned>(k - j + i)) - 1;
    den *= int_pow(p, static_cast<unsigned>(i)) - 1;
  }
  return num / den;
}

// Advance a strictly increasing j-subset of {0..n-1} to the next one in
// lexicographic order; false once the last subset has been seen.
inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t j = c.size();
  for (std::size_t i = j; i-- > 0;) {
    if (c[i] < n - j + i) {
      ++c[i];
      for (std::size_t t = i + 1; t < j; ++t) c[t] = c[t - 1] + 1;
      return true;
    }
  }
  return false;
}

// Every nonzero subspace of F_p^k, each exactly once, as its canonical rref
// basis. Visits dimensions 1..k, pivot supports in lexicographic order,
// free entries in odometer order; fn returning false stops the walk.
inline void for_each_subspace(std::size_t k, std::uint32_t p,
                              const std::function<bool(const FpMatrix&)>& fn) {
  for (std::size_t j = 1; j <= k; ++j) {
    std::vector<std::size_t> piv(j);
    for (std::size_t i = 0; i < j; ++i) piv[i] = i;
    do {
      std::vector<bool> is_pivot(k, false);
      for (std::size_t c : piv) is_pivot[c] = true;
      std::vector<std::pair<std::size_t, std::size_t>> free_pos;
      for (std::size_t r = 0; r < j; ++r)
        for (std::size_t c = piv[r] + 1; c < k; ++c)
          if (!is_pivot[c]) free_pos.push_back({r, c});

      FpMatrix m(j, std::vector<std::uint32_t>(k, 0));
      for (std::size_t r = 0; r < j; ++r) m[r][piv[r]] = 1;
      std::vector<std::uint32_t> fill(free_pos.size(), 0);
      while (true) {
        for (std::size_t t = 0; t < free_pos.size(); ++t)
          m[free_pos[t].first][free_pos[t].second] = fill[t];
        if (!fn(m)) return;
        std::size_t t = 0;
        while (t < fill.size()) {
          if (++fill[t] < p) break;
          fill[t] = 0;
          ++t;
        }
        if (t == fill.size()) break;
      }
    } while (next_combination(piv, k));
  }
}

// Nonzero vectors of F_p^k up to scalar: first nonzero coordinate fixed to
// 1, enumerated with the leading position moving left to right.
inline void for_each_ray(std::size_t k, std::uint32_t p,
                         const std::function<bool(const std::vector<std::uint32_t>&)>& fn) {
  for (std::size_t lead = 0; lead < k; ++lead) {
    std::vector<std::uint32_t> v(k, 0);
    v[lead] = 1;
    while (true) {
      if (!fn(v)) return;
      std::size_t t = lead + 1;
      while (t < k) {
        if (++v[t] < p) break;
        v[t] = 0;
        ++t;
      }
      if (t == k) break;
    }
  }
}

}  // namespace hksig

#endif
