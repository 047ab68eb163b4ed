#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "hsos/core/graded.hpp"
#include "hsos/core/linalg.hpp"
#include "hsos/core/polynomial.hpp"

namespace hsos {

using Subset = std::vector<std::size_t>;
using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// All size-i subsets of {0..k-1} in colexicographic order: compared by
/// largest element first, then the next largest, and so on.
inline std::vector<Subset> colex_subsets(std::size_t k, std::size_t i) {
  std::vector<Subset> out;
  if (i > k) return out;
  Subset s(i);
  for (std::size_t j = 0; j < i; ++j) s[j] = j;
  for (;;) {
    out.push_back(s);
    // Next in colex: bump the lowest element that has room, reset those below.
    std::size_t j = 0;
    while (j < i && ((j + 1 < i) ? s[j] + 1 == s[j + 1] : s[j] + 1 == k)) ++j;
    if (j == i) break;
    ++s[j];
    for (std::size_t t = 0; t < j; ++t) s[t] = t;
  }
  return out;
}

/// K_i = Λ^i(R^k) with d_i: K_i -> K_{i-1},
///   d_i(e_{j1} ∧ ... ∧ e_{ji}) = sum_k (-1)^k f_{jk} e_{j1} ∧ ..ê_{jk}.. ∧ e_{ji}
/// for j1 < ... < ji and k counted from 1. Bases are colex-ordered subsets.
struct KoszulComplex {
  RingContext ring;
  std::vector<Polynomial> inputs;
  /// bases[i] indexes K_i, i = 0..k.
  std::vector<std::vector<Subset>> bases;
  /// differentials[i] is the matrix of d_i (rows: bases[i-1], columns:
  /// bases[i]) for i = 1..k; differentials[0] is empty.
  std::vector<PolyMatrix> differentials;

  std::size_t length() const { return inputs.size(); }
  std::size_t rank(std::size_t i) const { return i < bases.size() ? bases[i].size() : 0; }
};

inline KoszulComplex build_koszul(const std::vector<Polynomial>& f) {
  if (f.empty()) throw DomainError("Koszul complex needs at least one input");
  for (const auto& p : f) {
    require_same_ring(f.front().ring(), p.ring());
    if (p.is_zero()) throw DomainError("Koszul complex input is zero");
  }
  const std::size_t k = f.size();
  KoszulComplex out{f.front().ring(), f, {}, {}};
  for (std::size_t i = 0; i <= k; ++i) out.bases.push_back(colex_subsets(k, i));
  out.differentials.emplace_back();
  for (std::size_t i = 1; i <= k; ++i) {
    const auto& rows = out.bases[i - 1];
    const auto& cols = out.bases[i];
    std::map<Subset, std::size_t> row_index;
    for (std::size_t r = 0; r < rows.size(); ++r) row_index[rows[r]] = r;
    PolyMatrix d(rows.size(), std::vector<Polynomial>(cols.size(), Polynomial(out.ring)));
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const Subset& s = cols[c];
      for (std::size_t pos = 0; pos < s.size(); ++pos) {
        Subset t = s;
        t.erase(t.begin() + static_cast<long>(pos));
        // pos is 0-based, so the sign (-1)^(pos+1).
        d[row_index.at(t)][c] = pos % 2 == 0 ? -f[s[pos]] : f[s[pos]];
      }
    }
    out.differentials.push_back(std::move(d));
  }
  return out;
}

/// True when every composite d_i ∘ d_{i+1} is the zero matrix.
inline bool verify_dd_zero(const KoszulComplex& kc) {
  for (std::size_t i = 1; i + 1 < kc.differentials.size(); ++i) {
    const PolyMatrix& a = kc.differentials[i];
    const PolyMatrix& b = kc.differentials[i + 1];
    if (a.empty() || b.empty()) continue;
    for (std::size_t r = 0; r < a.size(); ++r) {
      for (std::size_t c = 0; c < b[0].size(); ++c) {
        Polynomial acc(kc.ring);
        for (std::size_t m = 0; m < b.size(); ++m) {
          if (!a[r][m].is_zero() && !b[m][c].is_zero()) acc += a[r][m] * b[m][c];
        }
        if (!acc.is_zero()) return false;
      }
    }
  }
  return true;
}

namespace detail {

// Degree-d piece of K_i: pairs (basis element e_S, monomial u) with
// deg u + sum_{j in S} deg f_j = d.
struct KoszulPiece {
  std::vector<std::pair<std::size_t, Monomial>> cells;
  std::map<std::pair<std::size_t, Monomial>, std::size_t> index;
};

inline KoszulPiece koszul_piece(const KoszulComplex& kc, std::size_t i, unsigned d) {
  KoszulPiece piece;
  if (i >= kc.bases.size()) return piece;
  for (std::size_t s = 0; s < kc.bases[i].size(); ++s) {
    unsigned shift = 0;
    for (std::size_t j : kc.bases[i][s]) shift += kc.inputs[j].degree();
    if (shift > d) continue;
    for (auto& u : monomials_of_degree(kc.ring, d - shift)) {
      piece.index.emplace(std::make_pair(s, u), piece.cells.size());
      piece.cells.emplace_back(s, std::move(u));
    }
  }
  return piece;
}

// Rank of d_i restricted to degree d, as a scalar matrix.
inline std::size_t koszul_graded_rank(const KoszulComplex& kc, std::size_t i, unsigned d) {
  if (i == 0 || i >= kc.differentials.size()) return 0;
  KoszulPiece src = koszul_piece(kc, i, d);
  KoszulPiece dst = koszul_piece(kc, i - 1, d);
  if (src.cells.empty() || dst.cells.empty()) return 0;
  EchelonSpace image(dst.cells.size());
  const PolyMatrix& m = kc.differentials[i];
  for (const auto& [s, u] : src.cells) {
    Vector v(dst.cells.size());
    for (std::size_t t = 0; t < m.size(); ++t) {
      if (m[t][s].is_zero()) continue;
      for (const auto& [mono, c] : m[t][s].terms()) v[dst.index.at({t, mono * u})] += c;
    }
    image.insert(v);
  }
  return image.dim();
}

}  // namespace detail

/// dim H_i in internal degree d: dim ker(d_i on K_{i,d}) - rank(d_{i+1} into
/// K_{i,d}). Stage 0 has d_0 = 0 and stage k has d_{k+1} = 0.
inline std::size_t graded_homology_dim(const KoszulComplex& kc, std::size_t i, unsigned d) {
  if (i > kc.length()) throw DomainError("Koszul stage out of range");
  for (const auto& p : kc.inputs) {
    if (!p.is_homogeneous()) throw DomainError("graded homology needs homogeneous inputs");
  }
  std::size_t dim = detail::koszul_piece(kc, i, d).cells.size();
  if (dim == 0) return 0;
  std::size_t kernel = dim - detail::koszul_graded_rank(kc, i, d);
  return kernel - detail::koszul_graded_rank(kc, i + 1, d);
}

}  // namespace hsos
