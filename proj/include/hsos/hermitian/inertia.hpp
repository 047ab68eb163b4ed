#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hsos/core/linalg.hpp"
#include "hsos/hermitian/biform.hpp"

namespace hsos {

/// Square matrix equal to its conjugate transpose.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(Matrix m) : m_(std::move(m)) {
    if (!m_.is_hermitian()) throw DomainError("matrix is not Hermitian");
  }

  std::size_t dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  const GaussRational& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  /// v^* H v, always real.
  Rational quadratic_form(const Vector& v) const {
    GaussRational acc;
    for (std::size_t r = 0; r < dim(); ++r) {
      if (v[r].is_zero()) continue;
      GaussRational row;
      for (std::size_t c = 0; c < dim(); ++c) {
        if (!v[c].is_zero() && !m_(r, c).is_zero()) row += m_(r, c) * v[c];
      }
      acc += v[r].conj() * row;
    }
    return acc.re();
  }

 private:
  Matrix m_;
};

/// Counts of positive, negative and zero diagonal entries after congruence.
struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  std::size_t rank() const { return positive + negative; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
  std::string str() const {
    return "(" + std::to_string(positive) + ", " + std::to_string(negative) + ", " +
           std::to_string(zero) + ")";
  }
};

/// transform^* H transform = diag(diagonal); `pivots` lists the indices in
/// the order they were eliminated.
struct Diagonalization {
  Matrix transform;
  std::vector<Rational> diagonal;
  std::vector<std::size_t> pivots;
};

namespace detail {

// Working state of a Hermitian congruence: a = s^* H s throughout.
struct Congruence {
  Matrix a;
  Matrix s;
  std::vector<bool> done;

  explicit Congruence(const HermitianMatrix& h)
      : a(h.matrix()), s(Matrix::identity(h.dim())), done(h.dim(), false) {}

  std::size_t n() const { return a.rows(); }

  // col_target += factor * col_src and row_target += conj(factor) * row_src.
  void add_multiple(std::size_t target, std::size_t src, const GaussRational& factor) {
    for (std::size_t r = 0; r < n(); ++r) {
      if (!a(r, src).is_zero()) a(r, target) += factor * a(r, src);
      if (!s(r, src).is_zero()) s(r, target) += factor * s(r, src);
    }
    GaussRational cf = factor.conj();
    for (std::size_t c = 0; c < n(); ++c) {
      if (!a(src, c).is_zero()) a(target, c) += cf * a(src, c);
    }
  }

  std::optional<std::size_t> nonzero_diagonal() const {
    for (std::size_t k = 0; k < n(); ++k) {
      if (!done[k] && !a(k, k).is_zero()) return k;
    }
    return std::nullopt;
  }

  std::optional<std::pair<std::size_t, std::size_t>> nonzero_off_diagonal() const {
    for (std::size_t j = 0; j < n(); ++j) {
      if (done[j]) continue;
      for (std::size_t k = j + 1; k < n(); ++k) {
        if (!done[k] && !a(j, k).is_zero()) return std::make_pair(j, k);
      }
    }
    return std::nullopt;
  }

  // With a(j,j) = a(k,k) = 0 and c = a(j,k) != 0, replacing e_j by
  // e_j + conj(c) e_k makes a(j,j) = 2|c|^2 > 0.
  void make_pivot(std::size_t j, std::size_t k) { add_multiple(j, k, a(j, k).conj()); }

  // Clears row and column q outside the diagonal.
  void eliminate(std::size_t q) {
    GaussRational inv = a(q, q).inverse();
    for (std::size_t r = 0; r < n(); ++r) {
      if (r == q || done[r] || a(q, r).is_zero()) continue;
      add_multiple(r, q, -(a(q, r) * inv));
    }
    done[q] = true;
  }
};

}  // namespace detail

/// Exact congruence diagonalization over Q(i). A nonzero diagonal pivot is
/// used when one exists; otherwise an off-diagonal pair is first combined
/// into a positive pivot (the pair then contributes one positive and one
/// negative count).
inline Diagonalization congruence_diagonalize(const HermitianMatrix& h) {
  detail::Congruence st(h);
  std::vector<std::size_t> pivots;
  for (;;) {
    auto q = st.nonzero_diagonal();
    if (!q) {
      auto pair = st.nonzero_off_diagonal();
      if (!pair) break;
      st.make_pivot(pair->first, pair->second);
      q = pair->first;
    }
    st.eliminate(*q);
    pivots.push_back(*q);
  }
  Diagonalization out{st.s, {}, pivots};
  for (std::size_t k = 0; k < h.dim(); ++k) out.diagonal.push_back(st.a(k, k).re());
  return out;
}

inline Inertia inertia(const HermitianMatrix& h) {
  Inertia in;
  for (const auto& d : congruence_diagonalize(h).diagonal) {
    int s = sgn(d);
    if (s > 0) {
      ++in.positive;
    } else if (s < 0) {
      ++in.negative;
    } else {
      ++in.zero;
    }
  }
  return in;
}

/// Auditable answer to "is H positive semidefinite?".
struct PsdCertificate {
  bool psd = false;
  /// When psd: transform^* H transform = diag(diagonal) with diagonal >= 0.
  Matrix transform;
  std::vector<Rational> diagonal;
  /// When not psd: witness^* H witness = witness_value < 0.
  Vector witness;
  Rational witness_value;
  /// When not psd and H itself has a negative 1x1 or 2x2 principal minor,
  /// its row/column indices.
  std::vector<std::size_t> principal_minor;
};

inline PsdCertificate is_psd(const HermitianMatrix& h) {
  PsdCertificate cert;
  detail::Congruence st(h);
  auto fail = [&](Vector v) {
    cert.psd = false;
    cert.witness = std::move(v);
    cert.witness_value = h.quadratic_form(cert.witness);
    if (sgn(cert.witness_value) >= 0) throw InternalError("PSD witness is not negative");
    const std::size_t n = h.dim();
    for (std::size_t j = 0; j < n && cert.principal_minor.empty(); ++j) {
      if (sgn(h(j, j).re()) < 0) cert.principal_minor = {j};
    }
    for (std::size_t j = 0; j < n && cert.principal_minor.empty(); ++j) {
      for (std::size_t k = j + 1; k < n && cert.principal_minor.empty(); ++k) {
        if (h(j, j).re() * h(k, k).re() < h(j, k).norm_sq()) cert.principal_minor = {j, k};
      }
    }
    return cert;
  };

  for (;;) {
    auto q = st.nonzero_diagonal();
    if (q) {
      if (sgn(st.a(*q, *q).re()) < 0) return fail(st.s.column(*q));
      st.eliminate(*q);
      continue;
    }
    auto pair = st.nonzero_off_diagonal();
    if (!pair) break;
    // Zero diagonal with a nonzero entry c in its row: with w = t e_j + e_k and
    // t = -(a_kk + 1) c / (2|c|^2) one gets w^* a w = -1.
    auto [j, k] = *pair;
    const GaussRational& c = st.a(j, k);
    GaussRational t = -(st.a(k, k) + GaussRational(1)) * c /
                      GaussRational(Rational(2) * c.norm_sq());
    Vector w(h.dim());
    for (std::size_t r = 0; r < h.dim(); ++r) w[r] = t * st.s(r, j) + st.s(r, k);
    return fail(std::move(w));
  }
  cert.psd = true;
  cert.transform = st.s;
  for (std::size_t k = 0; k < h.dim(); ++k) cert.diagonal.push_back(st.a(k, k).re());
  return cert;
}

/// Coefficient matrix (c_{a,b}) indexed by monomials_of_degree(m).
inline HermitianMatrix coefficient_matrix(const BiForm& r) {
  GradedBasis basis(r.ring(), r.degree());
  Matrix m(basis.size(), basis.size());
  for (const auto& [key, c] : r.stored()) {
    std::size_t a = basis.index(key.first), b = basis.index(key.second);
    m(a, b) = c;
    m(b, a) = c.conj();
  }
  return HermitianMatrix(std::move(m));
}

/// r = sum_j weights[j] |forms[j]|^2 with linearly independent forms.
struct HoloDecomposition {
  std::vector<Rational> weights;
  std::vector<Polynomial> forms;

  std::size_t positive() const {
    std::size_t p = 0;
    for (const auto& w : weights) p += sgn(w) > 0;
    return p;
  }
  std::size_t negative() const { return weights.size() - positive(); }

  std::vector<Polynomial> positive_forms() const { return select(1); }
  std::vector<Polynomial> negative_forms() const { return select(-1); }

  BiForm expand(const RingContext& ring, unsigned m) const {
    return weighted_squares(ring, m, weights, forms);
  }

 private:
  std::vector<Polynomial> select(int sign) const {
    std::vector<Polynomial> out;
    for (std::size_t k = 0; k < weights.size(); ++k) {
      if (sgn(weights[k]) == sign) out.push_back(forms[k]);
    }
    return out;
  }
};

/// Writes r = sum d_j |L_j|^2 from the congruence S^* C S = D: the L_j are
/// read off the rows of S^{-1} (conjugated), in pivot order.
inline HoloDecomposition holomorphic_decomposition(const BiForm& r) {
  HoloDecomposition out;
  if (r.is_zero()) return out;
  GradedBasis basis(r.ring(), r.degree());
  Diagonalization diag = congruence_diagonalize(coefficient_matrix(r));
  Matrix inv = inverse(diag.transform);
  for (std::size_t j : diag.pivots) {
    if (sgn(diag.diagonal[j]) == 0) continue;
    Vector coords(basis.size());
    for (std::size_t a = 0; a < basis.size(); ++a) coords[a] = inv(j, a).conj();
    out.weights.push_back(diag.diagonal[j]);
    out.forms.push_back(basis.polynomial(coords));
  }
  return out;
}

class NotPositiveSemidefinite : public DomainError {
 public:
  explicit NotPositiveSemidefinite(PsdCertificate cert)
      : DomainError("coefficient matrix is not positive semidefinite"), cert_(std::move(cert)) {}
  const PsdCertificate& certificate() const { return cert_; }

 private:
  PsdCertificate cert_;
};

/// Rank of a squared norm ||h||^2: the rank of its PSD coefficient matrix,
/// which is the least number of squares in any representation.
inline std::size_t squared_norm_rank(const BiForm& r) {
  PsdCertificate cert = is_psd(coefficient_matrix(r));
  if (!cert.psd) throw NotPositiveSemidefinite(std::move(cert));
  std::size_t rank = 0;
  for (const auto& d : cert.diagonal) rank += sgn(d) > 0;
  return rank;
}

}  // namespace hsos
