#pragma once

#include <algorithm>
#include <cstddef>
#include <unordered_map>
#include <vector>

#include "hsos/core/linalg.hpp"
#include "hsos/core/polynomial.hpp"

namespace hsos {

/// All monomials of total degree d in n variables, grevlex-descending.
/// This order is fixed: coefficient vectors and coefficient matrices are
/// indexed by it.
inline std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  Monomial m(n);
  // Enumerate exponent vectors recursively, then sort.
  auto rec = [&](auto&& self, std::size_t k, unsigned left) -> void {
    if (k + 1 == n) {
      m[k] = left;
      out.push_back(m);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      m[k] = e;
      self(self, k + 1, left - e);
    }
  };
  rec(rec, 0, d);
  auto order = MonomialOrder::grevlex();
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
  return out;
}

inline std::vector<Monomial> monomials_of_degree(const RingContext& ring, unsigned d) {
  return monomials_of_degree(ring.n(), d);
}

/// Monomial basis of the degree-d piece R_d with index lookup.
class GradedBasis {
 public:
  GradedBasis(const RingContext& ring, unsigned d)
      : ring_(ring), degree_(d), monomials_(monomials_of_degree(ring, d)) {
    for (std::size_t k = 0; k < monomials_.size(); ++k) index_.emplace(monomials_[k], k);
  }

  const RingContext& ring() const { return ring_; }
  unsigned degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  const Monomial& operator[](std::size_t k) const { return monomials_[k]; }
  std::size_t index(const Monomial& m) const { return index_.at(m); }

  /// Coordinates of a homogeneous degree-d polynomial (or zero).
  Vector coordinates(const Polynomial& p) const {
    require_same_ring(ring_, p.ring());
    Vector v(monomials_.size());
    for (const auto& [m, c] : p.terms()) {
      if (m.degree() != degree_) {
        throw DomainError("polynomial is not homogeneous of degree " + std::to_string(degree_));
      }
      v[index_.at(m)] = c;
    }
    return v;
  }

  Polynomial polynomial(const Vector& v) const {
    Polynomial p(ring_);
    for (std::size_t k = 0; k < v.size(); ++k) p.add_term(monomials_[k], v[k]);
    return p;
  }

 private:
  RingContext ring_;
  unsigned degree_;
  std::vector<Monomial> monomials_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

inline Vector coefficient_vector(const Polynomial& p, unsigned d) {
  return GradedBasis(p.ring(), d).coordinates(p);
}

/// True when the polynomials are linearly independent over Q(i).
inline bool linearly_independent(const std::vector<Polynomial>& polys) {
  if (polys.empty()) return true;
  // Work in the span of every monomial that occurs.
  std::vector<Monomial> support;
  for (const auto& p : polys) {
    for (const auto& [m, c] : p.terms()) support.push_back(m);
  }
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  EchelonSpace space(support.size());
  for (const auto& p : polys) {
    Vector v(support.size());
    for (const auto& [m, c] : p.terms()) {
      auto it = std::lower_bound(support.begin(), support.end(), m);
      v[static_cast<std::size_t>(it - support.begin())] = c;
    }
    if (!space.insert(v)) return false;
  }
  return true;
}

}  // namespace hsos
