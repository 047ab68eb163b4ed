#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hsos/core/graded.hpp"
#include "hsos/core/polynomial.hpp"

namespace hsos {

/// Real bihomogeneous form r(z, zbar) = sum c_{a,b} z^a zbar^b of bidegree
/// (m, m). Hermitian symmetry c_{b,a} = conj(c_{a,b}) is structural: only the
/// entry with a <= b (storage order of Monomial) is kept and the mirror is
/// implied.
class BiForm {
 public:
  using Key = std::pair<Monomial, Monomial>;

  BiForm(RingContext ring, unsigned m) : ring_(std::move(ring)), m_(m) {}

  const RingContext& ring() const { return ring_; }
  unsigned degree() const { return m_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Stored entries, a <= b.
  const std::map<Key, GaussRational>& stored() const { return coeffs_; }

  /// c_{a,b}, with the mirror resolved.
  GaussRational coefficient(const Monomial& a, const Monomial& b) const {
    bool mirrored = b < a;
    auto it = coeffs_.find(mirrored ? Key{b, a} : Key{a, b});
    if (it == coeffs_.end()) return {};
    return mirrored ? it->second.conj() : it->second;
  }

  /// r += c z^a zbar^b + conj(c) z^b zbar^a (a single real term c|z^a|^2
  /// when a == b, in which case c must be real).
  void add(const Monomial& a, const Monomial& b, const GaussRational& c) {
    if (a.size() != ring_.n() || b.size() != ring_.n()) throw DomainError("monomial arity mismatch");
    if (a.degree() != m_ || b.degree() != m_) {
      throw DomainError("bihomogeneous term of the wrong bidegree");
    }
    if (a == b && !c.is_real()) {
      throw DomainError("diagonal coefficient of a Hermitian form must be real");
    }
    if (c.is_zero()) return;
    bool mirrored = b < a;
    Key key = mirrored ? Key{b, a} : Key{a, b};
    GaussRational v = mirrored ? c.conj() : c;
    auto [it, inserted] = coeffs_.emplace(key, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  BiForm& operator+=(const BiForm& o) {
    require_compatible(o);
    for (const auto& [k, c] : o.coeffs_) add(k.first, k.second, c);
    return *this;
  }
  BiForm& operator-=(const BiForm& o) {
    require_compatible(o);
    for (const auto& [k, c] : o.coeffs_) add(k.first, k.second, -c);
    return *this;
  }
  friend BiForm operator+(BiForm a, const BiForm& b) { return a += b; }
  friend BiForm operator-(BiForm a, const BiForm& b) { return a -= b; }

  BiForm scaled(const Rational& s) const {
    BiForm out(ring_, m_);
    if (sgn(s) == 0) return out;
    for (const auto& [k, c] : coeffs_) out.coeffs_.emplace(k, c * GaussRational(s));
    return out;
  }

  friend bool operator==(const BiForm& a, const BiForm& b) {
    return a.ring_ == b.ring_ && a.m_ == b.m_ && a.coeffs_ == b.coeffs_;
  }

  /// "c*z^a*conj(z^b) + ..." with both mirrors written out.
  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    auto bar = [&](const Monomial& b) {
      return b.is_one() ? std::string() : "*conj(" + b.str(ring_) + ")";
    };
    auto emit = [&](const Monomial& a, const Monomial& b, const GaussRational& c) {
      if (!out.empty()) out += " + ";
      out += c.str() + (a.is_one() ? "" : "*" + a.str(ring_)) + bar(b);
    };
    for (const auto& [k, c] : coeffs_) {
      emit(k.first, k.second, c);
      if (k.first != k.second) emit(k.second, k.first, c.conj());
    }
    return out;
  }

 private:
  void require_compatible(const BiForm& o) const {
    require_same_ring(ring_, o.ring_);
    if (m_ != o.m_) throw DomainError("bidegree mismatch");
  }

  RingContext ring_;
  unsigned m_;
  std::map<Key, GaussRational> coeffs_;
};

/// sum_j w_j |L_j(z)|^2 for homogeneous forms L_j of degree m.
inline BiForm weighted_squares(const RingContext& ring, unsigned m,
                               const std::vector<Rational>& weights,
                               const std::vector<Polynomial>& forms) {
  if (weights.size() != forms.size()) throw DomainError("weights and forms differ in length");
  BiForm out(ring, m);
  for (std::size_t k = 0; k < forms.size(); ++k) {
    require_same_ring(ring, forms[k].ring());
    if (forms[k].is_zero()) continue;
    if (!forms[k].is_homogeneous() || forms[k].degree() != m) {
      throw DomainError("form is not homogeneous of degree " + std::to_string(m));
    }
    GaussRational w(weights[k]);
    for (const auto& [a, ca] : forms[k].terms()) {
      for (const auto& [b, cb] : forms[k].terms()) {
        if (b < a) continue;  // the mirror is implied
        out.add(a, b, w * ca * cb.conj());
      }
    }
  }
  return out;
}

/// ||h(z)||^2 = sum_k |h_k(z)|^2. All nonzero components must be homogeneous
/// of one common degree; the empty map gives the zero form.
inline BiForm squared_norm_of_map(const RingContext& ring, const std::vector<Polynomial>& h) {
  std::optional<unsigned> m;
  for (const auto& p : h) {
    require_same_ring(ring, p.ring());
    if (p.is_zero()) continue;
    if (!p.is_homogeneous()) throw DomainError("map component is not homogeneous");
    if (m && *m != p.degree()) throw DomainError("map components have mixed degrees");
    m = p.degree();
  }
  return weighted_squares(ring, m.value_or(0), std::vector<Rational>(h.size(), Rational(1)), h);
}

/// r(z, zbar) * ||z||^2, of bidegree (m+1, m+1).
inline BiForm multiply_by_norm(const BiForm& r) {
  const std::size_t n = r.ring().n();
  BiForm out(r.ring(), r.degree() + 1);
  for (const auto& [key, c] : r.stored()) {
    for (std::size_t j = 0; j < n; ++j) {
      Monomial gamma = Monomial::variable(n, j);
      out.add(key.first * gamma, key.second * gamma, c);
    }
  }
  return out;
}

}  // namespace hsos
