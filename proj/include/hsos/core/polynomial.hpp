#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hsos/core/gauss_rational.hpp"
#include "hsos/core/monomial.hpp"
#include "hsos/core/monomial_order.hpp"
#include "hsos/core/ring.hpp"

namespace hsos {

struct Term {
  Monomial monomial;
  GaussRational coefficient;
};

/// Sparse multivariate polynomial over Q(i). Terms are stored in a map keyed
/// by exponent vector; no stored coefficient is ever zero.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, GaussRational>;

  explicit Polynomial(RingContext ring) : ring_(std::move(ring)) {}

  static Polynomial constant(const RingContext& ring, const GaussRational& c) {
    return monomial(ring, Monomial(ring.n()), c);
  }
  static Polynomial variable(const RingContext& ring, std::size_t k) {
    return monomial(ring, Monomial::variable(ring.n(), k), GaussRational(1));
  }
  static Polynomial monomial(const RingContext& ring, Monomial m, const GaussRational& c) {
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
    return p;
  }

  const RingContext& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  GaussRational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussRational() : it->second;
  }

  /// Adds c * m in place.
  void add_term(const Monomial& m, const GaussRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Total degree. The zero polynomial has no degree.
  unsigned degree() const {
    if (is_zero()) throw DomainError("the zero polynomial has no degree");
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  /// True for the zero polynomial and for polynomials whose terms share one degree.
  bool is_homogeneous() const {
    if (is_zero()) return true;
    unsigned d = terms_.begin()->first.degree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return t.first.degree() == d; });
  }

  bool is_constant() const {
    return is_zero() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }

  Term leading_term(const MonomialOrder& order) const {
    if (is_zero()) throw DomainError("leading term of the zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
      if (order.greater(it->first, best->first)) best = it;
    }
    return {best->first, best->second};
  }

  /// Terms sorted descending under `order`.
  std::vector<Term> sorted_terms(const MonomialOrder& order) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) out.push_back({m, c});
    std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) {
      return order.greater(a.monomial, b.monomial);
    });
    return out;
  }

  Polynomial operator-() const {
    Polynomial p(ring_);
    for (const auto& [m, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), m, -c);
    return p;
  }

  Polynomial& operator+=(const Polynomial& o) {
    require_same_ring(ring_, o.ring_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    require_same_ring(ring_, o.ring_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    Polynomial p(a.ring_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
    }
    return p;
  }

  Polynomial scaled(const GaussRational& c) const {
    Polynomial p(ring_);
    if (c.is_zero()) return p;
    for (const auto& [m, v] : terms_) p.terms_.emplace_hint(p.terms_.end(), m, v * c);
    return p;
  }

  Polynomial shifted(const Monomial& u) const {
    Polynomial p(ring_);
    for (const auto& [m, v] : terms_) p.terms_.emplace(m * u, v);
    return p;
  }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(ring_, GaussRational(1));
    for (unsigned k = 0; k < e; ++k) result = result * *this;
    return result;
  }

  /// Coefficient-wise complex conjugate.
  Polynomial conj() const {
    Polynomial p(ring_);
    for (const auto& [m, v] : terms_) p.terms_.emplace_hint(p.terms_.end(), m, v.conj());
    return p;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Canonical text in grevlex-descending term order, re-parseable by
  /// parse_polynomial.
  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : sorted_terms(MonomialOrder::grevlex())) {
      std::string mono = m.is_one() ? "" : m.str(ring_);
      bool negative_real = c.is_real() && sgn(c.re()) < 0;
      bool negative_imag = sgn(c.re()) == 0 && sgn(c.im()) < 0;
      GaussRational mag = (negative_real || negative_imag) ? -c : c;
      std::string body;
      if (mono.empty()) {
        body = mag.str();
      } else if (mag.is_one()) {
        body = mono;
      } else {
        body = mag.str() + "*" + mono;
      }
      if (first) {
        out = (negative_real || negative_imag) ? "-" + body : body;
        first = false;
      } else {
        out += (negative_real || negative_imag) ? " - " : " + ";
        out += body;
      }
    }
    return out;
  }

 private:
  RingContext ring_;
  TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

}  // namespace hsos
