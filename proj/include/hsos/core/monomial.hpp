#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hsos/core/ring.hpp"

namespace hsos {

/// Exponent vector z^alpha. Ordering via operator<=> is plain lexicographic
/// on the exponents and only serves as a storage key; term orders live in
/// MonomialOrder.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t n) : exps_(n, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t n, std::size_t k, Exponent power = 1) {
    Monomial m(n);
    m.exps_[k] = power;
    return m;
  }

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t k) const { return exps_[k]; }
  Exponent& operator[](std::size_t k) { return exps_[k]; }
  const std::vector<Exponent>& exponents() const { return exps_; }

  unsigned degree() const {
    unsigned d = 0;
    for (auto e : exps_) d += e;
    return d;
  }

  bool is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
  }

  bool divides(const Monomial& other) const {
    for (std::size_t k = 0; k < exps_.size(); ++k) {
      if (exps_[k] > other.exps_[k]) return false;
    }
    return true;
  }

  /// Caller guarantees divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const {
    Monomial q(*this);
    for (std::size_t k = 0; k < exps_.size(); ++k) q.exps_[k] -= divisor.exps_[k];
    return q;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial p(*this);
    for (std::size_t k = 0; k < exps_.size(); ++k) p.exps_[k] += o.exps_[k];
    return p;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial l(a);
    for (std::size_t k = 0; k < a.exps_.size(); ++k) l.exps_[k] = std::max(a.exps_[k], b.exps_[k]);
    return l;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t k = 0; k < a.exps_.size(); ++k) {
      if (a.exps_[k] != 0 && b.exps_[k] != 0) return false;
    }
    return true;
  }

  /// True when every variable with a nonzero exponent is flagged in `allowed`.
  bool supported_in(const std::vector<bool>& allowed) const {
    for (std::size_t k = 0; k < exps_.size(); ++k) {
      if (exps_[k] != 0 && !allowed[k]) return false;
    }
    return true;
  }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// "z1^2*z3", or "1" for the unit monomial.
  std::string str(const RingContext& ring) const {
    std::string out;
    for (std::size_t k = 0; k < exps_.size(); ++k) {
      if (exps_[k] == 0) continue;
      if (!out.empty()) out += "*";
      out += ring.name(k);
      if (exps_[k] > 1) out += "^" + std::to_string(exps_[k]);
    }
    return out.empty() ? "1" : out;
  }

 private:
  std::vector<Exponent> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ULL;
    for (auto e : m.exponents()) h = (h ^ e) * 1099511628211ULL;
    return h;
  }
};

}  // namespace hsos
