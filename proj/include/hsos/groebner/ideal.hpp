#pragma once

#include <string>
#include <vector>

#include "hsos/core/parse.hpp"
#include "hsos/core/polynomial.hpp"

namespace hsos {

/// An ideal given by generators. The generator list is kept as given (for
/// reporting) with exact zeros dropped.
class Ideal {
 public:
  explicit Ideal(RingContext ring) : ring_(std::move(ring)) {}

  Ideal(RingContext ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
    for (auto& g : generators) {
      require_same_ring(ring_, g.ring());
      if (!g.is_zero()) generators_.push_back(std::move(g));
    }
  }

  static Ideal parse(const RingContext& ring, const std::vector<std::string>& texts) {
    std::vector<Polynomial> gens;
    for (const auto& t : texts) gens.push_back(parse_polynomial(t, ring));
    return Ideal(ring, std::move(gens));
  }

  /// The homogeneous maximal ideal <x_1, ..., x_n>.
  static Ideal maximal(const RingContext& ring) {
    std::vector<Polynomial> gens;
    for (std::size_t k = 0; k < ring.n(); ++k) gens.push_back(Polynomial::variable(ring, k));
    return Ideal(ring, std::move(gens));
  }

  static Ideal principal(const Polynomial& g) { return Ideal(g.ring(), {g}); }

  const RingContext& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  bool is_zero() const { return generators_.empty(); }

  bool is_homogeneous() const {
    for (const auto& g : generators_) {
      if (!g.is_homogeneous()) return false;
    }
    return true;
  }

  std::string str() const {
    std::string out = "<";
    for (std::size_t k = 0; k < generators_.size(); ++k) {
      if (k) out += ", ";
      out += generators_[k].str();
    }
    return out + ">";
  }

 private:
  RingContext ring_;
  std::vector<Polynomial> generators_;
};

}  // namespace hsos
