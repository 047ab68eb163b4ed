#pragma once

#include <cstddef>
#include <string>

#include "hsos/core/error.hpp"
#include "hsos/core/monomial.hpp"

namespace hsos {

/// Term order on monomials.
///
///  - lex:      compare exponents left to right, larger first exponent wins.
///  - grevlex:  larger total degree wins; ties go to the monomial whose last
///              nonzero entry of (a - b) is negative.
///  - block(k): grevlex on the first k variables, ties broken by grevlex on
///              the remaining variables. The first block is eliminated.
class MonomialOrder {
 public:
  enum class Kind { Lex, Grevlex, Block };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
  static MonomialOrder block(std::size_t first_block) {
    return MonomialOrder(Kind::Block, first_block);
  }

  static MonomialOrder parse(const std::string& name) {
    if (name == "lex") return lex();
    if (name == "grevlex") return grevlex();
    throw DomainError("unknown monomial order '" + name + "' (expected lex or grevlex)");
  }

  Kind kind() const { return kind_; }
  std::size_t block_size() const { return block_; }

  std::string name() const {
    switch (kind_) {
      case Kind::Lex:
        return "lex";
      case Kind::Grevlex:
        return "grevlex";
      case Kind::Block:
        return "block(" + std::to_string(block_) + ")";
    }
    return "?";
  }

  /// Three-way comparison: negative if a < b, zero if equal, positive if a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::Lex:
        for (std::size_t k = 0; k < a.size(); ++k) {
          if (a[k] != b[k]) return a[k] > b[k] ? 1 : -1;
        }
        return 0;
      case Kind::Grevlex:
        return grevlex_range(a, b, 0, a.size());
      case Kind::Block: {
        int c = grevlex_range(a, b, 0, block_);
        return c != 0 ? c : grevlex_range(a, b, block_, a.size());
      }
    }
    return 0;
  }

  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.block_ == b.block_;
  }

 private:
  MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}

  static int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                           std::size_t hi) {
    unsigned da = 0, db = 0;
    for (std::size_t k = lo; k < hi; ++k) {
      da += a[k];
      db += b[k];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t k = hi; k-- > lo;) {
      if (a[k] != b[k]) return a[k] < b[k] ? 1 : -1;
    }
    return 0;
  }

  Kind kind_;
  std::size_t block_;
};

}  // namespace hsos
