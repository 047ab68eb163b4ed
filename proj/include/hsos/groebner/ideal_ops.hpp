#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hsos/core/graded.hpp"
#include "hsos/groebner/buchberger.hpp"

namespace hsos {

inline GroebnerBasis groebner_basis(const Ideal& ideal,
                                    const MonomialOrder& order = MonomialOrder::grevlex()) {
  return buchberger(ideal, order);
}

/// Ideal membership: NF(f, GB(I)) = 0.
inline bool contains(const Ideal& ideal, const Polynomial& f) {
  require_same_ring(ideal.ring(), f.ring());
  if (f.is_zero()) return true;
  if (ideal.is_zero()) return false;
  return groebner_basis(ideal).contains(f);
}

inline bool is_unit_ideal(const Ideal& ideal) {
  return !ideal.is_zero() && groebner_basis(ideal).is_unit();
}

/// Equality of ideals via their reduced grevlex Groebner bases.
inline bool ideal_equal(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
  return groebner_basis(a).basis() == groebner_basis(b).basis();
}

namespace detail {

inline Polynomial embed_with_leading_variable(const Polynomial& p, const RingContext& ext) {
  Polynomial out(ext);
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Exponent> e{0};
    e.insert(e.end(), m.exponents().begin(), m.exponents().end());
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

inline std::string fresh_variable(const RingContext& ring) {
  std::string name = "_t";
  while (ring.index_of(name)) name += "_";
  return name;
}

}  // namespace detail

/// I ∩ J by elimination: the t-free part of the Groebner basis of
/// t*I + (1 - t)*J under a block order with t in its own leading block.
inline Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  const RingContext& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal(ring);

  RingContext ext = ring.with_leading_variable(detail::fresh_variable(ring));
  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::constant(ext, GaussRational(1)) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * detail::embed_with_leading_variable(f, ext));
  for (const auto& g : b.generators()) {
    gens.push_back(one_minus_t * detail::embed_with_leading_variable(g, ext));
  }
  GroebnerBasis gb = buchberger(Ideal(ext, std::move(gens)), MonomialOrder::block(1));

  std::vector<Polynomial> out;
  for (const auto& p : gb.basis()) {
    bool t_free = true;
    for (const auto& [m, c] : p.terms()) {
      if (m[0] != 0) {
        t_free = false;
        break;
      }
    }
    if (!t_free) continue;
    Polynomial q(ring);
    for (const auto& [m, c] : p.terms()) {
      q.add_term(Monomial(std::vector<Monomial::Exponent>(m.exponents().begin() + 1,
                                                          m.exponents().end())),
                 c);
    }
    out.push_back(std::move(q));
  }
  return Ideal(ring, std::move(out));
}

/// Exact quotient p / g; throws InternalError if g does not divide p.
inline Polynomial divide_exact(const Polynomial& p, const Polynomial& g,
                               const MonomialOrder& order = MonomialOrder::grevlex()) {
  require_same_ring(p.ring(), g.ring());
  if (g.is_zero()) throw DivisionByZero();
  detail::SortedPoly rest = detail::to_sorted(p, order);
  detail::SortedPoly div = detail::to_sorted(g, order);
  Polynomial quotient(p.ring());
  while (!rest.empty()) {
    const Term& lead = rest.front();
    if (!div.front().monomial.divides(lead.monomial)) {
      throw InternalError("inexact polynomial division");
    }
    GaussRational c = lead.coefficient / div.front().coefficient;
    Monomial u = lead.monomial / div.front().monomial;
    quotient.add_term(u, c);
    rest = detail::sub_mul(rest, c, u, div, order);
  }
  return quotient;
}

/// I : <g> = (I ∩ <g>) / g.
inline Ideal colon_poly(const Ideal& ideal, const Polynomial& g) {
  require_same_ring(ideal.ring(), g.ring());
  if (g.is_zero()) throw DomainError("colon by the zero polynomial");
  if (ideal.is_zero()) return Ideal(ideal.ring());
  Ideal meet = intersect(ideal, Ideal::principal(g));
  std::vector<Polynomial> out;
  for (const auto& h : meet.generators()) out.push_back(divide_exact(h, g));
  return Ideal(ideal.ring(), std::move(out));
}

/// I : J as the intersection of I : <g> over the generators g of J.
inline Ideal colon_ideal(const Ideal& ideal, const Ideal& by) {
  require_same_ring(ideal.ring(), by.ring());
  if (by.is_zero()) throw DomainError("colon by the zero ideal");
  std::optional<Ideal> acc;
  for (const auto& g : by.generators()) {
    Ideal c = colon_poly(ideal, g);
    acc = acc ? intersect(*acc, c) : c;
  }
  return *acc;
}

/// Outcome of the socle test for the maximal ideal.
struct SocleResult {
  bool associated = false;
  /// Minimal-degree element of (I : m) \ I with I : witness = m.
  std::optional<Polynomial> witness;
  /// Generators of I : m.
  Ideal colon;
};

/// Tests whether the homogeneous maximal ideal m is an associated prime of
/// R/I, i.e. whether the socle (I : m) / I is nonzero.
inline SocleResult maximal_ideal_associated(const Ideal& ideal) {
  if (!ideal.is_homogeneous()) throw DomainError("socle test needs a homogeneous ideal");
  if (is_unit_ideal(ideal)) throw DomainError("socle test needs a proper ideal");
  const RingContext& ring = ideal.ring();
  Ideal m = Ideal::maximal(ring);
  Ideal colon = colon_ideal(ideal, m);
  SocleResult result{false, std::nullopt, colon};
  if (ideal.is_zero()) return result;
  GroebnerBasis gb = groebner_basis(ideal);
  std::optional<Polynomial> best;
  for (const auto& f : colon.generators()) {
    if (gb.contains(f)) continue;
    if (!best || f.degree() < best->degree()) best = f;
  }
  if (!best) return result;
  if (!ideal_equal(colon_poly(ideal, *best), m)) {
    throw InternalError("socle witness does not have annihilator m");
  }
  result.associated = true;
  result.witness = best;
  return result;
}

/// Krull dimension of R/I: the largest set of variables containing the
/// support of no leading monomial of a Groebner basis of I.
inline unsigned krull_dimension(const Ideal& ideal) {
  const std::size_t n = ideal.ring().n();
  if (ideal.is_zero()) return static_cast<unsigned>(n);
  GroebnerBasis gb = groebner_basis(ideal);
  if (gb.is_unit()) throw DomainError("the unit ideal has no Krull dimension");
  auto lms = gb.leading_monomials();
  if (n > 24) throw DomainError("too many variables for the independent-set search");
  unsigned best = 0;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    auto size = static_cast<unsigned>(__builtin_popcountl(mask));
    if (size <= best) continue;
    std::vector<bool> allowed(n);
    for (std::size_t k = 0; k < n; ++k) allowed[k] = (mask >> k) & 1UL;
    bool independent = std::none_of(lms.begin(), lms.end(),
                                    [&](const Monomial& lm) { return lm.supported_in(allowed); });
    if (independent) best = size;
  }
  return best;
}

inline unsigned codimension(const Ideal& ideal) {
  return static_cast<unsigned>(ideal.ring().n()) - krull_dimension(ideal);
}

/// Degree-d component of a homogeneous ideal as a subspace of R_d, spanned by
/// {g * u : g generator of degree e <= d, u monomial of degree d - e}.
inline EchelonSpace graded_piece(const Ideal& ideal, const GradedBasis& basis) {
  if (!ideal.is_homogeneous()) throw DomainError("graded pieces need a homogeneous ideal");
  EchelonSpace space(basis.size());
  const unsigned d = basis.degree();
  for (const auto& g : ideal.generators()) {
    unsigned e = g.degree();
    if (e > d) continue;
    for (const auto& u : monomials_of_degree(ideal.ring(), d - e)) {
      space.insert(basis.coordinates(g.shifted(u)));
      if (space.dim() == basis.size()) return space;
    }
  }
  return space;
}

inline std::size_t graded_piece_dim(const Ideal& ideal, unsigned d) {
  return graded_piece(ideal, GradedBasis(ideal.ring(), d)).dim();
}

/// J_d ⊆ I_d, decided by linear algebra in degree d only.
inline bool graded_containment(const Ideal& ideal, const Ideal& sub, unsigned d) {
  require_same_ring(ideal.ring(), sub.ring());
  if (!sub.is_homogeneous()) throw DomainError("graded containment needs homogeneous ideals");
  GradedBasis basis(ideal.ring(), d);
  EchelonSpace space = graded_piece(ideal, basis);
  for (const auto& g : sub.generators()) {
    unsigned e = g.degree();
    if (e > d) continue;
    for (const auto& u : monomials_of_degree(ideal.ring(), d - e)) {
      if (!space.contains(basis.coordinates(g.shifted(u)))) return false;
    }
  }
  return true;
}

/// Number of minimal generators of a homogeneous ideal: summed over degrees
/// e, dim I_e minus the dimension of the part generated in lower degrees.
inline std::size_t minimal_generator_count(const Ideal& ideal) {
  if (!ideal.is_homogeneous()) throw DomainError("minimal generators need a homogeneous ideal");
  std::vector<unsigned> degrees;
  for (const auto& g : ideal.generators()) degrees.push_back(g.degree());
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  std::size_t count = 0;
  for (unsigned e : degrees) {
    GradedBasis basis(ideal.ring(), e);
    std::vector<Polynomial> lower;
    for (const auto& g : ideal.generators()) {
      if (g.degree() < e) lower.push_back(g);
    }
    std::size_t below = graded_piece(Ideal(ideal.ring(), lower), basis).dim();
    count += graded_piece(ideal, basis).dim() - below;
  }
  return count;
}

/// A homogeneous ideal is a complete intersection when its codimension equals
/// its number of generators. The generators must be minimal; a redundant
/// generating set is reported with NonMinimalGenerators.
inline bool is_complete_intersection(const Ideal& ideal) {
  if (!ideal.is_homogeneous()) throw DomainError("complete intersection test needs a homogeneous ideal");
  if (is_unit_ideal(ideal)) throw DomainError("the unit ideal is not proper");
  std::size_t minimal = minimal_generator_count(ideal);
  if (minimal != ideal.size()) {
    throw NonMinimalGenerators("generating set has " + std::to_string(ideal.size()) +
                               " elements but only " + std::to_string(minimal) +
                               " minimal generators");
  }
  return codimension(ideal) == ideal.size();
}

}  // namespace hsos
