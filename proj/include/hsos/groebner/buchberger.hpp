#pragma once

#include <algorithm>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "hsos/core/polynomial.hpp"
#include "hsos/groebner/ideal.hpp"

namespace hsos {

namespace detail {

// Polynomial as a term vector sorted descending under a fixed order. This is
// the working representation of the division algorithm.
using SortedPoly = std::vector<Term>;

inline SortedPoly to_sorted(const Polynomial& p, const MonomialOrder& order) {
  return p.sorted_terms(order);
}

inline Polynomial to_polynomial(const SortedPoly& p, const RingContext& ring) {
  Polynomial out(ring);
  for (const auto& t : p) out.add_term(t.monomial, t.coefficient);
  return out;
}

inline void make_monic(SortedPoly& p) {
  if (p.empty() || p.front().coefficient.is_one()) return;
  GaussRational inv = p.front().coefficient.inverse();
  for (auto& t : p) t.coefficient *= inv;
}

// a - c * u * b, merging two descending term lists.
inline SortedPoly sub_mul(const SortedPoly& a, const GaussRational& c, const Monomial& u,
                          const SortedPoly& b, const MonomialOrder& order) {
  SortedPoly out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial mb = b[j].monomial * u;
    if (i == a.size()) {
      out.push_back({std::move(mb), -(c * b[j].coefficient)});
      ++j;
      continue;
    }
    int cmp = order.compare(a[i].monomial, mb);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(mb), -(c * b[j].coefficient)});
      ++j;
    } else {
      GaussRational v = a[i].coefficient - c * b[j].coefficient;
      if (!v.is_zero()) out.push_back({a[i].monomial, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

// Full reduction of f by `basis`: the reducer for a term is the first basis
// element (in the given order) whose leading monomial divides it.
inline SortedPoly reduce_full(SortedPoly f, const std::vector<SortedPoly>& basis,
                              const MonomialOrder& order) {
  SortedPoly remainder;
  while (!f.empty()) {
    const Term& lead = f.front();
    const SortedPoly* reducer = nullptr;
    for (const auto& g : basis) {
      if (!g.empty() && g.front().monomial.divides(lead.monomial)) {
        reducer = &g;
        break;
      }
    }
    if (reducer == nullptr) {
      remainder.push_back(lead);
      f.erase(f.begin());
      continue;
    }
    GaussRational c = lead.coefficient / reducer->front().coefficient;
    Monomial u = lead.monomial / reducer->front().monomial;
    f = sub_mul(f, c, u, *reducer, order);
  }
  return remainder;
}

inline SortedPoly s_poly_sorted(const SortedPoly& f, const SortedPoly& g,
                                const MonomialOrder& order) {
  Monomial l = lcm(f.front().monomial, g.front().monomial);
  Monomial uf = l / f.front().monomial;
  Monomial ug = l / g.front().monomial;
  // (1/lc f) * uf * f - (1/lc g) * ug * g
  SortedPoly scaled_f;
  GaussRational inv_f = f.front().coefficient.inverse();
  for (const auto& t : f) scaled_f.push_back({t.monomial * uf, t.coefficient * inv_f});
  return sub_mul(scaled_f, g.front().coefficient.inverse(), ug, g, order);
}

}  // namespace detail

/// S(f, g) = (L / LT(f)) f - (L / LT(g)) g with L = lcm(LM(f), LM(g)).
inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                               const MonomialOrder& order) {
  require_same_ring(f.ring(), g.ring());
  if (f.is_zero() || g.is_zero()) throw DomainError("S-polynomial of a zero polynomial");
  return detail::to_polynomial(
      detail::s_poly_sorted(detail::to_sorted(f, order), detail::to_sorted(g, order), order),
      f.ring());
}

/// Remainder of f on multivariate division by `divisors`, reducing every term.
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors,
                              const MonomialOrder& order) {
  std::vector<detail::SortedPoly> basis;
  for (const auto& g : divisors) {
    require_same_ring(f.ring(), g.ring());
    if (g.is_zero()) throw DomainError("division by the zero polynomial");
    basis.push_back(detail::to_sorted(g, order));
  }
  return detail::to_polynomial(detail::reduce_full(detail::to_sorted(f, order), basis, order),
                               f.ring());
}

/// Reduced, monic Groebner basis, stored in ascending order of leading
/// monomials. The zero ideal has an empty basis.
class GroebnerBasis {
 public:
  GroebnerBasis(RingContext ring, MonomialOrder order, std::vector<detail::SortedPoly> basis)
      : ring_(std::move(ring)), order_(order), sorted_(std::move(basis)) {
    for (const auto& g : sorted_) basis_.push_back(detail::to_polynomial(g, ring_));
  }

  const RingContext& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& basis() const { return basis_; }
  std::size_t size() const { return basis_.size(); }

  bool is_unit() const { return basis_.size() == 1 && basis_.front().is_constant(); }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& g : sorted_) out.push_back(g.front().monomial);
    return out;
  }

  Polynomial reduce(const Polynomial& f) const {
    require_same_ring(ring_, f.ring());
    return detail::to_polynomial(detail::reduce_full(detail::to_sorted(f, order_), sorted_, order_),
                                 ring_);
  }

  bool contains(const Polynomial& f) const { return reduce(f).is_zero(); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.ring_ == b.ring_ && a.order_ == b.order_ && a.basis_ == b.basis_;
  }

 private:
  RingContext ring_;
  MonomialOrder order_;
  std::vector<detail::SortedPoly> sorted_;
  std::vector<Polynomial> basis_;
};

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// first) and the coprime and chain criteria, followed by interreduction.
inline GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order) {
  using detail::SortedPoly;
  std::vector<SortedPoly> g;
  for (const auto& p : ideal.generators()) {
    SortedPoly s = detail::to_sorted(p, order);
    detail::make_monic(s);
    g.push_back(std::move(s));
  }

  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 0; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pending.emplace(i, j);
  }

  auto pair_lcm = [&](const std::pair<std::size_t, std::size_t>& p) {
    return lcm(g[p.first].front().monomial, g[p.second].front().monomial);
  };

  while (!pending.empty()) {
    // Normal strategy: minimal lcm degree, then minimal lcm, then indices.
    auto best = pending.begin();
    Monomial best_lcm = pair_lcm(*best);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = pair_lcm(*it);
      unsigned dl = l.degree(), db = best_lcm.degree();
      if (dl < db || (dl == db && order.less(l, best_lcm))) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    auto [i, j] = *best;
    pending.erase(best);

    const Monomial& lm_i = g[i].front().monomial;
    const Monomial& lm_j = g[j].front().monomial;
    if (coprime(lm_i, lm_j)) continue;

    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (!g[k].front().monomial.divides(best_lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) {
        return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
      };
      chain = !pending.count(key(i, k)) && !pending.count(key(j, k));
    }
    if (chain) continue;

    SortedPoly h = detail::reduce_full(detail::s_poly_sorted(g[i], g[j], order), g, order);
    if (h.empty()) continue;
    detail::make_monic(h);
    if (h.front().monomial.is_one()) {
      SortedPoly one{{Monomial(ideal.ring().n()), GaussRational(1)}};
      return GroebnerBasis(ideal.ring(), order, {one});
    }
    g.push_back(std::move(h));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pending.emplace(k, g.size() - 1);
  }

  for (const auto& p : g) {
    if (p.front().monomial.is_one()) {
      SortedPoly one{{Monomial(ideal.ring().n()), GaussRational(1)}};
      return GroebnerBasis(ideal.ring(), order, {one});
    }
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's
  // (for equal leading monomials keep the earliest).
  std::vector<SortedPoly> minimal;
  for (std::size_t a = 0; a < g.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < g.size() && !redundant; ++b) {
      if (a == b) continue;
      const Monomial& la = g[a].front().monomial;
      const Monomial& lb = g[b].front().monomial;
      if (lb.divides(la) && (lb != la || b < a)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[a]);
  }

  // Interreduce: every tail term reduced by the other elements.
  std::vector<SortedPoly> reduced;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<SortedPoly> others;
    for (std::size_t b = 0; b < minimal.size(); ++b) {
      if (b != a) others.push_back(minimal[b]);
    }
    SortedPoly tail(minimal[a].begin() + 1, minimal[a].end());
    SortedPoly r{minimal[a].front()};
    for (auto& t : detail::reduce_full(std::move(tail), others, order)) r.push_back(std::move(t));
    detail::make_monic(r);
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const SortedPoly& x, const SortedPoly& y) {
    return order.less(x.front().monomial, y.front().monomial);
  });
  return GroebnerBasis(ideal.ring(), order, std::move(reduced));
}

}  // namespace hsos
