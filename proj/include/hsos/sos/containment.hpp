#pragma once

#include <optional>
#include <vector>

#include "hsos/groebner/ideal_ops.hpp"
#include "hsos/hermitian/inertia.hpp"

namespace hsos {

/// I+ and I- generated by the positive- and negative-weight forms of a
/// holomorphic decomposition of r, together with the degree m of r.
struct FormIdeals {
  Ideal plus;
  Ideal minus;
  unsigned m;
};

inline FormIdeals ideals_from_form(const BiForm& r) {
  if (r.is_zero()) throw DomainError("zero form has no decomposition");
  HoloDecomposition d = holomorphic_decomposition(r);
  return {Ideal(r.ring(), d.positive_forms()), Ideal(r.ring(), d.negative_forms()), r.degree()};
}

namespace detail {

inline void require_generated_in_degree(const Ideal& ideal, unsigned m, const char* which) {
  for (const auto& g : ideal.generators()) {
    if (!g.is_homogeneous() || g.degree() != m) {
      throw HypothesisViolation(std::string(which) + " generator " + g.str() +
                                " is not homogeneous of degree " + std::to_string(m));
    }
  }
}

}  // namespace detail

/// I+ : g equals the maximal ideal.
inline bool colon_is_maximal(const Ideal& plus, const Polynomial& g) {
  return ideal_equal(colon_poly(plus, g), Ideal::maximal(plus.ring()));
}

/// I-_{m+1} ⊆ I+_{m+1} for ideals generated in degree m, with no generator of
/// I- in I+. When I- is principal the answer is cross-checked against
/// I+ : g = maximal ideal.
inline bool containment_check(const Ideal& plus, const Ideal& minus, unsigned m) {
  require_same_ring(plus.ring(), minus.ring());
  detail::require_generated_in_degree(plus, m, "I+");
  detail::require_generated_in_degree(minus, m, "I-");
  for (const auto& g : minus.generators()) {
    if (contains(plus, g)) throw HypothesisViolation(g.str() + " already lies in I+");
  }
  bool contained = graded_containment(plus, minus, m + 1);
  if (minus.size() == 1 && colon_is_maximal(plus, minus.generators().front()) != contained) {
    throw InternalError("graded containment disagrees with the colon ideal test");
  }
  return contained;
}

/// Both sides of "r ||z||^2 a squared norm implies I-_{m+1} ⊆ I+_{m+1}".
struct NecessaryCondition {
  FormIdeals ideals;
  bool product_psd = false;
  PsdCertificate certificate;
  bool containment = false;

  bool implication_holds() const { return !product_psd || containment; }
};

inline NecessaryCondition necessary_condition(const BiForm& r) {
  FormIdeals ideals = ideals_from_form(r);
  PsdCertificate cert = is_psd(coefficient_matrix(multiply_by_norm(r)));
  bool contained = graded_containment(ideals.plus, ideals.minus, ideals.m + 1);
  bool psd = cert.psd;
  return {std::move(ideals), psd, std::move(cert), contained};
}

/// C ||f||^2 - |g|^2.
inline BiForm scaled_difference(const std::vector<Polynomial>& f, const Polynomial& g,
                                const Rational& c) {
  std::vector<Rational> weights(f.size(), c);
  weights.push_back(Rational(-1));
  std::vector<Polynomial> forms = f;
  forms.push_back(g);
  return weighted_squares(g.ring(), g.degree(), weights, forms);
}

struct ScalingResult {
  enum class Status { Found, Impossible, CapReached };
  Status status = Status::Impossible;
  Rational c;
  /// Exact PSD certificate of (C ||f||^2 - |g|^2) ||z||^2 when found.
  PsdCertificate certificate;
  /// Every candidate tried, with its PSD verdict.
  std::vector<std::pair<Rational, bool>> path;

  std::string status_name() const {
    switch (status) {
      case Status::Found:
        return "found";
      case Status::CapReached:
        return "cap-reached";
      case Status::Impossible:
        break;
    }
    return "impossible";
  }
};

inline void require_scaling_inputs(const std::vector<Polynomial>& f, const Polynomial& g) {
  if (f.empty()) throw HypothesisViolation("I+ needs at least one generator");
  if (g.is_zero() || !g.is_homogeneous()) throw HypothesisViolation("g must be a nonzero form");
  for (const auto& p : f) require_same_ring(g.ring(), p.ring());
  unsigned m = g.degree();
  detail::require_generated_in_degree(Ideal(g.ring(), f), m, "I+");
  std::vector<Polynomial> all = f;
  all.push_back(g);
  if (all.size() != Ideal(g.ring(), f).size() + 1 || !linearly_independent(all)) {
    throw HypothesisViolation("generators of I+ together with g are not linearly independent");
  }
}

/// Smallest C in 1, 2, 4, ..., 2^64 with (C ||f||^2 - |g|^2) ||z||^2 PSD.
/// Impossible when the containment condition already fails.
inline ScalingResult find_scaling(const std::vector<Polynomial>& f, const Polynomial& g) {
  require_scaling_inputs(f, g);
  ScalingResult out;
  const RingContext& ring = g.ring();
  if (!containment_check(Ideal(ring, f), Ideal(ring, {g}), g.degree())) return out;
  Rational c(1);
  for (int e = 0; e <= 64; ++e, c *= 2) {
    PsdCertificate cert = is_psd(coefficient_matrix(multiply_by_norm(scaled_difference(f, g, c))));
    out.path.emplace_back(c, cert.psd);
    if (cert.psd) {
      out.status = ScalingResult::Status::Found;
      out.c = c;
      out.certificate = std::move(cert);
      return out;
    }
  }
  out.status = ScalingResult::Status::CapReached;
  return out;
}

}  // namespace hsos
