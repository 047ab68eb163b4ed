#pragma once

#include <random>
#include <string>
#include <vector>

#include "hsos/core/parse.hpp"
#include "hsos/groebner/ideal_ops.hpp"
#include "hsos/hermitian/biform.hpp"

namespace hsos {

/// A pair (I+ = <plus>, g) with the generators and g forms of one degree,
/// linearly independent together, and g outside I+.
struct CorpusEntry {
  std::string name;
  RingContext ring;
  std::vector<Polynomial> plus;
  Polynomial g;

  unsigned degree() const { return g.degree(); }
};

namespace detail {

inline CorpusEntry corpus_entry(std::string name, std::size_t n, const char* plus, const char* g) {
  RingContext ring = RingContext::numbered(n);
  return {std::move(name), ring, parse_polynomial_list(plus, ring), parse_polynomial(g, ring)};
}

// Sparse random form of degree m with integer coefficients in [-2, 2]; the
// generator is consumed directly so the sequence is identical everywhere.
inline Polynomial corpus_random_form(std::mt19937& rng, const RingContext& ring, unsigned m) {
  auto basis = monomials_of_degree(ring, m);
  Polynomial p(ring);
  while (p.is_zero()) {
    for (const auto& mono : basis) {
      if (rng() % 3 != 0) continue;
      long c = static_cast<long>(rng() % 5) - 2;
      p.add_term(mono, GaussRational(c));
    }
  }
  return p;
}

}  // namespace detail

/// Fixed instances with known answers followed by ten seeded random ones.
inline std::vector<CorpusEntry> builtin_corpus() {
  using detail::corpus_entry;
  std::vector<CorpusEntry> out = {
      corpus_entry("four-variable-quadrics", 4, "[z4^2, z2*z3 + z1*z4, z2^2 + z2*z4]", "z2^2"),
      corpus_entry("four-variable-quadrics-other-g", 4, "[z4^2, z2*z3 + z1*z4, z2^2 + z2*z4]", "z1^2"),
      corpus_entry("two-squares-mixed-term", 2, "[z1^2, z2^2]", "z1*z2"),
      corpus_entry("principal-squares", 2, "[z1^2]", "z2^2"),
      corpus_entry("principal-linear", 2, "[z1]", "z2"),
      corpus_entry("two-linear-of-three", 3, "[z1, z2]", "z3"),
      corpus_entry("three-squares-two-mixed", 3, "[z1^2, z2^2, z3^2, z1*z3, z2*z3]", "z1*z2"),
      corpus_entry("two-squares-in-three", 3, "[z1^2, z2^2]", "z1*z2"),
      corpus_entry("quadrics-but-one", 4, "[z1^2, z2^2, z3^2, z4^2, z1*z3, z1*z4, z2*z3, z2*z4, z3*z4]",
                   "z1*z2"),
      corpus_entry("cubes", 3, "[z1^3, z2^3, z3^3]", "z1*z2*z3"),
      corpus_entry("binary-cubics", 2, "[z1^3, z1^2*z2, z2^3]", "z1*z2^2"),
  };
  std::mt19937 rng(20240601);
  for (int k = 0; out.size() < 21; ++k) {
    std::size_t n = 3 + static_cast<std::size_t>(k % 2);
    unsigned m = 1 + static_cast<unsigned>(k % 3 == 0 ? 0 : 1);
    RingContext ring = RingContext::numbered(n);
    std::size_t p = 1 + rng() % (n - 1);
    std::vector<Polynomial> plus;
    for (std::size_t j = 0; j < p; ++j) plus.push_back(detail::corpus_random_form(rng, ring, m));
    Polynomial g = detail::corpus_random_form(rng, ring, m);
    std::vector<Polynomial> all = plus;
    all.push_back(g);
    if (!linearly_independent(all)) continue;
    out.push_back({"random-" + std::to_string(out.size() - 10), ring, plus, g});
  }
  return out;
}

/// Bihomogeneous forms for necessity checks: C ||f||^2 - |g|^2 for several C
/// on every corpus entry, plus a few forms with trivial or mixed signatures.
inline std::vector<std::pair<std::string, BiForm>> builtin_form_corpus() {
  std::vector<std::pair<std::string, BiForm>> out;
  for (const auto& e : builtin_corpus()) {
    for (long c : {1L, 4L, 8L, 64L, 1024L}) {
      std::vector<Rational> weights(e.plus.size(), Rational(c));
      weights.push_back(Rational(-1));
      std::vector<Polynomial> forms = e.plus;
      forms.push_back(e.g);
      out.emplace_back(e.name + "/C=" + std::to_string(c),
                       weighted_squares(e.ring, e.degree(), weights, forms));
    }
  }
  for (std::size_t n = 2; n <= 4; ++n) {
    RingContext ring = RingContext::numbered(n);
    std::vector<Polynomial> vars;
    for (std::size_t j = 0; j < n; ++j) vars.push_back(Polynomial::variable(ring, j));
    out.emplace_back("norm-" + std::to_string(n), squared_norm_of_map(ring, vars));
  }
  RingContext r2 = RingContext::numbered(2);
  out.emplace_back("difference-of-squares",
                   weighted_squares(r2, 1, {Rational(1), Rational(-1)}, parse_polynomial_list("[z1, z2]", r2)));
  out.emplace_back("mixed-quadratic", weighted_squares(r2, 2, {Rational(3), Rational(1), Rational(-1)},
                                                       parse_polynomial_list("[z1^2, z2^2 + i*z1*z2, z1*z2]", r2)));
  return out;
}

}  // namespace hsos
