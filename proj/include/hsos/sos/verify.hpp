#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hsos/core/parse.hpp"
#include "hsos/sos/bounds.hpp"
#include "hsos/sos/containment.hpp"

namespace hsos {

struct StageResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Aggregated verdict of the six-stage check that an ideal I+ = <f> and a
/// form g exhibit signature (P, 1) with P < n and r ||z||^2 a squared norm.
struct SosReport {
  RingContext ring;
  unsigned m = 0;
  std::vector<Polynomial> plus;
  Polynomial g;
  std::vector<StageResult> stages;

  std::optional<Ideal> colon;
  std::optional<bool> containment;
  std::optional<ScalingResult> scaling;
  std::optional<Inertia> inertia;
  /// Rank of the squared norm (C ||f||^2 - |g|^2) ||z||^2 and its class.
  std::optional<std::size_t> rho;
  std::optional<RankClass> rho_class;

  bool passed() const {
    for (const auto& s : stages) {
      if (!s.passed) return false;
    }
    return stages.size() == 6;
  }

  std::optional<std::string> failed_stage() const {
    for (const auto& s : stages) {
      if (!s.passed) return s.name;
    }
    return std::nullopt;
  }

  std::string transcript() const {
    std::ostringstream out;
    out << "ring: " << ring.n() << " variables, forms of degree " << m << "\n";
    out << "I+ = " << Ideal(ring, plus).str() << "\n";
    out << "g = " << g.str() << "\n";
    for (std::size_t k = 0; k < stages.size(); ++k) {
      out << "(" << k + 1 << ") " << stages[k].name << ": " << (stages[k].passed ? "PASS" : "FAIL")
          << " - " << stages[k].detail << "\n";
    }
    if (rho) out << "rank of the squared norm: " << *rho << " (" << rho_class->str() << ")\n";
    out << (passed() ? "verified" : "failed at stage " + failed_stage().value_or("?")) << "\n";
    return out.str();
  }
};

struct ExampleData {
  RingContext ring;
  std::vector<Polynomial> plus;
  Polynomial g;
};

/// I+ = <z4^2, z2 z3 + z1 z4, z2^2 + z2 z4> and g = z2^2 in four variables.
inline ExampleData four_variable_example() {
  RingContext ring = RingContext::numbered(4);
  return {ring, parse_polynomial_list("[z4^2, z2*z3 + z1*z4, z2^2 + z2*z4]", ring),
          parse_polynomial("z2^2", ring)};
}

/// Runs the six stages in order and stops at the first failure:
/// g not in I+; {f, g} linearly independent; I+ : g = maximal ideal;
/// <g>_{m+1} ⊆ I+_{m+1}; a scaling C makes (C ||f||^2 - |g|^2) ||z||^2 PSD;
/// C ||f||^2 - |g|^2 has inertia (P, 1, .) with P < n.
inline SosReport verify_example(const RingContext& ring, const std::vector<Polynomial>& plus,
                                const Polynomial& g) {
  const std::size_t n = ring.n();
  if (n < 4) throw HypothesisViolation("P < n cannot occur with n <= 3 variables; need n >= 4");
  if (plus.empty()) throw HypothesisViolation("I+ needs at least one generator");
  require_same_ring(ring, g.ring());
  if (g.is_zero() || !g.is_homogeneous()) throw HypothesisViolation("g must be a nonzero form");
  const unsigned m = g.degree();
  for (const auto& f : plus) {
    require_same_ring(ring, f.ring());
    if (f.is_zero() || !f.is_homogeneous() || f.degree() != m) {
      throw HypothesisViolation("generator " + f.str() + " is not a form of degree " + std::to_string(m));
    }
  }

  SosReport rep{ring, m, plus, g, {}, {}, {}, {}, {}, {}, {}};
  Ideal iplus(ring, plus);
  auto stage = [&](const char* name, bool ok, std::string detail) {
    rep.stages.push_back({name, ok, std::move(detail)});
    return ok;
  };

  if (!stage("g-not-in-ideal", !contains(iplus, g),
             contains(iplus, g) ? g.str() + " lies in I+" : g.str() + " is not in I+")) {
    return rep;
  }

  std::vector<Polynomial> all = plus;
  all.push_back(g);
  bool independent = linearly_independent(all);
  if (!stage("linear-independence", independent,
             independent ? std::to_string(all.size()) + " forms are linearly independent"
                         : "generators of I+ together with g are linearly dependent")) {
    return rep;
  }

  // Reduced basis of the colon, largest leading monomial first.
  auto colon_basis = groebner_basis(colon_poly(iplus, g)).basis();
  rep.colon = Ideal(ring, std::vector<Polynomial>(colon_basis.rbegin(), colon_basis.rend()));
  bool maximal = ideal_equal(*rep.colon, Ideal::maximal(ring));
  if (!stage("colon-is-maximal", maximal,
             "I+ : g = " + rep.colon->str() + (maximal ? " = m" : " != m"))) {
    return rep;
  }

  rep.containment = graded_containment(iplus, Ideal(ring, {g}), m + 1);
  if (*rep.containment != maximal) {
    throw InternalError("graded containment disagrees with the colon ideal test");
  }
  std::string deg = std::to_string(m + 1);
  if (!stage("graded-containment", *rep.containment,
             "<g>_" + deg + (*rep.containment ? " is" : " is not") + " contained in I+_" + deg)) {
    return rep;
  }

  rep.scaling = find_scaling(plus, g);
  bool found = rep.scaling->status == ScalingResult::Status::Found;
  if (!stage("psd-scaling", found,
             found ? "(C ||f||^2 - |g|^2) ||z||^2 is PSD for C = " + to_string(rep.scaling->c)
                   : "no scaling found: " + rep.scaling->status_name())) {
    return rep;
  }

  BiForm r = scaled_difference(plus, g, rep.scaling->c);
  rep.inertia = hsos::inertia(coefficient_matrix(r));
  const std::size_t p = plus.size();
  bool signature = rep.inertia->positive == p && rep.inertia->negative == 1 && p < n;
  stage("signature", signature,
        "inertia of C ||f||^2 - |g|^2 is " + rep.inertia->str() + ", P = " + std::to_string(p) +
            (p < n ? " < " : " >= ") + "n = " + std::to_string(n));

  std::size_t rho = 0;
  for (const auto& d : rep.scaling->certificate.diagonal) rho += sgn(d) > 0;
  rep.rho = rho;
  rep.rho_class = classify_rank(static_cast<long>(n), static_cast<long>(rho));
  return rep;
}

inline SosReport verify_four_variable_example() {
  ExampleData ex = four_variable_example();
  return verify_example(ex.ring, ex.plus, ex.g);
}

}  // namespace hsos
