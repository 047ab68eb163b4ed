// Runs the nine acceptance criteria, each against its time limit, and prints
// one PASS/FAIL line per criterion. Exits nonzero if any criterion fails.

#include <Eigen/Dense>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include "hsos/koszul/koszul.hpp"
#include "hsos/sos/corpus.hpp"
#include "hsos/sos/search.hpp"
#include "hsos/sos/verify.hpp"
#include "test_util.hpp"

namespace hsos {
namespace {

// Records the first failed check so the summary line can name it.
struct Check {
  bool ok = true;
  std::string why;
  void operator()(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
};

bool graded_member_oracle(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) return true;
  unsigned d = f.degree();
  auto basis = monomials_of_degree(ideal.ring(), d);
  std::map<Monomial, std::size_t> index;
  for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k]] = k;
  std::vector<Vector> rows;
  for (const auto& g : ideal.generators()) {
    if (g.degree() > d) continue;
    for (const auto& u : monomials_of_degree(ideal.ring(), d - g.degree())) {
      Vector v(basis.size());
      Polynomial gu = g.shifted(u);
      for (const auto& [m, c] : gu.terms()) v[index.at(m)] = c;
      rows.push_back(v);
    }
  }
  Vector target(basis.size());
  for (const auto& [m, c] : f.terms()) target[index.at(m)] = c;
  std::size_t r0 = rows.empty() ? 0 : rank(Matrix::from_rows(rows, basis.size()));
  rows.push_back(target);
  return rank(Matrix::from_rows(rows, basis.size())) == r0;
}

bool closed_under_s_polynomials(const GroebnerBasis& gb) {
  const auto& b = gb.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      if (!normal_form(s_polynomial(b[i], b[j], gb.order()), b, gb.order()).is_zero()) return false;
    }
  }
  return true;
}

HermitianMatrix random_hermitian(std::mt19937& rng, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    m(r, r) = GaussRational(testing::random_coefficient(rng, 3, false).re());
    for (std::size_t c = r + 1; c < n; ++c) {
      m(r, c) = testing::random_coefficient(rng, 3, true);
      m(c, r) = m(r, c).conj();
    }
  }
  return HermitianMatrix(m);
}

Check four_variable_pipeline() {
  Check check;
  SosReport rep = verify_four_variable_example();
  check(rep.passed(), "failed at stage " + rep.failed_stage().value_or("?"));
  check(rep.inertia && rep.inertia->positive == 3 && rep.inertia->negative == 1, "inertia is not (3, 1, .)");
  check(rep.colon && ideal_equal(*rep.colon, Ideal::maximal(rep.ring)), "colon is not the maximal ideal");
  if (rep.scaling) {
    BiForm r = scaled_difference(rep.plus, rep.g, rep.scaling->c);
    check(is_psd(coefficient_matrix(multiply_by_norm(r))).psd, "scaled product is not PSD");
  }
  return check;
}

Check colon_example() {
  Check check;
  RingContext xy(std::vector<std::string>{"x", "y"});
  Ideal i = Ideal::parse(xy, {"x^2", "x*y"});
  check(ideal_equal(colon_poly(i, parse_polynomial("x", xy)), Ideal::parse(xy, {"x", "y"})), "<x^2, xy> : x != <x, y>");
  check(ideal_equal(colon_poly(i, parse_polynomial("y", xy)), Ideal::parse(xy, {"x"})), "<x^2, xy> : y != <x>");
  return check;
}

Check small_search() {
  Check check;
  for (std::size_t n = 2; n <= 3; ++n) {
    for (unsigned m = 0; m <= 2; ++m) {
      for (std::size_t p = 1; p < n; ++p) {
        SearchOptions opt;
        opt.n = n;
        opt.m = m;
        opt.p = p;
        opt.coefficients = {-1, 0, 1};
        auto res = exhaustive_small_search(opt);
        check(res.violations.empty(), "violation at n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                          " P=" + std::to_string(p));
      }
    }
  }
  return check;
}

Check corpus_equivalence() {
  Check check;
  auto corpus = builtin_corpus();
  check(corpus.size() >= 20, "corpus has fewer than 20 entries");
  for (const auto& e : corpus) {
    Ideal plus(e.ring, e.plus);
    check(!contains(plus, e.g), e.name + ": g lies in I+");
    bool graded = graded_containment(plus, Ideal(e.ring, {e.g}), e.degree() + 1);
    bool colon = ideal_equal(colon_poly(plus, e.g), Ideal::maximal(e.ring));
    check(graded == colon, e.name + ": graded containment disagrees with the colon");
  }
  return check;
}

Check necessity() {
  Check check;
  for (const auto& [name, r] : builtin_form_corpus()) {
    auto res = necessary_condition(r);
    check(!res.product_psd || res.containment, name + ": PSD product without containment");
  }
  return check;
}

Check groebner_soundness() {
  Check check;
  std::mt19937 rng(2024);
  RingContext r3 = RingContext::numbered(3);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(testing::random_polynomial(rng, r3, 3, 3));
    Ideal ideal(r3, gens);
    if (ideal.is_zero()) continue;
    for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
      check(closed_under_s_polynomials(buchberger(ideal, order)), "S-polynomial with nonzero remainder");
    }
  }
  RingContext z4 = RingContext::numbered(4);
  std::vector<Ideal> ideals = {Ideal::parse(z4, {"z4^2", "z2*z3 + z1*z4", "z2^2 + z2*z4"}),
                               Ideal::parse(z4, {"z1^2", "z2*z3", "z4^2 - z1*z3"}),
                               Ideal::parse(z4, {"z1*z2 - z3*z4", "z1^2 + i*z4^2"})};
  for (const auto& ideal : ideals) {
    check(closed_under_s_polynomials(groebner_basis(ideal)), "S-polynomial with nonzero remainder");
  }
  for (int trial = 0; trial < 200; ++trial) {
    const Ideal& ideal = ideals[trial % ideals.size()];
    unsigned d = 2 + trial % 3;
    Polynomial f(z4);
    if (trial % 2 == 0) {
      for (const auto& g : ideal.generators()) {
        if (g.degree() <= d) f += g * testing::random_homogeneous(rng, z4, d - g.degree(), 0.4);
      }
    } else {
      f = testing::random_homogeneous(rng, z4, d, 0.4);
    }
    check(contains(ideal, f) == graded_member_oracle(ideal, f), "membership disagrees on " + f.str());
  }
  return check;
}

Check inertia_correctness() {
  Check check;
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + trial % 8;
    HermitianMatrix h = random_hermitian(rng, n);
    Matrix s(n, n);
    do {
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) s(r, c) = testing::random_coefficient(rng, 2, true);
      }
    } while (rank(s) < n);
    Inertia a = inertia(h);
    check(a == inertia(HermitianMatrix(s.conj_transpose() * h.matrix() * s)), "congruence changed the inertia");

    Eigen::MatrixXcd e(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) e(r, c) = h(r, c).to_complex();
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(e);
    std::size_t pos = 0, neg = 0, small = 0;
    for (double lambda : solver.eigenvalues()) {
      if (lambda > 1e-6) {
        ++pos;
      } else if (lambda < -1e-6) {
        ++neg;
      } else {
        ++small;
      }
    }
    // Eigenvalues within 1e-6 of zero are unclassified; the exact counts must
    // cover the clearly signed ones.
    check(a.positive >= pos && a.negative >= neg && a.positive + a.negative <= pos + neg + small,
          "inertia disagrees with floating eigenvalues");
  }
  return check;
}

Check koszul_suite() {
  Check check;
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 50; ++trial) {
    RingContext ring = RingContext::numbered(1 + trial % 4);
    std::vector<Polynomial> f;
    for (int j = 0; j < 1 + trial % 5; ++j) {
      f.push_back(testing::random_nonzero_homogeneous(rng, ring, 1 + (trial + j) % 3, 0.5, true));
    }
    check(verify_dd_zero(build_koszul(f)), "d o d != 0");
  }
  for (std::size_t k = 1; k <= 4; ++k) {
    RingContext ring = RingContext::numbered(k);
    std::vector<Polynomial> f;
    for (std::size_t j = 0; j < k; ++j) f.push_back(Polynomial::variable(ring, j));
    auto kc = build_koszul(f);
    for (std::size_t i = 1; i <= k; ++i) {
      for (unsigned d = 0; d <= 8; ++d) {
        check(graded_homology_dim(kc, i, d) == 0, "variable sequence has homology at stage " + std::to_string(i));
      }
    }
  }
  RingContext xy(std::vector<std::string>{"x", "y"});
  auto bad = build_koszul(parse_polynomial_list("[x^2, x*y]", xy));
  check(graded_homology_dim(bad, 1, 3) != 0, "H1 of (x^2, xy) not detected");
  return check;
}

Check conjecture_arithmetic() {
  Check check;
  for (long n = 2; n <= 100; ++n) {
    long k0 = 0;
    for (long k = 0; k * (k + 1) / 2 < n - 1; ++k) k0 = k;
    auto b = compute_bounds(n);
    check(b.k0 == k0 && b.threshold == (k0 + 1) * n - k0 * (k0 + 1) / 2, "bounds mismatch at n=" + std::to_string(n));
  }
  check(classify_rank(4, 2).str() == "gap-violation", "classify_rank(4, 2)");
  check(classify_rank(4, 4).str() == "in-band(1)", "classify_rank(4, 4)");
  return check;
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<Check()> run;
};

}  // namespace
}  // namespace hsos

int main() {
  using namespace hsos;
  const std::vector<Criterion> criteria = {
      {1, "four-variable example, full pipeline", 5, four_variable_pipeline},
      {2, "colon ideals of <x^2, xy>", 1, colon_example},
      {3, "no violations for n in {2,3}, m <= 2, P < n", 300, small_search},
      {4, "graded containment agrees with the colon test", 60, corpus_equivalence},
      {5, "PSD product implies containment", 60, necessity},
      {6, "Groebner soundness", 120, groebner_soundness},
      {7, "inertia correctness", 60, inertia_correctness},
      {8, "Koszul suite", 60, koszul_suite},
      {9, "conjecture arithmetic", 1, conjecture_arithmetic},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Check result;
    try {
      result = c.run();
    } catch (const std::exception& e) {
      result.ok = false;
      result.why = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs <= c.limit_s;
    bool pass = result.ok && in_time;
    failures += !pass;
    std::printf("criterion %d: %s  %s  (%.2f s, limit %.0f s)", c.id, pass ? "PASS" : "FAIL", c.name, secs, c.limit_s);
    if (!result.ok) std::printf("  [%s]", result.why.c_str());
    if (!in_time) std::printf("  [time limit exceeded]");
    std::printf("\n");
  }
  return failures == 0 ? 0 : 1;
}
