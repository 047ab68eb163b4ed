#include <gtest/gtest.h>

#include <random>

#include "hsos/sos/corpus.hpp"
#include "hsos/sos/search.hpp"
#include "hsos/sos/verify.hpp"
#include "test_util.hpp"

namespace hsos {
namespace {

// Independent scan of the defining inequality k(k+1)/2 < n - 1.
long k0_by_scan(long n) {
  long best = 0;
  for (long k = 0; k <= n; ++k) {
    if (k * (k + 1) / 2 < n - 1) best = k;
  }
  return best;
}

TEST(Bounds, Examples) {
  auto b2 = compute_bounds(2);
  EXPECT_EQ(b2.k0, 0);
  EXPECT_EQ(b2.threshold, 2);
  EXPECT_EQ(b2.bands, (std::vector<std::pair<long, long>>{{0, 0}}));
  auto b4 = compute_bounds(4);
  EXPECT_EQ(b4.k0, 1);
  EXPECT_EQ(b4.threshold, 7);
  EXPECT_EQ(b4.bands, (std::vector<std::pair<long, long>>{{0, 0}, {4, 4}}));
  auto b10 = compute_bounds(10);
  EXPECT_EQ(b10.k0, 3);
  EXPECT_EQ(b10.threshold, 34);
  EXPECT_THROW(compute_bounds(1), DomainError);
}

TEST(Bounds, MatchScan) {
  for (long n = 2; n <= 100; ++n) {
    auto b = compute_bounds(n);
    long k0 = k0_by_scan(n);
    EXPECT_EQ(b.k0, k0) << n;
    EXPECT_EQ(b.threshold, (k0 + 1) * n - k0 * (k0 + 1) / 2);
    for (std::size_t k = 1; k < b.bands.size(); ++k) {
      EXPECT_LE(b.bands[k - 1].second, b.bands[k].first);
    }
  }
}

TEST(Bounds, Classify) {
  using K = RankClass::Kind;
  EXPECT_EQ(classify_rank(4, 0), (RankClass{K::InBand, 0}));
  EXPECT_EQ(classify_rank(4, 7), (RankClass{K::AboveThreshold, -1}));
  EXPECT_EQ(classify_rank(4, 2), (RankClass{K::GapViolation, -1}));
  EXPECT_EQ(classify_rank(4, 4), (RankClass{K::InBand, 1}));
  EXPECT_EQ(classify_rank(4, 4).str(), "in-band(1)");
  EXPECT_THROW(classify_rank(4, -1), DomainError);
}

TEST(Bounds, BandConsistency) {
  for (long n = 2; n <= 30; ++n) {
    long k0 = k0_by_scan(n);
    long threshold = (k0 + 1) * n - k0 * (k0 + 1) / 2;
    for (long rho = 0; rho <= threshold; ++rho) {
      bool in_band = false;
      for (long k = 0; k <= k0; ++k) in_band |= n * k - k * (k - 1) / 2 <= rho && rho <= n * k;
      bool gap = !in_band && rho < threshold;
      EXPECT_EQ(classify_rank(n, rho).kind == RankClass::Kind::GapViolation, gap) << n << " " << rho;
    }
  }
}

TEST(IdealsFromForm, Examples) {
  RingContext r2 = RingContext::numbered(2);
  auto d = ideals_from_form(weighted_squares(r2, 1, {1, -1}, parse_polynomial_list("[z1, z2]", r2)));
  EXPECT_TRUE(ideal_equal(d.plus, Ideal::parse(r2, {"z1"})));
  EXPECT_TRUE(ideal_equal(d.minus, Ideal::parse(r2, {"z2"})));
  EXPECT_EQ(d.m, 1u);

  auto norm = ideals_from_form(squared_norm_of_map(r2, parse_polynomial_list("[z1, z2]", r2)));
  EXPECT_TRUE(ideal_equal(norm.plus, Ideal::maximal(r2)));
  EXPECT_TRUE(norm.minus.is_zero());

  ExampleData ex = four_variable_example();
  auto pe = ideals_from_form(scaled_difference(ex.plus, ex.g, Rational(1)));
  EXPECT_TRUE(ideal_equal(pe.plus, Ideal(ex.ring, ex.plus)));
  EXPECT_TRUE(ideal_equal(pe.minus, Ideal(ex.ring, {ex.g})));

  EXPECT_THROW(ideals_from_form(BiForm(r2, 1)), DomainError);
}

TEST(Containment, Examples) {
  ExampleData ex = four_variable_example();
  EXPECT_TRUE(containment_check(Ideal(ex.ring, ex.plus), Ideal(ex.ring, {ex.g}), 2));

  RingContext xy{std::vector<std::string>{"x", "y"}};
  EXPECT_FALSE(containment_check(Ideal::parse(xy, {"x^2"}), Ideal::parse(xy, {"y^2"}), 2));
  EXPECT_THROW(containment_check(Ideal::parse(xy, {"x^2", "x*y", "y^2"}), Ideal::parse(xy, {"x^2 + y^2"}), 2),
               HypothesisViolation);
  EXPECT_THROW(containment_check(Ideal::parse(xy, {"x^2"}), Ideal::parse(xy, {"y"}), 2), HypothesisViolation);
}

TEST(NecessaryCondition, Examples) {
  RingContext r2 = RingContext::numbered(2);
  auto norm = necessary_condition(squared_norm_of_map(r2, parse_polynomial_list("[z1, z2]", r2)));
  EXPECT_TRUE(norm.product_psd);
  EXPECT_TRUE(norm.containment);

  auto diff = necessary_condition(weighted_squares(r2, 1, {1, -1}, parse_polynomial_list("[z1, z2]", r2)));
  EXPECT_FALSE(diff.product_psd);
  EXPECT_FALSE(diff.containment);
  EXPECT_TRUE(diff.implication_holds());

  ExampleData ex = four_variable_example();
  auto scaled = necessary_condition(scaled_difference(ex.plus, ex.g, Rational(8)));
  EXPECT_TRUE(scaled.product_psd);
  EXPECT_TRUE(scaled.containment);
}

TEST(NecessaryCondition, HoldsOnFormCorpus) {
  int psd = 0;
  for (const auto& [name, r] : builtin_form_corpus()) {
    auto res = necessary_condition(r);
    EXPECT_TRUE(res.implication_holds()) << name;
    psd += res.product_psd;
  }
  EXPECT_GE(psd, 5);
}

TEST(Scaling, Examples) {
  RingContext r2 = RingContext::numbered(2);
  EXPECT_THROW(find_scaling(parse_polynomial_list("[z1, z2]", r2), parse_polynomial("z1", r2)),
               HypothesisViolation);
  auto impossible = find_scaling(parse_polynomial_list("[z1^2]", r2), parse_polynomial("z2^2", r2));
  EXPECT_EQ(impossible.status, ScalingResult::Status::Impossible);
  EXPECT_TRUE(impossible.path.empty());

  ExampleData ex = four_variable_example();
  auto found = find_scaling(ex.plus, ex.g);
  ASSERT_EQ(found.status, ScalingResult::Status::Found);
  EXPECT_EQ(found.c, Rational(8));
  EXPECT_EQ(found.path.size(), 4u);
  // Monotone along the doubling path, and every tested C keeps signature (3, 1).
  for (Rational c = found.c; c <= found.c * 16; c *= 2) {
    EXPECT_TRUE(is_psd(coefficient_matrix(multiply_by_norm(scaled_difference(ex.plus, ex.g, c)))).psd);
  }
  for (const auto& [c, ok] : found.path) {
    auto in = inertia(coefficient_matrix(scaled_difference(ex.plus, ex.g, c)));
    EXPECT_EQ(in.positive, 3u);
    EXPECT_EQ(in.negative, 1u);
  }
  // Certificate checks out: S^* A S is the reported nonnegative diagonal.
  HermitianMatrix a = coefficient_matrix(multiply_by_norm(scaled_difference(ex.plus, ex.g, found.c)));
  Matrix prod = found.certificate.transform.conj_transpose() * a.matrix() * found.certificate.transform;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    EXPECT_EQ(prod(k, k), GaussRational(found.certificate.diagonal[k]));
    EXPECT_GE(sgn(found.certificate.diagonal[k]), 0);
  }
}

TEST(VerifyExample, FourVariableExamplePasses) {
  SosReport rep = verify_four_variable_example();
  ASSERT_EQ(rep.stages.size(), 6u) << rep.transcript();
  EXPECT_TRUE(rep.passed()) << rep.transcript();
  EXPECT_EQ(*rep.inertia, (Inertia{3, 1, 6}));
  EXPECT_TRUE(ideal_equal(*rep.colon, Ideal::maximal(rep.ring)));
  EXPECT_TRUE(*rep.containment);
  ASSERT_TRUE(rep.rho.has_value());
  EXPECT_NE(rep.transcript().find("verified"), std::string::npos);
}

TEST(VerifyExample, FailuresAndRejections) {
  ExampleData ex = four_variable_example();
  SosReport bad = verify_example(ex.ring, ex.plus, parse_polynomial("z1^2", ex.ring));
  EXPECT_FALSE(bad.passed());
  EXPECT_EQ(bad.failed_stage(), "colon-is-maximal");
  EXPECT_EQ(bad.stages.size(), 3u);

  SosReport inside = verify_example(ex.ring, ex.plus, parse_polynomial("z4^2", ex.ring));
  EXPECT_EQ(inside.failed_stage(), "g-not-in-ideal");

  RingContext r3 = RingContext::numbered(3);
  EXPECT_THROW(verify_example(r3, parse_polynomial_list("[z1^2, z2^2]", r3), parse_polynomial("z1*z2", r3)),
               HypothesisViolation);
  EXPECT_THROW(verify_example(ex.ring, ex.plus, parse_polynomial("z2^3", ex.ring)), HypothesisViolation);
}

TEST(Corpus, ColonAgreesWithGradedContainment) {
  auto corpus = builtin_corpus();
  EXPECT_GE(corpus.size(), 20u);
  int yes = 0;
  for (const auto& e : corpus) {
    Ideal plus(e.ring, e.plus);
    EXPECT_FALSE(contains(plus, e.g)) << e.name;
    bool graded = graded_containment(plus, Ideal(e.ring, {e.g}), e.degree() + 1);
    EXPECT_EQ(graded, colon_is_maximal(plus, e.g)) << e.name;
    yes += graded;
  }
  EXPECT_GE(yes, 4);
}

// Brute force over the same pool: every pair (tuple, g) checked directly with
// graded_containment, collecting the distinct spans that admit some g.
std::set<std::string> brute_force_spans(const SearchOptions& opt) {
  RingContext ring = RingContext::numbered(opt.n);
  GradedBasis lo(ring, opt.m);
  auto forms = detail::enumerate_forms(lo.size(), opt.coefficients, opt.max_terms, opt.budget);
  std::set<std::string> out;
  std::vector<std::size_t> idx(opt.p);
  auto rec = [&](auto&& self, std::size_t pos, std::size_t start) -> void {
    if (pos == opt.p) {
      EchelonSpace v(lo.size());
      std::vector<Polynomial> plus;
      for (auto i : idx) {
        if (!v.insert(forms[i])) return;
        plus.push_back(lo.polynomial(forms[i]));
      }
      Ideal ideal(ring, plus);
      for (const auto& g : forms) {
        if (v.contains(g)) continue;
        if (graded_containment(ideal, Ideal(ring, {lo.polynomial(g)}), opt.m + 1)) {
          out.insert(v.key());
          return;
        }
      }
      return;
    }
    for (std::size_t i = start; i < forms.size(); ++i) {
      idx[pos] = i;
      self(self, pos + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

TEST(Search, SmallCasesAreEmpty) {
  for (std::size_t n = 2; n <= 3; ++n) {
    for (unsigned m = 0; m <= 2; ++m) {
      for (std::size_t p = 1; p < n; ++p) {
        SearchOptions opt;
        opt.n = n;
        opt.m = m;
        opt.p = p;
        auto res = exhaustive_small_search(opt);
        EXPECT_TRUE(res.violations.empty()) << n << " " << m << " " << p;
      }
    }
  }
}

TEST(Search, AgreesWithBruteForceWhenViolationsExist) {
  // P >= n leaves room for containment, so both sides find spans.
  for (auto [n, m, p] : {std::tuple<std::size_t, unsigned, std::size_t>{2, 2, 2}, {3, 1, 3}, {2, 1, 2}}) {
    SearchOptions opt;
    opt.n = n;
    opt.m = m;
    opt.p = p;
    opt.coefficients = {0, 1};
    auto res = exhaustive_small_search(opt);
    std::set<std::string> spans;
    RingContext ring = RingContext::numbered(n);
    GradedBasis lo(ring, m);
    for (const auto& v : res.violations) {
      EchelonSpace s(lo.size());
      for (const auto& f : v.plus) s.insert(lo.coordinates(f));
      spans.insert(s.key());
      std::vector<Polynomial> all = v.plus;
      all.push_back(v.g);
      EXPECT_TRUE(linearly_independent(all));
      EXPECT_TRUE(graded_containment(Ideal(ring, v.plus), Ideal(ring, {v.g}), m + 1));
    }
    EXPECT_EQ(spans, brute_force_spans(opt)) << n << " " << m << " " << p;
  }
}

TEST(Search, FindsFourVariableExample) {
  SearchOptions opt;
  opt.n = 4;
  opt.m = 2;
  opt.p = 3;
  opt.coefficients = {0, 1};
  opt.max_terms = 2;
  auto res = exhaustive_small_search(opt);
  ASSERT_FALSE(res.violations.empty());
  ExampleData ex = four_variable_example();
  GradedBasis lo(ex.ring, 2);
  EchelonSpace target(lo.size());
  for (const auto& f : ex.plus) target.insert(lo.coordinates(f));
  bool found = false;
  for (const auto& v : res.violations) {
    EchelonSpace s(lo.size());
    for (const auto& f : v.plus) s.insert(lo.coordinates(f));
    if (s.key() != target.key()) continue;
    // Same g up to the span and scaling.
    found |= !s.contains(lo.coordinates(ex.g)) &&
             detail::normalized(s.reduce(lo.coordinates(v.g))) == detail::normalized(s.reduce(lo.coordinates(ex.g)));
  }
  EXPECT_TRUE(found);
}

TEST(Search, DeterministicAcrossThreadCounts) {
  SearchOptions opt;
  opt.n = 3;
  opt.m = 1;
  opt.p = 3;
  opt.coefficients = {-1, 0, 1};
  opt.threads = 1;
  auto one = exhaustive_small_search(opt);
  opt.threads = 4;
  auto four = exhaustive_small_search(opt);
  ASSERT_EQ(one.violations.size(), four.violations.size());
  EXPECT_EQ(one.spans, four.spans);
  for (std::size_t k = 0; k < one.violations.size(); ++k) {
    EXPECT_EQ(one.violations[k].plus, four.violations[k].plus);
    EXPECT_EQ(one.violations[k].g, four.violations[k].g);
  }
}

TEST(Search, Budget) {
  SearchOptions opt;
  opt.n = 4;
  opt.m = 2;
  opt.p = 3;
  opt.coefficients = {0, 1};
  try {
    exhaustive_small_search(opt);
    FAIL();
  } catch (const BudgetExceeded& e) {
    // 1023 forms, C(1023, 3) triples.
    EXPECT_EQ(e.estimate(), 177910271ULL);
  }
  opt.budget = 100;
  EXPECT_THROW(exhaustive_small_search(opt), BudgetExceeded);
}

}  // namespace
}  // namespace hsos
