#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "hsos/core/graded.hpp"
#include "hsos/core/linalg.hpp"

namespace hsos {

struct SearchOptions {
  std::size_t n = 2;
  unsigned m = 1;
  /// Number of generators of I+.
  std::size_t p = 1;
  std::vector<Rational> coefficients{-1, 0, 1};
  /// Only forms with at most this many terms; 0 means no limit.
  std::size_t max_terms = 0;
  /// Refuse searches enumerating more forms or P-tuples than this.
  unsigned long long budget = 1000000;
  /// Worker threads; 0 means hardware concurrency capped by HSOS_THREADS.
  unsigned threads = 0;
};

/// I+ = <f_1..f_P> and g of degree m with {f, g} linearly independent and
/// g z_j in I+ for every variable z_j.
struct SearchViolation {
  std::vector<Polynomial> plus;
  Polynomial g;
};

struct SearchResult {
  SearchOptions options;
  std::size_t forms = 0;
  unsigned long long tuples = 0;
  std::size_t spans = 0;
  std::vector<SearchViolation> violations;
};

/// Worker count for the search: hardware concurrency, capped by HSOS_THREADS
/// when it is set to a positive integer.
inline unsigned search_threads() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("HSOS_THREADS")) {
    char* end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) hw = std::min(hw, static_cast<unsigned>(cap));
  }
  return hw;
}

namespace detail {

inline unsigned long long saturating_binomial(unsigned long long n, unsigned long long k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  const unsigned __int128 cap = ~0ULL;
  for (unsigned long long j = 1; j <= k; ++j) {
    acc = acc * (n - k + j) / j;
    if (acc > cap) return ~0ULL;
  }
  return static_cast<unsigned long long>(acc);
}

inline std::string vector_key(const Vector& v) {
  std::string out;
  for (const auto& x : v) {
    out += x.str();
    out += ',';
  }
  return out;
}

// Scales v so its first nonzero entry is 1.
inline Vector normalized(Vector v) {
  auto it = std::find_if(v.begin(), v.end(), [](const GaussRational& x) { return !x.is_zero(); });
  if (it == v.end()) return v;
  GaussRational inv = it->inverse();
  for (auto& x : v) x *= inv;
  return v;
}

// Every nonzero coefficient vector over the given set (respecting the term
// limit), normalized and deduplicated, in a fixed order.
inline std::vector<Vector> enumerate_forms(std::size_t dim, const std::vector<Rational>& coeffs,
                                           std::size_t max_terms, unsigned long long budget) {
  std::vector<Rational> nonzero;
  for (const auto& c : coeffs) {
    if (sgn(c) != 0 && std::find(nonzero.begin(), nonzero.end(), c) == nonzero.end()) {
      nonzero.push_back(c);
    }
  }
  std::size_t limit = max_terms == 0 ? dim : std::min(max_terms, dim);
  const unsigned __int128 cap = ~0ULL;
  unsigned __int128 count = 0;
  for (std::size_t t = 1; t <= limit && count <= cap; ++t) {
    unsigned __int128 term = saturating_binomial(dim, t);
    for (std::size_t j = 0; j < t && term <= cap; ++j) term *= nonzero.size();
    count += std::min(term, cap);
  }
  if (count > budget) {
    unsigned long long estimate = static_cast<unsigned long long>(std::min(count, cap));
    throw BudgetExceeded("form enumeration of " + std::to_string(estimate) +
                             " coefficient vectors exceeds the budget of " + std::to_string(budget),
                         estimate);
  }

  std::set<std::string> seen;
  std::vector<Vector> out;
  Vector v(dim);
  auto rec = [&](auto&& self, std::size_t pos, std::size_t used) -> void {
    if (pos == dim) {
      if (used == 0) return;
      Vector w = normalized(v);
      if (seen.insert(vector_key(w)).second) out.push_back(std::move(w));
      return;
    }
    v[pos] = GaussRational();
    self(self, pos + 1, used);
    if (used == limit) return;
    for (const auto& c : nonzero) {
      v[pos] = GaussRational(c);
      self(self, pos + 1, used + 1);
    }
    v[pos] = GaussRational();
  };
  rec(rec, 0, 0);
  return out;
}

// Degree-(m+1) piece of the ideal generated by a degree-m subspace.
inline EchelonSpace shifted_span(const std::vector<Vector>& rows, const GradedBasis& lo,
                                 const GradedBasis& hi) {
  const std::size_t n = lo.ring().n();
  EchelonSpace w(hi.size());
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < n; ++j) {
      Monomial zj = Monomial::variable(n, j);
      Vector v(hi.size());
      for (std::size_t a = 0; a < row.size(); ++a) {
        if (!row[a].is_zero()) v[hi.index(lo[a] * zj)] = row[a];
      }
      w.insert(v);
    }
  }
  return w;
}

// {g in R_m : g z_j in W for all j}.
inline EchelonSpace saturation_space(const EchelonSpace& w, const GradedBasis& lo,
                                     const GradedBasis& hi) {
  const std::size_t n = lo.ring().n();
  Matrix constraints(n * hi.size(), lo.size());
  for (std::size_t a = 0; a < lo.size(); ++a) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector v(hi.size());
      v[hi.index(lo[a] * Monomial::variable(n, j))] = GaussRational(1);
      Vector r = w.reduce(std::move(v));
      for (std::size_t b = 0; b < hi.size(); ++b) constraints(j * hi.size() + b, a) = r[b];
    }
  }
  EchelonSpace s(lo.size());
  for (const auto& v : kernel(std::move(constraints))) s.insert(v);
  return s;
}

struct ShardHit {
  std::vector<std::size_t> tuple;
  std::size_t g_index;
};

}  // namespace detail

/// Enumerates P-subsets of distinct normalized degree-m forms with
/// coefficients in the given set and reports every span V = <f> for which
/// some pool form g outside V satisfies g z_j in <f>_{m+1} for all j.
/// Pairs are deduplicated by the span of f together with g modulo that span
/// (up to scaling), keeping the first tuple and g in enumeration order.
inline SearchResult exhaustive_small_search(const SearchOptions& opt) {
  if (opt.n == 0) throw DomainError("search needs at least one variable");
  if (opt.p == 0) throw DomainError("search needs P >= 1");
  RingContext ring = RingContext::numbered(opt.n);
  GradedBasis lo(ring, opt.m), hi(ring, opt.m + 1);
  std::vector<Vector> forms = detail::enumerate_forms(lo.size(), opt.coefficients, opt.max_terms, opt.budget);
  unsigned long long tuples = detail::saturating_binomial(forms.size(), opt.p);
  if (tuples > opt.budget) {
    throw BudgetExceeded("search space of " + std::to_string(tuples) + " tuples exceeds the budget of " +
                             std::to_string(opt.budget),
                         tuples);
  }

  unsigned threads = opt.threads ? opt.threads : search_threads();
  threads = static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(threads, forms.size())));

  std::mutex merge_mutex;
  std::set<std::string> all_spans;
  std::map<std::string, detail::ShardHit> hits;

  auto work = [&](unsigned shard) {
    std::unordered_set<std::string> spans;
    std::map<std::string, detail::ShardHit> local;
    std::vector<std::size_t> tuple;
    auto visit = [&]() {
      EchelonSpace v(lo.size());
      for (std::size_t idx : tuple) {
        if (!v.insert(forms[idx])) return;
      }
      std::string key = v.key();
      if (!spans.insert(key).second) return;
      std::vector<Vector> rows;
      for (std::size_t idx : tuple) rows.push_back(forms[idx]);
      EchelonSpace w = detail::shifted_span(rows, lo, hi);
      EchelonSpace s = detail::saturation_space(w, lo, hi);
      if (s.dim() == v.dim()) return;
      for (std::size_t gi = 0; gi < forms.size(); ++gi) {
        if (!s.contains(forms[gi])) continue;
        Vector residue = v.reduce(forms[gi]);
        if (EchelonSpace::is_zero(residue)) continue;
        std::string hit = key + "|" + detail::vector_key(detail::normalized(residue));
        local.emplace(hit, detail::ShardHit{tuple, gi});
      }
    };
    auto rec = [&](auto&& self, std::size_t start) -> void {
      if (tuple.size() == opt.p) {
        visit();
        return;
      }
      for (std::size_t i = start; i < forms.size(); ++i) {
        tuple.push_back(i);
        self(self, i + 1);
        tuple.pop_back();
      }
    };
    for (std::size_t first = shard; first < forms.size(); first += threads) {
      tuple.assign(1, first);
      rec(rec, first + 1);
    }
    std::lock_guard<std::mutex> lock(merge_mutex);
    all_spans.insert(spans.begin(), spans.end());
    for (auto& [key, hit] : local) {
      auto [it, inserted] = hits.emplace(key, hit);
      if (!inserted && hit.tuple < it->second.tuple) it->second = hit;
    }
  };

  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& t : pool) t.join();
  }

  SearchResult out{opt, forms.size(), tuples, all_spans.size(), {}};
  for (const auto& [key, hit] : hits) {
    SearchViolation viol{{}, lo.polynomial(forms[hit.g_index])};
    for (std::size_t idx : hit.tuple) viol.plus.push_back(lo.polynomial(forms[idx]));
    out.violations.push_back(std::move(viol));
  }
  return out;
}

}  // namespace hsos
