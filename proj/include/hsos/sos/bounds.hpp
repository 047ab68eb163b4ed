#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hsos/core/error.hpp"

namespace hsos {

/// Rank bounds for squared norms r(z, zbar) * ||z||^2 in n variables:
///   k0 = max{k >= 0 : k(k+1)/2 < n - 1},
///   threshold = (k0+1) n - k0(k0+1)/2,
///   bands [nk - k(k-1)/2, nk] for 0 <= k <= k0.
struct SosBounds {
  long n = 0;
  long k0 = 0;
  long threshold = 0;
  std::vector<std::pair<long, long>> bands;
};

inline SosBounds compute_bounds(long n) {
  if (n < 2) throw DomainError("rank bounds need n >= 2");
  SosBounds b;
  b.n = n;
  while ((b.k0 + 1) * (b.k0 + 2) / 2 < n - 1) ++b.k0;
  b.threshold = (b.k0 + 1) * n - b.k0 * (b.k0 + 1) / 2;
  for (long k = 0; k <= b.k0; ++k) b.bands.emplace_back(n * k - k * (k - 1) / 2, n * k);
  return b;
}

struct RankClass {
  enum class Kind { AboveThreshold, InBand, GapViolation };
  Kind kind = Kind::GapViolation;
  long band = -1;  // k when kind == InBand

  friend bool operator==(const RankClass&, const RankClass&) = default;

  std::string str() const {
    switch (kind) {
      case Kind::AboveThreshold:
        return "above-threshold";
      case Kind::InBand:
        return "in-band(" + std::to_string(band) + ")";
      case Kind::GapViolation:
        break;
    }
    return "gap-violation";
  }
};

inline RankClass classify_rank(long n, long rho) {
  if (rho < 0) throw DomainError("rank must be nonnegative");
  SosBounds b = compute_bounds(n);
  if (rho >= b.threshold) return {RankClass::Kind::AboveThreshold, -1};
  for (long k = 0; k <= b.k0; ++k) {
    if (b.bands[k].first <= rho && rho <= b.bands[k].second) return {RankClass::Kind::InBand, k};
  }
  return {RankClass::Kind::GapViolation, -1};
}

}  // namespace hsos
