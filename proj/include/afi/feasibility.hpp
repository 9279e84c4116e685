#pragma once

// Which (n, k, r) admit an absolutely flat idempotent, and the bounds on the
// number of inequivalent rank-2 ones.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "afi/core.hpp"

namespace afi {

inline constexpr std::int64_t floor_half(std::int64_t x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }
inline constexpr std::int64_t ceil_half(std::int64_t x) { return -floor_half(-x); }
inline constexpr std::int64_t floor_quarter(std::int64_t x) { return x >= 0 ? x / 4 : -((-x + 3) / 4); }
inline constexpr std::int64_t ceil_quarter(std::int64_t x) { return -floor_quarter(-x); }

enum class FeasibilityReason {
  kOk,
  kParityFail,        // n - k odd: u is not an integer
  kRkExceedsN,        // r k > n: m would be negative
  kNonIntegerM,       // n - r k odd
  kOddNRankAboveOne,  // elementary conditions hold, but n odd forces r = 1
};

inline std::string_view to_string(FeasibilityReason r) {
  switch (r) {
    case FeasibilityReason::kOk: return "ok";
    case FeasibilityReason::kParityFail: return "parity-fail";
    case FeasibilityReason::kRkExceedsN: return "rk-exceeds-n";
    case FeasibilityReason::kNonIntegerM: return "non-integer-m";
    case FeasibilityReason::kOddNRankAboveOne: return "odd-n-rank-above-1";
  }
  return "unknown";
}

inline std::optional<FeasibilityReason> reason_from_string(std::string_view s) {
  for (auto r : {FeasibilityReason::kOk, FeasibilityReason::kParityFail,
                 FeasibilityReason::kRkExceedsN, FeasibilityReason::kNonIntegerM,
                 FeasibilityReason::kOddNRankAboveOne})
    if (to_string(r) == s) return r;
  return std::nullopt;
}

struct FeasibilityVerdict {
  std::int64_t n = 0, k = 0, r = 0;
  bool elementary_ok = false;
  bool exists = false;
  std::optional<std::int64_t> m;
  std::optional<std::int64_t> u;
  FeasibilityReason reason = FeasibilityReason::kOk;

  friend bool operator==(const FeasibilityVerdict&, const FeasibilityVerdict&) = default;
};

inline FeasibilityVerdict check_triple(std::int64_t n, std::int64_t k, std::int64_t r) {
  if (n < 1 || k < 1 || r < 1)
    throw std::invalid_argument("check_triple: n, k, r must be positive");
  FeasibilityVerdict v;
  v.n = n;
  v.k = k;
  v.r = r;
  const std::int64_t twice_u = n - k;
  const std::int64_t twice_m = n - r * k;
  if (twice_u >= 0 && twice_u % 2 == 0) v.u = twice_u / 2;
  if (twice_m >= 0 && twice_m % 2 == 0) v.m = twice_m / 2;

  if (twice_u % 2 != 0) {
    v.reason = FeasibilityReason::kParityFail;
  } else if (twice_m < 0) {
    v.reason = FeasibilityReason::kRkExceedsN;
  } else if (twice_m % 2 != 0) {
    v.reason = FeasibilityReason::kNonIntegerM;
  } else {
    v.elementary_ok = true;
    if (n % 2 == 1 && r != 1) {
      v.reason = FeasibilityReason::kOddNRankAboveOne;
    } else {
      v.exists = true;
    }
  }
  return v;
}

inline Triple to_triple(const FeasibilityVerdict& v) {
  if (!v.elementary_ok)
    throw DomainError("triple violates the elementary conditions");
  return {.n = v.n, .k = v.k, .r = v.r, .m = *v.m, .u = *v.u};
}

// Throws DomainError unless an absolutely flat idempotent with these
// parameters exists.
inline Triple require_feasible(std::int64_t n, std::int64_t k, std::int64_t r) {
  const auto v = check_triple(n, k, r);
  if (!v.exists)
    throw DomainError("no absolutely flat idempotent for (n,k,r) = (" +
                      std::to_string(n) + "," + std::to_string(k) + "," +
                      std::to_string(r) + "): " + std::string(to_string(v.reason)));
  return to_triple(v);
}

// All existing triples with n <= n_max, ordered by (n, k, r).
inline std::vector<Triple> feasible_triples(std::int64_t n_max) {
  std::vector<Triple> out;
  for (std::int64_t n = 1; n <= n_max; ++n)
    for (std::int64_t k = 1; k <= n; ++k)
      for (std::int64_t r = 1; r * k <= n; ++r)
        if (auto v = check_triple(n, k, r); v.exists) out.push_back(to_triple(v));
  return out;
}

struct CountBounds {
  std::int64_t n = 0, k = 0, m = 0;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  std::optional<std::int64_t> exact;

  friend bool operator==(const CountBounds&, const CountBounds&) = default;
};

// Bounds on N, the number of (n,k,2) flat idempotents up to
// permutation/signature similarity and transposition:
//   C(h+2, 2) <= N <= h(h+1)(h+2)/6 + C(h+2, 2),  h = floor(m/2).
inline CountBounds rank2_bounds(std::int64_t n, std::int64_t k) {
  const auto t = require_feasible(n, k, 2);
  const std::int64_t h = floor_half(t.m);
  CountBounds b;
  b.n = n;
  b.k = k;
  b.m = t.m;
  b.lower = (h + 2) * (h + 1) / 2;
  b.upper = h * (h + 1) * (h + 2) / 6 + b.lower;
  if (b.lower == b.upper) b.exact = b.lower;
  return b;
}

}  // namespace afi
