#pragma once

// Explicit families of flat idempotents:
//   - the rank-1 matrix with identical rows,
//   - the P/M block construction (every even-n triple),
//   - the rank-2 standard forms, parameterized by (t, q, l).

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "afi/core.hpp"
#include "afi/feasibility.hpp"

namespace afi {

// Block sizes and row splits of a rank-2 standard form. Column blocks are
// (all + | all - | v | -v) of widths (a, b, c, c); row blocks have the same
// sizes, and within each row block the first *_p rows carry +v.
struct Rank2Params {
  std::int64_t n = 0, k = 0, m = 0, u = 0;
  std::int64_t a = 0, b = 0, c = 0;
  std::int64_t a_p = 0, a_m = 0;
  std::int64_t b_p = 0, b_m = 0;
  std::int64_t c1p = 0, c1m = 0;
  std::int64_t c2p = 0, c2m = 0;
  std::int64_t t = 0, q = 0, l = 0;

  // Row multiplicity is {x, n - x}, column multiplicity {y, n - y}.
  std::int64_t x() const { return a_p + b_p + c1p + c2p; }
  std::int64_t y() const { return a + b; }

  bool all_nonnegative() const {
    for (auto v : {a, b, c, a_p, a_m, b_p, b_m, c1p, c1m, c2p, c2m})
      if (v < 0) return false;
    return true;
  }

  // Block bookkeeping plus the reduced system
  //   a - b = k,  b + c = u,  a_p = b_p + k/2,  c1p = c2p + k/2.
  bool satisfies_system() const {
    if (!all_nonnegative() || k % 2 != 0) return false;
    return a_p + a_m == a && b_p + b_m == b && c1p + c1m == c &&
           c2p + c2m == c && a + b + 2 * c == n && a - b == k && b + c == u &&
           a_p == b_p + k / 2 && c1p == c2p + k / 2;
  }

  // (t, q, l) recovered from the splits.
  std::tuple<std::int64_t, std::int64_t, std::int64_t> free_coordinates() const {
    return {b_p, c2p, ceil_quarter(n) - a_m};
  }

  friend bool operator==(const Rank2Params&, const Rank2Params&) = default;
};

inline SignMatrix rank1_canonical(std::int64_t n, std::int64_t k,
                                  std::size_t cap = kDefaultDimensionCap) {
  const auto tr = require_feasible(n, k, 1);
  const auto dim = static_cast<std::size_t>(n);
  if (dim > cap) throw CapExceeded("rank1_canonical: n exceeds cap");
  const auto positive = static_cast<std::size_t>(n - tr.m);
  std::vector<std::int8_t> e(dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) e[i * dim + j] = j < positive ? 1 : -1;
  return SignMatrix(dim, std::move(e), cap);
}

// kP = [[1,1],[1,1]] and kM = [[1,-1],[1,-1]]; these are the same sign
// matrices for every even k = 2t, and satisfy
//   t (kP)^2 = k (kP),  t (kP)(kM) = k (kM),  (kM)^2 = 0,  (kM)(kP) = 0.
struct PMBlocks {
  SignMatrix p;
  SignMatrix m;
};

inline PMBlocks pm_blocks(std::int64_t k) {
  if (k < 2 || k % 2 != 0) throw DomainError("pm_blocks: k must be even and positive");
  return {SignMatrix::from_rows({{1, 1}, {1, 1}}),
          SignMatrix::from_rows({{1, -1}, {1, -1}})};
}

// n = 2L, k = 2t: an L x L grid of 2 x 2 blocks. r diagonal groups of t x t
// P blocks, an m x t block of P's in the lower-left corner, M elsewhere.
inline SignMatrix block_construction(std::int64_t n, std::int64_t k, std::int64_t r,
                                     std::size_t cap = kDefaultDimensionCap) {
  if (n % 2 != 0 || k % 2 != 0)
    throw DomainError("block_construction: n and k must be even");
  const auto tr = require_feasible(n, k, r);
  const auto dim = static_cast<std::size_t>(n);
  if (dim > cap) throw CapExceeded("block_construction: n exceeds cap");
  const std::int64_t t = k / 2;
  const std::int64_t diag_blocks = r * t;
  (void)tr;

  auto is_p_block = [&](std::int64_t bi, std::int64_t bj) {
    if (bi < diag_blocks) return bi / t == bj / t;
    return bj < t;
  };
  std::vector<std::int8_t> e(dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const bool p = is_p_block(static_cast<std::int64_t>(i / 2),
                                static_cast<std::int64_t>(j / 2));
      e[i * dim + j] = (p || j % 2 == 0) ? 1 : -1;
    }
  return SignMatrix(dim, std::move(e), cap);
}

inline Rank2Params rank2_params(std::int64_t n, std::int64_t k, std::int64_t t,
                                std::int64_t q, std::int64_t l) {
  const auto tr = require_feasible(n, k, 2);
  const std::int64_t m = tr.m;
  if (t < 0 || q < 0)
    throw DomainError("rank2 parameters: t and q must be nonnegative");
  if (l < q + t - floor_half(m) || l > ceil_half(m))
    throw DomainError("rank2 parameters: need q+t-floor(m/2) <= l <= ceil(m/2)");
  Rank2Params p{.n = n, .k = k, .m = m, .u = tr.u};
  p.a_p = k / 2 + t;
  p.a_m = ceil_quarter(n) - l;
  p.b_p = t;
  p.b_m = ceil_half(m) - l;
  p.c1p = k / 2 + q;
  p.c1m = floor_half(m) - q - t + l;
  p.c2p = q;
  p.c2m = floor_quarter(n) - q - t + l;
  p.a = p.a_p + p.a_m;
  p.b = p.b_p + p.b_m;
  p.c = p.c1p + p.c1m;
  p.t = t;
  p.q = q;
  p.l = l;
  if (!p.all_nonnegative()) throw DomainError("rank2 parameters: negative block count");
  if (!p.satisfies_system())
    throw std::logic_error("rank2 parameters: derived counts violate the block system");
  return p;
}

// Lays out the standard-form matrix for any parameter record whose block
// bookkeeping is consistent (sizes only; idempotence needs satisfies_system).
inline SignMatrix standard_layout(const Rank2Params& p,
                                  std::size_t cap = kDefaultDimensionCap) {
  if (!p.all_nonnegative() || p.a + p.b + 2 * p.c != p.n || p.a_p + p.a_m != p.a ||
      p.b_p + p.b_m != p.b || p.c1p + p.c1m != p.c || p.c2p + p.c2m != p.c)
    throw DomainError("standard_layout: inconsistent block sizes");
  const auto n = static_cast<std::size_t>(p.n);
  std::vector<int> row_sign;
  row_sign.reserve(n);
  for (auto [plus, minus] : {std::pair{p.a_p, p.a_m}, std::pair{p.b_p, p.b_m},
                             std::pair{p.c1p, p.c1m}, std::pair{p.c2p, p.c2m}}) {
    row_sign.insert(row_sign.end(), static_cast<std::size_t>(plus), 1);
    row_sign.insert(row_sign.end(), static_cast<std::size_t>(minus), -1);
  }
  const auto a = static_cast<std::size_t>(p.a);
  const auto ab = a + static_cast<std::size_t>(p.b);
  const auto abc = ab + static_cast<std::size_t>(p.c);
  std::vector<std::int8_t> e(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      int v;
      if (j < a) v = 1;
      else if (j < ab) v = -1;
      else if (j < abc) v = row_sign[i];
      else v = -row_sign[i];
      e[i * n + j] = static_cast<std::int8_t>(v);
    }
  return SignMatrix(n, std::move(e), cap);
}

inline std::pair<Rank2Params, SignMatrix> rank2_standard(
    std::int64_t n, std::int64_t k, std::int64_t t, std::int64_t q, std::int64_t l,
    std::size_t cap = kDefaultDimensionCap) {
  auto p = rank2_params(n, k, t, q, l);
  auto mat = standard_layout(p, cap);
  return {p, std::move(mat)};
}

struct Rank2Coordinates {
  std::int64_t t = 0, q = 0, l = 0;
  friend bool operator==(const Rank2Coordinates&, const Rank2Coordinates&) = default;
  friend auto operator<=>(const Rank2Coordinates&, const Rank2Coordinates&) = default;
};

// Every admissible (t, q, l), lexicographically.
inline std::vector<Rank2Coordinates> enumerate_rank2_params(std::int64_t n, std::int64_t k) {
  const auto tr = require_feasible(n, k, 2);
  const std::int64_t m = tr.m;
  std::vector<Rank2Coordinates> out;
  // l <= ceil(m/2) and l >= q + t - floor(m/2) force q + t <= m.
  for (std::int64_t t = 0; t <= m; ++t)
    for (std::int64_t q = 0; t + q <= m; ++q)
      for (std::int64_t l = q + t - floor_half(m); l <= ceil_half(m); ++l)
        if (rank2_params(n, k, t, q, l).all_nonnegative()) out.push_back({t, q, l});
  return out;
}

enum class ConstructMethod { kAuto, kRank1, kBlock, kRank2 };

inline std::string_view to_string(ConstructMethod m) {
  switch (m) {
    case ConstructMethod::kAuto: return "auto";
    case ConstructMethod::kRank1: return "rank1";
    case ConstructMethod::kBlock: return "block";
    case ConstructMethod::kRank2: return "rank2";
  }
  return "auto";
}

// rank1 for r = 1, the block construction otherwise.
inline SignMatrix construct(std::int64_t n, std::int64_t k, std::int64_t r,
                            ConstructMethod method = ConstructMethod::kAuto,
                            Rank2Coordinates coords = {},
                            std::size_t cap = kDefaultDimensionCap) {
  switch (method) {
    case ConstructMethod::kAuto:
      return r == 1 ? rank1_canonical(n, k, cap) : block_construction(n, k, r, cap);
    case ConstructMethod::kRank1:
      if (r != 1) throw DomainError("rank1 method requires r = 1");
      return rank1_canonical(n, k, cap);
    case ConstructMethod::kBlock:
      return block_construction(n, k, r, cap);
    case ConstructMethod::kRank2:
      if (r != 2) throw DomainError("rank2 method requires r = 2");
      return rank2_standard(n, k, coords.t, coords.q, coords.l, cap).second;
  }
  throw std::logic_error("construct: unknown method");
}

}  // namespace afi
