#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "afi/core.hpp"
#include "afi/feasibility.hpp"

namespace afi {

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// B * B == k * B, entrywise and exactly.
inline bool is_flat_idempotent(const SignMatrix& b, std::int64_t k) {
  const std::size_t n = b.size();
  if (k < 1 || static_cast<std::size_t>(k) > n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t s = 0;
      for (std::size_t l = 0; l < n; ++l) s += b(i, l) * b(l, j);
      if (s != k * b(i, j)) return false;
    }
  return true;
}

// Rank over Q by fraction-free (Bareiss) elimination. Every stored value is a
// minor of the input, so for an n x n sign matrix it is bounded by n^(n/2);
// products are formed in 128 bits and any value leaving int64 throws.
template <class Matrix>
std::size_t exact_rank(const Matrix& input) {
  const std::size_t n = input.size();
  std::vector<std::int64_t> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = input(i, j);
  auto at = [&](std::size_t i, std::size_t j) -> std::int64_t& { return a[i * n + j]; };

  std::int64_t prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && at(pivot, col) == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < n; ++j) std::swap(at(pivot, j), at(rank, j));
    const std::int64_t p = at(rank, col);
    for (std::size_t i = rank + 1; i < n; ++i) {
      for (std::size_t j = col + 1; j < n; ++j) {
        const __int128 num = static_cast<__int128>(p) * at(i, j) -
                             static_cast<__int128>(at(i, col)) * at(rank, j);
        if (num % prev != 0)
          throw std::logic_error("exact_rank: inexact Bareiss division");
        const __int128 q = num / prev;
        if (q > INT64_MAX || q < INT64_MIN)
          throw OverflowError("exact_rank: intermediate minor exceeds 64 bits");
        at(i, j) = static_cast<std::int64_t>(q);
      }
      at(i, col) = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

struct VerifyReport {
  std::int64_t n = 0;
  std::int64_t k = 0;
  bool is_idempotent = false;
  std::int64_t rank = 0;
  std::int64_t trace = 0;
  std::vector<std::int64_t> row_negative_counts;
  // Negative diagonal entries; measured only for idempotents.
  std::optional<std::int64_t> diag_negative_count;
  std::optional<Triple> inferred_triple;
  bool first_column_positive = false;
  // n = r k + 2m, checked for idempotents.
  std::optional<bool> rank_identity_holds;
  // Every row has u negatives and n - k = 2u; checked for idempotents whose
  // first column is all positive.
  std::optional<bool> row_negatives_identity_holds;

  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

inline VerifyReport full_report(const SignMatrix& b, std::int64_t k) {
  const std::size_t n = b.size();
  VerifyReport rep;
  rep.n = static_cast<std::int64_t>(n);
  rep.k = k;
  rep.is_idempotent = is_flat_idempotent(b, k);
  rep.rank = static_cast<std::int64_t>(exact_rank(b));
  rep.trace = b.trace();
  rep.row_negative_counts.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (auto e : b.row(i))
      if (e < 0) ++rep.row_negative_counts[i];
  rep.first_column_positive = true;
  for (std::size_t i = 0; i < n; ++i)
    if (b(i, 0) < 0) rep.first_column_positive = false;

  if (!rep.is_idempotent) return rep;

  std::int64_t m = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (b(i, i) < 0) ++m;
  rep.diag_negative_count = m;
  const std::int64_t r = rep.trace / k;
  const std::int64_t u = (rep.n - k) / 2;
  rep.inferred_triple = Triple{.n = rep.n, .k = k, .r = r, .m = m, .u = u};
  rep.rank_identity_holds = rep.n == r * k + 2 * m && r == rep.rank;
  if (rep.first_column_positive) {
    bool ok = (rep.n - k) % 2 == 0;
    for (auto c : rep.row_negative_counts) ok = ok && c == u;
    rep.row_negatives_identity_holds = ok;
  }
  return rep;
}

}  // namespace afi
