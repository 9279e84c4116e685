#pragma once

// Exhaustive enumeration of flat idempotents at desk scale, classified up to
// permutation/signature similarity and transposition.
//
// Every class has a representative whose first column is all + (and hence
// every row has exactly u = (n-k)/2 negatives), so both searches only visit
// such matrices. Results are merged in a fixed order keyed by the canonical
// representative, which makes the output independent of the worker count.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <thread>
#include <vector>

#include "afi/canonical.hpp"
#include "afi/construct.hpp"
#include "afi/core.hpp"
#include "afi/feasibility.hpp"
#include "afi/verify.hpp"

namespace afi {

inline constexpr std::size_t kDefaultGeneralCensusCap = 6;
inline constexpr std::size_t kDefaultRank2CensusCap = 12;

struct CensusOptions {
  std::size_t jobs = 1;
  std::size_t general_cap = kDefaultGeneralCensusCap;
  std::size_t rank2_cap = kDefaultRank2CensusCap;
};

struct CensusRecord {
  Triple triple;
  SignMatrix canonical;
  std::vector<std::size_t> row_mult;
  std::vector<std::size_t> col_mult;
  std::optional<Rank2Params> standard_params;
  std::int64_t raw_count = 0;

  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

using SignRow = std::vector<std::int8_t>;

// A subtree of the general search: the first prefix.size() rows are fixed.
struct WorkItem {
  std::size_t n = 0;
  std::int64_t k = 0;
  std::vector<SignRow> prefix;
};

namespace detail {

// Rows with a leading + and exactly u negatives, in lexicographic order.
inline std::vector<SignRow> normalized_rows(std::size_t n, std::size_t u) {
  std::vector<SignRow> out;
  if (u > n - 1) return out;
  // Choose the negative positions among 1..n-1; iterate masks so that the
  // resulting rows come out lexicographically (- before +).
  std::vector<bool> neg(n - 1, false);
  std::fill(neg.begin(), neg.begin() + static_cast<std::ptrdiff_t>(u), true);
  do {
    SignRow row(n, 1);
    for (std::size_t j = 0; j + 1 < n; ++j)
      if (neg[j]) row[j + 1] = -1;
    out.push_back(std::move(row));
  } while (std::prev_permutation(neg.begin(), neg.end()));
  return out;
}

inline void check_general_args(std::size_t n, std::int64_t k, std::size_t cap) {
  if (n < 1 || k < 1 || static_cast<std::size_t>(k) > n)
    throw DomainError("census: need 1 <= k <= n");
  if ((static_cast<std::int64_t>(n) - k) % 2 != 0)
    throw DomainError("census: n and k must have the same parity");
  if (n > cap)
    throw CapExceeded("census: n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
}

// Depth-first search, row by row. After row d is placed, every entry (i, j)
// of B^2 with i <= d has d+1 of its n terms known; the remaining n-1-d terms
// are each +-1, which bounds and fixes the parity of what is still missing.
class GeneralSearch {
 public:
  GeneralSearch(std::size_t n, std::int64_t k)
      : n_(n), k_(k), candidates_(normalized_rows(n, static_cast<std::size_t>((static_cast<std::int64_t>(n) - k) / 2))) {}

  const std::vector<SignRow>& candidates() const { return candidates_; }

  std::vector<SignMatrix> run(const std::vector<SignRow>& prefix) {
    found_.clear();
    rows_.clear();
    std::vector<std::int64_t> partial(n_ * n_, 0);
    for (const auto& r : prefix) {
      if (!place(r, partial)) return {};
    }
    dfs(partial);
    return std::move(found_);
  }

 private:
  bool place(const SignRow& row, std::vector<std::int64_t>& partial) {
    if (row.size() != n_) return false;
    const std::size_t d = rows_.size();
    rows_.push_back(row);
    for (std::size_t i = 0; i < d; ++i) {
      const std::int64_t bid = rows_[i][d];
      for (std::size_t j = 0; j < n_; ++j) partial[i * n_ + j] += bid * row[j];
    }
    for (std::size_t j = 0; j < n_; ++j) {
      std::int64_t s = 0;
      for (std::size_t l = 0; l <= d; ++l) s += row[l] * rows_[l][j];
      partial[d * n_ + j] = s;
    }
    const auto remaining = static_cast<std::int64_t>(n_ - 1 - d);
    for (std::size_t i = 0; i <= d; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        const std::int64_t diff = k_ * rows_[i][j] - partial[i * n_ + j];
        if (diff > remaining || diff < -remaining || (diff - remaining) % 2 != 0) return false;
      }
    return true;
  }

  void dfs(const std::vector<std::int64_t>& partial) {
    if (rows_.size() == n_) {
      std::vector<std::int8_t> e;
      e.reserve(n_ * n_);
      for (const auto& r : rows_) e.insert(e.end(), r.begin(), r.end());
      SignMatrix b(n_, std::move(e), n_);
      if (is_flat_idempotent(b, k_)) found_.push_back(std::move(b));
      return;
    }
    for (const auto& cand : candidates_) {
      auto next = partial;
      if (place(cand, next)) dfs(next);
      rows_.pop_back();
    }
  }

  std::size_t n_;
  std::int64_t k_;
  std::vector<SignRow> candidates_;
  std::vector<SignRow> rows_;
  std::vector<SignMatrix> found_;
};

// Runs fn(i) for i in [0, count) on up to `jobs` threads.
inline void parallel_for(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)>& fn) {
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(jobs);
  for (std::size_t w = 0; w < jobs; ++w)
    workers.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < count; i = next++) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : workers) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

// A canonical class and how many raw solutions mapped to it.
struct Found {
  SignMatrix canonical;
  std::int64_t count = 1;
};

inline CensusRecord make_record(const SignMatrix& canonical, std::int64_t k) {
  CensusRecord rec;
  const auto n = static_cast<std::int64_t>(canonical.size());
  const std::int64_t r = canonical.trace() / k;
  std::int64_t m = 0;
  for (std::size_t i = 0; i < canonical.size(); ++i)
    if (canonical(i, i) < 0) ++m;
  rec.triple = {.n = n, .k = k, .r = r, .m = m, .u = (n - k) / 2};
  rec.canonical = canonical;
  rec.row_mult = row_types(canonical).multiplicity;
  rec.col_mult = col_types(canonical).multiplicity;
  if (r == 2) rec.standard_params = to_standard_form(canonical, k).params;
  return rec;
}

// Ordered union keyed by canonical representative.
inline std::vector<CensusRecord> merge(const std::vector<std::vector<Found>>& per_item, std::int64_t k) {
  std::map<SignMatrix, std::int64_t> counts;
  for (const auto& item : per_item)
    for (const auto& f : item) counts[f.canonical] += f.count;
  std::vector<CensusRecord> out;
  out.reserve(counts.size());
  for (const auto& [canonical, count] : counts) {
    auto rec = make_record(canonical, k);
    rec.raw_count = count;
    out.push_back(std::move(rec));
  }
  return out;
}

inline std::vector<Found> canonicalize_all(const std::vector<SignMatrix>& raw) {
  std::vector<Found> out;
  out.reserve(raw.size());
  const CanonicalOptions opt{.include_transpose = true, .cap = kDefaultDimensionCap};
  for (const auto& b : raw) out.push_back({canonical_rep(b, opt), 1});
  return out;
}

}  // namespace detail

// One work item per admissible first row.
inline std::vector<WorkItem> census_partition(std::size_t n, std::int64_t k,
                                              const CensusOptions& opt = {}) {
  detail::check_general_args(n, k, opt.general_cap);
  detail::GeneralSearch search(n, k);
  std::vector<WorkItem> items;
  for (const auto& row : search.candidates()) items.push_back({n, k, {row}});
  return items;
}

// Raw (normalized, not deduplicated) idempotents in the item's subtree, in
// search order. An inconsistent prefix yields nothing.
inline std::vector<SignMatrix> run_work_item(const WorkItem& item) {
  detail::GeneralSearch search(item.n, item.k);
  return search.run(item.prefix);
}

inline std::vector<CensusRecord> census_general(std::size_t n, std::int64_t k,
                                                const CensusOptions& opt = {}) {
  const auto items = census_partition(n, k, opt);
  std::vector<std::vector<detail::Found>> results(items.size());
  detail::parallel_for(items.size(), opt.jobs, [&](std::size_t i) {
    results[i] = detail::canonicalize_all(run_work_item(items[i]));
  });
  return detail::merge(results, k);
}

// All rank-2 classes. With the first column all +, a rank-2 idempotent has
// exactly two distinct rows x and y (row 0 is x); if S is the set of rows
// equal to x, B^2 = kB reduces to
//   sum_{i in S} x_i = k   and   sum_{i in S} y_i = 0,
// which filters candidate rows before the full check. A permutation fixing
// index 0 moves S onto {0, ..., s-1} and keeps the first column +, so only
// those prefixes are searched; each prefix count is scaled by C(n-1, s-1) to
// give the number of normalized solutions.
inline std::vector<CensusRecord> census_rank2(std::size_t n, std::int64_t k,
                                              const CensusOptions& opt = {}) {
  require_feasible(static_cast<std::int64_t>(n), k, 2);
  if (n > opt.rank2_cap)
    throw CapExceeded("census_rank2: n = " + std::to_string(n) + " exceeds cap " +
                      std::to_string(opt.rank2_cap));
  const auto rows = detail::normalized_rows(n, static_cast<std::size_t>((static_cast<std::int64_t>(n) - k) / 2));

  auto prefix_sum = [](const SignRow& r, std::size_t s) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < s; ++i) sum += r[i];
    return sum;
  };
  auto binomial = [](std::size_t a, std::size_t b) {
    std::int64_t c = 1;
    for (std::size_t i = 1; i <= b; ++i) c = c * static_cast<std::int64_t>(a - b + i) / static_cast<std::int64_t>(i);
    return c;
  };

  // Permutations of {1, ..., s-1} and of {s, ..., n-1} fix S as well, so x
  // is taken sorted (- before +) inside each part and weighted by its orbit.
  auto sorted_parts = [](const SignRow& r, std::size_t s) {
    return std::is_sorted(r.begin() + 1, r.begin() + static_cast<std::ptrdiff_t>(s)) &&
           std::is_sorted(r.begin() + static_cast<std::ptrdiff_t>(s), r.end());
  };
  struct Item {
    std::size_t s;
    const SignRow* x;
    std::int64_t weight;
  };
  std::vector<Item> items;
  for (std::size_t s = 1; s < n; ++s)
    for (const auto& r : rows) {
      if (prefix_sum(r, s) != k || !sorted_parts(r, s)) continue;
      const auto neg_head = static_cast<std::size_t>(std::count(r.begin() + 1, r.begin() + static_cast<std::ptrdiff_t>(s), -1));
      const auto neg_tail = static_cast<std::size_t>(std::count(r.begin() + static_cast<std::ptrdiff_t>(s), r.end(), -1));
      items.push_back({s, &r, binomial(n - 1, s - 1) * binomial(s - 1, neg_head) * binomial(n - s, neg_tail)});
    }

  std::vector<std::vector<detail::Found>> results(items.size());
  detail::parallel_for(items.size(), opt.jobs, [&](std::size_t idx) {
    const auto [s, x, weight] = items[idx];
    // Raw solutions are numerous; group them by standard form first so only
    // distinct layouts reach the canonical search.
    std::map<SignMatrix, std::int64_t> by_layout;
    for (const auto& y : rows) {
      if (prefix_sum(y, s) != 0) continue;
      std::vector<std::int8_t> e;
      e.reserve(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        const SignRow& r = i < s ? *x : y;
        e.insert(e.end(), r.begin(), r.end());
      }
      SignMatrix b(n, std::move(e), n);
      if (!is_flat_idempotent(b, k) || exact_rank(b) != 2)
        throw std::logic_error("census_rank2: reduced conditions admitted a non-solution");
      by_layout[to_standard_form(b, k).matrix] += weight;
    }
    for (const auto& [layout, count] : by_layout)
      results[idx].push_back({canonical_rep(layout, {.include_transpose = true, .cap = kDefaultDimensionCap}), count});
  });
  return detail::merge(results, k);
}

// Number of classes per (n, k, r).
inline std::map<Triple, std::size_t> census_summary(const std::vector<CensusRecord>& records) {
  std::map<Triple, std::size_t> out;
  for (const auto& r : records) {
    Triple key = r.triple;
    ++out[key];
  }
  return out;
}

}  // namespace afi
