#pragma once

// Independent reference computations used only by tests. None of these share
// code paths with the library routines they check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <random>
#include <vector>

#include "afi/core.hpp"
#include "afi/text_format.hpp"

namespace afi::testing {

using Dense = std::vector<std::vector<std::int64_t>>;

inline Dense to_dense(const SignMatrix& m) {
  Dense d(m.size(), std::vector<std::int64_t>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) d[i][j] = m(i, j);
  return d;
}

inline Dense naive_product(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense c(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) c[i][j] += a[i][l] * b[l][j];
  return c;
}

inline bool naive_is_flat_idempotent(const SignMatrix& m, std::int64_t k) {
  const auto d = to_dense(m);
  const auto sq = naive_product(d, d);
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j)
      if (sq[i][j] != k * d[i][j]) return false;
  return true;
}

// Leibniz expansion.
inline std::int64_t determinant(const Dense& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::int64_t det = 0;
  do {
    std::int64_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    std::int64_t term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= a[i][p[i]];
    det += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return det;
}

inline bool next_subset(std::vector<std::size_t>& s, std::size_t n) {
  const std::size_t r = s.size();
  for (std::size_t i = r; i-- > 0;) {
    if (s[i] < n - r + i) {
      ++s[i];
      for (std::size_t j = i + 1; j < r; ++j) s[j] = s[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Largest r with a nonzero r x r minor.
inline std::size_t rank_by_minors(const Dense& a) {
  const std::size_t n = a.size();
  for (std::size_t r = n; r > 0; --r) {
    std::vector<std::size_t> rows(r);
    std::iota(rows.begin(), rows.end(), std::size_t{0});
    do {
      std::vector<std::size_t> cols(r);
      std::iota(cols.begin(), cols.end(), std::size_t{0});
      do {
        Dense sub(r, std::vector<std::int64_t>(r));
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) sub[i][j] = a[rows[i]][cols[j]];
        if (determinant(sub) != 0) return r;
      } while (next_subset(cols, n));
    } while (next_subset(rows, n));
  }
  return 0;
}

// Minimum of the orbit under every signed permutation (and transposition),
// by exhaustion. Feasible for n <= 5.
inline SignMatrix brute_force_orbit_min(const SignMatrix& m, bool with_transpose) {
  const std::size_t n = m.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::vector<std::int8_t> best;
  auto consider = [&](const SignMatrix& src) {
    std::vector<std::int8_t> e(n * n);
    do {
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            const int si = mask >> i & 1 ? -1 : 1;
            const int sj = mask >> j & 1 ? -1 : 1;
            e[i * n + j] = static_cast<std::int8_t>(si * sj * src(p[i], p[j]));
          }
        if (best.empty() || e < best) best = e;
      }
    } while (std::next_permutation(p.begin(), p.end()));
  };
  consider(m);
  if (with_transpose) {
    std::vector<std::int8_t> t(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t[j * n + i] = static_cast<std::int8_t>(m(i, j));
    consider(SignMatrix(n, t));
  }
  return SignMatrix(n, best);
}

// Every n x n sign matrix with B^2 = kB (n <= 4).
inline std::vector<SignMatrix> brute_force_idempotents(std::size_t n, std::int64_t k) {
  std::vector<SignMatrix> out;
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    std::vector<std::int8_t> e(n * n);
    for (std::size_t i = 0; i < n * n; ++i) e[i] = bits >> i & 1 ? -1 : 1;
    SignMatrix b(n, std::move(e));
    if (naive_is_flat_idempotent(b, k)) out.push_back(std::move(b));
  }
  return out;
}

inline SignMatrix random_sign_matrix(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::int8_t> e(n * n);
  for (auto& v : e) v = rng() & 1 ? 1 : -1;
  return SignMatrix(n, std::move(e));
}

inline SignedPermutation random_group_element(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::shuffle(p.begin(), p.end(), rng);
  std::vector<int> s(n);
  for (auto& v : s) v = rng() & 1 ? 1 : -1;
  return SignedPermutation(std::move(p), std::move(s));
}

// Sorted sizes of the intersections (row type class) x (column type class),
// computed from raw row/column comparisons. Invariant under signed-permutation
// similarity and transposition.
inline std::vector<std::size_t> type_intersection_sizes(const SignMatrix& m) {
  const std::size_t n = m.size();
  auto same_up_to_sign = [&](bool rows, std::size_t a, std::size_t b) {
    bool eq = true, neg = true;
    for (std::size_t j = 0; j < n; ++j) {
      const int va = rows ? m(a, j) : m(j, a), vb = rows ? m(b, j) : m(j, b);
      eq = eq && va == vb;
      neg = neg && va == -vb;
    }
    return eq || neg;
  };
  auto label = [&](bool rows) {
    std::vector<std::size_t> lab(n);
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t c = 0;
      while (c < reps.size() && !same_up_to_sign(rows, reps[c], i)) ++c;
      if (c == reps.size()) reps.push_back(i);
      lab[i] = c;
    }
    return std::pair{lab, reps.size()};
  };
  const auto [rl, rc] = label(true);
  const auto [cl, cc] = label(false);
  std::vector<std::size_t> cells(rc * cc, 0);
  for (std::size_t i = 0; i < n; ++i) ++cells[rl[i] * cc + cl[i]];
  std::sort(cells.begin(), cells.end());
  return cells;
}

}  // namespace afi::testing

namespace afi {

// Readable failure output for gtest.
inline void PrintTo(const SignMatrix& m, std::ostream* os) {
  for (const auto& r : row_strings(m)) *os << '\n' << r;
}

}  // namespace afi
