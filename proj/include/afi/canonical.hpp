#pragma once

// Normal forms under permutation/signature similarity (and transposition):
// first-column normalization, row/column types, the rank-2 standard form and
// a total canonical representative.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "afi/construct.hpp"
#include "afi/core.hpp"
#include "afi/verify.hpp"

namespace afi {

inline constexpr std::size_t kDefaultCanonicalCap = 12;

struct Normalized {
  SignMatrix matrix;
  SignedPermutation group_element;  // matrix == apply_similarity(input, group_element)
};

// Moves the first positive diagonal entry to (0,0) by a transposition, then
// makes column 0 all positive by signature similarity.
inline Normalized normalize(const SignMatrix& b, std::int64_t k) {
  if (!is_flat_idempotent(b, k)) throw DomainError("normalize: input is not a flat idempotent");
  const std::size_t n = b.size();
  std::size_t pivot = 0;
  while (pivot < n && b(pivot, pivot) < 0) ++pivot;
  if (pivot == n) throw std::logic_error("normalize: idempotent without positive diagonal");
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::swap(perm[0], perm[pivot]);
  std::vector<int> signs(n);
  for (std::size_t i = 0; i < n; ++i) signs[i] = b(perm[i], pivot);
  SignedPermutation g(std::move(perm), std::move(signs));
  return {apply_similarity(b, g), std::move(g)};
}

// Rows (or columns) grouped by "equal or negated".
struct TypePartition {
  // Classes in order of first occurrence; members ascending.
  std::vector<std::vector<std::size_t>> classes;
  // orientation[i] = +1 if line i equals its class representative (the first
  // member), -1 if it is its negation.
  std::vector<int> orientation;
  // Class sizes, descending.
  std::vector<std::size_t> multiplicity;

  std::size_t count() const { return classes.size(); }
};

namespace detail {

template <class Line>
TypePartition partition_lines(std::size_t n, Line line) {
  TypePartition tp;
  tp.orientation.assign(n, 1);
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < n; ++i) {
    bool placed = false;
    for (std::size_t c = 0; c < reps.size() && !placed; ++c) {
      const std::size_t r = reps[c];
      bool same = true, neg = true;
      for (std::size_t j = 0; j < n; ++j) {
        same = same && line(i, j) == line(r, j);
        neg = neg && line(i, j) == -line(r, j);
      }
      if (same || neg) {
        tp.classes[c].push_back(i);
        tp.orientation[i] = same ? 1 : -1;
        placed = true;
      }
    }
    if (!placed) {
      reps.push_back(i);
      tp.classes.push_back({i});
    }
  }
  for (const auto& c : tp.classes) tp.multiplicity.push_back(c.size());
  std::sort(tp.multiplicity.begin(), tp.multiplicity.end(), std::greater<>());
  return tp;
}

}  // namespace detail

inline TypePartition row_types(const SignMatrix& m) {
  return detail::partition_lines(m.size(), [&](std::size_t i, std::size_t j) { return m(i, j); });
}

inline TypePartition col_types(const SignMatrix& m) {
  return detail::partition_lines(m.size(), [&](std::size_t i, std::size_t j) { return m(j, i); });
}

struct StandardForm {
  SignMatrix matrix;
  Rank2Params params;
  std::int64_t x = 0;
  std::int64_t y = 0;
  // matrix == apply_similarity(input, group_element)
  SignedPermutation group_element;
};

// Rank-2 reduction: normalize, then order indices as
// (all-+ columns | all-- columns | v columns | -v columns), where v is the
// orientation of the non-constant column type that is + in row 0. Within each
// block, indices whose row carries +v come first; ties keep index order.
inline StandardForm to_standard_form(const SignMatrix& b, std::int64_t k) {
  if (!is_flat_idempotent(b, k)) throw DomainError("to_standard_form: not a flat idempotent");
  if (exact_rank(b) != 2) throw DomainError("to_standard_form: rank is not 2");
  const auto norm = normalize(b, k);
  const SignMatrix& nm = norm.matrix;
  const std::size_t n = nm.size();

  enum Block { kPlus, kMinus, kV, kNegV };
  std::vector<Block> block(n);
  std::optional<std::size_t> v_col;
  for (std::size_t j = 0; j < n; ++j) {
    bool all_plus = true, all_minus = true;
    for (std::size_t i = 0; i < n; ++i) {
      all_plus = all_plus && nm(i, j) > 0;
      all_minus = all_minus && nm(i, j) < 0;
    }
    if (all_plus) block[j] = kPlus;
    else if (all_minus) block[j] = kMinus;
    else {
      block[j] = nm(0, j) > 0 ? kV : kNegV;
      if (block[j] == kV && !v_col) v_col = j;
    }
  }
  if (!v_col) throw std::logic_error("to_standard_form: no v-type column");
  // Row sign carried in the v columns.
  std::vector<int> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = nm(i, *v_col);

  std::vector<std::size_t> order;
  order.reserve(n);
  Rank2Params p;
  std::int64_t* splits[4][2] = {{&p.a_p, &p.a_m}, {&p.b_p, &p.b_m},
                                {&p.c1p, &p.c1m}, {&p.c2p, &p.c2m}};
  for (int blk : {kPlus, kMinus, kV, kNegV})
    for (int sign : {1, -1})
      for (std::size_t i = 0; i < n; ++i)
        if (block[i] == blk && s[i] == sign) {
          order.push_back(i);
          ++*splits[blk][sign > 0 ? 0 : 1];
        }

  p.n = static_cast<std::int64_t>(n);
  p.k = k;
  p.m = (p.n - 2 * k) / 2;
  p.u = (p.n - k) / 2;
  p.a = p.a_p + p.a_m;
  p.b = p.b_p + p.b_m;
  p.c = p.c1p + p.c1m;
  std::tie(p.t, p.q, p.l) = p.free_coordinates();
  if (p.c2p + p.c2m != p.c)
    throw std::logic_error("to_standard_form: v and -v blocks differ in size");

  const auto perm_g = SignedPermutation::permutation(order);
  StandardForm sf{apply_similarity(nm, perm_g), p, p.x(), p.y(),
                  perm_g * norm.group_element};
  return sf;
}

struct CanonicalOptions {
  bool include_transpose = true;
  std::size_t cap = kDefaultCanonicalCap;
};

namespace detail {

// Lexicographically least (row-major, - < +) member of the orbit of m under
// signed-permutation similarity.
//
// Row 0 of the result is (d, -, -, ..., -): once the index placed first is
// chosen, the signs of all other indices are forced by that row, so the
// search runs over permutations only. Positions not yet placed are kept as an
// ordered partition into cells; each placed row is minimized by sorting the
// entries inside each cell, which splits the cell. Indices related by a
// signed transposition that fixes every other index (twins) give identical
// subtrees, so only one per twin class is branched on.
class LexMinSearch {
 public:
  explicit LexMinSearch(const SignMatrix& m) : m_(m), n_(m.size()) { compute_twins(); }

  SignMatrix run() {
    struct Node {
      std::vector<std::size_t> placed;
      std::vector<int> sign;  // sign per original index, valid once row 0 is set
      std::vector<std::vector<std::size_t>> cells;
    };

    std::vector<Node> level;
    {
      int best_diag = 2;
      for (std::size_t i = 0; i < n_; ++i) best_diag = std::min(best_diag, m_(i, i));
      std::vector<std::size_t> seen_twin;
      for (std::size_t i = 0; i < n_; ++i) {
        if (m_(i, i) != best_diag || is_covered(i, seen_twin)) continue;
        seen_twin.push_back(i);
        Node node;
        node.placed = {i};
        node.sign.assign(n_, 1);
        std::vector<std::size_t> rest;
        for (std::size_t j = 0; j < n_; ++j)
          if (j != i) {
            node.sign[j] = -m_(i, j);
            rest.push_back(j);
          }
        if (!rest.empty()) node.cells.push_back(std::move(rest));
        level.push_back(std::move(node));
      }
    }
    std::vector<std::int8_t> result;
    result.reserve(n_ * n_);
    result.push_back(static_cast<std::int8_t>(best_diag_of(level.front())));
    for (std::size_t j = 1; j < n_; ++j) result.push_back(-1);

    for (std::size_t depth = 1; depth < n_; ++depth) {
      std::vector<std::int8_t> best_row;
      std::vector<Node> next;
      for (const Node& node : level) {
        const auto& first = node.cells.front();
        std::vector<std::size_t> seen_twin;
        for (std::size_t cand : first) {
          if (is_covered(cand, seen_twin)) continue;
          seen_twin.push_back(cand);
          std::vector<std::int8_t> row;
          Node child;
          child.placed = node.placed;
          child.placed.push_back(cand);
          child.sign = node.sign;
          build_row(node, cand, row, child.cells);
          if (!best_row.empty()) {
            if (row > best_row) continue;
            if (row < best_row) next.clear();
          }
          best_row = row;
          next.push_back(std::move(child));
        }
      }
      result.insert(result.end(), best_row.begin(), best_row.end());
      level = std::move(next);
    }
    return SignMatrix(n_, std::move(result), n_);
  }

 private:
  int best_diag_of(const auto& node) const { return m_(node.placed[0], node.placed[0]); }

  int entry(const std::vector<int>& sign, std::size_t a, std::size_t b) const {
    return sign[a] * sign[b] * m_(a, b);
  }

  // Row for index `cand` placed at the next position; refines the cells.
  template <class Node>
  void build_row(const Node& node, std::size_t cand, std::vector<std::int8_t>& row,
                 std::vector<std::vector<std::size_t>>& cells) const {
    row.clear();
    for (std::size_t p : node.placed) row.push_back(static_cast<std::int8_t>(entry(node.sign, cand, p)));
    row.push_back(static_cast<std::int8_t>(m_(cand, cand)));
    cells.clear();
    for (std::size_t c = 0; c < node.cells.size(); ++c) {
      std::vector<std::size_t> neg, pos;
      for (std::size_t x : node.cells[c]) {
        if (x == cand) continue;
        (entry(node.sign, cand, x) < 0 ? neg : pos).push_back(x);
      }
      row.insert(row.end(), neg.size(), -1);
      row.insert(row.end(), pos.size(), 1);
      if (!neg.empty()) cells.push_back(std::move(neg));
      if (!pos.empty()) cells.push_back(std::move(pos));
    }
  }

  bool is_covered(std::size_t i, const std::vector<std::size_t>& reps) const {
    for (auto r : reps)
      if (twin_class_[r] == twin_class_[i]) return true;
    return false;
  }

  bool are_twins(std::size_t a, std::size_t b) const {
    // The swap carries the same sign on a and b, so the (a, b) entry must be
    // symmetric unless there is no third index to pin the signs.
    if (m_(a, a) != m_(b, b)) return false;
    if (n_ == 2) return true;
    if (m_(a, b) != m_(b, a)) return false;
    for (int sigma : {1, -1}) {
      bool ok = true;
      for (std::size_t j = 0; j < n_ && ok; ++j) {
        if (j == a || j == b) continue;
        ok = m_(a, j) == sigma * m_(b, j) && m_(j, a) == sigma * m_(j, b);
      }
      if (ok) return true;
    }
    return false;
  }

  void compute_twins() {
    twin_class_.assign(n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (twin_class_[i] != n_) continue;
      twin_class_[i] = i;
      for (std::size_t j = i + 1; j < n_; ++j)
        if (twin_class_[j] == n_ && are_twins(i, j)) twin_class_[j] = i;
    }
  }

  const SignMatrix& m_;
  std::size_t n_;
  std::vector<std::size_t> twin_class_;
};

}  // namespace detail

// Canonical representative of the orbit of m under signed-permutation
// similarity and, by default, transposition.
inline SignMatrix canonical_rep(const SignMatrix& m, const CanonicalOptions& opt = {}) {
  if (m.size() > opt.cap)
    throw CapExceeded("canonical_rep: dimension " + std::to_string(m.size()) +
                      " exceeds cap " + std::to_string(opt.cap));
  SignMatrix best = detail::LexMinSearch(m).run();
  if (opt.include_transpose) {
    SignMatrix tb = detail::LexMinSearch(transpose(m)).run();
    if (tb < best) best = std::move(tb);
  }
  return best;
}

// FNV-1a over the row-major sign pattern.
inline std::string canonical_hash(const SignMatrix& canonical) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](unsigned char c) {
    h ^= c;
    h *= 1099511628211ULL;
  };
  for (auto ch : std::to_string(canonical.size())) mix(static_cast<unsigned char>(ch));
  for (auto e : canonical.entries()) mix(e > 0 ? '+' : '-');
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = kHex[h & 0xf];
  return out;
}

}  // namespace afi
