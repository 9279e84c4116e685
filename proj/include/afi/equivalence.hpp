#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>

#include "afi/canonical.hpp"
#include "afi/construct.hpp"
#include "afi/core.hpp"

namespace afi {

struct EquivalenceOptions {
  bool include_transpose = true;
  std::size_t cap = kDefaultCanonicalCap;
};

// Cheapest invariants first: rank, trace, type counts, multiplicities; the
// canonical representative decides what survives.
inline bool are_equivalent(const SignMatrix& a, const SignMatrix& b,
                           const EquivalenceOptions& opt = {}) {
  if (a.size() != b.size()) throw DimensionError("are_equivalent: dimension mismatch");
  if (exact_rank(a) != exact_rank(b)) return false;
  if (a.trace() != b.trace()) return false;

  const auto ra = row_types(a), ca = col_types(a);
  const auto rb = row_types(b), cb = col_types(b);
  auto ordered = [](std::size_t x, std::size_t y) { return std::pair{std::min(x, y), std::max(x, y)}; };
  if (opt.include_transpose) {
    if (ordered(ra.count(), ca.count()) != ordered(rb.count(), cb.count())) return false;
    auto pa = std::minmax(ra.multiplicity, ca.multiplicity);
    auto pb = std::minmax(rb.multiplicity, cb.multiplicity);
    if (pa != pb) return false;
  } else {
    if (ra.count() != rb.count() || ca.count() != cb.count()) return false;
    if (ra.multiplicity != rb.multiplicity || ca.multiplicity != cb.multiplicity) return false;
  }
  const CanonicalOptions copt{.include_transpose = opt.include_transpose, .cap = opt.cap};
  return canonical_rep(a, copt) == canonical_rep(b, copt);
}

inline void require_standard_form(const StandardForm& f) {
  if (!f.params.satisfies_system() || f.matrix != standard_layout(f.params, f.matrix.size()) ||
      f.x != f.params.x() || f.y != f.params.y())
    throw DomainError("not a valid rank-2 standard form");
}

// Exchanges the v and -v column blocks (and the matching row blocks), then
// re-sorts rows inside each block: x -> n - x, y unchanged.
inline StandardForm swap_x(const StandardForm& f) {
  require_standard_form(f);
  const Rank2Params& p = f.params;
  Rank2Params s = p;
  s.a_p = p.a_m;
  s.a_m = p.a_p;
  s.b_p = p.b_m;
  s.b_m = p.b_p;
  s.c1p = p.c2m;
  s.c1m = p.c2p;
  s.c2p = p.c1m;
  s.c2m = p.c1p;
  std::tie(s.t, s.q, s.l) = s.free_coordinates();

  // The similarity realizing it: blocks (A, B, Y, Z) -> (A, B, Z, Y) with
  // each block's rows re-split so the (former) -v rows come first.
  const auto n = static_cast<std::size_t>(p.n);
  std::vector<std::size_t> perm;
  perm.reserve(n);
  auto push_block = [&](std::int64_t start, std::int64_t plus, std::int64_t minus) {
    for (std::int64_t i = 0; i < minus; ++i) perm.push_back(static_cast<std::size_t>(start + plus + i));
    for (std::int64_t i = 0; i < plus; ++i) perm.push_back(static_cast<std::size_t>(start + i));
  };
  push_block(0, p.a_p, p.a_m);
  push_block(p.a, p.b_p, p.b_m);
  push_block(p.a + p.b + p.c, p.c2p, p.c2m);
  push_block(p.a + p.b, p.c1p, p.c1m);
  const auto g = SignedPermutation::permutation(std::move(perm));

  StandardForm out{standard_layout(s, n), s, s.x(), s.y(), g * f.group_element};
  if (apply_similarity(f.matrix, g) != out.matrix)
    throw std::logic_error("swap_x: similarity does not reproduce the swapped layout");
  require_standard_form(out);
  return out;
}

// Signature similarity by the v-column signs makes the v/-v columns constant
// (and the constant columns non-constant); re-standardizing gives y -> n - y.
// If that flips x as well, swap_x restores it.
inline StandardForm swap_y(const StandardForm& f) {
  require_standard_form(f);
  const auto n = static_cast<std::size_t>(f.params.n);
  const std::size_t v_col = static_cast<std::size_t>(f.params.a + f.params.b);
  std::vector<int> signs(n);
  for (std::size_t i = 0; i < n; ++i) signs[i] = f.matrix(i, v_col);
  // Index v_col is the first +v row of the v block, so its diagonal entry is
  // +; bringing it to position 0 makes normalization keep the new constant
  // columns constant.
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::swap(perm[0], perm[v_col]);
  const auto g = SignedPermutation::permutation(std::move(perm)) *
                 SignedPermutation::signature(std::move(signs));
  StandardForm out = to_standard_form(apply_similarity(f.matrix, g), f.params.k);
  out.group_element = out.group_element * g * f.group_element;
  if (out.x != f.x) out = swap_x(out);
  if (out.x != f.x || out.y != f.params.n - f.y)
    throw std::logic_error("swap_y: unexpected multiplicities after re-standardizing");
  return out;
}

}  // namespace afi
