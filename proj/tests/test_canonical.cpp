#include <gtest/gtest.h>

#include <random>

#include "afi/canonical.hpp"
#include "afi/construct.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace afi {
namespace {

using testing::fixture_a1;
using testing::fixture_a2;
using testing::fixture_a3;

TEST(Normalize, AlreadyNormalizedGivesIdentity) {
  const auto b = fixture_a1();
  const auto norm = normalize(b, 2);
  EXPECT_TRUE(norm.group_element.is_identity());
  EXPECT_EQ(norm.matrix, b);
}

TEST(Normalize, RecoversPositiveFirstColumn) {
  const auto b = fixture_a1();
  // Swap rows/cols 0 and 1, then flip index 2.
  const auto g = SignedPermutation::signature({1, 1, -1, 1, 1, 1, 1, 1}) *
                 SignedPermutation::permutation({1, 0, 2, 3, 4, 5, 6, 7});
  const auto moved = apply_similarity(b, g);
  ASSERT_LT(moved(2, 0), 0);
  const auto norm = normalize(moved, 2);
  for (std::size_t i = 0; i < 8; ++i) EXPECT_GT(norm.matrix(i, 0), 0);
  EXPECT_TRUE(is_flat_idempotent(norm.matrix, 2));
  EXPECT_EQ(apply_similarity(moved, norm.group_element), norm.matrix);
}

TEST(Normalize, RandomConjugatesHavePositiveCorner) {
  std::mt19937_64 rng(17);
  for (const auto& t : feasible_triples(12)) {
    const auto b = apply_similarity(construct(t.n, t.k, t.r), testing::random_group_element(static_cast<std::size_t>(t.n), rng));
    const auto norm = normalize(b, t.k);
    EXPECT_GT(norm.matrix(0, 0), 0);
    for (std::size_t i = 0; i < b.size(); ++i) EXPECT_GT(norm.matrix(i, 0), 0);
    EXPECT_EQ(apply_similarity(b, norm.group_element), norm.matrix);
  }
}

TEST(Normalize, RejectsNonIdempotent) {
  EXPECT_THROW(normalize(from_row_strings({"-+", "+-"}), 1), DomainError);
}

TEST(Types, FixtureMultiplicities) {
  EXPECT_EQ(row_types(fixture_a1()).multiplicity, (std::vector<std::size_t>{6, 2}));
  EXPECT_EQ(col_types(fixture_a1()).multiplicity, (std::vector<std::size_t>{6, 2}));
  EXPECT_EQ(row_types(fixture_a2()).multiplicity, (std::vector<std::size_t>{6, 2}));
  EXPECT_EQ(col_types(fixture_a2()).multiplicity, (std::vector<std::size_t>{4, 4}));
  EXPECT_EQ(row_types(fixture_a3()).count(), 4u);
}

TEST(Types, RankOneHasSingleType) {
  const auto tp = row_types(rank1_canonical(7, 3));
  EXPECT_EQ(tp.count(), 1u);
  EXPECT_EQ(tp.multiplicity, (std::vector<std::size_t>{7}));
}

TEST(Types, OrientationRecordsNegation) {
  const auto tp = row_types(from_row_strings({"+-+", "-+-", "+++"}));
  ASSERT_EQ(tp.count(), 2u);
  EXPECT_EQ(tp.classes[0], (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(tp.orientation, (std::vector<int>{1, -1, 1}));
}

TEST(Types, InvariantUnderSimilarity) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    const auto m = testing::random_sign_matrix(n, rng);
    const auto c = apply_similarity(m, testing::random_group_element(n, rng));
    EXPECT_EQ(row_types(m).multiplicity, row_types(c).multiplicity);
    EXPECT_EQ(col_types(m).multiplicity, col_types(c).multiplicity);
  }
}

TEST(StandardForm, FixedPointOfConstructor) {
  for (std::int64_t n = 4; n <= 14; n += 2)
    for (std::int64_t k = 2; 2 * k <= n; k += 2)
      for (const auto& c : enumerate_rank2_params(n, k)) {
        const auto [p, b] = rank2_standard(n, k, c.t, c.q, c.l);
        const auto sf = to_standard_form(b, k);
        EXPECT_EQ(sf.matrix, b);
        EXPECT_EQ(sf.params, p);
      }
}

TEST(StandardForm, FixtureA1) {
  const auto sf = to_standard_form(fixture_a1(), 2);
  EXPECT_TRUE(sf.x == 2 || sf.x == 6);
  EXPECT_TRUE(sf.params.satisfies_system());
  EXPECT_EQ(sf.matrix, standard_layout(sf.params));
  EXPECT_EQ(apply_similarity(fixture_a1(), sf.group_element), sf.matrix);
}

TEST(StandardForm, ConjugatesKeepInvariantsUpToSwaps) {
  std::mt19937_64 rng(31);
  for (std::int64_t n = 4; n <= 12; n += 2)
    for (std::int64_t k = 2; 2 * k <= n; k += 2)
      for (const auto& c : enumerate_rank2_params(n, k)) {
        const auto b = rank2_standard(n, k, c.t, c.q, c.l).second;
        const auto base = to_standard_form(b, k);
        for (int trial = 0; trial < 5; ++trial) {
          const auto g = testing::random_group_element(static_cast<std::size_t>(n), rng);
          const auto conj = apply_similarity(b, g);
          const auto sf = to_standard_form(conj, k);
          EXPECT_TRUE(sf.params.satisfies_system());
          EXPECT_EQ(sf.matrix, standard_layout(sf.params));
          EXPECT_EQ(apply_similarity(conj, sf.group_element), sf.matrix);
          EXPECT_EQ(std::min(sf.x, n - sf.x), std::min(base.x, n - base.x));
          EXPECT_EQ(std::min(sf.y, n - sf.y), std::min(base.y, n - base.y));
          // Transposition swaps the roles of rows and columns.
          const auto tf = to_standard_form(transpose(conj), k);
          EXPECT_EQ(std::min(tf.x, n - tf.x), std::min(base.y, n - base.y));
          EXPECT_TRUE(tf.params.satisfies_system());
        }
      }
}

TEST(StandardForm, Errors) {
  EXPECT_THROW(to_standard_form(fixture_a3(), 2), DomainError);
  EXPECT_THROW(to_standard_form(rank1_canonical(6, 2), 2), DomainError);
  EXPECT_THROW(to_standard_form(from_row_strings({"+-", "++"}), 2), DomainError);
}

TEST(CanonicalRep, MatchesBruteForceOrbitMinimum) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    SignMatrix m = testing::random_sign_matrix(n, rng);
    if (trial % 3 == 0) {
      // Structured inputs with many ties.
      const auto all = feasible_triples(6);
      std::vector<Triple> small;
      for (const auto& t : all)
        if (static_cast<std::size_t>(t.n) == n) small.push_back(t);
      if (!small.empty()) {
        const auto& t = small[rng() % small.size()];
        m = apply_similarity(construct(t.n, t.k, t.r), testing::random_group_element(n, rng));
      }
    }
    const bool with_t = trial % 2 == 0;
    EXPECT_EQ(canonical_rep(m, {.include_transpose = with_t}), testing::brute_force_orbit_min(m, with_t));
  }
}

TEST(CanonicalRep, OrbitConstantAndIdempotent) {
  std::mt19937_64 rng(43);
  std::vector<SignMatrix> inputs{fixture_a1(), fixture_a2(), fixture_a3(), block_construction(12, 2, 4),
                                 rank2_standard(12, 2, 1, 1, 0).second};
  for (const auto& m : inputs) {
    const auto c = canonical_rep(m);
    EXPECT_EQ(canonical_rep(c), c);
    EXPECT_EQ(canonical_rep(transpose(m)), c);
    for (int trial = 0; trial < 10; ++trial)
      EXPECT_EQ(canonical_rep(apply_similarity(m, testing::random_group_element(m.size(), rng))), c);
  }
}

TEST(CanonicalRep, SeparatesFixtures) {
  EXPECT_NE(canonical_rep(fixture_a1()), canonical_rep(fixture_a2()));
  EXPECT_NE(canonical_rep(fixture_a1(), {.include_transpose = false}),
            canonical_rep(fixture_a2(), {.include_transpose = false}));
}

TEST(CanonicalRep, CapIsEnforced) {
  EXPECT_THROW(canonical_rep(SignMatrix(13)), CapExceeded);
  EXPECT_NO_THROW(canonical_rep(SignMatrix(13), {.cap = 13}));
}

TEST(CanonicalHash, StableAndDistinct) {
  const auto c1 = canonical_rep(fixture_a1());
  EXPECT_EQ(canonical_hash(c1), canonical_hash(canonical_rep(transpose(fixture_a1()))));
  EXPECT_NE(canonical_hash(c1), canonical_hash(canonical_rep(fixture_a2())));
  EXPECT_EQ(canonical_hash(c1).size(), 16u);
}

}  // namespace
}  // namespace afi
