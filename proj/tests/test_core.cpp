#include <gtest/gtest.h>

#include <random>

#include "afi/core.hpp"
#include "afi/text_format.hpp"
#include "afi/verify.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace afi {
namespace {

using testing::fixture_a1;

TEST(SignMatrix, RejectsBadEntriesAndShapes) {
  EXPECT_THROW(SignMatrix(2, std::vector<std::int8_t>{1, 0, 1, 1}), std::invalid_argument);
  EXPECT_THROW(SignMatrix(2, std::vector<std::int8_t>{1, 1, 1}), DimensionError);
  EXPECT_THROW(SignMatrix(0), DimensionError);
  EXPECT_THROW(SignMatrix(33), CapExceeded);
  EXPECT_NO_THROW(SignMatrix(40, 64));
  EXPECT_THROW(SignMatrix::from_rows({{1, 1}, {1}}), DimensionError);
}

TEST(SignMatrix, LexOrderPutsMinusFirst) {
  const auto a = from_row_strings({"-+", "++"});
  const auto b = from_row_strings({"+-", "++"});
  EXPECT_LT(a, b);
  EXPECT_LT(from_row_strings({"++", "+-"}), from_row_strings({"++", "++"}));
}

TEST(ApplySimilarity, IdentityIsNoOp) {
  const auto b = fixture_a1();
  EXPECT_EQ(apply_similarity(b, SignedPermutation::identity(8)), b);
}

TEST(ApplySimilarity, SignatureFlipNegatesOffDiagonalOfRowAndColumn) {
  const SignMatrix j2(2);
  const auto g = SignedPermutation::signature({-1, 1});
  const auto out = apply_similarity(j2, g);
  EXPECT_EQ(out, from_row_strings({"+-", "-+"}));
}

TEST(ApplySimilarity, PreservesIdempotenceOfFixture) {
  std::mt19937_64 rng(7);
  const auto b = fixture_a1();
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = testing::random_group_element(8, rng);
    EXPECT_TRUE(testing::naive_is_flat_idempotent(apply_similarity(b, g), 2));
  }
}

TEST(ApplySimilarity, DimensionMismatchThrows) {
  EXPECT_THROW(apply_similarity(SignMatrix(3), SignedPermutation::identity(2)), DimensionError);
}

TEST(ApplySimilarity, IsAGroupAction) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    const auto m = testing::random_sign_matrix(n, rng);
    const auto g = testing::random_group_element(n, rng);
    const auto h = testing::random_group_element(n, rng);
    EXPECT_EQ(apply_similarity(m, g * h), apply_similarity(apply_similarity(m, h), g));
    EXPECT_EQ(apply_similarity(apply_similarity(m, g), g.inverse()), m);
    EXPECT_TRUE((g * g.inverse()).is_identity());
  }
}

TEST(ApplySimilarity, MatchesExplicitConjugation) {
  // Q M Q^-1 with Q = S P, P[i][perm i] = 1, computed with dense products.
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    const auto m = testing::random_sign_matrix(n, rng);
    const auto g = testing::random_group_element(n, rng);
    testing::Dense q(n, std::vector<std::int64_t>(n, 0)), qt(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      q[i][g.perm()[i]] = g.signs()[i];
      qt[g.perm()[i]][i] = g.signs()[i];
    }
    const auto expect = testing::naive_product(testing::naive_product(q, testing::to_dense(m)), qt);
    EXPECT_EQ(testing::to_dense(apply_similarity(m, g)), expect);
  }
}

TEST(SignedPermutation, RejectsNonBijection) {
  EXPECT_THROW(SignedPermutation({0, 0}, {1, 1}), std::invalid_argument);
  EXPECT_THROW(SignedPermutation({0, 1}, {1, 2}), std::invalid_argument);
  EXPECT_THROW(SignedPermutation({0, 1}, {1}), DimensionError);
}

TEST(Transpose, IsAnInvolution) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = testing::random_sign_matrix(1 + rng() % 7, rng);
    EXPECT_EQ(transpose(transpose(m)), m);
  }
}

TEST(Transpose, RankOneHasConstantColumns) {
  const auto b = from_row_strings({"++-", "++-", "++-"});
  const auto t = transpose(b);
  EXPECT_EQ(t, from_row_strings({"+++", "+++", "---"}));
}

TEST(Transpose, PreservesIdempotence) {
  EXPECT_TRUE(testing::naive_is_flat_idempotent(transpose(fixture_a1()), 2));
}

TEST(Multiply, AllOnesSquares) {
  const SignMatrix j2(2);
  EXPECT_EQ(multiply(j2, j2), IntMatrix(j2).scaled(2));
}

TEST(Multiply, FixtureSquaresToTwiceItself) {
  const auto b = fixture_a1();
  EXPECT_EQ(multiply(b, b), IntMatrix(b).scaled(2));
}

TEST(Multiply, MatchesNaiveAndIsAssociative) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const auto a = testing::random_sign_matrix(n, rng);
    const auto b = testing::random_sign_matrix(n, rng);
    const auto c = testing::random_sign_matrix(n, rng);
    const auto ab = multiply(a, b);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        EXPECT_EQ(ab(i, j), testing::naive_product(testing::to_dense(a), testing::to_dense(b))[i][j]);
    EXPECT_EQ(multiply(ab, c), multiply(a, multiply(b, c)));
  }
}

TEST(Multiply, DimensionMismatchThrows) {
  EXPECT_THROW(multiply(SignMatrix(2), SignMatrix(3)), DimensionError);
}

TEST(TextFormat, ParsesBothTokenStyles) {
  const auto a = parse_matrix("2 2\n+ +\n+ +\n");
  const auto b = parse_matrix("2 2\n1 1\n1 1\n");
  EXPECT_EQ(a.matrix, b.matrix);
  EXPECT_EQ(a.k, 2);
  EXPECT_EQ(parse_matrix("2 1\n+ -\n-1 1\n").matrix, from_row_strings({"+-", "-+"}));
}

TEST(TextFormat, RoundTrips) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = testing::random_sign_matrix(1 + rng() % 10, rng);
    const auto back = parse_matrix(format_matrix(m, 3));
    EXPECT_EQ(back.matrix, m);
    EXPECT_EQ(back.k, 3);
  }
}

TEST(TextFormat, RejectsMalformedInput) {
  EXPECT_THROW(parse_matrix("2\n"), ParseError);
  EXPECT_THROW(parse_matrix("2 2\n+ +\n+\n"), ParseError);
  EXPECT_THROW(parse_matrix("2 2\n+ +\n+ 0\n"), ParseError);
  EXPECT_THROW(parse_matrix("2 2\n+ +\n+ +\n+\n"), ParseError);
  EXPECT_THROW(parse_matrix("2 0\n+ +\n+ +\n"), ParseError);
  EXPECT_THROW(parse_matrix("40 2\n"), CapExceeded);
}

}  // namespace
}  // namespace afi
