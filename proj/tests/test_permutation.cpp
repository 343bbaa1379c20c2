#include <gtest/gtest.h>

#include "symring/permutation.hpp"

#include <random>
#include <set>

using namespace symring;

TEST(Compose, PointwiseDefinition)
{
  EXPECT_EQ(compose(Permutation{2, 1, 3}, Permutation{1, 3, 2}), (Permutation{2, 3, 1}));
  EXPECT_EQ(compose(Permutation::identity(3), Permutation{3, 1, 2}), (Permutation{3, 1, 2}));
  EXPECT_TRUE(compose(Permutation{2, 3, 1}, Permutation{3, 1, 2}).is_identity());
}

TEST(Compose, DegreeMismatchThrows)
{
  EXPECT_THROW(compose(Permutation{2, 1}, Permutation{1, 2, 3}), std::invalid_argument);
}

TEST(Permutation, RejectsNonBijections)
{
  EXPECT_THROW((Permutation{1, 1, 2}), std::invalid_argument);
  EXPECT_THROW((Permutation{0, 1}), std::invalid_argument);
  EXPECT_THROW((Permutation{1, 4, 2}), std::invalid_argument);
  EXPECT_THROW(parse_permutation("1 2 x"), std::invalid_argument);
}

TEST(Permutation, GroupLawsOnRandomTriples)
{
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    auto pick = [&] { return lex_unrank(n, rng() % factorial(n)); };
    const auto p = pick(), q = pick(), r = pick();
    EXPECT_EQ(compose(p, compose(q, r)), compose(compose(p, q), r));
    EXPECT_TRUE(compose(p, inverse(p)).is_identity());
    EXPECT_TRUE(compose(inverse(p), p).is_identity());
    EXPECT_EQ(sign(compose(p, q)), sign(p) * sign(q));
    for (int i = 1; i <= n; ++i) EXPECT_EQ(compose(p, q)(i), p(q(i)));
  }
}

TEST(NextPermutation, Examples)
{
  EXPECT_EQ(next_permutation(Permutation{1, 2, 3}), (Permutation{1, 3, 2}));
  EXPECT_FALSE(next_permutation(Permutation{3, 2, 1}).has_value());
  EXPECT_EQ(next_permutation(Permutation{1, 3, 2}), (Permutation{2, 1, 3}));
}

TEST(NextPermutation, EnumeratesEachPermutationOnceInLexOrder)
{
  for (int n = 1; n <= 7; ++n) {
    std::set<std::vector<int>> seen;
    std::optional<Permutation> p = Permutation::identity(n);
    std::optional<Permutation> prev;
    while (p) {
      EXPECT_TRUE(seen.insert(p->images()).second);
      if (prev) EXPECT_LT(prev->images(), p->images());
      prev = p;
      p = next_permutation(*p);
    }
    EXPECT_EQ(seen.size(), factorial(n));
  }
}

TEST(LexRank, RoundTrip)
{
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t r = 0;
    for (const auto& p : all_permutations(n)) {
      EXPECT_EQ(lex_rank(p), r);
      EXPECT_EQ(lex_unrank(n, r), p);
      ++r;
    }
  }
}

TEST(ReducedWord, ReproducesPermutationWithMinimalLength)
{
  for (const auto& p : all_permutations(5)) {
    const auto w = reduced_word(p);
    EXPECT_EQ(static_cast<int>(w.size()), p.length());
    auto q = Permutation::identity(5);
    for (int i : w) q = compose(q, Permutation::transposition(5, i, i + 1));
    EXPECT_EQ(q, p);
  }
}

TEST(Sign, MatchesInversionParity)
{
  for (const auto& p : all_permutations(5)) EXPECT_EQ(sign(p), p.length() % 2 ? -1 : 1);
  EXPECT_EQ(sign(Permutation::transposition(4, 1, 3)), -1);
}

TEST(Permutation, TextForms)
{
  const Permutation p{2, 1, 3};
  EXPECT_EQ(p.to_string(), "2 1 3");
  EXPECT_EQ(parse_permutation("2 1 3"), p);
  EXPECT_EQ((Permutation{2, 3, 1, 4}).cycle_type(), (std::vector<int>{3, 1}));
}
