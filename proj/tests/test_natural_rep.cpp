#include <gtest/gtest.h>

#include "symring/natural_rep.hpp"
#include "symring/verify.hpp"

using namespace symring;

TEST(NaturalRep, IdentityMapsToIdentity)
{
  for (int n = 1; n <= 6; ++n)
    for (const auto& lam : partitions(n))
      EXPECT_EQ(natural_rep(lam, Permutation::identity(n)), IntMatrix::identity(lam.dimension()));
}

TEST(NaturalRep, BasisIsCanonicalTableauOrder)
{
  const auto& rep = natural_representation(Partition{4, 1});
  EXPECT_EQ(rep.dim(), 4u);
  EXPECT_EQ(rep.basis(), standard_tableaux(Partition{4, 1}));
}

TEST(NaturalRep, GeneratorProductsAgreeWithDirectStraightening)
{
  // matrix() composes adjacent-transposition matrices; straightened_matrix()
  // expands each permuted polytabloid directly.
  for (int n = 1; n <= 5; ++n)
    for (const auto& lam : partitions(n)) {
      const auto& rep = natural_representation(lam);
      for (const auto& p : all_permutations(n)) ASSERT_EQ(rep.matrix(p), rep.straightened_matrix(p)) << lam << ' ' << p;
    }
}

TEST(NaturalRep, IsMultiplicative)
{
  std::mt19937_64 rng(12);
  for (int k = 0; k < 300; ++k) {
    const int n = 2 + static_cast<int>(k % 5);
    const auto parts = partitions(n);
    const auto& lam = parts[rng() % parts.size()];
    const auto p = verify::random_permutation(n, rng), q = verify::random_permutation(n, rng);
    EXPECT_EQ(natural_rep(lam, compose(p, q)), natural_rep(lam, p) * natural_rep(lam, q));
    EXPECT_EQ(natural_rep(lam, p) * natural_rep(lam, inverse(p)), IntMatrix::identity(lam.dimension()));
  }
}

TEST(NaturalRep, IntegerMatricesWithUnitDeterminant)
{
  // integer entries are structural (IntMatrix); invertibility over Z shows up
  // as det = +-1
  std::mt19937_64 rng(13);
  for (const auto& lam : partitions(5))
    for (int k = 0; k < 100; ++k) {
      const auto m = natural_rep(lam, verify::random_permutation(5, rng));
      const auto det = determinant(m.map<Integer>([](std::int64_t v) { return Integer(static_cast<long>(v)); }));
      EXPECT_TRUE(det == 1 || det == -1);
    }
}

TEST(NaturalRep, TransposedActionConvention)
{
  // D(s) for s = (4 5) on the (4,1) basis 1234|5, 1235|4, 1245|3, 1345|2
  const auto m = natural_rep(Partition{4, 1}, Permutation{1, 2, 3, 5, 4});
  IntMatrix expected(4, 4);
  expected(0, 1) = 1;
  expected(1, 0) = 1;
  expected(2, 2) = 1;
  expected(3, 3) = 1;
  EXPECT_EQ(m, expected);
}

TEST(NaturalRep, CachedMatchesUncached)
{
  const auto& rep = natural_representation(Partition{3, 2, 1});
  for (const auto& p : all_permutations(6)) ASSERT_EQ(rep.cached(p), rep.matrix(p));
}
