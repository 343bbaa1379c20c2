#include <gtest/gtest.h>

#include "symring/verify.hpp"

using namespace symring;
using E = GroupRingElement<Exact>;

TEST(Dft, IdentityAndCentralIdempotents)
{
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(dft(E::identity(n)), BlockSpectrum<Exact>::identity(n));
    EXPECT_EQ(idft(BlockSpectrum<Exact>::identity(n)), E::identity(n));
    for (const auto& lam : partitions(n))
      EXPECT_EQ(dft(central_idempotent<Exact>(lam)),
                BlockSpectrum<Exact>::single(lam, Matrix<Exact>::identity(lam.dimension())));
  }
}

TEST(Dft, WorkedExampleBlock)
{
  const auto y = young_symmetrizer<Exact>(verify::s5_tableau());
  const auto expected = verify::s5_expected();
  EXPECT_EQ(dft_block(y, Partition{4, 1}), expected.ys);
  EXPECT_EQ(dft_block(star(y), Partition{4, 1}), expected.ys_star);
  const auto f = idft(BlockSpectrum<Exact>::single(Partition{4, 1}, expected.f));
  EXPECT_EQ(f.support_size(), 120u);
  EXPECT_EQ(f, multiply(y, star(y)) * (Exact(1) / Exact(1440)));
}

TEST(Dft, IsomorphismAndRoundTrip)
{
  std::mt19937_64 rng(21);
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k < 40; ++k) {
      const auto a = verify::random_element(n, rng, 10), b = verify::random_element(n, rng, 10);
      EXPECT_EQ(dft(multiply(a, b)), dft(a) * dft(b));
      EXPECT_EQ(idft(dft(a)), a);
      EXPECT_EQ(dft(a + b), dft(a) + dft(b));
    }
}

TEST(Dft, DenseElementsRoundTrip)
{
  std::mt19937_64 rng(22);
  for (int n = 3; n <= 5; ++n) {
    E a(n);
    for (const auto& p : all_permutations(n)) a.add_term(p, verify::random_exact(rng));
    EXPECT_EQ(idft(dft(a)), a);
    const auto b = verify::random_element(n, rng, 20);
    EXPECT_EQ(dft(multiply(a, b)), dft(a) * dft(b));
  }
}

TEST(Dft, MinimalIdealSupport)
{
  std::mt19937_64 rng(23);
  for (const auto& lam : partitions(5)) {
    const auto z = central_idempotent<Exact>(lam);
    const auto a = multiply(verify::random_element(5, rng, 6), z);
    auto s = dft(a);
    s.prune();
    for (const auto& mu : s.support()) EXPECT_EQ(mu, lam);
  }
}

TEST(Dft, BijectiveOnEachBlock)
{
  // idft o dft on the spanning set {p z_lambda}
  for (const auto& lam : partitions(4)) {
    const auto z = central_idempotent<Exact>(lam);
    for (const auto& p : all_permutations(4)) {
      const auto a = multiply(E::basis(p), z);
      EXPECT_EQ(idft(dft(a, std::vector<Partition>{lam})), a);
    }
  }
  // every matrix unit is reached
  for (const auto& lam : partitions(4)) {
    const auto d = static_cast<std::size_t>(lam.dimension());
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const auto s = BlockSpectrum<Exact>::single(lam, Matrix<Exact>::unit(d, i, j));
        EXPECT_EQ(dft(idft(s)), s);
      }
  }
}

TEST(BlockSpectrum, ValidatesBlockSizes)
{
  BlockSpectrum<Exact> s(4);
  EXPECT_THROW(s.set_block(Partition{3, 1}, Matrix<Exact>::identity(2)), std::invalid_argument);
  EXPECT_THROW(s.set_block(Partition{3, 2}, Matrix<Exact>::identity(5)), std::invalid_argument);
  EXPECT_EQ(s.block(Partition{2, 2}), Matrix<Exact>(2, 2));
  std::size_t area = 0;
  const auto id6 = BlockSpectrum<Exact>::identity(6);
  for (const auto& [lam, m] : id6.blocks()) area += m.rows() * m.cols();
  EXPECT_EQ(area, 720u);
}
