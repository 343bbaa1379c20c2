#include <gtest/gtest.h>

#include "symring/verify.hpp"

using namespace symring;
using E = GroupRingElement<Exact>;

namespace {

E term(std::initializer_list<int> p, Exact c = Exact(1)) { return E::basis(Permutation(p), c); }

// First w = e (p + c q) with w != 0 and w*w = 0.
std::optional<E> nilpotent_generator(const E& e)
{
  const int n = e.degree();
  for (const auto& p : all_permutations(n))
    for (const auto& q : all_permutations(n))
      for (int c : {0, 1, -1, 2, -2}) {
        auto x = E::basis(p);
        if (c != 0) x += E::basis(q, Exact(c));
        const auto w = multiply(e, x);
        if (!w.is_zero() && multiply(w, w).is_zero()) return w;
      }
  return std::nullopt;
}

}  // namespace

TEST(YoungSymmetrizer, Examples)
{
  const auto y = young_symmetrizer<Exact>(verify::s5_tableau());
  EXPECT_EQ(y.support_size(), 48u);
  EXPECT_EQ(essential_idempotency(y).kappa, Exact(30));

  for (int n = 1; n <= 5; ++n) {
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 1);
    const auto row = young_symmetrizer<Exact>(Tableau({all}));
    EXPECT_EQ(row.support_size(), factorial(n));
    EXPECT_EQ(essential_idempotency(row).kappa, Exact(static_cast<long>(factorial(n))));
    std::vector<std::vector<int>> column;
    for (int v : all) column.push_back({v});
    const auto col = young_symmetrizer<Exact>(Tableau(column));
    for (const auto& [p, c] : col.terms()) EXPECT_EQ(c, Exact(sign(p)));
    EXPECT_EQ(col * (Exact(1) / Exact(static_cast<long>(factorial(n)))),
              central_idempotent<Exact>(Partition(std::vector<int>(all.size(), 1))));
  }
}

TEST(YoungSymmetrizer, KappaIsGroupOrderOverDimension)
{
  for (const auto& lam : partitions(4))
    for (const auto& t : standard_tableaux(lam))
      EXPECT_EQ(essential_idempotency(young_symmetrizer<Exact>(t)).kappa, Exact(static_cast<long>(24 / lam.dimension())));
}

TEST(PrimitiveSeedSet, SizesAndIdempotency)
{
  EXPECT_EQ(primitive_seed_set(3).size(), 4u);
  const auto s5 = primitive_seed_set(5);
  EXPECT_EQ(s5.size(), 26u);
  for (const auto& s : s5) EXPECT_TRUE(is_idempotent(s.idempotent)) << s.tableau.to_string();
  // partitions in decreasing lex order, tableaux in canonical order
  const auto s4 = primitive_seed_set(4);
  EXPECT_EQ(s4.front().tableau.shape(), Partition{4});
  EXPECT_EQ(s4[1].tableau.to_string(), "1 2 3 / 4");
  EXPECT_EQ(s4.back().tableau.shape(), (Partition{1, 1, 1, 1}));
}

TEST(PrimitiveFromGenerator, Rescaling)
{
  const RingAlgebra<Exact> ring(5);
  const auto y = young_symmetrizer<Exact>(verify::s5_tableau());
  const auto h = primitive_from_generator(ring, y);
  EXPECT_EQ(h.kappa, Exact(30));
  EXPECT_FALSE(h.search_perm.has_value());
  EXPECT_EQ(h.idempotent, y * (Exact(1) / Exact(30)));
}

TEST(PrimitiveFromGenerator, NilpotentGeneratorsUseTheSearch)
{
  for (int n = 3; n <= 4; ++n) {
    const RingAlgebra<Exact> ring(n);
    for (const auto& seed : primitive_seed_set(n)) {
      if (seed.tableau.shape().dimension() == 1) continue;
      const auto w = nilpotent_generator(seed.idempotent);
      ASSERT_TRUE(w.has_value()) << seed.tableau.to_string();
      const auto h = primitive_from_generator(ring, *w);
      ASSERT_TRUE(h.search_perm.has_value());
      EXPECT_TRUE(is_idempotent(h.idempotent));
      EXPECT_EQ(multiply(h.idempotent, *w), *w);  // w in hC
      EXPECT_EQ(multiply(*w, E::basis(*h.search_perm)) * (Exact(1) / h.kappa), h.idempotent);  // h in wC
    }
  }
}

TEST(PrimitiveFromGenerator, RejectsNonMinimalGenerators)
{
  const RingAlgebra<Exact> ring(3);
  EXPECT_THROW(primitive_from_generator(ring, E(3)), std::invalid_argument);
  // id generates the whole ring: id*id = id, fine; id + (12) + (123) is not essentially idempotent
  EXPECT_THROW(primitive_from_generator(ring, term({1, 2, 3}) + term({2, 1, 3}) + term({2, 3, 1})), std::invalid_argument);
}

TEST(WeylIdempotent, Examples)
{
  const RingAlgebra<Exact> ring(5);
  const auto z = central_idempotent<Exact>(Partition{5});
  const auto same = weyl_idempotent(ring, z);
  EXPECT_EQ(same.idempotent, z);
  EXPECT_EQ(same.alpha, Exact(1));

  const auto y = young_symmetrizer<Exact>(verify::s5_tableau());
  const auto f = weyl_idempotent(ring, y * (Exact(1) / Exact(30)));
  EXPECT_EQ(f.idempotent.support_size(), 120u);
  EXPECT_EQ(dft_block(f.idempotent, Partition{4, 1}), verify::s5_expected().f);
  EXPECT_TRUE(has_property_S(f.idempotent));
  EXPECT_TRUE(ScalarTraits<Exact>::is_real(f.alpha));
}

TEST(WeylIdempotent, ComplexGeneratorsGiveRealAlpha)
{
  const RingAlgebra<Exact> ring(4);
  const Exact i(Rational(0), Rational(1));
  std::mt19937_64 rng(41);
  for (const auto& seed : primitive_seed_set(4)) {
    const auto x = verify::random_element(4, rng, 5);
    const auto e = seed.idempotent + multiply(multiply(seed.idempotent, x * i), E::identity(4) - seed.idempotent);
    ASSERT_TRUE(is_idempotent(e));
    const auto f = weyl_idempotent(ring, e);
    EXPECT_TRUE(ScalarTraits<Exact>::is_real(f.alpha));
    EXPECT_TRUE(has_property_S(f.idempotent));
    EXPECT_EQ(multiply(f.idempotent, e), e);
  }
}

TEST(WeylIdempotent, UniquenessAcrossGenerators)
{
  const RingAlgebra<Exact> ring(4);
  std::mt19937_64 rng(42);
  const auto one = E::identity(4);
  for (const auto& seed : primitive_seed_set(4)) {
    const auto f = weyl_idempotent(ring, seed.idempotent).idempotent;
    for (int k = 0; k < 10; ++k) {
      const auto x = verify::random_element(4, rng, 6);
      const auto e = seed.idempotent + multiply(multiply(seed.idempotent, x), one - seed.idempotent);
      EXPECT_EQ(weyl_idempotent(ring, e).idempotent, f);
    }
  }
}

TEST(WeylIdempotent, AnnihilatorIdealIsRejected)
{
  // RingAlgebra knows nothing about H; zero e*bar_star(e) only arises for e = 0
  const RingAlgebra<Exact> ring(3);
  EXPECT_THROW(weyl_idempotent(ring, E(3)), std::domain_error);
}

TEST(Decompose, Examples)
{
  const auto seeds3 = primitive_seed_set(3);
  const RingAlgebra<Exact> r3(3);
  const auto id = decompose_self_adjoint(r3, E::identity(3), seeds3);
  EXPECT_EQ(id.parts.size(), 4u);
  EXPECT_EQ(verify::check_decomposition(E::identity(3), id.parts), "");

  const RingAlgebra<Exact> r2(2);
  const auto sym = (term({1, 2}) + term({2, 1})) * Exact(Rational(1, 2));
  const auto one = decompose_self_adjoint(r2, sym, primitive_seed_set(2));
  ASSERT_EQ(one.parts.size(), 1u);
  EXPECT_EQ(one.parts.front(), sym);

  const auto seeds5 = primitive_seed_set(5);
  const RingAlgebra<Exact> r5(5);
  for (const auto& lam : partitions(5)) {
    const auto z = central_idempotent<Exact>(lam);
    const auto dec = decompose_self_adjoint(r5, z, seeds5);
    EXPECT_EQ(dec.parts.size(), lam.dimension());
    EXPECT_EQ(verify::check_decomposition(z, dec.parts), "") << lam;
  }
}

TEST(Decompose, RestIsOrthogonalToEachNewPart)
{
  const RingAlgebra<Exact> ring(4);
  const auto e = E::identity(4);
  const auto dec = decompose_self_adjoint(ring, e, primitive_seed_set(4));
  auto rest = e;
  for (const auto& f : dec.parts) {
    rest -= f;
    EXPECT_TRUE(multiply(f, rest).is_zero());
    EXPECT_TRUE(multiply(rest, f).is_zero());
  }
  EXPECT_TRUE(rest.is_zero());
  for (const auto& a : dec.audit) EXPECT_TRUE(ScalarTraits<Exact>::is_real(a.alpha));
}

TEST(Decompose, SpectralModeMatchesRingMode)
{
  const SpectralAlgebra<Exact> spectral(4);
  const auto seeds = primitive_seed_set(4);
  EXPECT_EQ(verify::decompose_and_check(E::identity(4), seeds, &spectral), "");
  for (const auto& [name, cs] : verify::sample_commutation_symmetries(4))
    EXPECT_EQ(verify::decompose_and_check(commutation_idempotent(cs), seeds, &spectral), "") << name;
}

TEST(Decompose, RejectsInvalidInput)
{
  const RingAlgebra<Exact> ring(3);
  const auto seeds = primitive_seed_set(3);
  EXPECT_THROW(decompose_self_adjoint(ring, term({2, 1, 3}), seeds), std::invalid_argument);  // not idempotent
  const auto y = young_symmetrizer<Exact>(parse_tableau("1 2 / 3")) * Exact(Rational(1, 3));
  ASSERT_TRUE(is_idempotent(y));
  EXPECT_THROW(decompose_self_adjoint(ring, y, seeds), std::invalid_argument);  // lacks (S)
}

TEST(Decompose, EnforcesMembershipInJWhenLettersAreFew)
{
  const RingAlgebra<Exact> ring(3);
  const auto seeds = primitive_seed_set(3);
  const auto anti = central_idempotent<Exact>(Partition{1, 1, 1});
  EXPECT_THROW(decompose_self_adjoint(ring, anti, seeds, DecomposeOptions{2}), std::invalid_argument);
  EXPECT_NO_THROW(decompose_self_adjoint(ring, anti, seeds, DecomposeOptions{3}));
  const auto j = E::identity(3) - anti;
  const auto dec = decompose_self_adjoint(ring, j, seeds, DecomposeOptions{2});
  EXPECT_EQ(dec.parts.size(), 3u);
}

TEST(Decompose, RandomSelfAdjointIdempotents)
{
  verify::Rng rng(43);
  const auto seeds = primitive_seed_set(4);
  for (const auto& e : verify::random_self_adjoint_idempotents(4, 20, rng)) {
    ASSERT_TRUE(is_idempotent(e));
    ASSERT_TRUE(has_property_S(e));
    EXPECT_EQ(verify::decompose_and_check(e, seeds, nullptr), "");
  }
}
