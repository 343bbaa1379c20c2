#include <gtest/gtest.h>

#include "symring/verify.hpp"

using namespace symring;
using E = GroupRingElement<Exact>;
using V = HilbertVector<Exact>;

namespace {

SpinConfiguration spins(std::vector<int> v, int letters = 2) { return SpinConfiguration(letters, std::move(v)); }

E antisymmetrizer(int n) { return central_idempotent<Exact>(Partition(std::vector<int>(static_cast<std::size_t>(n), 1))); }

}  // namespace

TEST(PermuteKet, Examples)
{
  EXPECT_EQ(permute_ket(Permutation{2, 1}, spins({2, 1})), spins({1, 2}));
  EXPECT_EQ(permute_ket(Permutation::identity(3), spins({2, 1, 1})), spins({2, 1, 1}));
  // result(i) = sigma(p^{-1}(i))
  const Permutation p{2, 3, 1};
  const auto s = spins({1, 2, 3}, 3);
  const auto r = permute_ket(p, s);
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(r(i), s(inverse(p)(i)));
}

TEST(PermuteKet, IsAGroupAction)
{
  verify::Rng rng(51);
  for (int k = 0; k < 100; ++k) {
    const int n = 2 + static_cast<int>(k % 5);
    const auto p = verify::random_permutation(n, rng), q = verify::random_permutation(n, rng);
    const auto sigma = SpinConfiguration::from_index(n, 3, rng() % hilbert_dimension(n, 3));
    EXPECT_EQ(permute_ket(p, permute_ket(q, sigma)), permute_ket(compose(p, q), sigma));
  }
}

TEST(SpinConfiguration, LexIndexRoundTripAndValidation)
{
  for (std::uint64_t i = 0; i < hilbert_dimension(4, 3); ++i) EXPECT_EQ(SpinConfiguration::from_index(4, 3, i).index(), i);
  EXPECT_EQ(spins({1, 1, 1}).index(), 0u);
  EXPECT_EQ(spins({2, 2, 2}).index(), 7u);
  EXPECT_THROW(spins({0, 1}), std::invalid_argument);
  EXPECT_THROW(spins({3, 1}), std::invalid_argument);
  EXPECT_EQ(basis_configurations(3, 2).size(), 8u);
}

TEST(ApplyOperator, ExamplesAndModuleProperty)
{
  verify::Rng rng(52);
  const auto w = verify::random_ket(4, 2, rng, 8);
  EXPECT_EQ(apply_operator(E::identity(4), w), w);
  for (const auto& sigma : basis_configurations(3, 2)) EXPECT_TRUE(apply_operator(antisymmetrizer(3), V::ket(sigma)).is_zero());
  for (int k = 0; k < 50; ++k) {
    const auto a = verify::random_element(4, rng, 6), b = verify::random_element(4, rng, 6);
    const auto u = verify::random_ket(4, 2, rng, 6);
    EXPECT_EQ(apply_operator(a, apply_operator(b, u)), apply_operator(multiply(a, b), u));
  }
  EXPECT_THROW(apply_operator(E::identity(3), w), std::invalid_argument);
}

TEST(InnerProduct, AdjointIsBarStar)
{
  verify::Rng rng(53);
  for (int n = 2; n <= 5; ++n)
    for (int k = 0; k < 25; ++k) {
      const auto a = verify::random_element(n, rng, 8);
      const auto u = verify::random_ket(n, 2, rng, 8), v = verify::random_ket(n, 2, rng, 8);
      EXPECT_EQ(inner_product(apply_operator(a, u), v), inner_product(u, apply_operator(bar_star(a), v)));
    }
}

TEST(InnerProduct, PositiveDefinite)
{
  verify::Rng rng(54);
  for (int k = 0; k < 20; ++k) {
    const auto u = verify::random_ket(4, 2, rng, 6);
    const auto n = inner_product(u, u);
    EXPECT_TRUE(n.is_real());
    EXPECT_GT(sgn(n.re), 0);
  }
}

TEST(OperatorMatrix, PropertySElementsAreHermitian)
{
  verify::Rng rng(55);
  for (int n = 2; n <= 5; ++n)
    for (int k = 0; k < 5; ++k) {
      const auto x = verify::random_element(n, rng, 6);
      const auto a = x + bar_star(x);
      const auto m = operator_matrix(a, 2);
      EXPECT_EQ(conj(m).transpose(), m);
    }
}

TEST(InAnnihilator, Examples)
{
  EXPECT_TRUE(in_annihilator(antisymmetrizer(3), 2));
  EXPECT_TRUE(annihilates_all_kets(antisymmetrizer(3), 2));
  EXPECT_FALSE(in_annihilator(antisymmetrizer(3), 3));
  for (int k = 1; k <= 3; ++k) EXPECT_FALSE(in_annihilator(E::identity(4), k));
}

TEST(InAnnihilator, SpectralAgreesWithBruteForce)
{
  verify::Rng rng(56);
  for (int n = 2; n <= 5; ++n)
    for (int letters : {2, 3}) {
      const auto f0 = annihilator_generator<Exact>(n, letters);
      for (int k = 0; k < 12; ++k) {
        auto a = verify::random_element(n, rng, 6);
        if (k % 2 && !f0.is_zero()) a = multiply(f0, a);
        EXPECT_EQ(in_annihilator(a, letters), annihilates_all_kets(a, letters));
      }
    }
}

TEST(Annihilator, ClosedUnderInvolutions)
{
  verify::Rng rng(57);
  const auto f0 = annihilator_generator<Exact>(5, 2);
  for (int k = 0; k < 50; ++k) {
    const auto a = multiply(verify::random_element(5, rng, 5), f0);
    ASSERT_TRUE(in_annihilator(a, 2));
    EXPECT_TRUE(in_annihilator(conj(a), 2));
    EXPECT_TRUE(in_annihilator(star(a), 2));
    EXPECT_TRUE(in_annihilator(bar_star(a), 2));
  }
}

TEST(Annihilator, GeneratorSplitsTheRing)
{
  for (int n = 3; n <= 5; ++n)
    for (int letters : {2, 3}) {
      const auto f0 = annihilator_generator<Exact>(n, letters);
      EXPECT_TRUE(is_idempotent(f0));
      EXPECT_TRUE(annihilates_all_kets(f0, letters));
      const auto rest = E::identity(n) - f0;
      for (const auto& sigma : basis_configurations(n, letters))
        EXPECT_EQ(apply_operator(rest, V::ket(sigma)), V::ket(sigma));
    }
}

TEST(Annihilator, AdjointDeterminedUpToJ0)
{
  // <au|v> = <u|bv> for all basis kets when b = bar_star(a) + j with j in J_0
  verify::Rng rng(58);
  const int n = 4, letters = 2;
  const auto f0 = annihilator_generator<Exact>(n, letters);
  const auto basis = basis_configurations(n, letters);
  for (int k = 0; k < 5; ++k) {
    const auto a = verify::random_element(n, rng, 6);
    const auto b = bar_star(a) + multiply(verify::random_element(n, rng, 6), f0);
    for (const auto& s : basis)
      for (const auto& t : basis)
        EXPECT_EQ(inner_product(apply_operator(a, V::ket(s)), V::ket(t)), inner_product(V::ket(s), apply_operator(b, V::ket(t))));
    EXPECT_TRUE(in_annihilator(b - bar_star(a), letters));
  }
}

TEST(SymmetryClass, Examples)
{
  const int n = 3;
  const auto sym = central_idempotent<Exact>(Partition{n});
  V all(n, 2);
  for (const auto& s : basis_configurations(n, 2)) all.add(s, Exact(1));
  EXPECT_TRUE(symmetry_class_contains(sym, all));
  const auto sym2 = central_idempotent<Exact>(Partition{2});
  const auto anti = V::ket(spins({2, 1})) - V::ket(spins({1, 2}));
  EXPECT_FALSE(symmetry_class_contains(sym2, anti));
  EXPECT_THROW(symmetry_class_contains(E::basis(Permutation{2, 1}), anti), std::invalid_argument);
}

TEST(SymmetryClass, CommutationSymmetryCriterion)
{
  verify::Rng rng(59);
  for (const auto& [name, cs] : verify::sample_commutation_symmetries(4)) {
    const auto eps = commutation_idempotent(cs);
    const auto proj = star(eps);
    for (int k = 0; k < 50; ++k) {
      const auto u = apply_operator(proj, verify::random_ket(4, 2, rng, 8));
      EXPECT_TRUE(symmetry_class_contains(proj, u)) << name;
      for (const auto& [c, value] : cs.epsilon()) EXPECT_EQ(apply_operator(E::basis(c), u), value * u) << name;
    }
  }
}

TEST(Hamiltonian, TwoSiteDiagonal)
{
  const auto h = hamiltonian_matrix(2, Rational(1), Coupling::Ferro);
  const auto up = spins({2, 2}).index();
  EXPECT_EQ(h(up, up), Rational(-1, 2));
  const auto h3 = hamiltonian_matrix(2, Rational(3), Coupling::Ferro);
  EXPECT_EQ(h3(up, up), Rational(-3, 2));
}

TEST(Hamiltonian, AntiferroIsNegatedAndBothAreSymmetric)
{
  for (int n = 2; n <= 6; ++n) {
    const auto hf = hamiltonian_matrix(n, Rational(1), Coupling::Ferro);
    const auto ha = hamiltonian_matrix(n, Rational(1), Coupling::Antiferro);
    EXPECT_EQ(ha, hf * Rational(-1));
    EXPECT_EQ(hf.transpose(), hf);
  }
  EXPECT_THROW(hamiltonian_matrix(3, Rational(1), Coupling::Ferro, 3), std::invalid_argument);
}

TEST(Hamiltonian, ExchangeFormViaTranspositions)
{
  // S_k . S_l = P_kl / 2 - 1/4 on spin 1/2, so H_F = -J sum_k (P_{k,k+1}/2 - 1/4)
  for (int n = 2; n <= 6; ++n) {
    const Rational j(2, 3);
    E bonds(n);
    for (int k = 1; k <= n; ++k) bonds.add_term(Permutation::transposition(n, k, k % n + 1), Exact(Rational(1, 2)));
    Rational shift(-n, 4);
    shift.canonicalize();
    bonds.add_term(Permutation::identity(n), Exact(shift));
    const auto expected = operator_matrix(bonds, 2) * Exact(-j);
    const auto h = hamiltonian_matrix(n, j, Coupling::Ferro);
    EXPECT_EQ(h.map<Exact>([](const Rational& x) { return Exact(x); }), expected);
  }
}
