#pragma once

// Computing D_lambda(a*) from D_lambda(a) inside one block.
//
// A linear map M on vec(A) (entries row by row) with M vec(D(a)) = vec(D(a*))
// for every a in Z_lambda is built either from a permutation basis P_lambda
// (columns vec(D(p)) and vec(D(p^{-1})), M = Psi Phi^{-1}) or directly by
// inverse-transforming every matrix unit, starring, and transforming back.

#include "dft.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace symring {

/// d_lambda^2 permutations whose images D_lambda(p) span the full matrix ring.
struct PermBasisSet
{
  Partition lambda;
  std::vector<Permutation> perms;  // lex order, starts with id
};

struct StarTransferMap
{
  Partition lambda;
  Matrix<Rational> map;  // d^2 x d^2

  std::size_t dim() const { return lambda.dimension(); }
};

inline std::vector<std::int64_t> vec_of(const IntMatrix& m) { return m.vec(); }

/// Scans S_N in lexicographic order and keeps every permutation whose
/// vec(D(p)) is independent of those kept so far, until d^2 are found.
/// Only the current D(p) and the elimination state are held in memory.
inline PermBasisSet compute_plam(const Partition& lambda)
{
  const auto& rep = natural_representation(lambda);
  const std::size_t d = rep.dim();
  const std::size_t target = d * d;
  RowSpace space(target);
  PermBasisSet out{lambda, {}};
  std::optional<Permutation> p = Permutation::identity(lambda.size());
  while (p && out.perms.size() < target) {
    if (space.insert(rep.matrix(*p).vec())) out.perms.push_back(*p);
    p = next_permutation(*p);
  }
  if (out.perms.size() != target)
    throw std::logic_error("compute_plam: S_N exhausted before reaching d^2 independent matrices for " + lambda.pretty());
  return out;
}

/// The same permutations serve as a basis for the conjugate partition.
inline PermBasisSet transpose_reuse(const PermBasisSet& basis)
{
  return PermBasisSet{basis.lambda.conjugate(), basis.perms};
}

/// Rank of {vec(D_lambda(p)) : p in perms} in the representation of lambda.
inline std::size_t basis_rank(const Partition& lambda, const std::vector<Permutation>& perms)
{
  const auto& rep = natural_representation(lambda);
  RowSpace space(rep.dim() * rep.dim());
  for (const auto& p : perms) space.insert(rep.matrix(p).vec());
  return space.rank();
}

inline bool is_valid_basis(const PermBasisSet& basis)
{
  const auto d = basis.lambda.dimension();
  return basis.perms.size() == d * d && basis_rank(basis.lambda, basis.perms) == d * d;
}

/// Coefficient matrices of the permutation-basis construction: column k of
/// phi is vec(D(p_k)), column k of psi is vec(D(p_k^{-1})).
struct BasisMatrices
{
  Matrix<Integer> phi;
  Matrix<Integer> psi;
};

inline BasisMatrices basis_matrices(const PermBasisSet& basis)
{
  const auto& rep = natural_representation(basis.lambda);
  const std::size_t d = rep.dim();
  const std::size_t m = d * d;
  if (basis.perms.size() != m) throw std::invalid_argument("permutation basis has wrong size");
  BasisMatrices out{Matrix<Integer>(m, m), Matrix<Integer>(m, m)};
  for (std::size_t k = 0; k < m; ++k) {
    const auto a = rep.matrix(basis.perms[k]);
    const auto b = rep.matrix(inverse(basis.perms[k]));
    for (std::size_t r = 0; r < m; ++r) {
      out.phi(r, k) = static_cast<long>(a.vec()[r]);
      out.psi(r, k) = static_cast<long>(b.vec()[r]);
    }
  }
  return out;
}

/// M = Psi Phi^{-1}, computed by fraction-free elimination on Phi^T M^T = Psi^T.
inline StarTransferMap build_star_map_basis(const PermBasisSet& basis)
{
  auto [phi, psi] = basis_matrices(basis);
  auto sol = bareiss_solve(phi.transpose(), psi.transpose());
  if (!sol) throw std::domain_error("build_star_map_basis: Phi is singular for " + basis.lambda.pretty());
  return StarTransferMap{basis.lambda, sol->to_rational().transpose()};
}

/// Column (i,j) of M is vec(D(star(idft(E_ij)))).
inline StarTransferMap build_star_map_direct(const Partition& lambda)
{
  const std::size_t d = lambda.dimension();
  const std::size_t m = d * d;
  Matrix<Rational> out(m, m);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const auto a = idft(BlockSpectrum<Rational>::single(lambda, Matrix<Rational>::unit(d, i, j)));
      const auto b = dft_block(star(a), lambda);
      const std::size_t col = i * d + j;
      for (std::size_t r = 0; r < m; ++r) out(r, col) = b.vec()[r];
    }
  return StarTransferMap{lambda, std::move(out)};
}

/// B with vec(B) = M vec(A).
template <Coefficient S>
Matrix<S> apply_star_map(const StarTransferMap& map, const Matrix<S>& a)
{
  using T = ScalarTraits<S>;
  const std::size_t d = map.dim();
  if (a.rows() != d || a.cols() != d)
    throw std::invalid_argument("apply_star_map: expected a " + std::to_string(d) + "x" + std::to_string(d) + " matrix");
  const std::size_t m = d * d;
  std::vector<S> out(m, T::zero());
  S tmp;
  for (std::size_t k = 0; k < m; ++k) {
    const S& x = a.vec()[k];
    if (is_structural_zero(x)) continue;
    for (std::size_t r = 0; r < m; ++r) {
      const Rational& c = map.map(r, k);
      if (sgn(c) == 0) continue;
      tmp = x;
      tmp *= T::from_rational(c);
      out[r] += tmp;
    }
  }
  return Matrix<S>::from_vec(d, std::move(out));
}

/// D(a*) blockwise for a whole spectrum, given maps for its blocks.
template <Coefficient S>
BlockSpectrum<S> star_spectrum(const BlockSpectrum<S>& s, const std::map<Partition, StarTransferMap>& maps)
{
  BlockSpectrum<S> out(s.degree());
  for (const auto& [lam, m] : s.blocks()) {
    if (is_zero_matrix(m)) continue;
    auto it = maps.find(lam);
    if (it == maps.end()) throw std::invalid_argument("no star-transfer map for " + lam.pretty());
    out.set_block(lam, apply_star_map(it->second, m));
  }
  return out;
}

}  // namespace symring
