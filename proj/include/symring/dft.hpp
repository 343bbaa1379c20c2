#pragma once

// Discrete Fourier transform of C[S_N] onto the product of full matrix rings,
// one d_lambda x d_lambda block per partition (Young's natural representation).

#include "group_ring.hpp"
#include "natural_rep.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace symring {

/// Image of a group ring element: one square block per partition. Absent
/// blocks are zero.
template <Coefficient S>
class BlockSpectrum
{
public:
  using Traits = ScalarTraits<S>;
  using Blocks = std::map<Partition, Matrix<S>>;

  BlockSpectrum() = default;
  explicit BlockSpectrum(int degree) : n_(degree) {}

  static BlockSpectrum identity(int n)
  {
    BlockSpectrum s(n);
    for (const auto& lam : partitions(n)) s.set_block(lam, Matrix<S>::identity(lam.dimension()));
    return s;
  }

  /// Spectrum with a single nonzero block.
  static BlockSpectrum single(const Partition& lambda, Matrix<S> block)
  {
    BlockSpectrum s(lambda.size());
    s.set_block(lambda, std::move(block));
    return s;
  }

  int degree() const { return n_; }
  const Blocks& blocks() const { return blocks_; }

  void set_block(const Partition& lambda, Matrix<S> block)
  {
    if (lambda.size() != n_) throw std::invalid_argument("spectrum block partition does not match degree");
    const auto d = lambda.dimension();
    if (block.rows() != d || block.cols() != d) throw std::invalid_argument("spectrum block size does not match d_lambda");
    blocks_[lambda] = std::move(block);
  }

  bool has_block(const Partition& lambda) const { return blocks_.count(lambda) != 0; }

  /// Block lambda, or the zero matrix if absent.
  Matrix<S> block(const Partition& lambda) const
  {
    if (auto it = blocks_.find(lambda); it != blocks_.end()) return it->second;
    const auto d = lambda.dimension();
    return Matrix<S>(d, d);
  }

  /// Partitions whose block is nonzero.
  std::vector<Partition> support() const
  {
    std::vector<Partition> out;
    for (const auto& [lam, m] : blocks_)
      if (!is_zero_matrix(m)) out.push_back(lam);
    return out;
  }

  bool is_zero() const { return support().empty(); }

  /// Drops zero blocks.
  void prune()
  {
    for (auto it = blocks_.begin(); it != blocks_.end();)
      it = is_zero_matrix(it->second) ? blocks_.erase(it) : std::next(it);
  }

  BlockSpectrum& operator+=(const BlockSpectrum& o)
  {
    check(o);
    for (const auto& [lam, m] : o.blocks_) {
      auto it = blocks_.find(lam);
      if (it == blocks_.end())
        blocks_.emplace(lam, m);
      else
        it->second += m;
    }
    return *this;
  }
  BlockSpectrum& operator-=(const BlockSpectrum& o)
  {
    check(o);
    for (const auto& [lam, m] : o.blocks_) {
      auto it = blocks_.find(lam);
      if (it == blocks_.end())
        blocks_.emplace(lam, m * S(-1));
      else
        it->second -= m;
    }
    return *this;
  }
  BlockSpectrum& operator*=(const S& s)
  {
    for (auto& [lam, m] : blocks_) m *= s;
    return *this;
  }

  friend BlockSpectrum operator+(BlockSpectrum a, const BlockSpectrum& b) { return a += b; }
  friend BlockSpectrum operator-(BlockSpectrum a, const BlockSpectrum& b) { return a -= b; }
  friend BlockSpectrum operator*(BlockSpectrum a, const S& s) { return a *= s; }
  friend BlockSpectrum operator*(const S& s, BlockSpectrum a) { return a *= s; }

  /// Blockwise matrix product.
  friend BlockSpectrum operator*(const BlockSpectrum& a, const BlockSpectrum& b)
  {
    a.check(b);
    BlockSpectrum r(a.n_);
    for (const auto& [lam, m] : a.blocks_)
      if (auto it = b.blocks_.find(lam); it != b.blocks_.end()) r.blocks_.emplace(lam, m * it->second);
    return r;
  }

  friend BlockSpectrum conj(const BlockSpectrum& a)
  {
    BlockSpectrum r(a.n_);
    for (const auto& [lam, m] : a.blocks_) r.blocks_.emplace(lam, symring::conj(m));
    return r;
  }

  /// Equality treating absent blocks as zero.
  friend bool operator==(const BlockSpectrum& a, const BlockSpectrum& b)
  {
    if (a.n_ != b.n_) return false;
    auto covered = [](const BlockSpectrum& x, const BlockSpectrum& y) {
      for (const auto& [lam, m] : x.blocks_) {
        auto it = y.blocks_.find(lam);
        if (it == y.blocks_.end()) {
          if (!is_zero_matrix(m)) return false;
        } else if (!approx_equal(m, it->second)) {
          return false;
        }
      }
      return true;
    };
    return covered(a, b) && covered(b, a);
  }

private:
  void check(const BlockSpectrum& o) const
  {
    if (n_ != o.n_) throw std::invalid_argument("spectrum degree mismatch");
  }

  int n_ = 0;
  Blocks blocks_;
};

/// A_lambda = sum_p a_p D_lambda(p) for a single partition.
template <Coefficient S>
Matrix<S> dft_block(const GroupRingElement<S>& a, const Partition& lambda)
{
  if (lambda.size() != a.degree()) throw std::invalid_argument("dft_block: degree mismatch");
  const auto& rep = natural_representation(lambda);
  const std::size_t d = rep.dim();
  Matrix<S> out(d, d);
  S tmp;
  for (const auto& [p, c] : a.terms()) {
    const IntMatrix& m = rep.cached(p);
    for (std::size_t k = 0; k < d * d; ++k) {
      const std::int64_t v = m.vec()[k];
      if (v == 0) continue;
      if (v == 1) {
        out.vec()[k] += c;
      } else if (v == -1) {
        out.vec()[k] -= c;
      } else {
        tmp = c;
        tmp *= ScalarTraits<S>::from_int(v);
        out.vec()[k] += tmp;
      }
    }
  }
  return out;
}

/// Forward transform; when only is given, restricts to those partitions.
template <Coefficient S>
BlockSpectrum<S> dft(const GroupRingElement<S>& a, const std::optional<std::vector<Partition>>& only = std::nullopt)
{
  BlockSpectrum<S> s(a.degree());
  for (const auto& lam : only ? *only : partitions(a.degree())) s.set_block(lam, dft_block(a, lam));
  return s;
}

/// Inverse transform by the trace formula
/// a_p = (1/N!) sum_lambda d_lambda tr(D_lambda(p^{-1}) A_lambda).
template <Coefficient S>
GroupRingElement<S> idft(const BlockSpectrum<S>& spectrum)
{
  using T = ScalarTraits<S>;
  const int n = spectrum.degree();
  struct Block
  {
    const NaturalRepresentation* rep;
    std::vector<std::pair<std::size_t, S>> nonzeros;  // (row*d + col) of A
    S weight;
  };
  std::vector<Block> blocks;
  const S inv_order = T::one() / T::from_int(static_cast<std::int64_t>(factorial(n)));
  for (const auto& [lam, m] : spectrum.blocks()) {
    Block b{&natural_representation(lam), {}, T::from_int(static_cast<std::int64_t>(lam.dimension())) * inv_order};
    for (std::size_t k = 0; k < m.vec().size(); ++k)
      if (!is_structural_zero(m.vec()[k])) b.nonzeros.emplace_back(k, m.vec()[k]);
    if (!b.nonzeros.empty()) blocks.push_back(std::move(b));
  }
  GroupRingElement<S> a(n);
  if (blocks.empty()) return a;
  S acc, sum, tmp;
  for (const auto& p : all_permutations(n)) {
    const Permutation pinv = inverse(p);
    acc = T::zero();
    for (const auto& b : blocks) {
      // tr(D(p^{-1}) A) = sum_{i,j} D(p^{-1})_{ji} A_{ij}
      const IntMatrix& m = b.rep->cached(pinv);
      const std::size_t d = b.rep->dim();
      sum = T::zero();
      for (const auto& [k, v] : b.nonzeros) {
        const std::size_t i = k / d, j = k % d;
        const std::int64_t x = m(j, i);
        if (x == 0) continue;
        tmp = v;
        if (x != 1) tmp *= T::from_int(x);
        sum += tmp;
      }
      if (!is_structural_zero(sum)) {
        sum *= b.weight;
        acc += sum;
      }
    }
    a.add_term(p, acc);
  }
  return a;
}

}  // namespace symring
