#pragma once

// Young symmetrizers, the self-adjoint (Weyl) generating idempotent of a
// minimal right ideal, and the decomposition of a self-adjoint idempotent
// into pairwise orthogonal primitive self-adjoint idempotents.
//
// The decomposition runs over an algebra backend: RingAlgebra works on
// sparse group ring elements, SpectralAlgebra on block spectra using
// precomputed star-transfer maps for every bar-star.

#include "characters.hpp"
#include "star_transfer.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace symring {

/// Permutations preserving every block of a set partition of {1..n}.
inline std::vector<Permutation> block_stabilizer(const std::vector<std::vector<int>>& blocks, int n)
{
  std::vector<Permutation> out{Permutation::identity(n)};
  for (const auto& block : blocks) {
    if (block.size() < 2) continue;
    std::vector<int> sorted = block;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Permutation> local;
    std::vector<int> images = sorted;
    do {
      std::vector<int> img(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) img[i] = i + 1;
      for (std::size_t k = 0; k < sorted.size(); ++k) img[sorted[k] - 1] = images[k];
      local.emplace_back(img);
    } while (std::next_permutation(images.begin(), images.end()));
    std::vector<Permutation> next;
    next.reserve(out.size() * local.size());
    for (const auto& a : out)
      for (const auto& b : local) next.push_back(compose(a, b));
    out = std::move(next);
  }
  return out;
}

/// y_t = sum_{p in R_t} sum_{q in C_t} sign(q) p o q.
template <Coefficient S = Exact>
GroupRingElement<S> young_symmetrizer(const Tableau& t)
{
  using T = ScalarTraits<S>;
  const int n = t.size();
  const auto rows = block_stabilizer(t.rows(), n);
  const auto cols = block_stabilizer(t.columns(), n);
  GroupRingElement<S> y(n);
  for (const auto& p : rows)
    for (const auto& q : cols) y.add_term(compose(p, q), T::from_int(sign(q)));
  return y;
}

struct Seed
{
  Tableau tableau;
  GroupRingElement<Exact> idempotent;  // (d_lambda / N!) y_t
};

/// Normalized Young symmetrizers of all standard tableaux: partitions in
/// decreasing lex order, tableaux in row-reading lex order.
inline std::vector<Seed> primitive_seed_set(int n)
{
  std::vector<Seed> out;
  const Rational order(static_cast<unsigned long>(factorial(n)));
  for (const auto& lam : partitions(n)) {
    const Exact scale(Rational(static_cast<unsigned long>(lam.dimension())) / order);
    for (const auto& t : standard_tableaux(lam)) out.push_back(Seed{t, young_symmetrizer<Exact>(t) * scale});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Algebra backends

template <Coefficient S>
class RingAlgebra
{
public:
  using Scalar = S;
  using Element = GroupRingElement<S>;

  explicit RingAlgebra(int n) : n_(n) {}

  int degree() const { return n_; }
  Element from_ring(const GroupRingElement<S>& a) const { return a; }
  GroupRingElement<S> to_ring(const Element& a) const { return a; }
  Element mul(const Element& a, const Element& b) const { return multiply(a, b); }
  Element mul_perm(const Element& a, const Permutation& p) const
  {
    Element r(n_);
    for (const auto& [q, c] : a.terms()) r.add_term(compose(q, p), c);
    return r;
  }
  Element bar_star(const Element& a) const { return detail::bar_star_of(a); }
  bool is_zero(const Element& a) const { return a.is_zero(); }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  std::optional<S> ratio(const Element& x, const Element& w) const { return proportionality(x, w); }

private:
  int n_;
};

template <Coefficient S>
class SpectralAlgebra
{
public:
  using Scalar = S;
  using Element = BlockSpectrum<S>;
  using MapProvider = std::function<StarTransferMap(const Partition&)>;

  /// Builds star-transfer maps for every partition of n with provider
  /// (defaults to the permutation-basis construction).
  explicit SpectralAlgebra(int n, MapProvider provider = default_provider()) : n_(n)
  {
    auto maps = std::make_shared<std::map<Partition, StarTransferMap>>();
    for (const auto& lam : partitions(n)) maps->emplace(lam, provider(lam));
    maps_ = std::move(maps);
  }

  static MapProvider default_provider()
  {
    return [](const Partition& lam) { return build_star_map_basis(compute_plam(lam)); };
  }

  int degree() const { return n_; }
  const std::map<Partition, StarTransferMap>& maps() const { return *maps_; }

  Element from_ring(const GroupRingElement<S>& a) const
  {
    auto s = dft(a);
    s.prune();
    return s;
  }
  GroupRingElement<S> to_ring(const Element& a) const { return idft(a); }
  Element mul(const Element& a, const Element& b) const
  {
    auto r = a * b;
    r.prune();
    return r;
  }
  Element mul_perm(const Element& a, const Permutation& p) const
  {
    Element r(n_);
    for (const auto& [lam, m] : a.blocks()) r.set_block(lam, m * promote<S>(natural_representation(lam).cached(p)));
    r.prune();
    return r;
  }
  Element bar_star(const Element& a) const { return star_spectrum(conj(a), *maps_); }
  bool is_zero(const Element& a) const { return a.is_zero(); }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  std::optional<S> ratio(const Element& x, const Element& w) const
  {
    using T = ScalarTraits<S>;
    for (const auto& [lam, m] : w.blocks())
      for (std::size_t k = 0; k < m.vec().size(); ++k) {
        if (T::is_zero(m.vec()[k])) continue;
        S kappa = x.block(lam).vec()[k] / m.vec()[k];
        if (w * kappa == x) return kappa;
        return std::nullopt;
      }
    throw std::invalid_argument("proportionality against zero spectrum");
  }

private:
  int n_;
  std::shared_ptr<const std::map<Partition, StarTransferMap>> maps_;
};

// ---------------------------------------------------------------------------

template <class Algebra>
struct PrimitiveGenerator
{
  typename Algebra::Element idempotent;
  typename Algebra::Scalar kappa;
  std::optional<Permutation> search_perm;  // set when w*w = 0 forced a search
};

/// Idempotent h with h C[S_N] = w C[S_N] for a generator w of a minimal right
/// ideal: h = w/kappa if w*w = kappa*w, otherwise h = w*p/kappa for the first
/// p in lex order with w*p*w = kappa*w, kappa != 0.
template <class Algebra>
PrimitiveGenerator<Algebra> primitive_from_generator(const Algebra& alg, const typename Algebra::Element& w)
{
  using S = typename Algebra::Scalar;
  using T = ScalarTraits<S>;
  if (alg.is_zero(w)) throw std::invalid_argument("primitive_from_generator: zero generator");
  const auto sq = alg.mul(w, w);
  if (!alg.is_zero(sq)) {
    auto kappa = alg.ratio(sq, w);
    if (!kappa) throw std::invalid_argument("not a minimal-ideal generator");
    return {w * (T::one() / *kappa), *kappa, std::nullopt};
  }
  std::optional<Permutation> p = Permutation::identity(alg.degree());
  for (p = next_permutation(*p); p; p = next_permutation(*p)) {
    const auto wp = alg.mul_perm(w, *p);
    const auto x = alg.mul(wp, w);
    if (alg.is_zero(x)) continue;
    auto kappa = alg.ratio(x, w);
    if (!kappa) throw std::invalid_argument("not a minimal-ideal generator");
    return {wp * (T::one() / *kappa), *kappa, *p};
  }
  throw std::invalid_argument("not a minimal-ideal generator");
}

template <class Algebra>
struct WeylResult
{
  typename Algebra::Element idempotent;
  typename Algebra::Scalar alpha;
};

/// f = (1/alpha) e bar_star(e), where e bar_star(e) e = alpha e. The unique
/// generating idempotent with property (S) of the right ideal of e.
template <class Algebra>
WeylResult<Algebra> weyl_idempotent(const Algebra& alg, const typename Algebra::Element& e)
{
  using S = typename Algebra::Scalar;
  using T = ScalarTraits<S>;
  const auto h = alg.mul(e, alg.bar_star(e));
  if (alg.is_zero(h)) throw std::domain_error("ideal inside J_0 or e not primitive");
  const auto ehe = alg.mul(h, e);
  if (alg.is_zero(ehe)) throw std::domain_error("ideal inside J_0 or e not primitive");
  auto alpha = alg.ratio(ehe, e);
  if (!alpha || T::is_zero(*alpha)) throw std::domain_error("ideal inside J_0 or e not primitive");
  if (!T::is_real(*alpha)) throw std::logic_error("weyl_idempotent: alpha is not real");
  return {h * (T::one() / *alpha), *alpha};
}

template <class Algebra>
struct DecompositionAudit
{
  std::size_t seed_index;  // index into the seed set
  typename Algebra::Scalar kappa;
  std::optional<Permutation> search_perm;
  typename Algebra::Scalar alpha;
};

template <class Algebra>
struct SelfAdjointDecomposition
{
  typename Algebra::Element input;
  std::vector<typename Algebra::Element> parts;
  std::vector<DecompositionAudit<Algebra>> audit;
};

struct DecomposeOptions
{
  /// Number of spin letters K of an attached ring model. When K < N the
  /// input must lie in J, i.e. vanish on every block with more than K rows.
  std::optional<int> letters;
};

/// Splits a self-adjoint idempotent e into pairwise orthogonal primitive
/// idempotents with property (S) that sum to e.
template <class Algebra>
SelfAdjointDecomposition<Algebra> decompose_self_adjoint(const Algebra& alg, const typename Algebra::Element& e,
                                                         const std::vector<Seed>& seeds, DecomposeOptions opts = {})
{
  using S = typename Algebra::Scalar;
  if (!alg.equal(alg.mul(e, e), e)) throw std::invalid_argument("decompose_self_adjoint: input is not idempotent");
  if (!alg.equal(alg.bar_star(e), e)) throw std::invalid_argument("decompose_self_adjoint: input lacks property (S)");
  if (opts.letters && *opts.letters < alg.degree()) {
    for (const auto& lam : partitions(alg.degree())) {
      if (lam.rows() <= *opts.letters) continue;
      auto single = alg.from_ring(central_idempotent<S>(lam));
      if (!alg.is_zero(alg.mul(e, single)))
        throw std::invalid_argument("decompose_self_adjoint: input is not in J (acts on the annihilator ideal)");
    }
  }

  std::vector<typename Algebra::Element> y;
  y.reserve(seeds.size());
  for (const auto& s : seeds) y.push_back(alg.from_ring(convert<S>(s.idempotent)));

  SelfAdjointDecomposition<Algebra> out{e, {}, {}};
  auto rest = e;
  for (std::size_t iter = 0; iter <= seeds.size(); ++iter) {
    if (alg.is_zero(rest)) return out;
    if (iter == seeds.size()) break;
    std::size_t k = 0;
    typename Algebra::Element w;
    for (; k < y.size(); ++k) {
      w = alg.mul(rest, y[k]);
      if (!alg.is_zero(w)) break;
    }
    if (k == y.size()) throw std::logic_error("decompose_self_adjoint: no seed meets the rest");
    auto h = primitive_from_generator(alg, w);
    auto f = weyl_idempotent(alg, h.idempotent);
    rest = rest - f.idempotent;
    if constexpr (std::is_same_v<typename Algebra::Element, BlockSpectrum<S>>) rest.prune();
    out.audit.push_back({k, h.kappa, h.search_perm, f.alpha});
    out.parts.push_back(std::move(f.idempotent));
  }
  throw std::logic_error("decompose_self_adjoint: iteration guard exceeded");
}

}  // namespace symring
