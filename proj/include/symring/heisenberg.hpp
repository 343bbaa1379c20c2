#pragma once

// The Hilbert space of a ring model with N sites and K spin letters, the
// action of group ring elements on it, and the spin-1/2 Heisenberg
// Hamiltonians with periodic boundary conditions.

#include "characters.hpp"
#include "dft.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace symring {

/// |sigma(1), ..., sigma(N)> with values in 1..K. For K = 2, 2 is spin up
/// and 1 is spin down.
class SpinConfiguration
{
public:
  SpinConfiguration() = default;
  SpinConfiguration(int letters, std::vector<int> values) : k_(letters), values_(std::move(values))
  {
    if (letters < 1) throw std::invalid_argument("spin alphabet must have at least one letter");
    if (values_.empty() || values_.size() > static_cast<std::size_t>(kMaxDegree))
      throw std::invalid_argument("spin configuration size out of range");
    for (int v : values_)
      if (v < 1 || v > k_) throw std::invalid_argument("spin value out of range 1..K");
  }

  int sites() const { return static_cast<int>(values_.size()); }
  int letters() const { return k_; }
  int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& values() const { return values_; }

  /// Position in the lexicographic enumeration of all K^N configurations.
  std::uint64_t index() const
  {
    std::uint64_t r = 0;
    for (int v : values_) r = r * static_cast<std::uint64_t>(k_) + static_cast<std::uint64_t>(v - 1);
    return r;
  }

  static SpinConfiguration from_index(int sites, int letters, std::uint64_t idx)
  {
    std::vector<int> v(static_cast<std::size_t>(sites));
    for (int i = sites - 1; i >= 0; --i) {
      v[i] = static_cast<int>(idx % static_cast<std::uint64_t>(letters)) + 1;
      idx /= static_cast<std::uint64_t>(letters);
    }
    return SpinConfiguration(letters, std::move(v));
  }

  friend auto operator<=>(const SpinConfiguration&, const SpinConfiguration&) = default;
  friend bool operator==(const SpinConfiguration&, const SpinConfiguration&) = default;

  std::string to_string() const
  {
    std::string s;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(values_[i]);
    }
    return s;
  }

private:
  int k_ = 0;
  std::vector<int> values_;
};

inline std::uint64_t hilbert_dimension(int sites, int letters)
{
  std::uint64_t d = 1;
  for (int i = 0; i < sites; ++i) d *= static_cast<std::uint64_t>(letters);
  return d;
}

/// All basis configurations in lexicographic order.
inline std::vector<SpinConfiguration> basis_configurations(int sites, int letters)
{
  const auto dim = hilbert_dimension(sites, letters);
  std::vector<SpinConfiguration> out;
  out.reserve(dim);
  for (std::uint64_t i = 0; i < dim; ++i) out.push_back(SpinConfiguration::from_index(sites, letters, i));
  return out;
}

/// p|sigma> = |sigma o p^{-1}>.
inline SpinConfiguration permute_ket(const Permutation& p, const SpinConfiguration& sigma)
{
  if (p.degree() != sigma.sites()) throw std::invalid_argument("permute_ket: degree mismatch");
  std::vector<int> out(static_cast<std::size_t>(sigma.sites()));
  // (sigma o p^{-1})(p(i)) = sigma(i)
  for (int i = 1; i <= sigma.sites(); ++i) out[static_cast<std::size_t>(p(i) - 1)] = sigma(i);
  return SpinConfiguration(sigma.letters(), std::move(out));
}

template <Coefficient S>
class HilbertVector
{
public:
  using Traits = ScalarTraits<S>;

  HilbertVector() = default;
  HilbertVector(int sites, int letters) : n_(sites), k_(letters)
  {
    if (sites < 1 || sites > kMaxDegree || letters < 1) throw std::invalid_argument("invalid Hilbert space shape");
  }

  static HilbertVector ket(const SpinConfiguration& sigma, S coeff = Traits::one())
  {
    HilbertVector v(sigma.sites(), sigma.letters());
    v.add(sigma, coeff);
    return v;
  }

  int sites() const { return n_; }
  int letters() const { return k_; }
  const std::map<SpinConfiguration, S>& terms() const { return terms_; }

  S coefficient(const SpinConfiguration& sigma) const
  {
    auto it = terms_.find(sigma);
    return it == terms_.end() ? Traits::zero() : it->second;
  }

  void add(const SpinConfiguration& sigma, const S& c)
  {
    if (sigma.sites() != n_ || sigma.letters() != k_) throw std::invalid_argument("ket shape mismatch");
    if (is_structural_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(sigma, c);
    if (!inserted) {
      it->second += c;
      if (is_structural_zero(it->second)) terms_.erase(it);
    }
  }

  bool is_zero() const
  {
    for (const auto& [s, c] : terms_)
      if (!Traits::is_zero(c)) return false;
    return true;
  }

  HilbertVector& operator+=(const HilbertVector& o)
  {
    check(o);
    for (const auto& [s, c] : o.terms_) add(s, c);
    return *this;
  }
  HilbertVector& operator-=(const HilbertVector& o)
  {
    check(o);
    for (const auto& [s, c] : o.terms_) add(s, -c);
    return *this;
  }
  HilbertVector& operator*=(const S& x)
  {
    if (is_structural_zero(x)) terms_.clear();
    for (auto& [s, c] : terms_) c *= x;
    return *this;
  }
  friend HilbertVector operator+(HilbertVector a, const HilbertVector& b) { return a += b; }
  friend HilbertVector operator-(HilbertVector a, const HilbertVector& b) { return a -= b; }
  friend HilbertVector operator*(const S& x, HilbertVector a) { return a *= x; }

  friend bool operator==(const HilbertVector& a, const HilbertVector& b)
  {
    if (a.n_ != b.n_ || a.k_ != b.k_) return false;
    for (const auto& [s, c] : a.terms_)
      if (!Traits::equal(c, b.coefficient(s))) return false;
    for (const auto& [s, c] : b.terms_)
      if (!Traits::equal(c, a.coefficient(s))) return false;
    return true;
  }

  void check(const HilbertVector& o) const
  {
    if (n_ != o.n_ || k_ != o.k_) throw std::invalid_argument("Hilbert space shape mismatch");
  }

private:
  int n_ = 0;
  int k_ = 0;
  std::map<SpinConfiguration, S> terms_;
};

/// <u|v> = sum_sigma u_sigma conj(v_sigma).
template <Coefficient S>
S inner_product(const HilbertVector<S>& u, const HilbertVector<S>& v)
{
  u.check(v);
  S acc = ScalarTraits<S>::zero();
  for (const auto& [s, c] : u.terms()) {
    auto it = v.terms().find(s);
    if (it != v.terms().end()) acc += c * ScalarTraits<S>::conj(it->second);
  }
  return acc;
}

/// aw = sum_p sum_sigma a_p w_sigma |sigma o p^{-1}>.
template <Coefficient S>
HilbertVector<S> apply_operator(const GroupRingElement<S>& a, const HilbertVector<S>& w)
{
  if (a.degree() != w.sites()) throw std::invalid_argument("apply_operator: degree mismatch");
  HilbertVector<S> out(w.sites(), w.letters());
  for (const auto& [p, ap] : a.terms())
    for (const auto& [sigma, ws] : w.terms()) out.add(permute_ket(p, sigma), ap * ws);
  return out;
}

/// Brute force: a kills every basis ket of the K-letter space.
template <Coefficient S>
bool annihilates_all_kets(const GroupRingElement<S>& a, int letters)
{
  for (const auto& sigma : basis_configurations(a.degree(), letters))
    if (!apply_operator(a, HilbertVector<S>::ket(sigma)).is_zero()) return false;
  return true;
}

/// a in J_0: D_lambda(a) = 0 for every lambda with at most K rows.
template <Coefficient S>
bool in_annihilator(const GroupRingElement<S>& a, int letters)
{
  for (const auto& lam : partitions(a.degree())) {
    if (lam.rows() > letters) continue;
    if (!is_zero_matrix(dft_block(a, lam))) return false;
  }
  return true;
}

/// Generating idempotent f_0 of J_0: sum of z_lambda over lambda with more
/// than K rows.
template <Coefficient S = Exact>
GroupRingElement<S> annihilator_generator(int sites, int letters)
{
  GroupRingElement<S> f0(sites);
  for (const auto& lam : partitions(sites))
    if (lam.rows() > letters) f0 += central_idempotent<S>(lam);
  return f0;
}

/// u lies in the symmetry class of the right ideal generated by e iff eu = u.
template <Coefficient S>
bool symmetry_class_contains(const GroupRingElement<S>& e, const HilbertVector<S>& u)
{
  if (!is_idempotent(e)) throw std::invalid_argument("symmetry_class_contains: e is not idempotent");
  return apply_operator(e, u) == u;
}

/// Matrix of a in the basis of kets ordered by SpinConfiguration::index:
/// column j holds the coordinates of a|sigma_j>.
template <Coefficient S>
Matrix<S> operator_matrix(const GroupRingElement<S>& a, int letters)
{
  const int n = a.degree();
  const auto dim = static_cast<std::size_t>(hilbert_dimension(n, letters));
  Matrix<S> m(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const auto img = apply_operator(a, HilbertVector<S>::ket(SpinConfiguration::from_index(n, letters, j)));
    for (const auto& [s, c] : img.terms()) m(static_cast<std::size_t>(s.index()), j) = c;
  }
  return m;
}

enum class Coupling { Ferro, Antiferro };

namespace detail {

// spin-1/2 operators on one site; value 2 = up, 1 = down. Returns the
// coefficient and updates the value, or 0 when the operator kills the state.
enum class SpinOp { Plus, Minus, Z };

inline Rational apply_spin(SpinOp op, int& value)
{
  switch (op) {
    case SpinOp::Plus:
      if (value == 2) return 0;
      value = 2;
      return 1;
    case SpinOp::Minus:
      if (value == 1) return 0;
      value = 1;
      return 1;
    case SpinOp::Z:
      return value == 2 ? Rational(1, 2) : Rational(-1, 2);
  }
  return 0;
}

}  // namespace detail

/// H_F = -J sum_k [ (S+_k S-_{k+1} + S-_k S+_{k+1})/2 + Sz_k Sz_{k+1} ] with
/// S_{N+1} = S_1, and H_A = -H_F. Basis ordered by SpinConfiguration::index.
inline Matrix<Rational> hamiltonian_matrix(int sites, const Rational& coupling, Coupling type, int letters = 2)
{
  using detail::SpinOp;
  if (letters != 2) throw std::invalid_argument("hamiltonian_matrix: only K = 2 is supported");
  if (sites < 1 || sites > kMaxDegree) throw std::invalid_argument("hamiltonian_matrix: site count out of range");
  const auto dim = static_cast<std::size_t>(hilbert_dimension(sites, 2));
  Matrix<Rational> h(dim, dim);
  const Rational half(1, 2);
  // operator products applied right to left: (A_k B_l)|s> = A_k (B_l |s>)
  auto add_product = [&](std::size_t col, const SpinConfiguration& s, int k, SpinOp a, int l, SpinOp b, const Rational& w) {
    std::vector<int> v = s.values();
    Rational c = detail::apply_spin(b, v[static_cast<std::size_t>(l - 1)]);
    if (sgn(c) == 0) return;
    c *= detail::apply_spin(a, v[static_cast<std::size_t>(k - 1)]);
    if (sgn(c) == 0) return;
    const auto row = static_cast<std::size_t>(SpinConfiguration(2, v).index());
    h(row, col) += w * c;
  };
  for (std::size_t col = 0; col < dim; ++col) {
    const auto s = SpinConfiguration::from_index(sites, 2, col);
    for (int k = 1; k <= sites; ++k) {
      const int l = k % sites + 1;
      add_product(col, s, k, SpinOp::Plus, l, SpinOp::Minus, half);
      add_product(col, s, k, SpinOp::Minus, l, SpinOp::Plus, half);
      add_product(col, s, k, SpinOp::Z, l, SpinOp::Z, Rational(1));
    }
  }
  const Rational scale = (type == Coupling::Ferro) ? Rational(-coupling) : Rational(coupling);
  h *= scale;
  return h;
}

}  // namespace symring
