#pragma once

// Sparse elements a = sum_p a_p p of the group ring C[S_N].

#include "permutation.hpp"
#include "scalar.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace symring {

template <Coefficient S>
class GroupRingElement
{
public:
  using Scalar = S;
  using Traits = ScalarTraits<S>;
  using Terms = std::map<Permutation, S>;

  GroupRingElement() = default;
  explicit GroupRingElement(int degree) : n_(degree)
  {
    if (degree < 1 || degree > kMaxDegree) throw std::invalid_argument("group ring degree out of range");
  }

  static GroupRingElement identity(int n) { return basis(Permutation::identity(n)); }

  static GroupRingElement basis(const Permutation& p, S coeff = Traits::one())
  {
    GroupRingElement a(p.degree());
    a.add_term(p, std::move(coeff));
    return a;
  }

  int degree() const { return n_; }
  const Terms& terms() const { return terms_; }
  std::size_t support_size() const { return terms_.size(); }
  bool is_zero() const
  {
    for (const auto& [p, c] : terms_)
      if (!Traits::is_zero(c)) return false;
    return true;
  }

  S coefficient(const Permutation& p) const
  {
    auto it = terms_.find(p);
    return it == terms_.end() ? Traits::zero() : it->second;
  }

  /// Adds c to the coefficient of p, dropping the term if it becomes zero.
  void add_term(const Permutation& p, const S& c)
  {
    if (p.degree() != n_) throw std::invalid_argument("term degree mismatch");
    if (is_structural_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
      it->second += c;
      if (is_structural_zero(it->second)) terms_.erase(it);
    }
  }

  GroupRingElement& operator+=(const GroupRingElement& o)
  {
    check_degree(o);
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
  }
  GroupRingElement& operator-=(const GroupRingElement& o)
  {
    check_degree(o);
    for (const auto& [p, c] : o.terms_) add_term(p, -c);
    return *this;
  }
  GroupRingElement& operator*=(const S& s)
  {
    if (is_structural_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [p, c] : terms_) c *= s;
    return *this;
  }

  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(GroupRingElement a, const S& s) { return a *= s; }
  friend GroupRingElement operator*(const S& s, GroupRingElement a) { return a *= s; }
  friend GroupRingElement operator-(GroupRingElement a)
  {
    for (auto& [p, c] : a.terms_) c = -c;
    return a;
  }

  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) { return multiply(a, b); }

  /// Exact equality in exact mode; tolerance-based in floating mode.
  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b)
  {
    if (a.n_ != b.n_) return false;
    if constexpr (Traits::exact) {
      return a.terms_ == b.terms_;
    } else {
      for (const auto& [p, c] : a.terms_)
        if (!Traits::equal(c, b.coefficient(p))) return false;
      for (const auto& [p, c] : b.terms_)
        if (!Traits::equal(c, a.coefficient(p))) return false;
      return true;
    }
  }

  /// Convolution product: sum_p sum_q a_p b_q (p o q).
  friend GroupRingElement multiply(const GroupRingElement& a, const GroupRingElement& b)
  {
    a.check_degree(b);
    const int n = a.n_;
    GroupRingElement r(n);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    if (n <= 8) {
      // dense accumulation indexed by lexicographic rank
      const std::uint64_t total = factorial(n);
      std::vector<S> acc(total, Traits::zero());
      std::vector<char> touched(total, 0);
      S prod;
      for (const auto& [p, cp] : a.terms_)
        for (const auto& [q, cq] : b.terms_) {
          const auto k = lex_rank(compose(p, q));
          prod = cp;
          prod *= cq;
          acc[k] += prod;
          touched[k] = 1;
        }
      for (std::uint64_t k = 0; k < total; ++k)
        if (touched[k] && !is_structural_zero(acc[k])) r.terms_.emplace_hint(r.terms_.end(), lex_unrank(n, k), std::move(acc[k]));
      return r;
    }
    for (const auto& [p, cp] : a.terms_)
      for (const auto& [q, cq] : b.terms_) r.add_term(compose(p, q), cp * cq);
    return r;
  }

  /// Same coefficients on inverse permutations.
  friend GroupRingElement star(const GroupRingElement& a)
  {
    GroupRingElement r(a.n_);
    for (const auto& [p, c] : a.terms_) r.terms_.emplace(inverse(p), c);
    return r;
  }

  /// Complex conjugate coefficients.
  friend GroupRingElement conj(const GroupRingElement& a)
  {
    GroupRingElement r = a;
    for (auto& [p, c] : r.terms_) c = Traits::conj(c);
    return r;
  }

  /// Conjugate coefficients on inverse permutations.
  friend GroupRingElement bar_star(const GroupRingElement& a)
  {
    GroupRingElement r(a.n_);
    for (const auto& [p, c] : a.terms_) r.terms_.emplace(inverse(p), Traits::conj(c));
    return r;
  }

  void check_degree(const GroupRingElement& o) const
  {
    if (n_ != o.n_) throw std::invalid_argument("group ring degree mismatch");
  }

private:
  int n_ = 0;
  Terms terms_;
};

namespace detail {
// reaches the hidden friend from scopes where a member named bar_star shadows it
template <Coefficient S>
GroupRingElement<S> bar_star_of(const GroupRingElement<S>& a)
{
  return bar_star(a);
}
}  // namespace detail

using ExactElement = GroupRingElement<Exact>;
using FloatElement = GroupRingElement<Float>;

template <Coefficient S>
bool has_property_S(const GroupRingElement<S>& a)
{
  return bar_star(a) == a;
}

template <Coefficient S>
bool is_idempotent(const GroupRingElement<S>& a)
{
  return multiply(a, a) == a;
}

/// kappa with x = kappa * w if it exists. w must be nonzero. The candidate is
/// taken from the first nonzero coefficient of w in lex order and verified
/// coefficientwise.
template <Coefficient S>
std::optional<S> proportionality(const GroupRingElement<S>& x, const GroupRingElement<S>& w)
{
  using T = ScalarTraits<S>;
  auto lead = w.terms().begin();
  while (lead != w.terms().end() && T::is_zero(lead->second)) ++lead;
  if (lead == w.terms().end()) throw std::invalid_argument("proportionality against zero element");
  S kappa = x.coefficient(lead->first) / lead->second;
  if (kappa * w == x) return kappa;
  return std::nullopt;
}

/// Result of the essential idempotency test a*a = kappa*a.
template <Coefficient S>
struct EssentialIdempotency
{
  enum class Kind { Proportional, Nilpotent, NotProportional };
  Kind kind;
  S kappa;  // meaningful for Proportional only

  bool essentially_idempotent() const { return kind == Kind::Proportional; }
};

/// Classifies a (nonzero): Proportional with kappa != 0 when a*a = kappa*a,
/// Nilpotent when a*a = 0, NotProportional otherwise.
template <Coefficient S>
EssentialIdempotency<S> essential_idempotency(const GroupRingElement<S>& a)
{
  using R = EssentialIdempotency<S>;
  if (a.is_zero()) throw std::invalid_argument("essential_idempotency of zero element");
  const auto sq = multiply(a, a);
  if (sq.is_zero()) return {R::Kind::Nilpotent, ScalarTraits<S>::zero()};
  if (auto k = proportionality(sq, a)) return {R::Kind::Proportional, *k};
  return {R::Kind::NotProportional, ScalarTraits<S>::zero()};
}

/// Converts coefficients between modes, e.g. exact to floating.
template <Coefficient To, Coefficient From>
GroupRingElement<To> convert(const GroupRingElement<From>& a)
{
  GroupRingElement<To> r(a.degree());
  for (const auto& [p, c] : a.terms()) {
    if constexpr (std::is_same_v<To, From>) {
      r.add_term(p, c);
    } else if constexpr (std::is_same_v<From, Exact> && std::is_same_v<To, Float>) {
      r.add_term(p, Float(c.re.get_d(), c.im.get_d()));
    } else if constexpr (std::is_same_v<From, Rational> && std::is_same_v<To, Exact>) {
      r.add_term(p, Exact(c));
    } else if constexpr (std::is_same_v<From, Rational> && std::is_same_v<To, Float>) {
      r.add_term(p, Float(c.get_d(), 0.0));
    } else {
      static_assert(std::is_same_v<To, From>, "unsupported coefficient conversion");
    }
  }
  return r;
}

}  // namespace symring
