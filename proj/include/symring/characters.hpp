#pragma once

// Irreducible characters of S_N and the idempotents built from characters:
// central idempotents z_lambda, idempotents of subgroup characters, and
// idempotents of commutation symmetries.

#include "group_ring.hpp"
#include "partition.hpp"

#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace symring {

namespace detail {

// Murnaghan-Nakayama on beta-sets: removing a rim hook of length k moves a
// bead from b to b-k; the sign is (-1)^(beads strictly between).
inline long mn_recurse(std::vector<int>& beads, const std::vector<int>& cycles, std::size_t next)
{
  if (next == cycles.size()) return 1;
  const int k = cycles[next];
  long total = 0;
  for (std::size_t i = 0; i < beads.size(); ++i) {
    const int b = beads[i];
    const int target = b - k;
    if (target < 0) continue;
    if (std::find(beads.begin(), beads.end(), target) != beads.end()) continue;
    int between = 0;
    for (int c : beads)
      if (c > target && c < b) ++between;
    beads[i] = target;
    const long sub = mn_recurse(beads, cycles, next + 1);
    beads[i] = b;
    total += (between % 2 ? -sub : sub);
  }
  return total;
}

}  // namespace detail

/// chi_lambda evaluated on a cycle type (any order of cycle lengths).
inline long character_of_cycle_type(const Partition& lambda, std::vector<int> cycle_type)
{
  static std::mutex mutex;
  static std::map<std::pair<std::vector<int>, std::vector<int>>, long> memo;
  std::sort(cycle_type.begin(), cycle_type.end(), std::greater<>());
  int total = 0;
  for (int c : cycle_type) total += c;
  if (total != lambda.size()) throw std::invalid_argument("cycle type does not match partition size");
  auto key = std::make_pair(lambda.parts(), cycle_type);
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  const int len = lambda.rows();
  std::vector<int> beads(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) beads[i] = lambda[i] + (len - 1 - i);
  const long value = detail::mn_recurse(beads, cycle_type, 0);
  std::lock_guard lock(mutex);
  memo.emplace(std::move(key), value);
  return value;
}

/// Irreducible character chi_lambda(p).
inline long character_snn(const Partition& lambda, const Permutation& p)
{
  if (lambda.size() != p.degree()) throw std::invalid_argument("character_snn: degree mismatch");
  return character_of_cycle_type(lambda, p.cycle_type());
}

/// Closure of a generating set under composition.
inline std::vector<Permutation> generate_group(const std::vector<Permutation>& generators, int degree)
{
  std::set<Permutation> group{Permutation::identity(degree)};
  std::vector<Permutation> frontier{Permutation::identity(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& g : frontier)
      for (const auto& s : generators) {
        if (s.degree() != degree) throw std::invalid_argument("generator degree mismatch");
        auto h = compose(g, s);
        if (group.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  return {group.begin(), group.end()};
}

inline bool is_group(const std::vector<Permutation>& elems)
{
  if (elems.empty()) return false;
  std::set<Permutation> set(elems.begin(), elems.end());
  if (set.size() != elems.size()) return false;
  if (!set.count(Permutation::identity(elems.front().degree()))) return false;
  for (const auto& a : elems)
    for (const auto& b : elems)
      if (!set.count(compose(a, b))) return false;
  return true;
}

/// Character values of a subgroup G supplied by the caller.
template <Coefficient S>
struct CharacterTable
{
  std::map<Permutation, S> values;

  std::vector<Permutation> group() const
  {
    std::vector<Permutation> g;
    for (const auto& [p, v] : values) g.push_back(p);
    return g;
  }
};

/// (chi(id)/|G|) sum_{p in G} chi(p) p. Validates that G is a group and chi is
/// a class function on G with a positive integer value at the identity.
template <Coefficient S>
GroupRingElement<S> character_idempotent(const CharacterTable<S>& chi)
{
  using T = ScalarTraits<S>;
  const auto group = chi.group();
  if (!is_group(group)) throw std::invalid_argument("character_idempotent: elements do not form a group");
  const int n = group.front().degree();
  for (const auto& g : group)
    for (const auto& p : group) {
      const auto c = compose(compose(g, p), inverse(g));
      if (!T::equal(chi.values.at(c), chi.values.at(p)))
        throw std::invalid_argument("character_idempotent: chi is not constant on conjugacy classes");
    }
  const S at_id = chi.values.at(Permutation::identity(n));
  if constexpr (T::exact) {
    if (!T::is_real(at_id) || T::is_zero(at_id)) throw std::invalid_argument("character_idempotent: chi(id) must be a positive integer");
  }
  const S scale = at_id / T::from_int(static_cast<std::int64_t>(group.size()));
  GroupRingElement<S> e(n);
  for (const auto& [p, v] : chi.values) e.add_term(p, scale * v);
  return e;
}

/// Central primitive idempotent z_lambda of the two-sided ideal Z_lambda.
template <Coefficient S = Exact>
GroupRingElement<S> central_idempotent(const Partition& lambda)
{
  using T = ScalarTraits<S>;
  const int n = lambda.size();
  const auto d = static_cast<std::int64_t>(lambda.dimension());
  GroupRingElement<S> z(n);
  const S scale = T::from_int(d) / T::from_int(static_cast<std::int64_t>(factorial(n)));
  for (const auto& p : all_permutations(n)) {
    const long chi = character_snn(lambda, p);
    if (chi != 0) z.add_term(p, scale * T::from_int(chi));
  }
  return z;
}

/// Subgroup C with a homomorphism epsilon into the unit circle.
template <Coefficient S>
class CommutationSymmetry
{
public:
  using T = ScalarTraits<S>;

  /// Takes the full group table; validates closure, |eps| = 1 and the
  /// homomorphism property.
  explicit CommutationSymmetry(std::map<Permutation, S> epsilon) : epsilon_(std::move(epsilon))
  {
    std::vector<Permutation> elems;
    for (const auto& [p, v] : epsilon_) elems.push_back(p);
    if (!is_group(elems)) throw std::invalid_argument("commutation symmetry: elements do not form a group");
    const int n = elems.front().degree();
    if (!T::equal(epsilon_.at(Permutation::identity(n)), T::one()))
      throw std::invalid_argument("commutation symmetry: epsilon(id) must be 1");
    for (const auto& [p, v] : epsilon_)
      if (!T::equal(v * T::conj(v), T::one())) throw std::invalid_argument("commutation symmetry: |epsilon| must be 1");
    for (const auto& [a, va] : epsilon_)
      for (const auto& [b, vb] : epsilon_)
        if (!T::equal(epsilon_.at(compose(a, b)), va * vb))
          throw std::invalid_argument("commutation symmetry: epsilon is not a homomorphism");
  }

  /// Closes the generated group, extending epsilon multiplicatively. Throws
  /// if the generator values are inconsistent.
  static CommutationSymmetry from_generators(const std::vector<std::pair<Permutation, S>>& gens)
  {
    if (gens.empty()) throw std::invalid_argument("commutation symmetry needs at least one generator");
    const int n = gens.front().first.degree();
    std::map<Permutation, S> eps{{Permutation::identity(n), T::one()}};
    std::vector<Permutation> frontier{Permutation::identity(n)};
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const auto& g : frontier)
        for (const auto& [s, vs] : gens) {
          auto h = compose(g, s);
          const S vh = eps.at(g) * vs;
          auto [it, inserted] = eps.try_emplace(h, vh);
          if (inserted)
            next.push_back(h);
          else if (!T::equal(it->second, vh))
            throw std::invalid_argument("commutation symmetry: epsilon is not a homomorphism");
        }
      frontier = std::move(next);
    }
    return CommutationSymmetry(std::move(eps));
  }

  const std::map<Permutation, S>& epsilon() const { return epsilon_; }
  int degree() const { return epsilon_.begin()->first.degree(); }
  std::size_t order() const { return epsilon_.size(); }

private:
  std::map<Permutation, S> epsilon_;
};

/// (1/|C|) sum_{c in C} eps(c) c.
template <Coefficient S>
GroupRingElement<S> commutation_idempotent(const CommutationSymmetry<S>& cs)
{
  using T = ScalarTraits<S>;
  const S scale = T::one() / T::from_int(static_cast<std::int64_t>(cs.order()));
  GroupRingElement<S> e(cs.degree());
  for (const auto& [c, v] : cs.epsilon()) e.add_term(c, scale * v);
  return e;
}

}  // namespace symring
