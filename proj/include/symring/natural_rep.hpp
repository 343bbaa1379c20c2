#pragma once

// Young's natural representation of S_N on the Specht module S^lambda.
//
// Basis: standard polytabloids e_T, T running over the standard tableaux of
// shape lambda in row-reading lexicographic order. A permuted polytabloid is
// straightened by reading off its coordinates at the standard tabloids {T_i}
// and solving the unitriangular system formed by the standard polytabloids.
//
// Matrix convention: row i of D(p) holds the coordinates of p^{-1} e_{T_i},
// i.e. D(p) is the transpose of the module action matrix of p^{-1}. This is a
// homomorphism, D(p o q) = D(p) D(q), with integer entries.

#include "matrix.hpp"
#include "partition.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace symring {

class NaturalRepresentation
{
public:
  explicit NaturalRepresentation(Partition lambda)
  : lambda_(std::move(lambda)), n_(lambda_.size()), tableaux_(standard_tableaux(lambda_))
  {
    const std::size_t d = tableaux_.size();
    for (std::size_t i = 0; i < d; ++i) tabloid_index_.emplace(tabloid_key(tableaux_[i]), i);

    // C(i, j) = coefficient of {T_i} in e_{T_j}
    Matrix<Rational> c(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      const auto w = standard_coordinates(tableaux_[j]);
      for (std::size_t i = 0; i < d; ++i) c(i, j) = Rational(static_cast<long>(w[i]));
    }
    straighten_ = solve_rational(c, Matrix<Rational>::identity(d));

    generators_.reserve(static_cast<std::size_t>(n_ > 1 ? n_ - 1 : 0));
    for (int i = 1; i < n_; ++i) generators_.push_back(straightened_matrix(Permutation::transposition(n_, i, i + 1)));
  }

  const Partition& partition() const { return lambda_; }
  int degree() const { return n_; }
  std::size_t dim() const { return tableaux_.size(); }
  const std::vector<Tableau>& basis() const { return tableaux_; }

  /// D(s_i) for the adjacent transposition s_i = (i i+1), 1 <= i < N.
  const IntMatrix& generator(int i) const { return generators_.at(static_cast<std::size_t>(i - 1)); }

  /// D(p) composed from the generator matrices along a reduced word of p.
  IntMatrix matrix(const Permutation& p) const
  {
    check_degree(p);
    IntMatrix m = IntMatrix::identity(dim());
    for (int i : reduced_word(p)) right_multiply_generator(m, i);
    return m;
  }

  /// D(p) by straightening p^{-1} e_T directly (independent of the generator
  /// factorization; used to cross-check).
  IntMatrix straightened_matrix(const Permutation& p) const
  {
    check_degree(p);
    const std::size_t d = dim();
    const Permutation pinv = inverse(p);
    IntMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      const auto w = standard_coordinates(tableaux_[i].relabel(pinv));
      for (std::size_t r = 0; r < d; ++r) {
        Rational x = 0;
        for (std::size_t k = 0; k < d; ++k)
          if (w[k] != 0) x += straighten_(r, k) * static_cast<long>(w[k]);
        if (x.get_den() != 1) throw std::logic_error("natural representation produced a non-integer entry");
        m(i, r) = x.get_num().get_si();
      }
    }
    return m;
  }

  /// Memoized D(p); safe for concurrent use.
  const IntMatrix& cached(const Permutation& p) const
  {
    const auto key = lex_rank(p);
    {
      std::lock_guard lock(cache_mutex_);
      if (auto it = cache_.find(key); it != cache_.end()) return *it->second;
    }
    auto m = std::make_unique<IntMatrix>(matrix(p));
    std::lock_guard lock(cache_mutex_);
    auto [it, inserted] = cache_.try_emplace(key, std::move(m));
    return *it->second;
  }

private:
  void check_degree(const Permutation& p) const
  {
    if (p.degree() != n_) throw std::invalid_argument("natural representation: degree mismatch");
  }

  // m <- m * D(s_i), exploiting sparsity of the generator
  void right_multiply_generator(IntMatrix& m, int i) const
  {
    const IntMatrix& g = generators_[static_cast<std::size_t>(i - 1)];
    const std::size_t d = dim();
    std::vector<std::int64_t> row(d);
    for (std::size_t r = 0; r < d; ++r) {
      std::fill(row.begin(), row.end(), 0);
      for (std::size_t k = 0; k < d; ++k) {
        const std::int64_t v = m(r, k);
        if (v == 0) continue;
        for (std::size_t j = 0; j < d; ++j)
          if (g(k, j) != 0) row[j] += v * g(k, j);
      }
      for (std::size_t j = 0; j < d; ++j) m(r, j) = row[j];
    }
  }

  static std::uint64_t tabloid_key(const Tableau& t)
  {
    const auto where = t.row_of_entry();
    std::uint64_t key = 0;
    for (std::size_t v = 1; v < where.size(); ++v) key = (key << 4) | static_cast<std::uint64_t>(where[v]);
    return key;
  }

  // Coordinates of the polytabloid e_T = sum_{q in C_T} sign(q) {q T} at the
  // standard tabloids.
  std::vector<std::int64_t> standard_coordinates(const Tableau& t) const
  {
    const auto cols = t.columns();
    std::vector<std::int64_t> coords(dim(), 0);
    // enumerate the column group as independent permutations of each column
    std::vector<std::vector<int>> order(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      order[c].resize(cols[c].size());
      for (std::size_t k = 0; k < cols[c].size(); ++k) order[c][k] = static_cast<int>(k);
    }
    std::vector<int> where(static_cast<std::size_t>(n_) + 1);
    while (true) {
      int sgn_total = 1;
      for (std::size_t c = 0; c < cols.size(); ++c) {
        // entry cols[c][k] moves to row order[c][k]
        for (std::size_t k = 0; k < cols[c].size(); ++k) where[cols[c][k]] = order[c][k];
        sgn_total *= parity(order[c]);
      }
      std::uint64_t key = 0;
      for (int v = 1; v <= n_; ++v) key = (key << 4) | static_cast<std::uint64_t>(where[v]);
      if (auto it = tabloid_index_.find(key); it != tabloid_index_.end()) coords[it->second] += sgn_total;
      // advance the odometer over column permutations
      std::size_t c = 0;
      for (; c < cols.size(); ++c) {
        if (std::next_permutation(order[c].begin(), order[c].end())) break;
      }
      if (c == cols.size()) break;
    }
    return coords;
  }

  static int parity(const std::vector<int>& v)
  {
    int s = 1;
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j)
        if (v[i] > v[j]) s = -s;
    return s;
  }

  Partition lambda_;
  int n_;
  std::vector<Tableau> tableaux_;
  std::unordered_map<std::uint64_t, std::size_t> tabloid_index_;
  Matrix<Rational> straighten_;
  std::vector<IntMatrix> generators_;
  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<std::uint64_t, std::unique_ptr<IntMatrix>> cache_;
};

/// Shared per-partition representations; thread-safe.
inline const NaturalRepresentation& natural_representation(const Partition& lambda)
{
  static std::mutex mutex;
  static std::map<Partition, std::unique_ptr<NaturalRepresentation>> reps;
  std::lock_guard lock(mutex);
  auto& slot = reps[lambda];
  if (!slot) slot = std::make_unique<NaturalRepresentation>(lambda);
  return *slot;
}

/// D_lambda(p) in Young's natural representation.
inline IntMatrix natural_rep(const Partition& lambda, const Permutation& p)
{
  return natural_representation(lambda).cached(p);
}

}  // namespace symring
