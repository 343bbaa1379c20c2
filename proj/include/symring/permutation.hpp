#pragma once

// Permutations of {1,...,N} in one-line form [p(1),...,p(N)].

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <sstream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace symring {

/// Largest supported degree. Group-ring work is capped far below this.
inline constexpr int kMaxDegree = 16;

class Permutation
{
public:
  Permutation() = default;

  /// Validates that images is a bijection of {1,...,N}.
  explicit Permutation(std::span<const int> images)
  {
    if (images.empty() || images.size() > static_cast<std::size_t>(kMaxDegree))
      throw std::invalid_argument("permutation degree out of range");
    n_ = static_cast<std::uint8_t>(images.size());
    std::array<bool, kMaxDegree + 1> seen{};
    for (std::size_t i = 0; i < images.size(); ++i) {
      const int v = images[i];
      if (v < 1 || v > n_ || seen[v]) throw std::invalid_argument("images do not form a permutation");
      seen[v] = true;
      img_[i] = static_cast<std::uint8_t>(v);
    }
  }
  Permutation(std::initializer_list<int> images) : Permutation(std::span<const int>(images.begin(), images.size())) {}
  explicit Permutation(const std::vector<int>& images) : Permutation(std::span<const int>(images)) {}

  static Permutation identity(int n)
  {
    if (n < 1 || n > kMaxDegree) throw std::invalid_argument("permutation degree out of range");
    Permutation p;
    p.n_ = static_cast<std::uint8_t>(n);
    for (int i = 0; i < n; ++i) p.img_[i] = static_cast<std::uint8_t>(i + 1);
    return p;
  }

  /// Transposition (i j), 1-based.
  static Permutation transposition(int n, int i, int j)
  {
    Permutation p = identity(n);
    if (i < 1 || j < 1 || i > n || j > n) throw std::invalid_argument("transposition points out of range");
    std::swap(p.img_[i - 1], p.img_[j - 1]);
    return p;
  }

  int degree() const { return n_; }

  /// p(i) for 1 <= i <= N.
  int operator()(int i) const { return img_[i - 1]; }

  std::vector<int> images() const { return {img_.begin(), img_.begin() + n_}; }

  bool is_identity() const
  {
    for (int i = 0; i < n_; ++i)
      if (img_[i] != i + 1) return false;
    return true;
  }

  friend Permutation compose(const Permutation& p, const Permutation& q)
  {
    if (p.n_ != q.n_) throw std::invalid_argument("compose: degree mismatch");
    Permutation r;
    r.n_ = p.n_;
    for (int i = 0; i < p.n_; ++i) r.img_[i] = p.img_[q.img_[i] - 1];
    return r;
  }

  friend Permutation inverse(const Permutation& p)
  {
    Permutation r;
    r.n_ = p.n_;
    for (int i = 0; i < p.n_; ++i) r.img_[p.img_[i] - 1] = static_cast<std::uint8_t>(i + 1);
    return r;
  }

  friend int sign(const Permutation& p)
  {
    // parity from the cycle decomposition
    std::array<bool, kMaxDegree> seen{};
    int s = 1;
    for (int i = 0; i < p.n_; ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (int j = i; !seen[j]; j = p.img_[j] - 1) {
        seen[j] = true;
        ++len;
      }
      if (len % 2 == 0) s = -s;
    }
    return s;
  }

  /// Number of inversions (Coxeter length).
  int length() const
  {
    int c = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (img_[i] > img_[j]) ++c;
    return c;
  }

  /// Cycle lengths in weakly decreasing order.
  std::vector<int> cycle_type() const
  {
    std::array<bool, kMaxDegree> seen{};
    std::vector<int> type;
    for (int i = 0; i < n_; ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (int j = i; !seen[j]; j = img_[j] - 1) {
        seen[j] = true;
        ++len;
      }
      type.push_back(len);
    }
    std::sort(type.begin(), type.end(), std::greater<>());
    return type;
  }

  /// Lexicographic order on one-line forms; degrees compare first.
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b)
  {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    for (int i = 0; i < a.n_; ++i)
      if (a.img_[i] != b.img_[i]) return a.img_[i] <=> b.img_[i];
    return std::strong_ordering::equal;
  }
  friend bool operator==(const Permutation& a, const Permutation& b) { return (a <=> b) == 0; }

  std::size_t hash() const
  {
    std::uint64_t h = n_;
    for (int i = 0; i < n_; ++i) h = h * 17 + img_[i];
    return static_cast<std::size_t>(h);
  }

  /// Space-separated images, e.g. "2 1 3".
  std::string to_string() const
  {
    std::string s;
    for (int i = 0; i < n_; ++i) {
      if (i) s += ' ';
      s += std::to_string(img_[i]);
    }
    return s;
  }

  /// Cycle notation for display, e.g. "(1 2)(3 5 4)"; identity is "id".
  std::string cycle_string() const
  {
    std::array<bool, kMaxDegree> seen{};
    std::string s;
    for (int i = 0; i < n_; ++i) {
      if (seen[i] || img_[i] == i + 1) continue;
      s += '(';
      for (int j = i; !seen[j]; j = img_[j] - 1) {
        seen[j] = true;
        if (s.back() != '(') s += ' ';
        s += std::to_string(j + 1);
      }
      s += ')';
    }
    return s.empty() ? "id" : s;
  }

private:
  std::array<std::uint8_t, kMaxDegree> img_{};
  std::uint8_t n_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << '[' << p.to_string() << ']'; }

/// Parses space-separated images.
inline Permutation parse_permutation(const std::string& text)
{
  std::istringstream in(text);
  std::vector<int> v;
  int x;
  while (in >> x) v.push_back(x);
  if (!in.eof()) throw std::invalid_argument("malformed permutation '" + text + "'");
  return Permutation(v);
}

/// Strict lexicographic successor; nullopt for [N, N-1, ..., 1].
inline std::optional<Permutation> next_permutation(const Permutation& p)
{
  std::vector<int> v = p.images();
  if (!std::next_permutation(v.begin(), v.end())) return std::nullopt;
  return Permutation(v);
}

/// All permutations of degree n in lexicographic order.
inline std::vector<Permutation> all_permutations(int n)
{
  std::vector<Permutation> out;
  std::optional<Permutation> p = Permutation::identity(n);
  while (p) {
    out.push_back(*p);
    p = next_permutation(*p);
  }
  return out;
}

inline std::uint64_t factorial(int n)
{
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

/// Position of p in the lexicographic order of S_N (Lehmer code).
inline std::uint64_t lex_rank(const Permutation& p)
{
  const int n = p.degree();
  std::uint64_t r = 0;
  for (int i = 1; i <= n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j <= n; ++j)
      if (p(j) < p(i)) ++smaller;
    r += static_cast<std::uint64_t>(smaller) * factorial(n - i);
  }
  return r;
}

inline Permutation lex_unrank(int n, std::uint64_t r)
{
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[i] = i + 1;
  std::vector<int> out;
  for (int i = n; i >= 1; --i) {
    const std::uint64_t f = factorial(i - 1);
    const auto k = static_cast<std::size_t>(r / f);
    r %= f;
    out.push_back(pool[k]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return Permutation(out);
}

/// Indices i of adjacent transpositions s_i = (i i+1) with
/// p = s_{w[0]} o s_{w[1]} o ... o s_{w[k-1]}, k = length(p).
inline std::vector<int> reduced_word(const Permutation& p)
{
  std::vector<int> v = p.images();
  std::vector<int> word;
  // right-multiplying by s_i swaps positions i and i+1; bubble sort to id
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
      if (v[i] > v[i + 1]) {
        std::swap(v[i], v[i + 1]);
        word.push_back(static_cast<int>(i) + 1);
        swapped = true;
      }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

}  // namespace symring

template <>
struct std::hash<symring::Permutation>
{
  std::size_t operator()(const symring::Permutation& p) const noexcept { return p.hash(); }
};
