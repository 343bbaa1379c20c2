#pragma once

// Partitions of N and Young tableaux.

#include "permutation.hpp"
#include "scalar.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace symring {

class Partition
{
public:
  Partition() = default;

  /// parts must be positive and weakly decreasing.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
  {
    if (parts_.empty()) throw std::invalid_argument("empty partition");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
      if (i && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int operator[](std::size_t i) const { return parts_[i]; }

  Partition conjugate() const
  {
    std::vector<int> c(static_cast<std::size_t>(parts_.front()), 0);
    for (int r : parts_)
      for (int j = 0; j < r; ++j) ++c[j];
    return Partition(std::move(c));
  }

  bool self_conjugate() const { return conjugate() == *this; }

  /// Hook length of cell (i, j), 0-based.
  int hook(int i, int j) const
  {
    const int arm = parts_[i] - j - 1;
    int leg = 0;
    for (int r = i + 1; r < rows() && parts_[r] > j; ++r) ++leg;
    return arm + leg + 1;
  }

  /// d_lambda by the hook length formula.
  std::uint64_t dimension() const
  {
    // multiply 2..N and divide by hooks in an interleaved order so the
    // intermediate stays an integer and within 64 bits for N <= 20
    std::vector<int> hooks;
    for (int i = 0; i < rows(); ++i)
      for (int j = 0; j < parts_[i]; ++j) hooks.push_back(hook(i, j));
    Integer num = 1;
    for (int k = 2; k <= size(); ++k) num *= k;
    for (int h : hooks) num /= h;
    return num.get_ui();
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

  /// "4,1" style used by the CLI and file formats.
  std::string to_string() const
  {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  /// "(5 1^2)" style for display tables.
  std::string pretty() const
  {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size();) {
      std::size_t j = i;
      while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
      if (i) s += ' ';
      s += std::to_string(parts_[i]);
      if (j - i > 1) s += "^" + std::to_string(j - i);
      i = j;
    }
    return s + ")";
  }

private:
  std::vector<int> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.pretty(); }

/// Parses "5,2" or "5 2".
inline Partition parse_partition(std::string text)
{
  std::replace(text.begin(), text.end(), ',', ' ');
  std::istringstream in(text);
  std::vector<int> v;
  int x;
  while (in >> x) v.push_back(x);
  if (!in.eof() || v.empty()) throw std::invalid_argument("malformed partition '" + text + "'");
  return Partition(std::move(v));
}

/// All partitions of n in decreasing lexicographic order: (n), (n-1,1), ...
inline std::vector<Partition> partitions(int n)
{
  if (n < 1) throw std::invalid_argument("partitions: n must be positive");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(rest, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

/// A filling of a Young frame with 1..N, each used once (not necessarily standard).
class Tableau
{
public:
  Tableau() = default;

  explicit Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows))
  {
    std::vector<int> lens;
    for (const auto& r : rows_) lens.push_back(static_cast<int>(r.size()));
    shape_ = Partition(lens);
    const int n = shape_.size();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (const auto& r : rows_)
      for (int v : r) {
        if (v < 1 || v > n || seen[v]) throw std::invalid_argument("tableau entries must be 1..N, each once");
        seen[v] = true;
      }
  }

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const { return shape_.size(); }

  std::vector<std::vector<int>> columns() const
  {
    std::vector<std::vector<int>> cols(static_cast<std::size_t>(shape_[0]));
    for (const auto& r : rows_)
      for (std::size_t j = 0; j < r.size(); ++j) cols[j].push_back(r[j]);
    return cols;
  }

  bool is_standard() const
  {
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (std::size_t j = 0; j < rows_[i].size(); ++j) {
        if (j + 1 < rows_[i].size() && rows_[i][j] >= rows_[i][j + 1]) return false;
        if (i + 1 < rows_.size() && j < rows_[i + 1].size() && rows_[i][j] >= rows_[i + 1][j]) return false;
      }
    return true;
  }

  /// Entries read row by row, left to right.
  std::vector<int> reading_word() const
  {
    std::vector<int> w;
    for (const auto& r : rows_) w.insert(w.end(), r.begin(), r.end());
    return w;
  }

  /// Row index (0-based) of every entry 1..N.
  std::vector<int> row_of_entry() const
  {
    std::vector<int> where(static_cast<std::size_t>(size()) + 1, -1);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (int v : rows_[i]) where[v] = static_cast<int>(i);
    return where;
  }

  /// Tableau with every entry v replaced by p(v).
  Tableau relabel(const Permutation& p) const
  {
    auto r = rows_;
    for (auto& row : r)
      for (int& v : row) v = p(v);
    return Tableau(std::move(r));
  }

  friend bool operator==(const Tableau& a, const Tableau& b) { return a.rows_ == b.rows_; }

  std::string to_string() const
  {
    std::string s;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i) s += " / ";
      for (std::size_t j = 0; j < rows_[i].size(); ++j) {
        if (j) s += ' ';
        s += std::to_string(rows_[i][j]);
      }
    }
    return s;
  }

private:
  std::vector<std::vector<int>> rows_;
  Partition shape_;
};

/// Parses "5 4 2 1 / 3".
inline Tableau parse_tableau(const std::string& text)
{
  std::vector<std::vector<int>> rows(1);
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "/") {
      rows.emplace_back();
      continue;
    }
    rows.back().push_back(std::stoi(tok));
  }
  return Tableau(std::move(rows));
}

/// All standard tableaux of shape lambda in row-reading lexicographic order.
inline std::vector<Tableau> standard_tableaux(const Partition& lambda)
{
  const int n = lambda.size();
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(lambda.rows()));
  std::vector<Tableau> out;
  std::function<void(int)> place = [&](int k) {
    if (k > n) {
      out.emplace_back(rows);
      return;
    }
    for (int r = 0; r < lambda.rows(); ++r) {
      const auto len = static_cast<int>(rows[r].size());
      if (len < lambda[r] && (r == 0 || static_cast<int>(rows[r - 1].size()) > len)) {
        rows[r].push_back(k);
        place(k + 1);
        rows[r].pop_back();
      }
    }
  };
  place(1);
  std::sort(out.begin(), out.end(),
            [](const Tableau& a, const Tableau& b) { return a.reading_word() < b.reading_word(); });
  return out;
}

}  // namespace symring
