#pragma once

// Dense row-major matrices and the exact linear algebra the library needs:
// fraction-free (Bareiss) solving over the integers, determinants, and an
// incremental row space used for independence tests.

#include "scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace symring {

template <class T>
class Matrix
{
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
  : rows_(rows), cols_(cols), data_(std::move(data))
  {
    if (data_.size() != rows * cols) throw std::invalid_argument("matrix data size mismatch");
  }

  static Matrix identity(std::size_t n)
  {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  /// Matrix unit E_ij of an n x n matrix.
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j)
  {
    Matrix m(n, n);
    m(i, j) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Entries written row by row (the vec operator of the star-transfer map).
  const std::vector<T>& vec() const { return data_; }
  std::vector<T>& vec() { return data_; }

  static Matrix from_vec(std::size_t n, std::vector<T> v) { return Matrix(n, n, std::move(v)); }

  Matrix transpose() const
  {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  T trace() const
  {
    T s(0);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
    return s;
  }

  Matrix& operator+=(const Matrix& o)
  {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o)
  {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s)
  {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b)
  {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product size mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b)
  {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_zero() const
  {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == T(0); });
  }

  template <class U, class F>
  Matrix<U> map(F&& f) const
  {
    std::vector<U> out;
    out.reserve(data_.size());
    for (const auto& x : data_) out.push_back(f(x));
    return Matrix<U>(rows_, cols_, std::move(out));
  }

private:
  void check_same(const Matrix& o) const
  {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;

/// Promotes an integer matrix to coefficient type S.
template <Coefficient S>
Matrix<S> promote(const IntMatrix& m)
{
  return m.template map<S>([](std::int64_t v) { return ScalarTraits<S>::from_int(v); });
}

/// Coefficientwise equality honoring the floating tolerance.
template <Coefficient S>
bool approx_equal(const Matrix<S>& a, const Matrix<S>& b)
{
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t k = 0; k < a.vec().size(); ++k)
    if (!ScalarTraits<S>::equal(a.vec()[k], b.vec()[k])) return false;
  return true;
}

template <Coefficient S>
bool is_zero_matrix(const Matrix<S>& a)
{
  return std::all_of(a.vec().begin(), a.vec().end(), [](const S& x) { return ScalarTraits<S>::is_zero(x); });
}

template <Coefficient S>
Matrix<S> conj(const Matrix<S>& a)
{
  return a.template map<S>([](const S& x) { return ScalarTraits<S>::conj(x); });
}

template <Coefficient S>
S trace_of(const Matrix<S>& a)
{
  S s = ScalarTraits<S>::zero();
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) s += a(i, i);
  return s;
}

/// Result of a fraction-free solve: the solution is numerators / denominator.
struct BareissSolution
{
  Matrix<Integer> numerators;
  Integer denominator;  // det(A) up to sign, never zero

  Matrix<Rational> to_rational() const
  {
    return numerators.map<Rational>([this](const Integer& v) {
      Rational q(v, denominator);
      q.canonicalize();
      return q;
    });
  }
};

/// Solves A X = B over the rationals for square integer A by Bareiss
/// elimination followed by fraction-free back substitution. Returns nullopt
/// when A is singular.
inline std::optional<BareissSolution> bareiss_solve(Matrix<Integer> a, Matrix<Integer> b)
{
  const std::size_t n = a.rows();
  if (!a.square() || b.rows() != n) throw std::invalid_argument("bareiss_solve: size mismatch");
  const std::size_t m = b.cols();
  Integer prev = 1;
  Integer tmp;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, k) == 0) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      for (std::size_t j = 0; j < m; ++j) std::swap(b(k, j), b(piv, j));
    }
    const Integer& akk = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Integer aik = a(i, k);
      if (aik == 0) {
        // row i keeps the Bareiss invariant by scaling alone
        if (akk != prev) {
          for (std::size_t j = k + 1; j < n; ++j)
            if (a(i, j) != 0) {
              a(i, j) *= akk;
              mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
            }
          for (std::size_t j = 0; j < m; ++j)
            if (b(i, j) != 0) {
              b(i, j) *= akk;
              mpz_divexact(b(i, j).get_mpz_t(), b(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        }
        continue;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        tmp = akk * a(i, j) - aik * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      for (std::size_t j = 0; j < m; ++j) {
        tmp = akk * b(i, j) - aik * b(k, j);
        mpz_divexact(b(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = akk;
  }
  // a is upper triangular with a(n-1,n-1) = +-det; x = y / det.
  const Integer det = a(n - 1, n - 1);
  Matrix<Integer> y(n, m);
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t ii = n; ii-- > 0;) {
      tmp = det * b(ii, c);
      for (std::size_t j = ii + 1; j < n; ++j)
        if (a(ii, j) != 0 && y(j, c) != 0) tmp -= a(ii, j) * y(j, c);
      mpz_divexact(y(ii, c).get_mpz_t(), tmp.get_mpz_t(), a(ii, ii).get_mpz_t());
    }
  }
  return BareissSolution{std::move(y), det};
}

/// Exact determinant by Bareiss elimination.
inline Integer determinant(Matrix<Integer> a)
{
  const std::size_t n = a.rows();
  if (!a.square()) throw std::invalid_argument("determinant of non-square matrix");
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  Integer tmp;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, k) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        tmp = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Incrementally maintained row space of integer vectors in echelon form.
/// Rows are kept primitive (content divided out) to bound coefficient growth.
class RowSpace
{
public:
  explicit RowSpace(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  /// Reduces v against the stored rows; returns true (and stores the
  /// residual) iff v is independent of them.
  bool insert(std::span<const std::int64_t> v)
  {
    std::vector<Integer> w(v.begin(), v.end());
    return insert(std::move(w));
  }

  bool insert(std::vector<Integer> w)
  {
    if (w.size() != dim_) throw std::invalid_argument("RowSpace: vector length mismatch");
    reduce(w);
    auto lead = std::find_if(w.begin(), w.end(), [](const Integer& x) { return x != 0; });
    if (lead == w.end()) return false;
    make_primitive(w);
    const std::size_t col = static_cast<std::size_t>(lead - w.begin());
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), col);
    const auto idx = pos - pivots_.begin();
    pivots_.insert(pos, col);
    rows_.insert(rows_.begin() + idx, std::move(w));
    return true;
  }

  bool contains(std::span<const std::int64_t> v) const
  {
    std::vector<Integer> w(v.begin(), v.end());
    reduce(w);
    return std::all_of(w.begin(), w.end(), [](const Integer& x) { return x == 0; });
  }

private:
  void reduce(std::vector<Integer>& w) const
  {
    Integer g, a, b;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t c = pivots_[r];
      if (w[c] == 0) continue;
      const auto& row = rows_[r];
      // w <- (p/g) w - (w_c/g) row, with g = gcd(p, w_c)
      mpz_gcd(g.get_mpz_t(), row[c].get_mpz_t(), w[c].get_mpz_t());
      a = row[c] / g;
      b = w[c] / g;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (j < c || row[j] == 0) {
          if (a != 1 && w[j] != 0) w[j] *= a;
          continue;
        }
        w[j] = a * w[j] - b * row[j];
      }
      make_primitive(w);
    }
  }

  static void make_primitive(std::vector<Integer>& w)
  {
    Integer g = 0;
    for (const auto& x : w) {
      if (x == 0) continue;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g == 1) return;
    }
    if (g <= 1) return;
    for (auto& x : w)
      if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }

  std::size_t dim_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<Integer>> rows_;
};

/// Rank of a family of integer vectors.
inline std::size_t rank_of(const std::vector<std::vector<std::int64_t>>& vectors)
{
  if (vectors.empty()) return 0;
  RowSpace space(vectors.front().size());
  for (const auto& v : vectors) space.insert(v);
  return space.rank();
}

/// Solves A x = b over the rationals by Gauss-Jordan; A must be invertible.
inline Matrix<Rational> solve_rational(Matrix<Rational> a, Matrix<Rational> b)
{
  const std::size_t n = a.rows();
  if (!a.square() || b.rows() != n) throw std::invalid_argument("solve_rational: size mismatch");
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && sgn(a(piv, k)) == 0) ++piv;
    if (piv == n) throw std::domain_error("solve_rational: singular matrix");
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      for (std::size_t j = 0; j < b.cols(); ++j) std::swap(b(k, j), b(piv, j));
    }
    const Rational inv = 1 / a(k, k);
    for (std::size_t j = 0; j < n; ++j) a(k, j) *= inv;
    for (std::size_t j = 0; j < b.cols(); ++j) b(k, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || sgn(a(i, k)) == 0) continue;
      const Rational f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) a(i, j) -= f * a(k, j);
      for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) -= f * b(k, j);
    }
  }
  return b;
}

}  // namespace symring
