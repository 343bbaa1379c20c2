#pragma once

// Coefficient types for the group ring.
//
// Exact mode uses Gaussian rationals re + im*i over GMP rationals; floating
// mode uses std::complex<double>. The mode is a template parameter of every
// container in the library, so the two are never mixed implicitly.

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace symring {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "p/q", "-p/q". Throws std::invalid_argument on malformed input.
inline Rational parse_rational(std::string_view text)
{
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  if (s.front() == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

/// Always prints an explicit denominator: 3 -> "3/1".
inline std::string format_rational(const Rational& q)
{
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Prints "3" for integers and "p/q" otherwise.
inline std::string format_rational_short(const Rational& q)
{
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

template <class T>
struct Gaussian
{
  T re{0};
  T im{0};

  Gaussian() = default;
  Gaussian(T r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Gaussian(T r, T i) : re(std::move(r)), im(std::move(i)) {}
  Gaussian(long r) : re(r) {}  // NOLINT(google-explicit-constructor)
  Gaussian(int r) : re(r) {}   // NOLINT(google-explicit-constructor)

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  Gaussian& operator+=(const Gaussian& o)
  {
    re += o.re;
    if (sgn(o.im) != 0) im += o.im;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o)
  {
    re -= o.re;
    if (sgn(o.im) != 0) im -= o.im;
    return *this;
  }
  Gaussian& operator*=(const Gaussian& o)
  {
    if (sgn(im) == 0 && sgn(o.im) == 0) {
      re *= o.re;
      return *this;
    }
    T r = re * o.re - im * o.im;
    T i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  Gaussian& operator/=(const Gaussian& o)
  {
    if (o.is_zero()) throw std::domain_error("division by zero coefficient");
    if (sgn(o.im) == 0) {
      re /= o.re;
      if (sgn(im) != 0) im /= o.re;
      return *this;
    }
    T n = o.re * o.re + o.im * o.im;
    T r = (re * o.re + im * o.im) / n;
    T i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend Gaussian operator-(const Gaussian& a) { return Gaussian(T(-a.re), T(-a.im)); }
  friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }
};

using Exact = Gaussian<Rational>;
using Float = std::complex<double>;

inline std::ostream& operator<<(std::ostream& os, const Exact& z)
{
  if (z.is_real()) return os << format_rational_short(z.re);
  return os << format_rational_short(z.re) << (sgn(z.im) < 0 ? "-" : "+")
            << format_rational_short(abs(z.im)) << "i";
}

/// Uniform access to the three supported coefficient types:
/// Rational (real exact), Exact (Gaussian rational), Float (complex double).
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational>
{
  static constexpr bool exact = true;
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_int(std::int64_t v) { return Rational(static_cast<long>(v)); }
  static Rational from_rational(const Rational& q) { return q; }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static bool equal(const Rational& a, const Rational& b) { return a == b; }
  static Rational conj(const Rational& x) { return x; }
  static bool is_real(const Rational&) { return true; }
};

template <>
struct ScalarTraits<Exact>
{
  static constexpr bool exact = true;
  static Exact zero() { return Exact(); }
  static Exact one() { return Exact(Rational(1)); }
  static Exact from_int(std::int64_t v) { return Exact(Rational(static_cast<long>(v))); }
  static Exact from_rational(const Rational& q) { return Exact(q); }
  static bool is_zero(const Exact& x) { return x.is_zero(); }
  static bool equal(const Exact& a, const Exact& b) { return a == b; }
  static Exact conj(const Exact& x) { return Exact(x.re, Rational(-x.im)); }
  static bool is_real(const Exact& x) { return x.is_real(); }
};

template <>
struct ScalarTraits<Float>
{
  static constexpr bool exact = false;
  /// Tolerance used by every floating-mode predicate.
  static constexpr double tolerance = 1e-12;
  static Float zero() { return Float(0.0, 0.0); }
  static Float one() { return Float(1.0, 0.0); }
  static Float from_int(std::int64_t v) { return Float(static_cast<double>(v), 0.0); }
  static Float from_rational(const Rational& q) { return Float(q.get_d(), 0.0); }
  static bool is_zero(const Float& x) { return std::abs(x) <= tolerance; }
  static bool equal(const Float& a, const Float& b) { return std::abs(a - b) <= tolerance; }
  static Float conj(const Float& x) { return std::conj(x); }
  static bool is_real(const Float& x) { return std::abs(x.imag()) <= tolerance; }
};

template <class S>
concept Coefficient = requires { ScalarTraits<S>::exact; };

/// Storage normalization: exact zeros are always dropped; floating values are
/// dropped only when they are exactly 0.0 (predicates apply the tolerance).
template <Coefficient S>
bool is_structural_zero(const S& x)
{
  if constexpr (std::is_same_v<S, Float>)
    return x == Float(0.0, 0.0);
  else
    return ScalarTraits<S>::is_zero(x);
}

/// Parses "re im" token pair of the file formats into an exact coefficient.
inline Exact parse_exact_pair(std::string_view re, std::string_view im)
{
  return Exact(parse_rational(re), parse_rational(im));
}

/// Single-token form used in matrix files: "p/q", "p/q+r/si", "p/q-r/si", "r/si".
inline Exact parse_exact_token(std::string_view tok)
{
  if (tok.empty()) throw std::invalid_argument("empty coefficient");
  if (tok.back() != 'i') return Exact(parse_rational(tok));
  std::string_view body = tok.substr(0, tok.size() - 1);
  // split at the last sign that is not the leading one
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return Exact(Rational(0), parse_rational(body));
  return Exact(parse_rational(body.substr(0, split)), parse_rational(body.substr(split)));
}

inline std::string format_exact_token(const Exact& z)
{
  std::string s = format_rational_short(z.re);
  if (z.is_real()) return s;
  std::string im = format_rational_short(z.im);
  if (im.front() != '-') im = "+" + im;
  return s + im + "i";
}

}  // namespace symring
