#pragma once

// Text file formats.
//
//   .gre   GRE N=<n> terms=<k>
//          <re_num>/<re_den> <im_num>/<im_den> : <images>        (lex order)
//   .spec  SPEC N=<n>
//          LAMBDA <parts> DIM <d>, then d rows of d coefficient tokens
//   .plam  PLAM N=<n> LAMBDA <parts> COUNT <d^2>, then one permutation per line
//   .smap  SMAP N=<n> LAMBDA <parts> DIM <d>, then d^2 rows of d^2 rationals
//   .ket   KET N=<n> K=<k>
//          <re>/<den> <im>/<den> : <sigma values>
//   .mat   MAT DIM=<m> NNZ=<k>, then "<row> <col> <rational>" (0-based)
//   commutation symmetry: "<images> ; <re>/<den> <im>/<den>" per generator
//
// Blank lines and lines starting with '#' are ignored on input. Coefficient
// tokens in .spec rows are "p/q" for real values and "p/q+r/si" otherwise.

#include "characters.hpp"
#include "dft.hpp"
#include "heisenberg.hpp"
#include "star_transfer.hpp"

#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace symring::io {

class FormatError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline bool next_content_line(std::istream& in, std::string& line)
{
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  }
  return false;
}

inline std::vector<std::string> tokens(const std::string& line)
{
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

/// Value of "KEY=<v>" in a header token list.
inline std::string keyed(const std::vector<std::string>& toks, const std::string& key)
{
  for (const auto& t : toks)
    if (t.rfind(key + "=", 0) == 0) return t.substr(key.size() + 1);
  throw FormatError("header is missing " + key + "=");
}

/// Value following a bare keyword, e.g. "LAMBDA 5,2".
inline std::string after(const std::vector<std::string>& toks, const std::string& key)
{
  for (std::size_t i = 0; i + 1 < toks.size(); ++i)
    if (toks[i] == key) return toks[i + 1];
  throw FormatError("header is missing " + key);
}

inline int to_int(const std::string& s)
{
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw FormatError("not an integer: " + s);
    return v;
  } catch (const std::logic_error&) {
    throw FormatError("not an integer: " + s);
  }
}

inline void expect_magic(const std::vector<std::string>& toks, const std::string& magic)
{
  if (toks.empty() || toks.front() != magic) throw FormatError("expected a " + magic + " header");
}

template <class F>
auto wrap(F&& f) -> decltype(f())
{
  try {
    return f();
  } catch (const FormatError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// group ring elements

inline void write_element(std::ostream& out, const GroupRingElement<Exact>& a)
{
  out << "GRE N=" << a.degree() << " terms=" << a.support_size() << '\n';
  for (const auto& [p, c] : a.terms())
    out << format_rational(c.re) << ' ' << format_rational(c.im) << " : " << p.to_string() << '\n';
}

inline GroupRingElement<Exact> read_element(std::istream& in)
{
  return detail::wrap([&] {
    std::string line;
    if (!detail::next_content_line(in, line)) throw FormatError("empty element file");
    const auto head = detail::tokens(line);
    detail::expect_magic(head, "GRE");
    const int n = detail::to_int(detail::keyed(head, "N"));
    const int count = detail::to_int(detail::keyed(head, "terms"));
    GroupRingElement<Exact> a(n);
    for (int k = 0; k < count; ++k) {
      if (!detail::next_content_line(in, line)) throw FormatError("element file ends before all terms were read");
      const auto colon = line.find(':');
      if (colon == std::string::npos) throw FormatError("term line lacks ':'");
      const auto coeff = detail::tokens(line.substr(0, colon));
      if (coeff.size() != 2) throw FormatError("term needs a real and an imaginary part");
      const auto p = parse_permutation(line.substr(colon + 1));
      if (p.degree() != n) throw FormatError("term permutation has wrong degree");
      a.add_term(p, parse_exact_pair(coeff[0], coeff[1]));
    }
    return a;
  });
}

// ---------------------------------------------------------------------------
// spectra

inline void write_spectrum(std::ostream& out, const BlockSpectrum<Exact>& s)
{
  out << "SPEC N=" << s.degree() << '\n';
  for (const auto& [lam, m] : s.blocks()) {
    out << "LAMBDA " << lam.to_string() << " DIM " << m.rows() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << format_exact_token(m(i, j));
      out << '\n';
    }
  }
}

inline BlockSpectrum<Exact> read_spectrum(std::istream& in)
{
  return detail::wrap([&] {
    std::string line;
    if (!detail::next_content_line(in, line)) throw FormatError("empty spectrum file");
    const auto head = detail::tokens(line);
    detail::expect_magic(head, "SPEC");
    const int n = detail::to_int(detail::keyed(head, "N"));
    BlockSpectrum<Exact> s(n);
    while (detail::next_content_line(in, line)) {
      const auto bh = detail::tokens(line);
      detail::expect_magic(bh, "LAMBDA");
      const auto lam = parse_partition(detail::after(bh, "LAMBDA"));
      const auto d = static_cast<std::size_t>(detail::to_int(detail::after(bh, "DIM")));
      if (lam.size() != n) throw FormatError("block partition does not match N");
      if (d != lam.dimension()) throw FormatError("block DIM does not match d_lambda for " + lam.pretty());
      Matrix<Exact> m(d, d);
      for (std::size_t i = 0; i < d; ++i) {
        if (!detail::next_content_line(in, line)) throw FormatError("spectrum block truncated");
        const auto row = detail::tokens(line);
        if (row.size() != d) throw FormatError("spectrum row has wrong length");
        for (std::size_t j = 0; j < d; ++j) m(i, j) = parse_exact_token(row[j]);
      }
      s.set_block(lam, std::move(m));
    }
    return s;
  });
}

// ---------------------------------------------------------------------------
// permutation bases and star maps

inline void write_plam(std::ostream& out, const PermBasisSet& b)
{
  out << "PLAM N=" << b.lambda.size() << " LAMBDA " << b.lambda.to_string() << " COUNT " << b.perms.size() << '\n';
  for (const auto& p : b.perms) out << p.to_string() << '\n';
}

inline PermBasisSet read_plam(std::istream& in)
{
  return detail::wrap([&] {
    std::string line;
    if (!detail::next_content_line(in, line)) throw FormatError("empty P_lambda file");
    const auto head = detail::tokens(line);
    detail::expect_magic(head, "PLAM");
    const int n = detail::to_int(detail::keyed(head, "N"));
    PermBasisSet b{parse_partition(detail::after(head, "LAMBDA")), {}};
    if (b.lambda.size() != n) throw FormatError("LAMBDA does not partition N");
    const int count = detail::to_int(detail::after(head, "COUNT"));
    for (int k = 0; k < count; ++k) {
      if (!detail::next_content_line(in, line)) throw FormatError("P_lambda file truncated");
      auto p = parse_permutation(line);
      if (p.degree() != n) throw FormatError("permutation has wrong degree");
      b.perms.push_back(p);
    }
    return b;
  });
}

inline void write_star_map(std::ostream& out, const StarTransferMap& m)
{
  const std::size_t d = m.dim();
  out << "SMAP N=" << m.lambda.size() << " LAMBDA " << m.lambda.to_string() << " DIM " << d << '\n';
  for (std::size_t i = 0; i < d * d; ++i) {
    for (std::size_t j = 0; j < d * d; ++j) out << (j ? " " : "") << format_rational_short(m.map(i, j));
    out << '\n';
  }
}

inline StarTransferMap read_star_map(std::istream& in)
{
  return detail::wrap([&] {
    std::string line;
    if (!detail::next_content_line(in, line)) throw FormatError("empty star-map file");
    const auto head = detail::tokens(line);
    detail::expect_magic(head, "SMAP");
    const int n = detail::to_int(detail::keyed(head, "N"));
    const auto lam = parse_partition(detail::after(head, "LAMBDA"));
    if (lam.size() != n) throw FormatError("LAMBDA does not partition N");
    const auto d = static_cast<std::size_t>(detail::to_int(detail::after(head, "DIM")));
    if (d != lam.dimension()) throw FormatError("DIM does not match d_lambda");
    Matrix<Rational> m(d * d, d * d);
    for (std::size_t i = 0; i < d * d; ++i) {
      if (!detail::next_content_line(in, line)) throw FormatError("star-map file truncated");
      const auto row = detail::tokens(line);
      if (row.size() != d * d) throw FormatError("star-map row has wrong length");
      for (std::size_t j = 0; j < d * d; ++j) m(i, j) = parse_rational(row[j]);
    }
    return StarTransferMap{lam, std::move(m)};
  });
}

// ---------------------------------------------------------------------------
// kets, Hamiltonians, commutation symmetries

inline void write_ket(std::ostream& out, const HilbertVector<Exact>& v)
{
  out << "KET N=" << v.sites() << " K=" << v.letters() << '\n';
  for (const auto& [s, c] : v.terms())
    out << format_rational(c.re) << ' ' << format_rational(c.im) << " : " << s.to_string() << '\n';
}

inline HilbertVector<Exact> read_ket(std::istream& in)
{
  return detail::wrap([&] {
    std::string line;
    if (!detail::next_content_line(in, line)) throw FormatError("empty ket file");
    const auto head = detail::tokens(line);
    detail::expect_magic(head, "KET");
    const int n = detail::to_int(detail::keyed(head, "N"));
    const int k = detail::to_int(detail::keyed(head, "K"));
    HilbertVector<Exact> v(n, k);
    while (detail::next_content_line(in, line)) {
      const auto colon = line.find(':');
      if (colon == std::string::npos) throw FormatError("ket line lacks ':'");
      const auto coeff = detail::tokens(line.substr(0, colon));
      if (coeff.size() != 2) throw FormatError("ket line needs a real and an imaginary part");
      std::vector<int> values;
      for (const auto& t : detail::tokens(line.substr(colon + 1))) values.push_back(detail::to_int(t));
      if (static_cast<int>(values.size()) != n) throw FormatError("ket configuration has wrong length");
      v.add(SpinConfiguration(k, std::move(values)), parse_exact_pair(coeff[0], coeff[1]));
    }
    return v;
  });
}

inline void write_sparse_matrix(std::ostream& out, const Matrix<Rational>& m)
{
  std::size_t nnz = 0;
  for (const auto& x : m.vec())
    if (sgn(x) != 0) ++nnz;
  out << "MAT DIM=" << m.rows() << " NNZ=" << nnz << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0) out << i << ' ' << j << ' ' << format_rational_short(m(i, j)) << '\n';
}

inline Matrix<Rational> read_sparse_matrix(std::istream& in)
{
  return detail::wrap([&] {
    std::string line;
    if (!detail::next_content_line(in, line)) throw FormatError("empty matrix file");
    const auto head = detail::tokens(line);
    detail::expect_magic(head, "MAT");
    const auto dim = static_cast<std::size_t>(detail::to_int(detail::keyed(head, "DIM")));
    const int nnz = detail::to_int(detail::keyed(head, "NNZ"));
    Matrix<Rational> m(dim, dim);
    for (int k = 0; k < nnz; ++k) {
      if (!detail::next_content_line(in, line)) throw FormatError("matrix file truncated");
      const auto t = detail::tokens(line);
      if (t.size() != 3) throw FormatError("matrix entry needs row, column and value");
      const auto i = static_cast<std::size_t>(detail::to_int(t[0]));
      const auto j = static_cast<std::size_t>(detail::to_int(t[1]));
      if (i >= dim || j >= dim) throw FormatError("matrix entry out of range");
      m(i, j) = parse_rational(t[2]);
    }
    return m;
  });
}

inline CommutationSymmetry<Exact> read_commutation_symmetry(std::istream& in)
{
  return detail::wrap([&] {
    std::vector<std::pair<Permutation, Exact>> gens;
    std::string line;
    while (detail::next_content_line(in, line)) {
      const auto semi = line.find(';');
      if (semi == std::string::npos) throw FormatError("generator line lacks ';'");
      auto p = parse_permutation(line.substr(0, semi));
      const auto eps = detail::tokens(line.substr(semi + 1));
      if (eps.size() != 2) throw FormatError("epsilon needs a real and an imaginary part");
      if (!gens.empty() && gens.front().first.degree() != p.degree()) throw FormatError("generators have different degrees");
      gens.emplace_back(p, parse_exact_pair(eps[0], eps[1]));
    }
    if (gens.empty()) throw FormatError("no generators given");
    return CommutationSymmetry<Exact>::from_generators(gens);
  });
}

// ---------------------------------------------------------------------------
// file helpers

template <class T, class Reader>
T read_file(const std::filesystem::path& path, Reader&& reader)
{
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  return reader(in);
}

/// Writes through a temporary file and renames it into place.
template <class Writer>
void write_file_atomic(const std::filesystem::path& path, Writer&& writer)
{
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw FormatError("cannot write " + tmp.string());
    writer(out);
    if (!out) throw FormatError("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}


/// On-disk store of P_lambda sets and star-transfer maps keyed by
/// (N, lambda, representation). A cached file that fails to parse or does
/// not match its key is rebuilt.
class StarMapCache
{
public:
  explicit StarMapCache(std::filesystem::path dir, std::string representation = "natural")
      : dir_(std::move(dir)), rep_(std::move(representation))
  {
  }

  std::filesystem::path plam_path(const Partition& lambda) const { return dir_ / stem("plam", lambda, ".plam"); }
  std::filesystem::path map_path(const Partition& lambda) const { return dir_ / stem("smap", lambda, ".smap"); }

  PermBasisSet plam(const Partition& lambda) const
  {
    const auto path = plam_path(lambda);
    if (auto b = try_read<PermBasisSet>(path, read_plam); b && b->lambda == lambda && is_valid_basis(*b)) return *b;
    auto b = compute_plam(lambda);
    write_file_atomic(path, [&](std::ostream& out) { write_plam(out, b); });
    return b;
  }

  StarTransferMap star_map(const Partition& lambda) const
  {
    const auto path = map_path(lambda);
    if (auto m = try_read<StarTransferMap>(path, read_star_map); m && m->lambda == lambda) return *m;
    auto m = build_star_map_basis(plam(lambda));
    write_file_atomic(path, [&](std::ostream& out) { write_star_map(out, m); });
    return m;
  }

  const std::filesystem::path& directory() const { return dir_; }

private:
  std::string stem(const char* kind, const Partition& lambda, const char* ext) const
  {
    std::string parts = lambda.to_string();
    for (auto& c : parts)
      if (c == ',') c = '-';
    return std::string(kind) + "_N" + std::to_string(lambda.size()) + "_L" + parts + "_" + rep_ + ext;
  }

  template <class T, class Reader>
  static std::optional<T> try_read(const std::filesystem::path& path, Reader reader)
  {
    std::error_code ec;
    if (!std::filesystem::exists(path, ec)) return std::nullopt;
    try {
      return read_file<T>(path, reader);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }

  std::filesystem::path dir_;
  std::string rep_;
};

}  // namespace symring::io
