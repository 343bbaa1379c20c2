#pragma once

// Seeded property suites shared by `symring verify` and the acceptance tests.
// Every check reports an outcome instead of throwing; exceptions inside a
// check count as failures.

#include "symring.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace symring::verify {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED2024ULL;

using Rng = std::mt19937_64;

struct CheckResult
{
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

class Report
{
public:
  /// Runs check, which returns an empty string on success or a failure
  /// description.
  void run(const std::string& suite, const std::string& name, const std::function<std::string()>& check)
  {
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult r{suite, name, false, {}, 0};
    try {
      r.detail = check();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    results_.push_back(std::move(r));
  }

  const std::vector<CheckResult>& results() const { return results_; }
  bool passed() const
  {
    return std::all_of(results_.begin(), results_.end(), [](const auto& r) { return r.passed; });
  }
  void append(const Report& o) { results_.insert(results_.end(), o.results_.begin(), o.results_.end()); }

private:
  std::vector<CheckResult> results_;
};

// ---------------------------------------------------------------------------
// random data

inline Rational random_rational(Rng& rng, int bound = 4)
{
  std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline Exact random_exact(Rng& rng, bool complex = true)
{
  Exact z(random_rational(rng), complex ? random_rational(rng) : Rational(0));
  while (z.is_zero()) z = Exact(random_rational(rng), complex ? random_rational(rng) : Rational(0));
  return z;
}

inline Permutation random_permutation(int n, Rng& rng)
{
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

/// Between 1 and max_terms random terms (duplicates merge).
inline GroupRingElement<Exact> random_element(int n, Rng& rng, std::size_t max_terms, bool complex = true)
{
  std::uniform_int_distribution<std::size_t> count(1, max_terms);
  GroupRingElement<Exact> a(n);
  const auto k = count(rng);
  for (std::size_t i = 0; i < k; ++i) a.add_term(random_permutation(n, rng), random_exact(rng, complex));
  return a;
}

inline HilbertVector<Exact> random_ket(int n, int letters, Rng& rng, std::size_t max_terms)
{
  std::uniform_int_distribution<std::size_t> count(1, max_terms);
  std::uniform_int_distribution<int> letter(1, letters);
  HilbertVector<Exact> v(n, letters);
  const auto k = count(rng);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<int> s(static_cast<std::size_t>(n));
    for (auto& x : s) x = letter(rng);
    v.add(SpinConfiguration(letters, std::move(s)), random_exact(rng));
  }
  return v;
}

// ---------------------------------------------------------------------------
// decomposition checks

/// Checks every invariant of a self-adjoint decomposition in the group ring.
/// Returns an empty string on success.
inline std::string check_decomposition(const GroupRingElement<Exact>& e, const std::vector<GroupRingElement<Exact>>& parts)
{
  GroupRingElement<Exact> sum(e.degree());
  for (const auto& f : parts) sum += f;
  if (sum != e) return "sum of parts differs from e";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& f = parts[i];
    if (multiply(f, f) != f) return "part " + std::to_string(i) + " is not idempotent";
    if (!has_property_S(f)) return "part " + std::to_string(i) + " lacks property (S)";
    for (std::size_t j = 0; j < parts.size(); ++j)
      if (i != j && !multiply(f, parts[j]).is_zero())
        return "parts " + std::to_string(i) + " and " + std::to_string(j) + " are not orthogonal";
    auto s = dft(f);
    s.prune();
    const auto support = s.support();
    if (support.size() != 1) return "part " + std::to_string(i) + " spans " + std::to_string(support.size()) + " blocks";
    const auto b = s.block(support.front());
    if (b * b != b) return "block of part " + std::to_string(i) + " is not a projector";
    if (b.trace() != Exact(1)) {
      std::ostringstream os;
      os << b.trace();
      return "block of part " + std::to_string(i) + " has trace " + os.str();
    }
  }
  return {};
}

/// Decomposes e in the group ring and, when spectral is set, also blockwise;
/// both runs must pass check_decomposition and agree part by part.
inline std::string decompose_and_check(const GroupRingElement<Exact>& e, const std::vector<Seed>& seeds,
                                       const SpectralAlgebra<Exact>* spectral, std::size_t* parts_out = nullptr)
{
  const RingAlgebra<Exact> ring(e.degree());
  const auto dec = decompose_self_adjoint(ring, e, seeds);
  if (parts_out) *parts_out = dec.parts.size();
  if (auto err = check_decomposition(e, dec.parts); !err.empty()) return "ring mode: " + err;
  for (const auto& a : dec.audit)
    if (!ScalarTraits<Exact>::is_real(a.alpha)) return "alpha is not real";
  if (spectral) {
    const auto sdec = decompose_self_adjoint(*spectral, spectral->from_ring(e), seeds);
    if (sdec.parts.size() != dec.parts.size()) return "spectral mode produced a different number of parts";
    for (std::size_t i = 0; i < dec.parts.size(); ++i)
      if (spectral->to_ring(sdec.parts[i]) != dec.parts[i]) return "spectral part " + std::to_string(i) + " differs";
  }
  return {};
}

/// Commutation symmetries on the first four points (needs n >= 4).
inline std::vector<std::pair<std::string, CommutationSymmetry<Exact>>> sample_commutation_symmetries(int n)
{
  auto embed = [n](std::vector<int> head) {
    for (int v = static_cast<int>(head.size()) + 1; v <= n; ++v) head.push_back(v);
    return Permutation(head);
  };
  const Exact one(1), minus(-1), i(Rational(0), Rational(1));
  std::vector<std::pair<std::string, std::vector<std::pair<Permutation, Exact>>>> specs{
      {"C4 = <(1234)>, eps = i^k", {{embed({2, 3, 4, 1}), i}}},
      {"C4 = <(1234)>, eps = (-1)^k", {{embed({2, 3, 4, 1}), minus}}},
      {"S2 = <(12)>, sign", {{embed({2, 1}), minus}}},
      {"<(12),(34)>, eps = (-1, 1)", {{embed({2, 1}), minus}, {embed({1, 2, 4, 3}), one}}},
      {"S3 on {1,2,3}, sign", {{embed({2, 1}), minus}, {embed({1, 3, 2}), minus}}},
      {"D4 = <(1234),(13)>, eps = (-1, 1)", {{embed({2, 3, 4, 1}), minus}, {embed({3, 2, 1, 4}), one}}},
      {"C2 x C2 = <(12)(34),(13)(24)>, eps = (-1, -1)", {{embed({2, 1, 4, 3}), minus}, {embed({3, 4, 1, 2}), minus}}},
  };
  std::vector<std::pair<std::string, CommutationSymmetry<Exact>>> out;
  for (auto& [name, gens] : specs) out.emplace_back(name, CommutationSymmetry<Exact>::from_generators(gens));
  return out;
}

/// Self-adjoint idempotents: a random nonempty subset of the parts of id,
/// conjugated by a random permutation g (g f g^{-1} keeps property (S)).
inline std::vector<GroupRingElement<Exact>> random_self_adjoint_idempotents(int n, std::size_t count, Rng& rng)
{
  const RingAlgebra<Exact> ring(n);
  const auto parts = decompose_self_adjoint(ring, GroupRingElement<Exact>::identity(n), primitive_seed_set(n)).parts;
  std::vector<GroupRingElement<Exact>> out;
  std::bernoulli_distribution pick(0.4);
  while (out.size() < count) {
    GroupRingElement<Exact> e(n);
    for (const auto& f : parts)
      if (pick(rng)) e += f;
    if (e.is_zero()) continue;
    const auto g = random_permutation(n, rng);
    out.push_back(multiply(multiply(GroupRingElement<Exact>::basis(g), e), GroupRingElement<Exact>::basis(inverse(g))));
  }
  return out;
}

// ---------------------------------------------------------------------------
// suites

inline void dft_suite(Report& report, int n, std::uint64_t seed, std::size_t pairs = 100)
{
  const std::string suite = "dft";
  const std::string tag = " (N=" + std::to_string(n) + ")";
  report.run(suite, "dft(id) is the identity in every block" + tag, [&]() -> std::string {
    if (dft(GroupRingElement<Exact>::identity(n)) != BlockSpectrum<Exact>::identity(n)) return "mismatch";
    if (idft(BlockSpectrum<Exact>::identity(n)) != GroupRingElement<Exact>::identity(n)) return "idft(identity) != id";
    return {};
  });
  report.run(suite, "dft(z_lambda) is the identity in block lambda only" + tag, [&]() -> std::string {
    for (const auto& lam : partitions(n)) {
      const auto d = static_cast<std::size_t>(lam.dimension());
      if (dft(central_idempotent<Exact>(lam)) != BlockSpectrum<Exact>::single(lam, Matrix<Exact>::identity(d)))
        return "z_" + lam.pretty();
    }
    return {};
  });
  report.run(suite, "isomorphism dft(ab) = dft(a)dft(b), " + std::to_string(pairs) + " pairs" + tag, [&]() -> std::string {
    Rng rng(seed);
    for (std::size_t k = 0; k < pairs; ++k) {
      const auto a = random_element(n, rng, 8), b = random_element(n, rng, 8);
      if (dft(multiply(a, b)) != dft(a) * dft(b)) return "pair " + std::to_string(k);
    }
    return {};
  });
  report.run(suite, "roundtrip idft(dft(a)) = a, " + std::to_string(pairs) + " elements" + tag, [&]() -> std::string {
    Rng rng(seed + 1);
    for (std::size_t k = 0; k < pairs; ++k) {
      const auto a = random_element(n, rng, 8);
      if (idft(dft(a)) != a) return "element " + std::to_string(k);
    }
    return {};
  });
  report.run(suite, "trace of D_lambda(p) equals chi_lambda(p)" + tag, [&]() -> std::string {
    for (const auto& lam : partitions(n))
      for (const auto& p : all_permutations(n))
        if (natural_representation(lam).cached(p).trace() != character_snn(lam, p)) return lam.pretty() + " at " + p.to_string();
    return {};
  });
  report.run(suite, "floating mode agrees with exact mode" + tag, [&]() -> std::string {
    Rng rng(seed + 2);
    for (int k = 0; k < 10; ++k) {
      const auto a = random_element(n, rng, 8), b = random_element(n, rng, 8);
      const auto exact = dft(multiply(a, b));
      const auto fl = dft(multiply(convert<Float>(a), convert<Float>(b)));
      for (const auto& [lam, m] : exact.blocks())
        if (!approx_equal(m.template map<Float>([](const Exact& z) { return Float(z.re.get_d(), z.im.get_d()); }), fl.block(lam)))
          return "block " + lam.pretty();
    }
    return {};
  });
}

inline void star_suite(Report& report, int n, std::uint64_t seed, std::size_t samples = 100)
{
  const std::string suite = "star";
  for (const auto& lam : partitions(n)) {
    const std::string tag = " " + lam.pretty();
    PermBasisSet basis{lam, {}};
    report.run(suite, "P_lambda size d^2, starts at id, independent" + tag, [&]() -> std::string {
      basis = compute_plam(lam);
      const auto d = lam.dimension();
      if (basis.perms.size() != d * d) return "size " + std::to_string(basis.perms.size());
      if (!basis.perms.front().is_identity()) return "first element is not id";
      if (!is_valid_basis(basis)) return "rank check failed";
      return {};
    });
    report.run(suite, "P_lambda reused for the conjugate partition" + tag, [&]() -> std::string {
      if (!is_valid_basis(transpose_reuse(basis))) return "rank check failed in " + lam.conjugate().pretty();
      return {};
    });
    StarTransferMap map{lam, {}};
    report.run(suite, "basis path equals direct path, M*M = I" + tag, [&]() -> std::string {
      map = build_star_map_basis(basis);
      const auto direct = build_star_map_direct(lam);
      if (map.map != direct.map) return "basis and direct maps differ";
      if (map.map * map.map != Matrix<Rational>::identity(map.map.rows())) return "M*M != I";
      return {};
    });
    report.run(suite, "M D(a) = D(a*) for " + std::to_string(samples) + " random a in Z_lambda" + tag, [&]() -> std::string {
      Rng rng(seed ^ (std::hash<std::string>{}(lam.to_string()) + static_cast<std::uint64_t>(n)));
      const auto z = central_idempotent<Exact>(lam);
      const auto d = static_cast<std::size_t>(lam.dimension());
      std::uniform_int_distribution<std::size_t> count(1, std::min<std::size_t>(basis.perms.size(), 6));
      std::uniform_int_distribution<std::size_t> idx(0, basis.perms.size() - 1);
      for (std::size_t k = 0; k < samples; ++k) {
        // a = sum c_p p z_lambda over a few p in P_lambda
        GroupRingElement<Exact> a(n);
        const auto terms = count(rng);
        for (std::size_t t = 0; t < terms; ++t) {
          const auto& p = basis.perms[idx(rng)];
          const auto c = random_exact(rng);
          for (const auto& [q, zq] : z.terms()) a.add_term(compose(p, q), c * zq);
        }
        const auto spec = dft(a);
        for (const auto& [mu, m] : spec.blocks())
          if (mu != lam && !is_zero_matrix(m)) return "a has a nonzero block outside lambda";
        const auto da = spec.block(lam);
        if (da.rows() != d) return "block size";
        if (apply_star_map(map, da) != dft_block(star(a), lam)) return "sample " + std::to_string(k);
      }
      return {};
    });
  }
}

inline void decomp_suite(Report& report, int n, std::uint64_t seed, std::size_t random_count = 20)
{
  const std::string suite = "decomp";
  const std::string tag = " (N=" + std::to_string(n) + ")";
  const auto seeds = primitive_seed_set(n);
  std::optional<SpectralAlgebra<Exact>> spectral;
  report.run(suite, "seed set: sum of d_lambda normalized Young symmetrizers, all idempotent" + tag, [&]() -> std::string {
    std::size_t expected = 0;
    for (const auto& lam : partitions(n)) expected += lam.dimension();
    if (seeds.size() != expected) return "size " + std::to_string(seeds.size());
    for (const auto& s : seeds)
      if (!is_idempotent(s.idempotent)) return "seed " + s.tableau.to_string();
    spectral.emplace(n);
    return {};
  });
  const SpectralAlgebra<Exact>* sp = spectral ? &*spectral : nullptr;
  for (const auto& lam : partitions(n)) {
    report.run(suite, "z_lambda splits into d_lambda parts " + lam.pretty(), [&]() -> std::string {
      std::size_t count = 0;
      auto err = decompose_and_check(central_idempotent<Exact>(lam), seeds, sp, &count);
      if (!err.empty()) return err;
      if (count != lam.dimension()) return std::to_string(count) + " parts";
      return {};
    });
  }
  if (n >= 4) {
    for (const auto& [name, cs] : sample_commutation_symmetries(n)) {
      report.run(suite, "commutation idempotent " + name + tag, [&, &cs = cs]() -> std::string {
        const auto e = commutation_idempotent(cs);
        if (!is_idempotent(e) || !has_property_S(e)) return "input is not a self-adjoint idempotent";
        return decompose_and_check(e, seeds, sp);
      });
    }
  }
  report.run(suite, std::to_string(random_count) + " random self-adjoint idempotents" + tag, [&]() -> std::string {
    Rng rng(seed);
    const auto inputs = random_self_adjoint_idempotents(n, random_count, rng);
    for (std::size_t k = 0; k < inputs.size(); ++k)
      if (auto err = decompose_and_check(inputs[k], seeds, nullptr); !err.empty()) return "input " + std::to_string(k) + ": " + err;
    return {};
  });
  report.run(suite, "Weyl idempotent is unique per minimal right ideal" + tag, [&]() -> std::string {
    const RingAlgebra<Exact> ring(n);
    Rng rng(seed + 7);
    const auto one = GroupRingElement<Exact>::identity(n);
    // a seed off the trivial/sign blocks when possible, so that e lacks (S)
    const auto& s = seeds[seeds.size() > 2 ? 1 : 0];
    const auto e = s.idempotent;
    const auto f = weyl_idempotent(ring, e).idempotent;
    std::vector<GroupRingElement<Exact>> seen;
    for (int k = 0; k < 10;) {
      const auto x = random_element(n, rng, 6);
      const auto ep = e + multiply(multiply(e, x), one - e);
      if (std::find(seen.begin(), seen.end(), ep) != seen.end()) continue;
      seen.push_back(ep);
      ++k;
      if (!is_idempotent(ep)) return "e' is not idempotent";
      if (multiply(ep, e) != e || multiply(e, ep) != ep) return "e' generates a different right ideal";
      if (weyl_idempotent(ring, ep).idempotent != f) return "f differs for generator " + std::to_string(k);
    }
    return {};
  });
}

inline void heisenberg_suite(Report& report, int n, std::uint64_t seed, std::size_t triples = 100)
{
  const std::string suite = "heisenberg";
  const std::string tag = " (N=" + std::to_string(n) + ")";
  report.run(suite, "<au|v> = <u|bar_star(a) v>, K=2, " + std::to_string(triples) + " triples" + tag, [&]() -> std::string {
    Rng rng(seed);
    for (std::size_t k = 0; k < triples; ++k) {
      const auto a = random_element(n, rng, 8);
      const auto u = random_ket(n, 2, rng, 8), v = random_ket(n, 2, rng, 8);
      if (inner_product(apply_operator(a, u), v) != inner_product(u, apply_operator(bar_star(a), v)))
        return "triple " + std::to_string(k);
    }
    return {};
  });
  if (n >= 3) {
    report.run(suite, "antisymmetrizer annihilates every ket when K < N" + tag, [&]() -> std::string {
      const auto e = central_idempotent<Exact>(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
      if (!annihilates_all_kets(e, 2)) return "brute force: a ket survives";
      if (!in_annihilator(e, 2)) return "spectral test disagrees";
      return {};
    });
  }
  for (int letters : {2, 3}) {
    report.run(suite, "spectral J_0 test agrees with brute force, K=" + std::to_string(letters) + tag, [&]() -> std::string {
      Rng rng(seed + static_cast<std::uint64_t>(letters));
      const auto f0 = annihilator_generator<Exact>(n, letters);
      int inside = 0;
      for (int k = 0; k < 50; ++k) {
        auto a = random_element(n, rng, 6);
        if (k % 2 == 0 && !f0.is_zero()) a = multiply(a, f0);
        const bool spectral = in_annihilator(a, letters);
        if (spectral != annihilates_all_kets(a, letters)) return "element " + std::to_string(k);
        inside += spectral;
      }
      if (!f0.is_zero() && inside == 0) return "no sample landed in J_0";
      return {};
    });
  }
  report.run(suite, "H_A = -H_F and H_F is Hermitian" + tag, [&]() -> std::string {
    if (n < 2) return {};
    const auto hf = hamiltonian_matrix(n, Rational(1), Coupling::Ferro);
    const auto ha = hamiltonian_matrix(n, Rational(1), Coupling::Antiferro);
    if (ha != hf * Rational(-1)) return "H_A != -H_F";
    if (hf.transpose() != hf) return "H_F is not symmetric";
    return {};
  });
}

// ---------------------------------------------------------------------------
// worked S_5 example: t = 5 4 2 1 / 3, lambda = (4,1)

struct S5Matrices
{
  Matrix<Exact> ys, ys_star, f;
  std::size_t y_support = 0, f_support = 0;
};

inline Tableau s5_tableau() { return Tableau({{5, 4, 2, 1}, {3}}); }

inline Matrix<Exact> integer_matrix(std::initializer_list<std::initializer_list<long>> rows, long den = 1)
{
  Matrix<Exact> m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long v : r) {
      Rational q(v, den);
      q.canonicalize();
      m(i, j++) = Exact(q);
    }
    ++i;
  }
  return m;
}

/// Published matrices of the worked example.
inline S5Matrices s5_expected()
{
  S5Matrices m;
  m.ys = integer_matrix({{0, 0, 0, 0}, {0, 0, 0, 0}, {-30, 0, 30, 0}, {0, 0, 0, 0}});
  m.ys_star = integer_matrix({{6, 6, -24, 6}, {0, 0, 0, 0}, {-6, -6, 24, -6}, {0, 0, 0, 0}});
  m.f = integer_matrix({{0, 0, 0, 0}, {0, 0, 0, 0}, {-1, -1, 4, -1}, {0, 0, 0, 0}}, 4);
  m.y_support = 48;
  m.f_support = 120;
  return m;
}

/// Recomputes the example in the group ring (spectral = false) or blockwise
/// with the star-transfer map, checking matrices, supports and identities.
/// tamper perturbs one entry of F before the identity checks.
inline S5Matrices s5_example(Report& report, bool spectral, bool tamper = false)
{
  const std::string suite = spectral ? "s5-spectral" : "s5-ring";
  const Partition lam{4, 1};
  const auto expected = s5_expected();
  const auto y = young_symmetrizer<Exact>(s5_tableau());
  const Exact k30(30), k1440(1440);
  S5Matrices got;
  got.y_support = y.support_size();
  got.ys = dft_block(y, lam);

  std::optional<StarTransferMap> map;
  GroupRingElement<Exact> y_star = star(y), f(5);
  if (spectral) {
    map = build_star_map_basis(compute_plam(lam));
    got.ys_star = apply_star_map(*map, got.ys);
    got.f = got.ys * got.ys_star * (Exact(1) / k1440);
    if (tamper) got.f(2, 2) += Exact(Rational(1, 1000));
    f = idft(BlockSpectrum<Exact>::single(lam, got.f));
  } else {
    f = multiply(y, y_star) * (Exact(1) / k1440);
    if (tamper) f.add_term(Permutation::identity(5), Exact(Rational(1, 1000)));
    got.ys_star = dft_block(y_star, lam);
    got.f = dft_block(f, lam);
  }
  got.f_support = f.support_size();

  auto eq = [](bool ok) { return ok ? std::string() : std::string("does not hold"); };
  report.run(suite, "YS matches the published matrix", [&] { return eq(got.ys == expected.ys); });
  report.run(suite, "YS* matches the published matrix", [&] { return eq(got.ys_star == expected.ys_star); });
  report.run(suite, "F matches the published matrix", [&] { return eq(got.f == expected.f); });
  report.run(suite, "support of y_t is 48", [&] { return eq(got.y_support == expected.y_support); });
  report.run(suite, "support of f is 120", [&] { return eq(got.f_support == expected.f_support); });

  const auto& ys = got.ys;
  const auto& yss = got.ys_star;
  const auto& fm = got.f;
  if (spectral) {
    report.run(suite, "YS·YS = 30 YS", [&] { return eq(ys * ys == ys * k30); });
    report.run(suite, "YS*·YS* = 30 YS*", [&] { return eq(yss * yss == yss * k30); });
    report.run(suite, "F·F = F", [&] { return eq(fm * fm == fm); });
    report.run(suite, "F·YS = YS", [&] { return eq(fm * ys == ys); });
    report.run(suite, "(1/30) YS·F = F", [&] { return eq(ys * fm * (Exact(1) / k30) == fm); });
    report.run(suite, "F* = F", [&] { return eq(apply_star_map(*map, conj(fm)) == fm); });
  } else {
    report.run(suite, "YS·YS = 30 YS", [&] { return eq(multiply(y, y) == y * k30); });
    report.run(suite, "YS*·YS* = 30 YS*", [&] { return eq(multiply(y_star, y_star) == y_star * k30); });
    report.run(suite, "F·F = F", [&] { return eq(multiply(f, f) == f); });
    report.run(suite, "F·YS = YS", [&] { return eq(multiply(f, y) == y); });
    report.run(suite, "(1/30) YS·F = F", [&] { return eq(multiply(y, f) * (Exact(1) / k30) == f); });
    report.run(suite, "F* = F", [&] { return eq(has_property_S(f)); });
  }
  return got;
}

inline Report run_suite(const std::string& name, int n, std::uint64_t seed)
{
  Report r;
  const bool all = name == "all";
  if (all || name == "dft") dft_suite(r, n, seed);
  if (all || name == "star") star_suite(r, n, seed);
  if (all || name == "decomp") decomp_suite(r, n, seed);
  if (all || name == "heisenberg") heisenberg_suite(r, n, seed);
  return r;
}

}  // namespace symring::verify
