// symring: command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include "symring/symring.hpp"
#include "symring/verify.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>

namespace fs = std::filesystem;
using namespace symring;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

Partition checked_partition(int n, const std::string& text)
{
  auto lam = parse_partition(text);
  if (lam.size() != n) throw UsageError("partition " + text + " does not partition " + std::to_string(n));
  return lam;
}

template <class Writer>
void emit(const std::string& out, Writer&& writer)
{
  if (out.empty() || out == "-")
    writer(std::cout);
  else
    io::write_file_atomic(out, writer);
}

void print_matrix(std::ostream& os, const std::string& title, const Matrix<Exact>& m)
{
  os << title << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "  ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::ostringstream cell;
      cell << m(i, j);
      os << std::setw(6) << cell.str();
    }
    os << '\n';
  }
}

int print_report(const verify::Report& r, std::ostream& os)
{
  for (const auto& c : r.results()) {
    os << (c.passed ? "PASS " : "FAIL ") << '[' << c.suite << "] " << c.name;
    if (!c.passed) os << ": " << c.detail;
    os << '\n';
  }
  return r.passed() ? kOk : kFailed;
}

// ---------------------------------------------------------------------------

int cmd_dims(int n)
{
  if (n < 1 || n > 10) throw UsageError("--n must be in 1..10");
  std::cout << std::left << std::setw(18) << "lambda" << std::right << std::setw(8) << "d" << std::setw(12) << "d^2"
            << std::setw(16) << "d^4" << '\n';
  std::uint64_t total = 0;
  for (const auto& lam : partitions(n)) {
    const std::uint64_t d = lam.dimension();
    total += d * d;
    std::cout << std::left << std::setw(18) << lam.pretty() << std::right << std::setw(8) << d << std::setw(12) << d * d
              << std::setw(16) << d * d * d * d << '\n';
  }
  std::cout << "sum d^2 = " << total << " = " << n << "! = " << factorial(n) << '\n';
  return total == factorial(n) ? kOk : kFailed;
}

int cmd_plam(int n, const std::string& lambda, const std::string& out, const std::string& cache)
{
  const auto lam = checked_partition(n, lambda);
  const auto basis = cache.empty() ? compute_plam(lam) : io::StarMapCache(cache).plam(lam);
  emit(out, [&](std::ostream& os) { io::write_plam(os, basis); });
  return kOk;
}

int cmd_starmap(int n, const std::string& lambda, const std::string& plam, const std::string& method, const std::string& out,
                const std::string& cache)
{
  const auto lam = checked_partition(n, lambda);
  StarTransferMap map;
  if (method == "direct") {
    map = build_star_map_direct(lam);
  } else if (!plam.empty()) {
    auto basis = io::read_file<PermBasisSet>(plam, io::read_plam);
    if (basis.lambda != lam) throw UsageError("P_lambda file is for " + basis.lambda.to_string());
    if (!is_valid_basis(basis)) throw UsageError("P_lambda file does not hold a basis");
    map = build_star_map_basis(basis);
  } else {
    map = cache.empty() ? build_star_map_basis(compute_plam(lam)) : io::StarMapCache(cache).star_map(lam);
  }
  emit(out, [&](std::ostream& os) { io::write_star_map(os, map); });
  return kOk;
}

template <class Algebra, class WritePart>
int run_decompose(const Algebra& alg, const typename Algebra::Element& e, std::optional<int> letters, const fs::path& out,
                  const char* ext, WritePart write_part)
{
  const auto seeds = primitive_seed_set(alg.degree());
  const auto dec = decompose_self_adjoint(alg, e, seeds, DecomposeOptions{letters});
  fs::create_directories(out);
  nlohmann::json audit = nlohmann::json::array();
  std::ostringstream text;
  text << "part seed tableau kappa alpha search\n";
  for (std::size_t i = 0; i < dec.parts.size(); ++i) {
    const auto& a = dec.audit[i];
    const auto name = "part_" + std::to_string(i) + ext;
    io::write_file_atomic(out / name, [&](std::ostream& os) { write_part(os, dec.parts[i]); });
    std::ostringstream kappa, alpha;
    kappa << a.kappa;
    alpha << a.alpha;
    const auto tableau = seeds[a.seed_index].tableau.to_string();
    const auto search = a.search_perm ? a.search_perm->to_string() : std::string("-");
    text << i << ' ' << a.seed_index << " [" << tableau << "] " << kappa.str() << ' ' << alpha.str() << " [" << search << "]\n";
    audit.push_back({{"part", i}, {"file", name}, {"seed", a.seed_index}, {"tableau", tableau}, {"kappa", kappa.str()},
                     {"alpha", alpha.str()}, {"search_perm", search}});
  }
  io::write_file_atomic(out / "audit.txt", [&](std::ostream& os) { os << text.str(); });
  io::write_file_atomic(out / "audit.json", [&](std::ostream& os) { os << audit.dump(2) << '\n'; });
  std::cout << text.str() << dec.parts.size() << " parts written to " << out.string() << '\n';
  return kOk;
}

int cmd_decompose(const std::string& input, const std::string& symmetry, const std::string& mode, std::optional<int> letters,
                  const std::string& out, const std::string& cache)
{
  if (input.empty() == symmetry.empty()) throw UsageError("give exactly one of --input and --symmetry");
  const auto e = input.empty()
                     ? commutation_idempotent(io::read_file<CommutationSymmetry<Exact>>(symmetry, io::read_commutation_symmetry))
                     : io::read_file<GroupRingElement<Exact>>(input, io::read_element);
  if (!is_idempotent(e)) throw UsageError("input is not idempotent");
  if (!has_property_S(e)) throw UsageError("input lacks property (S)");
  const int n = e.degree();
  if (n > 7) throw UsageError("decomposition is limited to N <= 7");
  if (mode == "ring") {
    return run_decompose(RingAlgebra<Exact>(n), e, letters, out, ".gre",
                         [](std::ostream& os, const GroupRingElement<Exact>& f) { io::write_element(os, f); });
  }
  auto provider = SpectralAlgebra<Exact>::default_provider();
  if (!cache.empty()) provider = [c = io::StarMapCache(cache)](const Partition& lam) { return c.star_map(lam); };
  const SpectralAlgebra<Exact> alg(n, provider);
  return run_decompose(alg, alg.from_ring(e), letters, out, ".spec",
                       [](std::ostream& os, const BlockSpectrum<Exact>& f) { io::write_spectrum(os, f); });
}

int cmd_apply(const std::string& op, const std::string& vec, const std::string& out)
{
  const auto a = io::read_file<GroupRingElement<Exact>>(op, io::read_element);
  const auto u = io::read_file<HilbertVector<Exact>>(vec, io::read_ket);
  if (a.degree() != u.sites()) throw UsageError("operator degree does not match ket sites");
  const auto w = apply_operator(a, u);
  emit(out, [&](std::ostream& os) { io::write_ket(os, w); });
  return kOk;
}

int cmd_hamiltonian(int n, const std::string& j, const std::string& type, const std::string& out)
{
  if (n < 2 || n > 12) throw UsageError("--n must be in 2..12 (K^N <= 4096)");
  const auto h = hamiltonian_matrix(n, parse_rational(j), type == "antiferro" ? Coupling::Antiferro : Coupling::Ferro);
  emit(out, [&](std::ostream& os) { io::write_sparse_matrix(os, h); });
  return kOk;
}

int cmd_example_s5(const std::string& mode, bool tamper)
{
  verify::Report report;
  const auto m = verify::s5_example(report, mode == "spectral", tamper);
  std::cout << "t = " << verify::s5_tableau().to_string() << ", lambda = (4 1), mode = " << mode << "\n";
  print_matrix(std::cout, "YS", m.ys);
  print_matrix(std::cout, "YS*", m.ys_star);
  print_matrix(std::cout, "F = (1/1440) YS YS*", m.f);
  std::cout << "support y_t = " << m.y_support << ", support f = " << m.f_support << '\n';
  const int rc = print_report(report, std::cout);
  std::cout << (rc == kOk ? "PASS" : "FAIL") << '\n';
  return rc;
}

int cmd_verify(const std::string& suite, int n, std::uint64_t seed, const std::string& json_out)
{
  if (n < 1 || n > 6) throw UsageError("--n must be in 1..6 for verification suites");
  const auto report = verify::run_suite(suite, n, seed);
  const int rc = print_report(report, std::cout);
  nlohmann::json j;
  j["suite"] = suite;
  j["n"] = n;
  j["seed"] = seed;
  std::size_t passed = 0;
  for (const auto& c : report.results()) {
    passed += c.passed;
    j["checks"].push_back({{"suite", c.suite}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail},
                           {"seconds", c.seconds}});
  }
  j["passed"] = passed;
  j["failed"] = report.results().size() - passed;
  j["result"] = rc == kOk ? "PASS" : "FAIL";
  if (!json_out.empty())
    io::write_file_atomic(json_out, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
  // one-line machine-readable summary
  nlohmann::json summary = j;
  summary.erase("checks");
  std::cout << summary.dump() << '\n';
  return rc;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Exact group-ring toolkit for S_N symmetry operators"};
  app.require_subcommand(1);

  int n = 0;
  std::string lambda, out, plam, method = "basis", input, mode = "spectral", op, vec, jcoupling = "1", type = "ferro",
                      suite = "all", cache, json_out, symmetry;
  std::optional<int> letters;
  std::uint64_t seed = verify::kDefaultSeed;
  bool tamper = false;

  auto* dims = app.add_subcommand("dims", "dimension table d, d^2, d^4 for all partitions of N");
  dims->add_option("--n", n, "degree N (1..10)")->required();

  auto* plam_cmd = app.add_subcommand("plam", "compute the permutation basis P_lambda");
  plam_cmd->add_option("--n", n, "degree N")->required()->check(CLI::Range(1, 8));
  plam_cmd->add_option("--lambda", lambda, "partition, e.g. 5,2")->required();
  plam_cmd->add_option("--out", out, "output .plam file (default stdout)");
  plam_cmd->add_option("--cache", cache, "cache directory");

  auto* star_cmd = app.add_subcommand("starmap", "compute the star-transfer map of one block");
  star_cmd->add_option("--n", n, "degree N")->required()->check(CLI::Range(1, 8));
  star_cmd->add_option("--lambda", lambda, "partition, e.g. 5,2")->required();
  star_cmd->add_option("--plam", plam, "precomputed .plam file");
  star_cmd->add_option("--method", method, "basis or direct")->check(CLI::IsMember({"basis", "direct"}));
  star_cmd->add_option("--out", out, "output .smap file (default stdout)");
  star_cmd->add_option("--cache", cache, "cache directory");

  auto* dec_cmd = app.add_subcommand("decompose", "split a self-adjoint idempotent into primitive parts");
  dec_cmd->add_option("--input", input, "input .gre file")->check(CLI::ExistingFile);
  dec_cmd->add_option("--symmetry", symmetry, "commutation symmetry file; decomposes its idempotent")->check(CLI::ExistingFile);
  dec_cmd->add_option("--mode", mode, "spectral or ring")->check(CLI::IsMember({"spectral", "ring"}));
  dec_cmd->add_option("--letters", letters, "spin letters K; enforces e in J when K < N");
  dec_cmd->add_option("--out", out, "output directory")->required();
  dec_cmd->add_option("--cache", cache, "star-map cache directory");

  auto* apply_cmd = app.add_subcommand("apply", "apply a symmetry operator to a ket");
  apply_cmd->add_option("--op", op, "operator .gre file")->required()->check(CLI::ExistingFile);
  apply_cmd->add_option("--vec", vec, "input .ket file")->required()->check(CLI::ExistingFile);
  apply_cmd->add_option("--out", out, "output .ket file (default stdout)");

  auto* ham_cmd = app.add_subcommand("hamiltonian", "Heisenberg ring Hamiltonian, spin 1/2");
  ham_cmd->add_option("--n", n, "number of sites")->required();
  ham_cmd->add_option("--j", jcoupling, "coupling J (rational)");
  ham_cmd->add_option("--type", type, "ferro or antiferro")->check(CLI::IsMember({"ferro", "antiferro"}));
  ham_cmd->add_option("--out", out, "output .mat file (default stdout)");

  auto* s5_cmd = app.add_subcommand("example-s5", "recompute the worked S_5 example");
  s5_cmd->add_option("--mode", mode, "ring or spectral")->check(CLI::IsMember({"spectral", "ring"}));
  s5_cmd->add_flag("--tamper", tamper, "perturb F (negative control)");

  auto* ver_cmd = app.add_subcommand("verify", "run a seeded invariant suite");
  ver_cmd->add_option("--suite", suite, "dft, star, decomp, heisenberg or all")
      ->check(CLI::IsMember({"dft", "star", "decomp", "heisenberg", "all"}));
  ver_cmd->add_option("--n", n, "degree N")->required();
  ver_cmd->add_option("--seed", seed, "random seed");
  ver_cmd->add_option("--json", json_out, "write the full JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*dims) return cmd_dims(n);
    if (*plam_cmd) return cmd_plam(n, lambda, out, cache);
    if (*star_cmd) return cmd_starmap(n, lambda, plam, method, out, cache);
    if (*dec_cmd) return cmd_decompose(input, symmetry, mode, letters, out, cache);
    if (*apply_cmd) return cmd_apply(op, vec, out);
    if (*ham_cmd) return cmd_hamiltonian(n, jcoupling, type, out);
    if (*s5_cmd) return cmd_example_s5(mode, tamper);
    if (*ver_cmd) return cmd_verify(suite, n, seed, json_out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const io::FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
