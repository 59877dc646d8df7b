// Command-line front end: computes elementary (polynomial x exponential)
// eigenfunctions of the planar two-center Coulomb problem, samples their
// densities, and verifies them against the Schrodinger equation by finite
// differences.
//
// Exit codes: 0 success; 2 invalid flags or input; 3 no solution found;
// 4 equal-charge request routed to `symmetric`; 5 verification failure;
// 1 internal numeric failure.

#include "twocenter/errors.hpp"
#include "twocenter/eval.hpp"
#include "twocenter/matching.hpp"
#include "twocenter/mathieu.hpp"
#include "twocenter/record.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace twocenter;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitNoSolution = 3;
constexpr int kExitSymmetric = 4;
constexpr int kExitVerifyFailed = 5;

void writeOutput(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot open output file: " + path);
  out << payload;
}

Rational parseChargeOrThrow(const std::string& text, const char* flag) {
  const auto value = parseRational(text);
  if (!value)
    throw DomainError(std::string(flag) + " must be an integer, fraction or finite decimal, got '" +
                      text + "'");
  return *value;
}

std::vector<ElementaryEigenfunction> loadSolutionFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open solution file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return solutionsFromJson(buf.str());
}

struct SolveFlags {
  std::string z1, z2, out;
  long long nMax = 6;
  double rMax = 0.0;
  double tol = 1e-12;
};

int cmdSolve(const SolveFlags& flags) {
  MatchOptions opts;
  opts.n1Max = flags.nMax;
  opts.rMax = flags.rMax;
  opts.tol = flags.tol;
  const Rational z1 = parseChargeOrThrow(flags.z1, "--z1");
  const Rational z2 = parseChargeOrThrow(flags.z2, "--z2");
  const auto sols = solveElementary(z1, z2, opts);
  writeOutput(flags.out, solutionsToJson(sols));
  std::cerr << "found " << sols.size() << " elementary solution(s)\n";
  return sols.empty() ? kExitNoSolution : kExitOk;
}

struct SymmetricFlags {
  std::string z, out;
  int nrMax = 2;
  int mathieuNMax = 2;
  double rMax = 0.0;
  double tol = 1e-12;
};

int cmdSymmetric(const SymmetricFlags& flags) {
  MatchOptions opts;
  opts.nrMax = flags.nrMax;
  opts.mathieuNMax = flags.mathieuNMax;
  opts.rMax = flags.rMax;
  opts.tol = flags.tol;
  const Rational z = parseChargeOrThrow(flags.z, "--z");
  const auto sols = solveSymmetric(z, opts);
  writeOutput(flags.out, solutionsToJson(sols));
  std::cerr << "found " << sols.size() << " mixed solution(s)\n";
  return sols.empty() ? kExitNoSolution : kExitOk;
}

struct DensityFlags {
  std::string solutionFile, out;
  int index = 0;
  std::vector<double> window{-1.0, 1.0, -1.0, 1.0};  // x1min x1max x2min x2max
  int nx = 121;
  int ny = 121;
};

int cmdDensity(const DensityFlags& flags) {
  const auto sols = loadSolutionFile(flags.solutionFile);
  if (flags.index < 0 || static_cast<std::size_t>(flags.index) >= sols.size())
    throw DomainError("solution index " + std::to_string(flags.index) + " outside 0.." +
                      std::to_string(sols.empty() ? 0 : sols.size() - 1));
  const auto grid = densityGrid(sols[static_cast<std::size_t>(flags.index)], flags.window[0],
                                flags.window[1], flags.window[2], flags.window[3], flags.nx,
                                flags.ny);
  std::ostringstream csv;
  writeDensityCsv(csv, grid);
  writeOutput(flags.out, csv.str());
  return kExitOk;
}

struct VerifyFlags {
  std::string solutionFile;
  int samples = 200;
  std::uint64_t seed = 20240901;
  double tolerance = 1e-5;
};

int cmdVerify(const VerifyFlags& flags) {
  const auto sols = loadSolutionFile(flags.solutionFile);
  if (sols.empty()) throw DomainError("solution file contains no solutions");
  bool allPass = true;
  for (std::size_t i = 0; i < sols.size(); ++i) {
    const double residual = pdeResidual(sols[i], flags.samples, flags.seed);
    const bool pass = residual < flags.tolerance;
    allPass = allPass && pass;
    std::printf("solution %zu: max residual %.6e [%s]\n", i, residual, pass ? "ok" : "FAIL");
  }
  return allPass ? kExitOk : kExitVerifyFailed;
}

struct MathieuFlags {
  std::string parity;
  int order = 0;
  double p = 0.0;
};

int cmdMathieu(const MathieuFlags& flags) {
  MathieuParity parity;
  if (flags.parity == "a") parity = MathieuParity::Cosine;
  else if (flags.parity == "b") parity = MathieuParity::Sine;
  else throw DomainError("--parity must be 'a' (cosine class) or 'b' (sine class)");
  const auto c = mathieuCharacteristic(parity, flags.order, flags.p);
  // "<value> <truncation>": first token is the characteristic value.
  std::printf("%.17g %d\n", c.value, c.truncation);
  return kExitOk;
}

template <class Fn>
int guarded(const Fn& fn) {
  try {
    return fn();
  } catch (const SymmetricCaseError& e) {
    std::cerr << "error: " << e.what() << "\n"
              << "hint: use the `symmetric` subcommand for equal charges\n";
    return kExitSymmetric;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const BranchOutOfRange& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elementary eigenfunctions of the planar two-center Coulomb problem"};
  app.require_subcommand(1);

  SolveFlags solveFlags;
  auto* solve = app.add_subcommand(
      "solve", "Find elementary solutions for distinct charges Z1 != Z2");
  solve->add_option("--z1", solveFlags.z1, "charge at (+R/2, 0), rational")->required();
  solve->add_option("--z2", solveFlags.z2, "charge at (-R/2, 0), rational")->required();
  solve->add_option("--n-max", solveFlags.nMax, "largest radial quantum number n1");
  solve->add_option("--r-max", solveFlags.rMax, "scan bound on R (0 = auto)");
  solve->add_option("--tol", solveFlags.tol, "relative tolerance on matched R");
  solve->add_option("--out", solveFlags.out, "output JSON path (default stdout)");

  SymmetricFlags symFlags;
  auto* symmetric = app.add_subcommand(
      "symmetric", "Equal charges: radial polynomial factor x Mathieu angular factor");
  symmetric->add_option("--z", symFlags.z, "common charge Z, rational")->required();
  symmetric->add_option("--nr-max", symFlags.nrMax, "largest radial polynomial degree");
  symmetric->add_option("--mathieu-n-max", symFlags.mathieuNMax, "largest Mathieu order");
  symmetric->add_option("--r-max", symFlags.rMax, "scan bound on R (0 = auto)");
  symmetric->add_option("--tol", symFlags.tol, "relative tolerance on matched R");
  symmetric->add_option("--out", symFlags.out, "output JSON path (default stdout)");

  DensityFlags densityFlags;
  auto* density = app.add_subcommand("density", "Sample |Psi|^2 on a Cartesian grid as CSV");
  density->add_option("--solution-file", densityFlags.solutionFile, "JSON from solve/symmetric")
      ->required();
  density->add_option("--index", densityFlags.index, "solution index within the file");
  density->add_option("--window", densityFlags.window, "x1min x1max x2min x2max")
      ->expected(4);
  density->add_option("--nx", densityFlags.nx, "grid points along x1");
  density->add_option("--ny", densityFlags.ny, "grid points along x2");
  density->add_option("--out", densityFlags.out, "output CSV path (default stdout)");

  VerifyFlags verifyFlags;
  auto* verify = app.add_subcommand(
      "verify", "Check stored solutions against the Schrodinger equation by finite differences");
  verify->add_option("--solution-file", verifyFlags.solutionFile, "JSON from solve/symmetric")
      ->required();
  verify->add_option("--samples", verifyFlags.samples, "number of probe points");
  verify->add_option("--seed", verifyFlags.seed, "probe sampling seed");
  verify->add_option("--tolerance", verifyFlags.tolerance, "max allowed relative residual");

  MathieuFlags mathieuFlags;
  auto* mathieu = app.add_subcommand("mathieu", "Print one Mathieu characteristic value");
  mathieu->add_option("--parity", mathieuFlags.parity, "'a' (cosine) or 'b' (sine)")->required();
  mathieu->add_option("--order", mathieuFlags.order, "order n")->required();
  mathieu->add_option("--p", mathieuFlags.p, "Mathieu parameter")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  if (solve->parsed()) return guarded([&] { return cmdSolve(solveFlags); });
  if (symmetric->parsed()) return guarded([&] { return cmdSymmetric(symFlags); });
  if (density->parsed()) return guarded([&] { return cmdDensity(densityFlags); });
  if (verify->parsed()) return guarded([&] { return cmdVerify(verifyFlags); });
  if (mathieu->parsed()) return guarded([&] { return cmdMathieu(mathieuFlags); });
  return kExitBadInput;
}
