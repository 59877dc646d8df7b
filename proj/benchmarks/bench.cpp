// Microbenchmarks for the hot paths: criterion-root extraction (dominates the
// R-scan), Mathieu characteristic values, full candidate matching, and
// point evaluation of an assembled eigenfunction.

#include "twocenter/eval.hpp"
#include "twocenter/heun.hpp"
#include "twocenter/matching.hpp"
#include "twocenter/mathieu.hpp"
#include "twocenter/separation.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace twocenter;

void criterionRoots(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const double gamma = 0.5, delta = 1.5;
  double eps = -3.0;
  for (auto _ : state) {
    eps += 1e-9;  // defeat value caching across iterations
    const auto polys = criterionPolynomials(n, gamma, delta, eps);
    auto roots = realRootsAscending(polys.back());
    benchmark::DoNotOptimize(roots);
  }
}
BENCHMARK(criterionRoots)->Arg(1)->Arg(2)->Arg(4);

void mathieuValue(benchmark::State& state) {
  double p = -1.7;
  for (auto _ : state) {
    p -= 1e-9;  // unique p defeats the memo cache: measures the solver
    benchmark::DoNotOptimize(mathieuCharValue(MathieuParity::Sine, 1, p));
  }
}
BENCHMARK(mathieuValue);

void matchScan(benchmark::State& state) {
  MatchCandidate cand;
  cand.radial = {SolutionType::B, 0};
  cand.angular = {SolutionType::D, 0};
  cand.pair = {3, 2};
  for (auto _ : state) {
    auto roots = matchR(cand, 1, 1, 5.0, 1.0, 20.0, 1e-12, 500);
    benchmark::DoNotOptimize(roots);
  }
}
BENCHMARK(matchScan);

void psiPoint(benchmark::State& state) {
  MatchCandidate cand;
  cand.radial = {SolutionType::B, 0};
  cand.angular = {SolutionType::D, 0};
  cand.pair = {3, 2};
  const auto sol = buildEigenfunction(cand, 1, 1, Rational(5), Rational(1), 0.375);
  double x = 0.31;
  for (auto _ : state) {
    x += 1e-12;
    benchmark::DoNotOptimize(evaluatePsiRaw(sol, x, 0.17));
  }
}
BENCHMARK(psiPoint);

} // namespace

BENCHMARK_MAIN();
