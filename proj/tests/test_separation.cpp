#include <doctest.h>

#include "twocenter/separation.hpp"

#include <cmath>
#include <random>
#include <vector>

using namespace twocenter;

namespace {

const std::vector<SolutionType> kAllTypes{SolutionType::A, SolutionType::B,
                                          SolutionType::C, SolutionType::D};

} // namespace

TEST_SUITE("separation") {

TEST_CASE("type table is self-consistent") {
  for (SolutionType t : kAllTypes) {
    // The quantization offset is gamma + delta, which is an integer by design.
    const Rational sum = typeGamma<Rational>(t) + typeDelta<Rational>(t);
    CHECK(Rational(typeOffset(t)) == sum);
    const char label = typeLabel(t);
    REQUIRE(typeFromLabel(label).has_value());
    CHECK(*typeFromLabel(label) == t);
  }
  CHECK_FALSE(typeFromLabel('x').has_value());
}

TEST_CASE("energies depend only on the quantization integer") {
  const Rational zetaR(6);  // Z1 = 5, Z2 = 1 summed
  // 2n + offset = 3 for both b(0) and a(1): same energy -2*36/9 = -8.
  CHECK(qesEnergy(Axis::Radial, SolutionType::B, 0, zetaR) == Rational(-8));
  CHECK(qesEnergy(Axis::Radial, SolutionType::A, 1, zetaR) == Rational(-8));
  // c(0) and d(0) sit at 2n + offset = 2: -2*36/4 = -18.
  CHECK(qesEnergy(Axis::Radial, SolutionType::C, 0, zetaR) == Rational(-18));
  CHECK(qesEnergy(Axis::Radial, SolutionType::D, 0, zetaR) == Rational(-18));
  // The matched pair shares the energy across axes: angular zeta = -4 with
  // integer 2 gives -2*16/4 = -8 again.
  CHECK(qesEnergy(Axis::Angular, SolutionType::D, 0, Rational(-4)) == Rational(-8));
}

TEST_CASE("exponential slopes at a matched separation") {
  const Rational r(3, 8);
  CHECK(qesEpsilon(SolutionType::B, 0, Rational(6), r) == Rational(-3));
  CHECK(qesEpsilon(SolutionType::D, 0, Rational(-4), r) == Rational(3));
}

TEST_CASE("per-type closed forms agree with the generic separation constant") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 8);
  std::uniform_int_distribution<int> level(0, 3);

  for (int iter = 0; iter < 60; ++iter) {
    const Axis axis = (iter % 2 == 0) ? Axis::Radial : Axis::Angular;
    const SolutionType t = kAllTypes[static_cast<std::size_t>(iter) % 4];
    const int n = level(rng);
    Rational zeta(num(rng), den(rng));
    if (zeta == 0) zeta = Rational(1, 3);
    const Rational r(std::abs(num(rng)) + 1, den(rng));
    const Rational q(num(rng), den(rng));
    CAPTURE(iter);

    const auto prm = cheqParameters(t, n, zeta, r, q);
    const Rational viaHeun = separationConstant(prm);
    const Rational viaTable = separationConstantTable(axis, t, n, zeta, r, q);
    CHECK(viaHeun == viaTable);

    // Same comparison in floating point through the double instantiation.
    const auto prmD = cheqParameters(t, n, toDouble(zeta), toDouble(r), toDouble(q));
    const double viaHeunD = separationConstant(prmD);
    const double viaTableD = separationConstantTable(axis, t, n, toDouble(zeta),
                                                     toDouble(r), toDouble(q));
    CHECK(std::abs(viaHeunD - viaTableD) <=
          1e-12 * std::max(1.0, std::abs(viaHeunD)));
  }
}

TEST_CASE("factor construction validates the branch index") {
  CHECK_THROWS_AS(buildFactor(Axis::Radial, SolutionType::A, 2, 0, 5, 1, 0.4),
                  BranchOutOfRange);
  CHECK_THROWS_AS(buildFactor(Axis::Radial, SolutionType::A, 2, 4, 5, 1, 0.4),
                  BranchOutOfRange);
}

TEST_CASE("branches are indexed by ascending accessory parameter") {
  std::vector<double> qs;
  for (int branch = 1; branch <= 3; ++branch)
    qs.push_back(buildFactor(Axis::Radial, SolutionType::A, 2, branch, 2, 1, 1.3).q);
  CHECK(qs[0] < qs[1]);
  CHECK(qs[1] < qs[2]);
}

TEST_CASE("separated ODE residual vanishes along both axes") {
  struct Probe {
    Axis axis;
    SolutionType type;
    int n, branch;
    double z1, z2, r, lo, hi;
  };
  const std::vector<Probe> probes{
      {Axis::Radial, SolutionType::B, 0, 1, 5, 1, 0.375, 1.05, 6.0},
      {Axis::Angular, SolutionType::D, 0, 1, 5, 1, 0.375, -0.95, 0.95},
      {Axis::Radial, SolutionType::A, 2, 2, 2, 1, 1.3, 1.05, 6.0},
      {Axis::Angular, SolutionType::C, 1, 1, 2, 1, 1.3, -0.95, 0.95},
      {Axis::Radial, SolutionType::D, 2, 2, 5, 1, 0.1875, 1.05, 6.0},
  };
  for (const Probe& pr : probes) {
    CAPTURE(static_cast<int>(pr.type));
    CAPTURE(pr.n);
    const auto f = buildFactor(pr.axis, pr.type, pr.n, pr.branch, pr.z1, pr.z2, pr.r);
    const double coeffScale = std::abs(f.energy) * f.r * f.r + std::abs(f.lambda) +
                              std::abs(f.r * f.zeta) + 1.0;
    for (int i = 0; i < 20; ++i) {
      const double x = pr.lo + (pr.hi - pr.lo) * i / 19.0;
      const double mag = std::abs(evaluateFactor(f, x).value);
      const double resid = separatedOdeResidual(f, x);
      CHECK(std::abs(resid) <=
            1e-10 * coeffScale * (1.0 + x * x) * std::max(mag, 1e-3));
    }
  }
}

TEST_CASE("exact construction accepts true roots and rejects others") {
  const Rational z1(5), z2(1);
  SUBCASE("trivial polynomial") {
    const auto f = buildFactorExact(Axis::Radial, SolutionType::B, 0, 1, z1, z2,
                                    Rational(3, 8), Rational(0));
    CHECK(f.poly.coeffs() == std::vector<Rational>{Rational(1)});
    CHECK(f.energy == Rational(-8));
    CHECK(f.lambda == Rational(-7, 16));
    CHECK(f.epsilon == Rational(-3));
  }
  SUBCASE("degree-two polynomial with known standard form") {
    const auto f = buildFactorExact(Axis::Radial, SolutionType::D, 2, 2, z1, z2,
                                    Rational(3, 16), Rational(3));
    const std::vector<Rational> shifted{Rational(1), Rational(-3), Rational(1, 4)};
    CHECK(f.poly.coeffs() == shifted);
    // In plain powers of x, scaled monic: x^2 - 10x - 7.
    const auto monic = monicStandard(f.poly);
    const std::vector<Rational> expected{Rational(-7), Rational(-10), Rational(1)};
    CHECK(monic.coeffs() == expected);
    CHECK(f.energy == Rational(-2));
    CHECK(f.lambda == Rational(-583, 256));
  }
  SUBCASE("a non-root is rejected") {
    CHECK_THROWS_AS(buildFactorExact(Axis::Radial, SolutionType::D, 2, 2, z1, z2,
                                     Rational(3, 16), Rational(5, 2)),
                    DomainError);
  }
}

TEST_CASE("equal charges leave the angular factor unquantizable") {
  CHECK_THROWS_AS(qesEnergy(Axis::Angular, SolutionType::A, 0, Rational(0)),
                  SymmetricCaseError);
  CHECK_THROWS_AS(qesEnergy(Axis::Angular, SolutionType::C, 2, 0.0), SymmetricCaseError);
}

TEST_CASE("factor derivatives match finite differences") {
  const auto f = buildFactor(Axis::Radial, SolutionType::A, 2, 1, 2, 1, 1.3);
  const auto g = buildFactor(Axis::Angular, SolutionType::D, 1, 1, 2, 1, 1.3);
  auto checkAt = [](const SeparatedFactor<double>& fac, double x) {
    const auto v = evaluateFactor(fac, x);
    const double h1 = 1e-6;
    const double d1 = (evaluateFactor(fac, x + h1).value -
                       evaluateFactor(fac, x - h1).value) /
                      (2 * h1);
    const double h2 = 1e-4;
    const double d2 = (evaluateFactor(fac, x + h2).value - 2 * v.value +
                       evaluateFactor(fac, x - h2).value) /
                      (h2 * h2);
    const double scale = std::abs(v.value) + std::abs(v.d1) + 1.0;
    CHECK(std::abs(v.d1 - d1) <= 1e-7 * scale);
    CHECK(std::abs(v.d2 - d2) <= 1e-5 * (scale + std::abs(v.d2)));
  };
  for (double x : {1.2, 2.0, 3.5}) checkAt(f, x);
  for (double x : {-0.8, 0.1, 0.7}) checkAt(g, x);
}

} // TEST_SUITE
