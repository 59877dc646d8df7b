#include <doctest.h>

#include "twocenter/eval.hpp"
#include "twocenter/matching.hpp"

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

using namespace twocenter;

namespace {

// Composite Simpson of a density over the plane, folded on its symmetries:
// every |Psi|^2 here is even in x2, and the equal-charge ones even in x1 as
// well. n odd nodes per half-axis; the mild crease along the focal segment
// slows Simpson below its nominal order, hence the generous n used below.
template <class F>
double simpsonDensity(F&& f, double l, int n, bool evenInX1) {
  auto w = [](int i, int m) { return (i == 0 || i == m - 1) ? 1.0 : (i % 2 ? 4.0 : 2.0); };
  const double h = l / (n - 1);
  const int m = evenInX1 ? n : 2 * n - 1;
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x2 = h * i;
    double row = 0.0;
    for (int j = 0; j < m; ++j) {
      const double x1 = evenInX1 ? h * j : -l + h * j;
      row += w(j, m) * f(x1, x2);
    }
    if (evenInX1) row *= 2.0;
    acc += w(i, n) * row;
  }
  return acc * h * h / 9.0 * 2.0;  // reflect x2
}

const std::vector<ElementaryEigenfunction>& asymmetricSolutions() {
  static const auto sols = [] {
    MatchOptions opts;
    return solveElementary(Rational(5), Rational(1), opts);
  }();
  return sols;
}

const std::vector<ElementaryEigenfunction>& mixedSolutions() {
  static const auto sols = [] {
    MatchOptions opts;
    opts.nrMax = 1;  // covers the E = -8 level on the a(1) radial factor
    opts.mathieuNMax = 1;
    return solveSymmetric(Rational(3), opts);
  }();
  return sols;
}

} // namespace

TEST_SUITE("eval") {

TEST_CASE("finite-difference oracle validates on planar hydrogen") {
  // Single center of charge Z at (+r/2, 0): ground state exp(-2 Z r1) with
  // E = -2 Z^2, first excited ring state r1 exp(-2 Z r1 / 3) cos(phi) with
  // E = -2 Z^2 / 9. Closed forms, independent of everything under test.
  for (double z : {1.0, 2.0}) {
    CAPTURE(z);
    const double r = 1.0;
    auto ground = [z, r](double x1, double x2) {
      return std::exp(-2.0 * z * std::hypot(x1 - r / 2, x2));
    };
    CHECK(pdeResidualCallable(ground, -2.0 * z * z, z, 0.0, r, 200, 20240901) < 1e-6);

    auto excited = [z, r](double x1, double x2) {
      const double r1 = std::hypot(x1 - r / 2, x2);
      return r1 * std::exp(-2.0 * z * r1 / 3.0) * ((x1 - r / 2) / r1);
    };
    CHECK(pdeResidualCallable(excited, -2.0 * z * z / 9.0, z, 0.0, r, 200, 20240901) < 1e-6);
  }

  // The oracle must also reject a wrong eigenvalue by a wide margin.
  auto ground = [](double x1, double x2) {
    return std::exp(-2.0 * std::hypot(x1 - 0.5, x2));
  };
  CHECK(pdeResidualCallable(ground, -2.2, 1.0, 0.0, 1.0, 200, 20240901) > 1e-2);
}

TEST_CASE("assembled polynomial solutions satisfy the PDE") {
  for (const auto& s : asymmetricSolutions()) {
    CAPTURE(s.r);
    CHECK(pdeResidual(s) < 1e-6);
  }
}

TEST_CASE("assembled mixed solutions satisfy the PDE") {
  for (const auto& s : mixedSolutions()) {
    CAPTURE(s.r);
    CAPTURE(s.energy);
    CHECK(pdeResidual(s) < 1e-5);
  }
}

TEST_CASE("normalization agrees with Cartesian quadrature") {
  SUBCASE("polynomial angular factor") {
    const auto& s = asymmetricSolutions()[0];  // E = -8, strongly localized
    REQUIRE(s.normalization.has_value());
    auto density = [&](double x1, double x2) {
      const double v = evaluatePsi(s, x1, x2);
      return v * v;
    };
    const double total = simpsonDensity(density, 5.0, 1601, false);
    CHECK(std::abs(total - 1.0) <= 1e-6);
  }
  SUBCASE("Mathieu angular factor") {
    const ElementaryEigenfunction* pick = nullptr;
    for (const auto& s : mixedSolutions())
      if (std::abs(s.energy + 8.0) < 1e-9 && std::abs(s.r - 1.335) < 5e-4) pick = &s;
    REQUIRE(pick != nullptr);
    auto density = [&](double x1, double x2) {
      const double v = evaluatePsi(*pick, x1, x2);
      return v * v;
    };
    const double total = simpsonDensity(density, 5.5, 1601, true);
    CHECK(std::abs(total - 1.0) <= 1e-6);
  }
}

TEST_CASE("raw evaluation is continuous across the symmetry axis") {
  // The assembled Psi involves half-integer powers of axis-vanishing
  // quantities; crossing x2 = 0 outside the focal segment must be smooth.
  // This solution carries sqrt(1 - eta), so it survives on the negative ray
  // (eta -> -1) and vanishes like |x2| on the positive one (eta -> +1).
  const auto& s = asymmetricSolutions()[0];
  for (double x1 : {-0.4, -1.1, -0.9}) {
    const double up = evaluatePsiRaw(s, x1, 1e-8);
    const double down = evaluatePsiRaw(s, x1, -1e-8);
    const double mid = evaluatePsiRaw(s, x1, 0.0);
    REQUIRE(std::abs(mid) > 0.0);
    CHECK(std::abs(up - down) <= 1e-7 * std::abs(mid));
    CHECK(std::abs(up - mid) <= 1e-7 * std::abs(mid));
    CHECK(std::isfinite(mid));
  }
  for (double x1 : {0.4, 1.1}) {
    CHECK(evaluatePsiRaw(s, x1, 0.0) == 0.0);
    CHECK(std::abs(evaluatePsiRaw(s, x1, 1e-8)) < 1e-6);
  }
}

TEST_CASE("density grid layout and CSV round out the evaluation surface") {
  const auto& s = asymmetricSolutions()[0];
  const auto grid = densityGrid(s, -1.0, 1.0, -1.0, 1.0, 41, 21);
  REQUIRE(grid.nx == 41);
  REQUIRE(grid.ny == 21);
  REQUIRE(grid.values.size() == 41u * 21u);
  CHECK(grid.normalization > 0.0);

  double peak = 0.0;
  for (double v : grid.values) {
    CHECK(v >= 0.0);
    peak = std::max(peak, v);
  }
  CHECK(peak > 0.0);

  // |Psi|^2 is even in x2, and the window is symmetric: mirrored rows match.
  for (int iy = 0; iy < 21; ++iy)
    for (int ix = 0; ix < 41; ++ix) {
      const double a = grid.values[static_cast<std::size_t>(iy) * 41 + ix];
      const double b = grid.values[static_cast<std::size_t>(20 - iy) * 41 + ix];
      CHECK(std::abs(a - b) <= 1e-10 * peak);
    }

  std::ostringstream os;
  writeDensityCsv(os, grid);
  const std::string text = os.str();
  CHECK(text.rfind("x1,x2,rho\n", 0) == 0);
  std::size_t lines = 0;
  for (char c : text)
    if (c == '\n') ++lines;
  CHECK(lines == 1u + 41u * 21u);
}

} // TEST_SUITE
