#include <doctest.h>

#include "twocenter/heun.hpp"
#include "twocenter/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

using namespace twocenter;

namespace {

// Scale-aware smallness check: |x| measured against a magnitude built from
// the inputs, so the same bound works for tiny and huge coefficient ranges.
bool smallRelative(double x, double scale, double tol) {
  return std::abs(x) <= tol * std::max(1.0, scale);
}

} // namespace

TEST_SUITE("heun") {

TEST_CASE("criterion polynomials are monic of the expected degree") {
  const int n = 4;
  SUBCASE("floating point") {
    const auto P = criterionPolynomials<double>(n, 0.5, 1.5, -2.5);
    REQUIRE(P.size() == static_cast<std::size_t>(n) + 2);
    for (std::size_t k = 0; k < P.size(); ++k) {
      CHECK(P[k].degree() == k);
      CHECK(P[k].coeffs().back() == doctest::Approx(1.0).epsilon(1e-15));
    }
  }
  SUBCASE("exact rationals") {
    const auto P = criterionPolynomials<Rational>(n, Rational(1, 2), Rational(3, 2),
                                                  Rational(-5, 2));
    REQUIRE(P.size() == static_cast<std::size_t>(n) + 2);
    for (std::size_t k = 0; k < P.size(); ++k) {
      CHECK(P[k].degree() == k);
      CHECK(P[k].coeffs().back() == Rational(1));
    }
  }
}

TEST_CASE("quadratic criterion matches the closed-form roots") {
  // n = 1: P2(q) = (q - (gamma+delta-epsilon)) q - epsilon*gamma, solved by hand.
  const double gamma = 0.5, delta = 1.5, epsilon = -3.0;
  const auto P = criterionPolynomials<double>(1, gamma, delta, epsilon);
  const auto roots = realRootsAscending(P.back());
  REQUIRE(roots.size() == 2);
  const double s = gamma + delta - epsilon;           // sum of roots
  const double prod = -epsilon * gamma;               // product of roots
  const double disc = std::sqrt(s * s - 4.0 * prod);
  CHECK(roots[0] == doctest::Approx((s - disc) / 2).epsilon(1e-13));
  CHECK(roots[1] == doctest::Approx((s + disc) / 2).epsilon(1e-13));
}

TEST_CASE("recurrence route and power-series route build the same polynomial") {
  const int n = 3;
  const double gamma = 1.5, delta = 0.5, epsilon = -4.0;
  const auto P = criterionPolynomials<double>(n, gamma, delta, epsilon);
  const auto roots = realRootsAscending(P.back());
  REQUIRE(roots.size() == static_cast<std::size_t>(n) + 1);
  for (const double q : roots) {
    CheqParams<double> prm{gamma, delta, epsilon, -n * epsilon, q};
    const auto u = heunPolynomial(n, gamma, delta, epsilon, q);
    const auto series = frobeniusSeries(prm, n + 4);
    REQUIRE(u.coeffs().size() == static_cast<std::size_t>(n) + 1);
    double scale = 0.0;
    for (double c : u.coeffs()) scale = std::max(scale, std::abs(c));
    for (int k = 0; k <= n; ++k)
      CHECK(smallRelative(u.coeffs()[static_cast<std::size_t>(k)] -
                              series[static_cast<std::size_t>(k)],
                          scale, 1e-10));
    // An admissible q truncates the series: everything past degree n vanishes.
    for (int k = n + 1; k < n + 4; ++k)
      CHECK(smallRelative(series[static_cast<std::size_t>(k)], scale, 1e-9));
  }
}

TEST_CASE("operator residual vanishes identically on exact rational roots") {
  SUBCASE("degree one, roots constructed to be rational") {
    // gamma = delta = 1/2, epsilon = -3/4: P2 = q^2 - (7/4) q + 3/8 factors
    // over the rationals with roots 1/4 and 3/2.
    const Rational g(1, 2), d(1, 2), e(-3, 4);
    const auto P = criterionPolynomials<Rational>(1, g, d, e);
    for (const Rational& q : {Rational(1, 4), Rational(3, 2)}) {
      REQUIRE(P.back()(q) == Rational(0));
      const auto u = heunPolynomial<Rational>(1, g, d, e, q);
      CheqParams<Rational> prm{g, d, e, Rational(-1) * e, q};
      CHECK(cheqResidual(prm, u).isZero());
    }
  }
  SUBCASE("degree two, frozen from a matched two-center solution") {
    // gamma = 1/2, delta = 3/2, epsilon = -3/4 admits the exact root q = 3,
    // with polynomial 1 - 3t + t^2/4 in t = z+1.
    const Rational g(1, 2), d(3, 2), e(-3, 4), q(3);
    const auto P = criterionPolynomials<Rational>(2, g, d, e);
    REQUIRE(P.back()(q) == Rational(0));
    const auto u = heunPolynomial<Rational>(2, g, d, e, q);
    const std::vector<Rational> expected{Rational(1), Rational(-3), Rational(1, 4)};
    CHECK(u.coeffs() == expected);
    CheqParams<Rational> prm{g, d, e, Rational(-2) * e, q};
    CHECK(cheqResidual(prm, u).isZero());
  }
  SUBCASE("perturbing the accessory parameter breaks the solution") {
    const Rational g(1, 2), d(3, 2), e(-3, 4);
    const Rational qBad = Rational(3) + Rational(1, 1000);
    const auto u = heunPolynomial<Rational>(2, g, d, e, qBad);
    CheqParams<Rational> prm{g, d, e, Rational(-2) * e, qBad};
    CHECK_FALSE(cheqResidual(prm, u).isZero());
  }
}

TEST_CASE("roots stay real and simple across randomized admissible parameters") {
  std::mt19937_64 rng(0xfeedbeefULL);
  std::uniform_int_distribution<int> pickN(0, 6);
  std::uniform_int_distribution<int> pickHalf(0, 1);
  std::uniform_real_distribution<double> pickEps(0.3, 30.0);

  for (int iter = 0; iter < 100; ++iter) {
    const int n = pickN(rng);
    const double gamma = pickHalf(rng) ? 1.5 : 0.5;
    const double delta = pickHalf(rng) ? 1.5 : 0.5;
    const double epsilon = (pickHalf(rng) ? 1.0 : -1.0) * pickEps(rng);
    CAPTURE(n);
    CAPTURE(gamma);
    CAPTURE(delta);
    CAPTURE(epsilon);

    const auto P = criterionPolynomials<double>(n, gamma, delta, epsilon);
    std::vector<double> roots;
    REQUIRE_NOTHROW(roots = realRootsAscending(P.back()));
    REQUIRE(roots.size() == static_cast<std::size_t>(n) + 1);

    double span = 1.0;
    for (double q : roots) span = std::max(span, std::abs(q));
    for (std::size_t i = 0; i + 1 < roots.size(); ++i)
      CHECK(roots[i + 1] - roots[i] > 1e-9 * span);

    // Each root must actually produce a polynomial solution: apply the
    // operator and compare against the coefficient magnitudes involved.
    for (const double q : roots) {
      const auto u = heunPolynomial(n, gamma, delta, epsilon, q);
      CheqParams<double> prm{gamma, delta, epsilon, -n * epsilon, q};
      const auto r = cheqResidual(prm, u);
      const double inputScale =
          u.maxAbsCoeff() * (std::abs(q) + std::abs(epsilon) * (n + 1.0) + n * n + 4.0);
      CHECK(r.maxAbsCoeff() <= 1e-9 * inputScale);
    }
  }
}

TEST_CASE("complex or multiple roots are reported, not silently dropped") {
  // x^2 + 1: purely imaginary pair.
  CHECK_THROWS_AS(realRootsAscending(Polynomial<double>({std::vector<double>{1, 0, 1}})),
                  RootRealityError);
  // (x - 2)^2: real but collided.
  CHECK_THROWS_AS(realRootsAscending(Polynomial<double>({std::vector<double>{4, -4, 1}})),
                  RootRealityError);
}

} // TEST_SUITE
