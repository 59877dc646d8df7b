#include <doctest.h>

#include "twocenter/mathieu.hpp"

#include <cmath>
#include <vector>

using namespace twocenter;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Trapezoid rule on [0, 2pi]; integrands here are 2pi-periodic and smooth, so
// the rule converges spectrally and 2048 points are far more than enough.
template <class F>
double periodicIntegral(F&& f) {
  const int n = 2048;
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += f(2.0 * kPi * i / n);
  return acc * 2.0 * kPi / n;
}

} // namespace

TEST_SUITE("mathieu") {

TEST_CASE("characteristic values reduce to n^2 at p = 0") {
  for (int n = 0; n <= 10; ++n) {
    CHECK(std::abs(mathieuCharValue(MathieuParity::Cosine, n, 0.0) - n * n) <= 1e-12);
    if (n >= 1)
      CHECK(std::abs(mathieuCharValue(MathieuParity::Sine, n, 0.0) - n * n) <= 1e-12);
  }
}

TEST_CASE("per-class ordering holds at moderate couplings") {
  for (double p : {-10.0, -1.0, 1.0, 10.0}) {
    CAPTURE(p);
    for (int n = 0; n < 5; ++n)
      CHECK(mathieuCharValue(MathieuParity::Cosine, n, p) <
            mathieuCharValue(MathieuParity::Cosine, n + 1, p));
    for (int n = 1; n < 5; ++n)
      CHECK(mathieuCharValue(MathieuParity::Sine, n, p) <
            mathieuCharValue(MathieuParity::Sine, n + 1, p));
  }
}

TEST_CASE("frozen reference values from an independent implementation") {
  struct Ref {
    MathieuParity parity;
    int order;
    double p;
    double value;
  };
  const std::vector<Ref> refs{
      {MathieuParity::Cosine, 0, 1.0, -0.455138604107},
      {MathieuParity::Cosine, 1, 1.0, 1.859108072514},
      {MathieuParity::Sine, 1, 1.0, -0.110248816992},
      {MathieuParity::Sine, 2, 1.0, 3.917024772998},
      {MathieuParity::Cosine, 2, 5.0, 7.449109739529},
      {MathieuParity::Sine, 3, 5.0, 9.236327713694},
      {MathieuParity::Cosine, 0, -3.0, -2.834391889904},
      {MathieuParity::Sine, 1, -3.0, 2.519039087508},
  };
  for (const Ref& r : refs) {
    CAPTURE(r.order);
    CAPTURE(r.p);
    CHECK(mathieuCharValue(r.parity, r.order, r.p) ==
          doctest::Approx(r.value).epsilon(1e-10));
  }
}

TEST_CASE("reflection identities in the coupling sign") {
  // Flipping the sign of p maps even orders to themselves and swaps the
  // parity classes at odd order.
  for (double p : {0.7, 2.37, 9.5}) {
    CAPTURE(p);
    CHECK(mathieuCharValue(MathieuParity::Cosine, 2, p) ==
          doctest::Approx(mathieuCharValue(MathieuParity::Cosine, 2, -p)).epsilon(1e-12));
    CHECK(mathieuCharValue(MathieuParity::Sine, 2, p) ==
          doctest::Approx(mathieuCharValue(MathieuParity::Sine, 2, -p)).epsilon(1e-12));
    CHECK(mathieuCharValue(MathieuParity::Cosine, 1, p) ==
          doctest::Approx(mathieuCharValue(MathieuParity::Sine, 1, -p)).epsilon(1e-12));
    CHECK(mathieuCharValue(MathieuParity::Cosine, 3, p) ==
          doctest::Approx(mathieuCharValue(MathieuParity::Sine, 3, -p)).epsilon(1e-12));
  }
}

TEST_CASE("eigenfunctions satisfy the defining equation pointwise") {
  for (MathieuParity parity : {MathieuParity::Cosine, MathieuParity::Sine}) {
    for (int order = (parity == MathieuParity::Sine ? 1 : 0); order <= 4; ++order) {
      for (double p : {-6.3, -1.0, 0.5, 4.0, 25.0}) {
        CAPTURE(order);
        CAPTURE(p);
        const auto c = mathieuCharacteristic(parity, order, p);
        double maxAbs = 0.0;
        for (int i = 0; i < 50; ++i)
          maxAbs = std::max(maxAbs, std::abs(mathieuEval(c, 2.0 * kPi * i / 50)));
        REQUIRE(maxAbs > 0.1);  // periodic solutions are not near-null
        for (int i = 0; i < 50; ++i) {
          const double nu = 2.0 * kPi * i / 50;
          const double y = mathieuEval(c, nu);
          const double resid =
              mathieuEvalD2(c, nu) + (c.value - 2.0 * p * std::cos(2.0 * nu)) * y;
          CHECK(std::abs(resid) <= 1e-8 * (1.0 + std::abs(c.value) + 2 * std::abs(p)) * maxAbs);
        }
      }
    }
  }
}

TEST_CASE("distinct orders of the same parity are orthogonal") {
  const double p = 3.1;
  const auto c1 = mathieuCharacteristic(MathieuParity::Cosine, 0, p);
  const auto c2 = mathieuCharacteristic(MathieuParity::Cosine, 2, p);
  const auto c3 = mathieuCharacteristic(MathieuParity::Sine, 1, p);
  const auto c4 = mathieuCharacteristic(MathieuParity::Sine, 3, p);
  const double i12 =
      periodicIntegral([&](double nu) { return mathieuEval(c1, nu) * mathieuEval(c2, nu); });
  const double i34 =
      periodicIntegral([&](double nu) { return mathieuEval(c3, nu) * mathieuEval(c4, nu); });
  CHECK(std::abs(i12) <= 1e-10);
  CHECK(std::abs(i34) <= 1e-10);
}

TEST_CASE("quadrature norm is consistent with the stored coefficients") {
  // Whatever the convention, the L2 norm over a period must equal the value
  // implied by the Fourier coefficients; constant terms integrate to 2pi,
  // every other harmonic to pi.
  for (MathieuParity parity : {MathieuParity::Cosine, MathieuParity::Sine}) {
    for (int order = (parity == MathieuParity::Sine ? 1 : 0); order <= 3; ++order) {
      const auto c = mathieuCharacteristic(parity, order, -2.4);
      double expected = 0.0;
      const int s = order % 2;
      for (std::size_t k = 0; k < c.fourier.size(); ++k) {
        const int harmonic =
            static_cast<int>(2 * k) + (parity == MathieuParity::Sine && s == 0 ? 2 : s);
        const double w = (harmonic == 0) ? 2.0 * kPi : kPi;
        expected += w * c.fourier[k] * c.fourier[k];
      }
      const double actual = periodicIntegral(
          [&](double nu) { return mathieuEval(c, nu) * mathieuEval(c, nu); });
      CHECK(actual == doctest::Approx(expected).epsilon(1e-10));
    }
  }
}

TEST_CASE("extreme couplings converge with a sane truncation") {
  const auto c = mathieuCharacteristic(MathieuParity::Sine, 1, -3600.0);
  CHECK(c.truncation >= 130);
  // Deep in the negative-coupling regime the low characteristic values
  // approach -2|p|; a loose sanity corridor catches scaling bugs.
  CHECK(c.value > -2.0 * 3600.0);
  CHECK(c.value < -2.0 * 3600.0 + 8.0 * std::sqrt(3600.0));
  const auto again = mathieuCharValue(MathieuParity::Sine, 1, -3600.0);
  CHECK(again == doctest::Approx(c.value).epsilon(1e-10));
}

TEST_CASE("memoized lookups are bit-stable") {
  const double a1 = mathieuCharValue(MathieuParity::Cosine, 2, 1.234567);
  const double a2 = mathieuCharValue(MathieuParity::Cosine, 2, 1.234567);
  CHECK(a1 == a2);
}

} // TEST_SUITE
