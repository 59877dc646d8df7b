#include "twocenter/eval.hpp"

#include "twocenter/errors.hpp"
#include "twocenter/mathieu.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <random>

namespace twocenter {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct PrefactorExponents {
  double a;  // on (x+1)
  double b;  // on (x-1), evaluated as (1-x) on the angular axis
};

PrefactorExponents exponents(const SeparatedFactor<double>& f) {
  return {(2.0 * typeGamma<double>(f.type) - 1.0) / 4.0,
          (2.0 * typeDelta<double>(f.type) - 1.0) / 4.0};
}

// Compensated Horner (error-free transformations): result as if evaluated in
// doubled precision, then rounded. Plain Horner leaves an absolute error of
// order eps * max_k |c_k t^k|, which near a polynomial zero dwarfs the value
// itself and, amplified by 1/h^2, would dominate the finite-difference
// residual along nodal lines.
double compensatedHorner(const std::vector<double>& c, double x) {
  double s = c.back();
  double comp = 0.0;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    const double p = s * x;
    const double errMul = std::fma(s, x, -p);
    const double t = p + c[i];
    const double z = t - p;
    const double errAdd = (p - (t - z)) + (c[i] - z);
    comp = comp * x + (errMul + errAdd);
    s = t;
  }
  return s + comp;
}

// Factor value from independently supplied (x+1) and +-(x-1) pieces, so the
// caller can substitute cancellation-free forms of them. The polynomial
// argument t = x+1 equals plusOne on both axes.
double factorFromParts(const SeparatedFactor<double>& f, double plusOne, double minusOne,
                       double x) {
  const auto [a, b] = exponents(f);
  return std::pow(plusOne, a) * std::pow(minusOne, b) * std::exp(f.epsilon * x / 4.0) *
         compensatedHorner(f.poly.coeffs(), plusOne);
}

// Extended-precision point evaluation. The finite-difference oracle divides
// psi differences by h^2 = 1e-8, so double-rounded coordinates (xi carries
// ~2 ulp from the hypot/divide chain) would inject noise of order
// eps * |u'(xi)| that dominates the residual along nodal lines of the
// polynomial factors. Carrying the whole chain in long double pushes that
// floor three orders of magnitude down; the result is a correctly rounded
// double relative to psi itself.
using LongFloat = long double;

LongFloat hornerLong(const std::vector<double>& c, LongFloat x) {
  LongFloat acc = c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * x + c[i];
  return acc;
}

LongFloat factorLong(const SeparatedFactor<double>& f, LongFloat plusOne, LongFloat minusOne,
                     LongFloat x) {
  const auto [a, b] = exponents(f);
  return std::pow(plusOne, static_cast<LongFloat>(a)) *
         std::pow(minusOne, static_cast<LongFloat>(b)) *
         std::exp(static_cast<LongFloat>(f.epsilon) * x / 4.0L) * hornerLong(f.poly.coeffs(), plusOne);
}

// r - a without cancellation (mirrors the double version in the coordinate
// module): for a > 0, r - a = x2^2 / (r + a) exactly.
LongFloat diffStableLong(LongFloat r, LongFloat a, LongFloat x2) {
  if (a <= 0.0L) return r - a;
  return x2 * x2 / (r + a);
}

// 16-point Gauss-Legendre nodes/weights on [-1,1] from the Jacobi matrix
// (Golub-Welsch); computed once.
struct GaussRule {
  std::array<double, 16> node;
  std::array<double, 16> weight;
};

const GaussRule& gaussRule16() {
  static const GaussRule rule = [] {
    constexpr int n = 16;
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
      const double beta = k / std::sqrt(4.0 * k * k - 1.0);
      jacobi(k, k - 1) = beta;
      jacobi(k - 1, k) = beta;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
    GaussRule r{};
    for (int k = 0; k < n; ++k) {
      r.node[static_cast<std::size_t>(k)] = solver.eigenvalues()(k);
      const double first = solver.eigenvectors()(0, k);
      r.weight[static_cast<std::size_t>(k)] = 2.0 * first * first;
    }
    return r;
  }();
  return rule;
}

template <class Fn>
double compositePanels(const Fn& fn, double lo, double hi, int panels) {
  const auto& rule = gaussRule16();
  const double width = (hi - lo) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double a = lo + p * width;
    const double mid = a + 0.5 * width;
    double sum = 0.0;
    for (int k = 0; k < 16; ++k)
      sum += rule.weight[static_cast<std::size_t>(k)] *
             fn(mid + 0.5 * width * rule.node[static_cast<std::size_t>(k)]);
    total += 0.5 * width * sum;
  }
  return total;
}

// Panel doubling until two successive composite rules agree to 1e-10 relative.
template <class Fn>
double integrate(const Fn& fn, double lo, double hi) {
  int panels = 4;
  double prev = compositePanels(fn, lo, hi, panels);
  for (panels *= 2; panels <= 4096; panels *= 2) {
    const double cur = compositePanels(fn, lo, hi, panels);
    if (std::abs(cur - prev) <= 1e-10 * std::max(std::abs(cur), 1e-300)) return cur;
    prev = cur;
  }
  throw ConvergenceError("normalization quadrature did not stabilize under panel doubling");
}

// Radial factor squared along xi = cosh(mu); the half-angle forms keep
// xi -+ 1 exact near the focal segment (mu -> 0).
double radialSquared(const SeparatedFactor<double>& f, double mu) {
  const double ch = std::cosh(0.5 * mu);
  const double sh = std::sinh(0.5 * mu);
  const double xi = 1.0 + 2.0 * sh * sh;  // cosh(mu)
  const double value = factorFromParts(f, 2.0 * ch * ch, 2.0 * sh * sh, xi);
  return value * value;
}

// Angular factor squared along eta = cos(nu), same half-angle treatment.
double angularSquared(const ElementaryEigenfunction& sol, double nu) {
  double value;
  if (sol.isMixed()) {
    value = mathieuEval(sol.angularMathieu->characteristic, nu);
  } else {
    const double c = std::cos(0.5 * nu);
    const double s = std::sin(0.5 * nu);
    const double eta = 1.0 - 2.0 * s * s;  // cos(nu)
    value = factorFromParts(*sol.angularPoly, 2.0 * c * c, 2.0 * s * s, eta);
  }
  return value * value;
}

// Shortest mu interval holding the whole radial mass: extend until the tail
// integrand drops below 1e-18 of the running peak. A tail that grows instead
// signals a non-normalizable factor (epsilon >= 0).
double radialCutoff(const SeparatedFactor<double>& f) {
  double peak = 0.0;
  double muMax = 2.0;
  double prevTail = std::numeric_limits<double>::infinity();
  for (;;) {
    for (int i = 0; i <= 32; ++i) {
      const double mu = muMax - 2.0 + 2.0 * i / 32.0;
      const double ch = std::cosh(mu);
      peak = std::max(peak, radialSquared(f, mu) * ch * ch);
    }
    const double ch = std::cosh(muMax);
    const double tail = radialSquared(f, muMax) * ch * ch;
    if (std::isfinite(tail) && tail <= 1e-18 * peak) return muMax;
    if (!std::isfinite(tail) || (muMax >= 8.0 && tail >= prevTail))
      throw NormalizationDivergence("radial factor is not square-integrable: the exponential "
                                    "envelope does not decay");
    prevTail = tail;
    muMax += 2.0;
    if (muMax > 200.0)
      throw NormalizationDivergence("radial tail never fell below threshold");
  }
}

struct Stencil {
  // Fourth-order second derivative along one axis.
  template <class Fn>
  static double second(const Fn& fn, double h) {
    return (-fn(-2.0 * h) + 16.0 * fn(-h) - 30.0 * fn(0.0) + 16.0 * fn(h) - fn(2.0 * h)) /
           (12.0 * h * h);
  }
};

double residualImpl(const std::function<double(double, double)>& psi, double energy, double z1,
                    double z2, double r, int samples, std::uint64_t seed) {
  if (!(r > 0)) throw DomainError("separation must be positive");
  if (!(energy < 0)) throw DomainError("bound-state residual check requires E < 0");
  const double decay = std::sqrt(2.0 * std::abs(energy));
  const double rIn = 0.75 * r;
  const double rOut = rIn + 10.0 / decay;
  const double axisMargin = std::max(1e-2 * r, 1e-3);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> radiusDist(rIn, rOut);
  std::uniform_real_distribution<double> angleDist(0.0, 2.0 * kPi);

  double worst = 0.0;
  long long attempts = 0;
  for (int accepted = 0; accepted < samples;) {
    if (++attempts > 1000LL * samples)
      throw DomainError("probe sampling kept rejecting points; geometry out of range");
    const double rad = radiusDist(rng);
    const double ang = angleDist(rng);
    const double x1 = rad * std::cos(ang);
    const double x2 = rad * std::sin(ang);
    if (std::abs(x2) < axisMargin) continue;
    ++accepted;

    const double h = 1e-4 * std::max(1.0, std::hypot(x1, x2));
    const double lap =
        Stencil::second([&](double d) { return psi(x1 + d, x2); }, h) +
        Stencil::second([&](double d) { return psi(x1, x2 + d); }, h);
    const double value = psi(x1, x2);
    const double r1 = std::hypot(x1 - 0.5 * r, x2);
    const double r2 = std::hypot(x1 + 0.5 * r, x2);
    const double lhs = -0.5 * lap - (z1 / r1 + z2 / r2) * value - energy * value;
    const double rel = std::abs(lhs) / (std::abs(energy) * std::abs(value) + 1e-30);
    worst = std::max(worst, rel);
  }
  return worst;
}

} // namespace

double evaluatePsiRaw(const ElementaryEigenfunction& sol, double x1, double x2) {
  const LongFloat x = x1;
  const LongFloat y = x2;
  const LongFloat r = sol.r;
  const LongFloat a1 = x - r / 2.0L;
  const LongFloat a2 = x + r / 2.0L;
  const LongFloat r1 = std::hypot(a1, y);
  const LongFloat r2 = std::hypot(a2, y);
  const LongFloat sum = r1 + r2;
  const LongFloat xi = std::max(1.0L, sum / r);
  const LongFloat radial = factorLong(sol.radial, xi + 1.0L, xi - 1.0L, xi);

  const LongFloat eta = std::clamp(2.0L * x / sum, -1.0L, 1.0L);
  LongFloat angular;
  if (sol.isMixed()) {
    // One-to-one angle; branch rules identical to cartesianToElliptic.
    const LongFloat sinScale = (r / 2.0L) * std::sqrt(std::max(xi * xi - 1.0L, 0.0L));
    LongFloat nu;
    if (sinScale > 0.0L) {
      nu = std::atan2(y / sinScale, eta);
    } else {
      nu = std::acos(eta);
      if (y < 0.0L) nu = -nu;
    }
    const auto& c = sol.angularMathieu->characteristic;
    const int s = c.order % 2;
    const int first = (c.parity == MathieuParity::Sine && s == 0) ? 2 : s;
    // Harmonics step by 2, so advance cos/sin by a fixed rotation instead of
    // calling trig once per term; the accumulated recurrence error stays far
    // below double rounding even at the largest truncations used.
    const LongFloat cd = std::cos(2.0L * nu);
    const LongFloat sd = std::sin(2.0L * nu);
    LongFloat ck = std::cos(static_cast<LongFloat>(first) * nu);
    LongFloat sk = std::sin(static_cast<LongFloat>(first) * nu);
    angular = 0.0L;
    for (std::size_t k = 0; k < c.fourier.size(); ++k) {
      angular += static_cast<LongFloat>(c.fourier[k]) *
                 (c.parity == MathieuParity::Cosine ? ck : sk);
      const LongFloat cNext = ck * cd - sk * sd;
      sk = sk * cd + ck * sd;
      ck = cNext;
    }
  } else {
    const LongFloat plus = (diffStableLong(r1, -a1, y) + diffStableLong(r2, -a2, y)) / sum;
    const LongFloat minus = (diffStableLong(r1, a1, y) + diffStableLong(r2, a2, y)) / sum;
    angular = factorLong(*sol.angularPoly, plus, minus, eta);
  }
  return static_cast<double>(radial * angular);
}

double evaluatePsi(const ElementaryEigenfunction& sol, double x1, double x2) {
  return sol.normalization.value_or(1.0) * evaluatePsiRaw(sol, x1, x2);
}

double normalize(const ElementaryEigenfunction& sol) {
  if (!(sol.r > 0)) throw DomainError("separation must be positive");
  const double muMax = radialCutoff(sol.radial);

  const auto& radial = sol.radial;
  const double radialPlain = integrate([&](double mu) { return radialSquared(radial, mu); },
                                       0.0, muMax);
  const double radialCosh2 = integrate(
      [&](double mu) {
        const double ch = std::cosh(mu);
        return radialSquared(radial, mu) * ch * ch;
      },
      0.0, muMax);
  const double angularPlain =
      integrate([&](double nu) { return angularSquared(sol, nu); }, 0.0, 2.0 * kPi);
  const double angularCos2 = integrate(
      [&](double nu) {
        const double c = std::cos(nu);
        return angularSquared(sol, nu) * c * c;
      },
      0.0, 2.0 * kPi);

  // Area element (R^2/4)(cosh^2 mu - cos^2 nu) factorizes the plane integral.
  const double total =
      sol.r * sol.r / 4.0 * (radialCosh2 * angularPlain - radialPlain * angularCos2);
  if (!(total > 0) || !std::isfinite(total))
    throw NormalizationDivergence("squared-norm integral is not finite and positive");
  return 1.0 / std::sqrt(total);
}

double pdeResidual(const ElementaryEigenfunction& sol, int samples, std::uint64_t seed) {
  return residualImpl([&](double x1, double x2) { return evaluatePsiRaw(sol, x1, x2); },
                      sol.energy, sol.z1, sol.z2, sol.r, samples, seed);
}

double pdeResidualCallable(const std::function<double(double, double)>& psi, double energy,
                           double z1, double z2, double r, int samples, std::uint64_t seed) {
  return residualImpl(psi, energy, z1, z2, r, samples, seed);
}

DensityGrid densityGrid(const ElementaryEigenfunction& sol, double x1Min, double x1Max,
                        double x2Min, double x2Max, int nx, int ny) {
  if (nx < 1 || ny < 1) throw DomainError("grid must have at least one point per axis");
  DensityGrid grid;
  grid.x1Min = x1Min;
  grid.x1Max = x1Max;
  grid.x2Min = x2Min;
  grid.x2Max = x2Max;
  grid.nx = nx;
  grid.ny = ny;
  grid.normalization = sol.normalization ? *sol.normalization : normalize(sol);
  grid.values.resize(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny));
  const double dx = nx > 1 ? (x1Max - x1Min) / (nx - 1) : 0.0;
  const double dy = ny > 1 ? (x2Max - x2Min) / (ny - 1) : 0.0;
  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      const double x1 = x1Min + ix * dx;
      const double x2 = x2Min + iy * dy;
      const double value = grid.normalization * evaluatePsiRaw(sol, x1, x2);
      grid.values[static_cast<std::size_t>(iy) * static_cast<std::size_t>(nx) +
                  static_cast<std::size_t>(ix)] = value * value;
    }
  }
  return grid;
}

void writeDensityCsv(std::ostream& os, const DensityGrid& grid) {
  os << "x1,x2,rho\n";
  os << std::setprecision(17);
  const double dx = grid.nx > 1 ? (grid.x1Max - grid.x1Min) / (grid.nx - 1) : 0.0;
  const double dy = grid.ny > 1 ? (grid.x2Max - grid.x2Min) / (grid.ny - 1) : 0.0;
  for (int iy = 0; iy < grid.ny; ++iy) {
    for (int ix = 0; ix < grid.nx; ++ix) {
      const double x1 = grid.x1Min + ix * dx;
      const double x2 = grid.x2Min + iy * dy;
      os << x1 << ',' << x2 << ','
         << grid.values[static_cast<std::size_t>(iy) * static_cast<std::size_t>(grid.nx) +
                        static_cast<std::size_t>(ix)]
         << '\n';
    }
  }
}

} // namespace twocenter
