#ifndef TWOCENTER_EVAL_HPP
#define TWOCENTER_EVAL_HPP

#include "twocenter/elliptic.hpp"
#include "twocenter/solution.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

namespace twocenter {

/// Psi(x1, x2) = F(xi) * G(eta or nu), unnormalized. Near the symmetry axis
/// the angular prefactor is evaluated through the cancellation-free
/// oneMinusEta / onePlusEta forms; without them the finite-difference oracle
/// below would drown in rounding noise.
double evaluatePsiRaw(const ElementaryEigenfunction& sol, double x1, double x2);

/// Normalized value: evaluatePsiRaw times the stored normalization constant
/// (1 if not yet computed).
double evaluatePsi(const ElementaryEigenfunction& sol, double x1, double x2);

/// Normalization constant N with integral |N Psi|^2 dx = 1 over the plane.
/// Computed in elliptic coordinates after xi = cosh(mu): the area element
/// (R^2/4)(cosh^2 mu - cos^2 nu) factorizes the double integral into four
/// one-dimensional ones. Each is a composite 16-point Gauss-Legendre rule
/// with panel doubling until the relative change is below 1e-10; the mu
/// interval is extended until the tail integrand falls below 1e-18 of its
/// peak. Throws NormalizationDivergence when the tail never decays
/// (non-square-integrable candidate) and ConvergenceError when panel doubling
/// hits its cap without stabilizing.
double normalize(const ElementaryEigenfunction& sol);

/// Independent master oracle: max over sample points of
///   |(-1/2 Laplacian - Z1/r1 - Z2/r2 - E) Psi| / (|E| |Psi| + 1e-30)
/// with a fourth-order five-point stencil per axis, step 1e-4*max(1,|x|).
/// Points are drawn deterministically from mt19937_64(seed), uniformly in an
/// annulus that clears the focal segment and both centers by a wide margin;
/// points closer than max(1e-2*R, 1e-3) to the symmetry axis are rejected as
/// well, because half-integer prefactor powers make |Psi| ~ |x2| near the
/// outer axis rays and a stencil straddling that crease measures the crease,
/// not the equation.
double pdeResidual(const ElementaryEigenfunction& sol, int samples = 200,
                   std::uint64_t seed = 20240901);

/// Same stencil and sampling against an arbitrary callable; exists so the
/// oracle itself can be validated on closed forms (planar hydrogen) before
/// being trusted on assembled solutions.
double pdeResidualCallable(const std::function<double(double, double)>& psi, double energy,
                           double z1, double z2, double r, int samples, std::uint64_t seed);

struct DensityGrid {
  double x1Min = 0, x1Max = 0, x2Min = 0, x2Max = 0;
  int nx = 0, ny = 0;
  std::vector<double> values;  // values[iy*nx + ix], x2 varies with iy
  double normalization = 1.0;
};

/// |N Psi|^2 on a uniform nx-by-ny grid over the window (cell centers at the
/// lattice points, endpoints included).
DensityGrid densityGrid(const ElementaryEigenfunction& sol, double x1Min, double x1Max,
                        double x2Min, double x2Max, int nx, int ny);

/// CSV with header "x1,x2,rho", 17 significant digits, row-major.
void writeDensityCsv(std::ostream& os, const DensityGrid& grid);

} // namespace twocenter

#endif
