#include "twocenter/elliptic.hpp"

#include <algorithm>
#include <cmath>

namespace twocenter {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// r - a without cancellation: for a > 0 use r - a = x2^2 / (r + a).
double diffStable(double r, double a, double x2) {
  if (a <= 0.0) return r - a;
  return x2 * x2 / (r + a);
}

} // namespace

double distanceToCenter1(double x1, double x2, double r) {
  return std::hypot(x1 - r / 2.0, x2);
}

double distanceToCenter2(double x1, double x2, double r) {
  return std::hypot(x1 + r / 2.0, x2);
}

double oneMinusEta(double x1, double x2, double r) {
  const double r1 = distanceToCenter1(x1, x2, r);
  const double r2 = distanceToCenter2(x1, x2, r);
  const double num = diffStable(r1, x1 - r / 2.0, x2) + diffStable(r2, x1 + r / 2.0, x2);
  return num / (r1 + r2);
}

double onePlusEta(double x1, double x2, double r) {
  const double r1 = distanceToCenter1(x1, x2, r);
  const double r2 = distanceToCenter2(x1, x2, r);
  const double num = diffStable(r1, -(x1 - r / 2.0), x2) + diffStable(r2, -(x1 + r / 2.0), x2);
  return num / (r1 + r2);
}

EllipticPoint cartesianToElliptic(double x1, double x2, double r) {
  const double r1 = distanceToCenter1(x1, x2, r);
  const double r2 = distanceToCenter2(x1, x2, r);
  EllipticPoint pt;
  // r1 + r2 - r split into three nonnegative pieces, each free of
  // cancellation: the two hypotenuse excesses over |x1 -+ r/2| and the
  // excess of |x1 - r/2| + |x1 + r/2| over r (zero between the foci).
  const double a1 = x1 - r / 2.0;
  const double a2 = x1 + r / 2.0;
  const double excess = std::max(2.0 * std::abs(x1) - r, 0.0);
  pt.xiMinusOne =
      (diffStable(r1, std::abs(a1), x2) + diffStable(r2, std::abs(a2), x2) + excess) / r;
  pt.xi = 1.0 + pt.xiMinusOne;
  pt.eta = std::clamp(2.0 * x1 / (r1 + r2), -1.0, 1.0);
  pt.upperSheet = x2 >= 0.0;
  pt.onFocalSegment = pt.xiMinusOne <= 1e-15;

  const double sinScale = (r / 2.0) * std::sqrt(pt.xiMinusOne * (pt.xi + 1.0));
  double nu;
  if (sinScale > 0.0) {
    nu = std::atan2(x2 / sinScale, pt.eta);
  } else {
    nu = std::acos(pt.eta);  // degenerate: pick the upper-sheet angle
    if (!pt.upperSheet) nu = -nu;
  }
  if (nu < 0.0) nu += kTwoPi;
  pt.nu = nu;
  return pt;
}

Cartesian ellipticToCartesian(const EllipticPoint& pt, double r) {
  // Prefer the stored full-precision complement; a hand-built point that
  // never set it falls back to the plain difference.
  const double xiM1 =
      pt.xiMinusOne > 0.0 ? pt.xiMinusOne : std::max(pt.xi - 1.0, 0.0);
  const double x1 = (r / 2.0) * pt.xi * std::cos(pt.nu);
  const double x2 = (r / 2.0) * std::sqrt(xiM1 * (pt.xi + 1.0)) * std::sin(pt.nu);
  return {x1, x2};
}

} // namespace twocenter
