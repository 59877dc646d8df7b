#ifndef TWOCENTER_ELLIPTIC_HPP
#define TWOCENTER_ELLIPTIC_HPP

namespace twocenter {

/// Euler elliptic coordinates with foci at (+R/2, 0) (center 1) and
/// (-R/2, 0) (center 2):
///   xi  = (r1 + r2) / R   in [1, inf)
///   eta = (r2 - r1) / R   in [-1, 1]
/// The (xi, eta) pair covers each half-plane once (two sheets); the
/// one-to-one form replaces eta by the angle nu in [0, 2pi) with
///   x1 = (R/2) xi cos(nu),  x2 = (R/2) sqrt(xi^2-1) sin(nu),  eta = cos(nu).
struct EllipticPoint {
  double xi = 1.0;
  double eta = 0.0;
  double nu = 0.0;          // one-to-one angle in [0, 2pi)
  // xi - 1 to full relative precision. Near the focal segment xi itself is
  // 1 + O(x2^2) and the subtraction xi - 1.0 would surrender all digits to
  // rounding; the forward transform computes this complement from a
  // cancellation-free rearrangement instead, and the inverse transform uses
  // it so the round trip holds machine precision arbitrarily close to the
  // segment. Falls back consistently when left at its default (see
  // ellipticToCartesian).
  double xiMinusOne = 0.0;
  bool upperSheet = true;   // sign of x2 (true for x2 >= 0)
  bool onFocalSegment = false;  // xi == 1 within rounding: Jacobian degenerate
};

/// Forward transform. eta is computed as 2*x1/(r1+r2), algebraically equal to
/// (r2-r1)/R but free of the cancellation that hits the subtraction near the
/// axis. Points with xi = 1 are flagged (degenerate Jacobian), not rejected.
EllipticPoint cartesianToElliptic(double x1, double x2, double r);

struct Cartesian {
  double x1;
  double x2;
};

Cartesian ellipticToCartesian(const EllipticPoint& pt, double r);

/// Stable evaluations of 1-eta and 1+eta (exact-rearrangement forms; the
/// naive 1 -+ eta loses all digits near the axis where eta -> +-1).
double oneMinusEta(double x1, double x2, double r);
double onePlusEta(double x1, double x2, double r);

/// Distances to the two centers.
double distanceToCenter1(double x1, double x2, double r);
double distanceToCenter2(double x1, double x2, double r);

} // namespace twocenter

#endif
