#ifndef TWOCENTER_SOLUTION_HPP
#define TWOCENTER_SOLUTION_HPP

#include "twocenter/mathieu.hpp"
#include "twocenter/numeric.hpp"
#include "twocenter/separation.hpp"

#include <optional>
#include <string>

namespace twocenter {

/// Angular factor of a mixed (equal-charge) eigenfunction: a periodic Mathieu
/// function of the one-to-one angle nu.
struct MathieuFactor {
  MathieuCharacteristic characteristic;
};

/// A complete elementary eigenfunction Psi = F(xi) * G: charges, matched
/// separation R, shared E and lambda, the radial factor, and either a
/// polynomial angular factor G(eta) or a Mathieu factor G(nu).
///
/// The *Exact fields mirror the floats whenever every input was rational and
/// the accessory-parameter roots snapped to rationals that verify exactly;
/// they are authoritative when present (floats are rounded views).
struct ElementaryEigenfunction {
  double z1 = 0.0;
  double z2 = 0.0;
  double r = 0.0;
  double energy = 0.0;
  double lambda = 0.0;

  SeparatedFactor<double> radial;
  std::optional<SeparatedFactor<double>> angularPoly;
  std::optional<MathieuFactor> angularMathieu;

  std::optional<double> normalization;  // filled by normalize()

  std::optional<Rational> z1Exact, z2Exact;
  std::optional<Rational> rExact, energyExact, lambdaExact;
  std::optional<SeparatedFactor<Rational>> radialExact, angularExact;

  std::string provenance;  // candidate decoding + solver notes, human-readable

  bool isMixed() const { return angularMathieu.has_value(); }
};

} // namespace twocenter

#endif
