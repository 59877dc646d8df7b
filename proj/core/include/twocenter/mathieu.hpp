#ifndef TWOCENTER_MATHIEU_HPP
#define TWOCENTER_MATHIEU_HPP

#include "twocenter/errors.hpp"

#include <vector>

namespace twocenter {

/// Mathieu equation in standard form: y'' + (a - 2p cos 2nu) y = 0.
/// Only integer-order 2pi-periodic solutions are physical here (the angular
/// factor must be single-valued on the plane).
enum class MathieuParity { Cosine, Sine };

/// One periodic Mathieu function: characteristic value a_n(p) or b_n(p) plus
/// the Fourier coefficients of ce_n / se_n. Coefficients follow the
/// integral-pi normalization (the constant term carries the extra 1/sqrt(2)),
/// so the stored vector is unit-norm apart from that constant-term factor.
struct MathieuCharacteristic {
  MathieuParity parity{};
  int order = 0;
  double p = 0;
  double value = 0;               // a_n(p) for cosine, b_n(p) for sine
  std::vector<double> fourier;    // coefficient of cos((2k+s)nu) or sin((2k+s)nu), s = order%2
  int truncation = 0;             // matrix dimension actually used
};

/// Characteristic value plus eigenvector from the symmetric tridiagonal form
/// of the Fourier recursion, split into the four parity/period classes.
/// Truncation starts at max(20, 2*order + ceil(2*sqrt(|p|)) + 10) and doubles
/// until the eigenvalue moves by less than 1e-13 relative; ConvergenceError
/// if 2^14 is reached without stabilizing.
MathieuCharacteristic mathieuCharacteristic(MathieuParity parity, int order, double p);

/// Memoized characteristic value only (hot path of the R-scan). The cache key
/// quantizes p at 1e-15 and is internally synchronized.
double mathieuCharValue(MathieuParity parity, int order, double p);

/// ce_n(p, nu) or se_n(p, nu) from the stored Fourier series.
double mathieuEval(const MathieuCharacteristic& c, double nu);

/// Second derivative in nu by term-wise differentiation (for residual checks).
double mathieuEvalD2(const MathieuCharacteristic& c, double nu);

} // namespace twocenter

#endif
