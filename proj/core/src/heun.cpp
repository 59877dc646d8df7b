#include "twocenter/heun.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace twocenter {

namespace {

double newtonPolish(const Polynomial<double>& p, const Polynomial<double>& dp, double x) {
  for (int it = 0; it < 50; ++it) {
    const double slope = dp(x);
    if (slope == 0.0) break;
    const double dx = p(x) / slope;
    x -= dx;
    if (std::abs(dx) <= 1e-14 * std::max(1.0, std::abs(x))) break;
  }
  return x;
}

} // namespace

std::vector<double> realRootsAscending(const Polynomial<double>& p) {
  Polynomial<double> poly = p;
  poly.trim();
  const auto& c = poly.coeffs();
  const int deg = static_cast<int>(poly.degree());
  if (deg == 0) return {};
  if (deg == 1) return {-c[0] / c[1]};

  // monic coefficients
  std::vector<double> b(static_cast<std::size_t>(deg));
  for (int k = 0; k < deg; ++k) b[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k)] / c[static_cast<std::size_t>(deg)];

  // Eigen's eigensolver does not balance, so rescale the variable first:
  // x = s*w with s chosen to pull all coefficients toward unit size.
  double s = 0.0;
  for (int k = 0; k < deg; ++k) {
    const double a = std::abs(b[static_cast<std::size_t>(k)]);
    if (a > 0.0) s = std::max(s, std::pow(a, 1.0 / static_cast<double>(deg - k)));
  }
  if (s == 0.0 || !std::isfinite(s)) s = 1.0;

  // substituted polynomial w^deg + sum_k (b_k / s^(deg-k)) w^k
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (int k = 0; k < deg; ++k)
    companion(k, deg - 1) = -b[static_cast<std::size_t>(k)] / std::pow(s, deg - k);

  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  const auto vals = solver.eigenvalues();

  std::vector<double> roots;
  roots.reserve(static_cast<std::size_t>(deg));
  for (int i = 0; i < vals.size(); ++i) {
    const double re = vals[i].real() * s;
    const double im = vals[i].imag() * s;
    if (std::abs(im) > 1e-10 * (1.0 + std::abs(re))) {
      std::ostringstream msg;
      msg << "root " << re << " + " << im << "i has a non-negligible imaginary part";
      throw RootRealityError(msg.str());
    }
    roots.push_back(re);
  }

  const Polynomial<double> dp = poly.derivative();
  for (double& r : roots) r = newtonPolish(poly, dp, r);
  std::sort(roots.begin(), roots.end());

  for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
    const double scale = 1.0 + std::max(std::abs(roots[i]), std::abs(roots[i + 1]));
    if (roots[i + 1] - roots[i] < 1e-10 * scale) {
      std::ostringstream msg;
      msg << "roots " << roots[i] << " and " << roots[i + 1]
          << " are too close to separate reliably";
      throw RootRealityError(msg.str());
    }
  }
  return roots;
}

} // namespace twocenter
