#ifndef TWOCENTER_SEPARATION_HPP
#define TWOCENTER_SEPARATION_HPP

#include "twocenter/errors.hpp"
#include "twocenter/heun.hpp"
#include "twocenter/numeric.hpp"
#include "twocenter/polynomial.hpp"

#include <optional>

namespace twocenter {

/// Separating Psi = F(xi) G(eta) in elliptic coordinates yields the same
/// algebraic ODE on both axes,
///   (x^2-1) y'' + x y' + (E R^2/2 x^2 + R*zeta*x + lambda) y = 0,
/// with effective charge zeta = Z1+Z2 on the radial axis (x = xi >= 1) and
/// zeta = Z2-Z1 on the angular axis (x = eta in [-1,1]).
enum class Axis { Radial, Angular };

/// The substitution y = (x+1)^((2g-1)/4) (x-1)^((2d-1)/4) e^(eps x/4) u(x)
/// lands on the confluent Heun equation only for four exponent choices.
enum class SolutionType { A, B, C, D };

char typeLabel(SolutionType t);                       // 'a'..'d'
std::optional<SolutionType> typeFromLabel(char c);

/// Integer value of gamma+delta; 2n + typeOffset is the quantization integer
/// that enters energies and the compatibility condition between the axes.
int typeOffset(SolutionType t);

template <class S>
S typeGamma(SolutionType t) {
  switch (t) {
    case SolutionType::B:
    case SolutionType::C: return scalarFrom<S>(3, 2);
    default: return scalarFrom<S>(1, 2);
  }
}

template <class S>
S typeDelta(SolutionType t) {
  switch (t) {
    case SolutionType::B:
    case SolutionType::D: return scalarFrom<S>(3, 2);
    default: return scalarFrom<S>(1, 2);
  }
}

template <class S>
S effectiveCharge(Axis axis, const S& z1, const S& z2) {
  return axis == Axis::Radial ? S(z1 + z2) : S(z2 - z1);
}

/// E = -2 zeta^2 / (2n + gamma + delta)^2. On the angular axis a vanishing
/// zeta (equal charges) admits no polynomial-times-exponential solution with
/// negative energy, so that degenerate request is rejected here.
template <class S>
S qesEnergy(Axis axis, SolutionType t, int n, const S& zeta) {
  if (axis == Axis::Angular && zeta == S(0))
    throw SymmetricCaseError(
        "equal charges: the angular equation degenerates to Mathieu form and has no "
        "polynomial-type solutions; use the mixed construction instead");
  const S n1 = S(2 * n + typeOffset(t));
  return S(-2) * zeta * zeta / (n1 * n1);
}

/// epsilon = -4 R zeta / (2n + gamma + delta), from alpha = -n*epsilon
/// combined with alpha/2 - (epsilon/4)(gamma+delta) = R*zeta.
template <class S>
S qesEpsilon(SolutionType t, int n, const S& zeta, const S& r) {
  return S(-4) * r * zeta / S(2 * n + typeOffset(t));
}

template <class S>
CheqParams<S> cheqParameters(SolutionType t, int n, const S& zeta, const S& r, const S& q) {
  const S eps = qesEpsilon(t, n, zeta, r);
  return CheqParams<S>{typeGamma<S>(t), typeDelta<S>(t), eps, S(-n) * eps, q};
}

/// Separation constant from the Heun-side parameters.
template <class S>
S separationConstant(const CheqParams<S>& p) {
  const S sum = p.gamma + p.delta;
  return p.epsilon * p.epsilon / S(16) + p.epsilon * (p.gamma - p.delta) / S(4) -
         sum * (sum - S(2)) / S(4) + (S(2) * p.alpha - S(1)) / S(4) - p.q;
}

/// Same quantity from the per-type closed forms, written out independently of
/// separationConstant() so the two routes can cross-check each other.
template <class S>
S separationConstantTable(Axis axis, SolutionType t, int n, const S& zeta, const S& r,
                          const S& q) {
  const S e = qesEnergy(axis, t, n, zeta);
  const S base = -r * r * e / S(2);
  switch (t) {
    case SolutionType::A:
      return base + S(2 * n) * r * zeta / S(2 * n + 1) - q;
    case SolutionType::B:
      return base + S(2 * n) * r * zeta / S(2 * n + 3) - q - S(1);
    case SolutionType::C:
      return base + S(2 * n - 1) * r * zeta / S(2 * n + 2) - q - scalarFrom<S>(1, 4);
    default:
      return base + S(2 * n + 1) * r * zeta / S(2 * n + 2) - q - scalarFrom<S>(1, 4);
  }
}

/// One fully determined factor F(xi) or G(eta): the Heun polynomial u plus
/// the prefactor data needed to evaluate the factor and its derivatives.
template <class S>
struct SeparatedFactor {
  Axis axis{};
  SolutionType type{};
  int n = 0;       // polynomial degree
  int branch = 0;  // 1-based index of q among the ascending roots
  S zeta{};
  S r{};
  S q{};
  S energy{};
  S epsilon{};
  S lambda{};
  Polynomial<S> poly;  // u in powers of (x+1)
};

/// Numeric construction: solves the accessory-parameter polynomial and picks
/// the requested branch. Throws BranchOutOfRange for branch outside 1..n+1.
SeparatedFactor<double> buildFactor(Axis axis, SolutionType type, int n, int branch,
                                    double z1, double z2, double r);

/// Exact construction for rational data. The supplied q must be an exact root
/// of the criterion polynomial; DomainError otherwise. branch is bookkeeping
/// only (callers know it from the numeric phase).
SeparatedFactor<Rational> buildFactorExact(Axis axis, SolutionType type, int n, int branch,
                                           const Rational& z1, const Rational& z2,
                                           const Rational& r, const Rational& q);

struct FactorValue {
  double value;
  double d1;
  double d2;
};

/// F(x), F'(x), F''(x) with the prefactor handled analytically. For the
/// angular axis the (x-1) half is evaluated as (1-x); both are positive on
/// the physical domains.
FactorValue evaluateFactor(const SeparatedFactor<double>& f, double x);

/// Left-hand side of the separated ODE at x; zero for a true solution.
/// The same expression serves both axes because the angular equation is the
/// radial one with zeta = Z2-Z1 (after an overall sign).
double separatedOdeResidual(const SeparatedFactor<double>& f, double x);

/// u rewritten from powers of (x+1) to plain powers of x.
template <class S>
Polynomial<S> standardBasis(const Polynomial<S>& uInShiftedPowers) {
  return shiftArgument(uInShiftedPowers, S(1));
}

/// Standard-basis coefficients scaled so the leading one is 1.
template <class S>
Polynomial<S> monicStandard(const Polynomial<S>& uInShiftedPowers) {
  Polynomial<S> p = standardBasis(uInShiftedPowers);
  p.trim();
  const S lead = p.coeffs().back();
  if (lead == S(0)) return p;
  std::vector<S> c = p.coeffs();
  for (S& x : c) x /= lead;
  return Polynomial<S>(std::move(c));
}

} // namespace twocenter

#endif
