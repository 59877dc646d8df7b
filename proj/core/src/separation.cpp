#include "twocenter/separation.hpp"

#include <cmath>
#include <sstream>

namespace twocenter {

char typeLabel(SolutionType t) {
  switch (t) {
    case SolutionType::A: return 'a';
    case SolutionType::B: return 'b';
    case SolutionType::C: return 'c';
    default: return 'd';
  }
}

std::optional<SolutionType> typeFromLabel(char c) {
  switch (c) {
    case 'a': return SolutionType::A;
    case 'b': return SolutionType::B;
    case 'c': return SolutionType::C;
    case 'd': return SolutionType::D;
    default: return std::nullopt;
  }
}

int typeOffset(SolutionType t) {
  switch (t) {
    case SolutionType::A: return 1;
    case SolutionType::B: return 3;
    default: return 2;
  }
}

SeparatedFactor<double> buildFactor(Axis axis, SolutionType type, int n, int branch,
                                    double z1, double z2, double r) {
  if (n < 0) throw DomainError("polynomial degree must be non-negative");
  if (branch < 1 || branch > n + 1) {
    std::ostringstream msg;
    msg << "branch " << branch << " outside 1.." << n + 1 << " for degree " << n;
    throw BranchOutOfRange(msg.str());
  }
  SeparatedFactor<double> f;
  f.axis = axis;
  f.type = type;
  f.n = n;
  f.branch = branch;
  f.zeta = effectiveCharge(axis, z1, z2);
  f.r = r;
  f.energy = qesEnergy(axis, type, n, f.zeta);
  f.epsilon = qesEpsilon(type, n, f.zeta, r);

  const double gamma = typeGamma<double>(type);
  const double delta = typeDelta<double>(type);
  const auto P = criterionPolynomials(n, gamma, delta, f.epsilon);
  const std::vector<double> roots = realRootsAscending(P.back());
  f.q = roots[static_cast<std::size_t>(branch) - 1];
  f.poly = heunPolynomial(n, gamma, delta, f.epsilon, f.q);
  f.lambda = separationConstant(cheqParameters(type, n, f.zeta, r, f.q));
  return f;
}

SeparatedFactor<Rational> buildFactorExact(Axis axis, SolutionType type, int n, int branch,
                                           const Rational& z1, const Rational& z2,
                                           const Rational& r, const Rational& q) {
  if (n < 0) throw DomainError("polynomial degree must be non-negative");
  SeparatedFactor<Rational> f;
  f.axis = axis;
  f.type = type;
  f.n = n;
  f.branch = branch;
  f.zeta = effectiveCharge(axis, z1, z2);
  f.r = r;
  f.energy = qesEnergy(axis, type, n, f.zeta);
  f.epsilon = qesEpsilon(type, n, f.zeta, r);

  const Rational gamma = typeGamma<Rational>(type);
  const Rational delta = typeDelta<Rational>(type);
  const auto P = criterionPolynomials(n, gamma, delta, f.epsilon);
  if (P.back()(q) != Rational(0))
    throw DomainError("supplied accessory parameter is not an exact root");
  f.q = q;
  f.poly = heunPolynomial(n, gamma, delta, f.epsilon, q);
  f.lambda = separationConstant(cheqParameters(type, n, f.zeta, r, q));
  return f;
}

FactorValue evaluateFactor(const SeparatedFactor<double>& f, double x) {
  const double gamma = typeGamma<double>(f.type);
  const double delta = typeDelta<double>(f.type);
  const double a = (2.0 * gamma - 1.0) / 4.0;  // exponent on (x+1)
  const double b = (2.0 * delta - 1.0) / 4.0;  // exponent on +-(x-1)

  const double plusHalf = x + 1.0;
  const double minusHalf = f.axis == Axis::Radial ? x - 1.0 : 1.0 - x;
  const double pref = std::pow(plusHalf, a) * std::pow(minusHalf, b) *
                      std::exp(f.epsilon * x / 4.0);

  // logarithmic derivative of the prefactor; the (1-x) variant has the same
  // form because the sign cancels between numerator and chain rule
  const double L = a / (x + 1.0) + b / (x - 1.0) + f.epsilon / 4.0;
  const double Lp = -a / ((x + 1.0) * (x + 1.0)) - b / ((x - 1.0) * (x - 1.0));

  const double t = x + 1.0;
  const double u = f.poly(t);
  const double du = f.poly.derivative()(t);
  const double ddu = f.poly.derivative().derivative()(t);

  FactorValue v;
  v.value = pref * u;
  v.d1 = pref * (L * u + du);
  v.d2 = pref * ((L * L + Lp) * u + 2.0 * L * du + ddu);
  return v;
}

double separatedOdeResidual(const SeparatedFactor<double>& f, double x) {
  const FactorValue v = evaluateFactor(f, x);
  const double r2 = f.r * f.r;
  return (x * x - 1.0) * v.d2 + x * v.d1 +
         (f.energy * r2 / 2.0 * x * x + f.r * f.zeta * x + f.lambda) * v.value;
}

} // namespace twocenter
