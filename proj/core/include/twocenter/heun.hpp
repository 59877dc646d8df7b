#ifndef TWOCENTER_HEUN_HPP
#define TWOCENTER_HEUN_HPP

#include "twocenter/errors.hpp"
#include "twocenter/polynomial.hpp"

#include <vector>

namespace twocenter {

/// Confluent Heun equation on z in [-1,1] with regular singular points at
/// z = -1 (exponent pair 0, 1-gamma) and z = +1 (0, 1-delta):
///
///   u'' + (epsilon/2 + gamma/(z+1) + delta/(z-1)) u'
///       + (alpha (z+1)/2 - q) / ((z+1)(z-1)) u = 0.
///
/// Polynomial solutions of degree n exist iff alpha = -n*epsilon and q is a
/// root of the degree-(n+1) criterion polynomial built below.
template <class S>
struct CheqParams {
  S gamma;
  S delta;
  S epsilon;
  S alpha;
  S q;
};

/// Three-term recurrence in the accessory parameter q:
///   P_0 = 1,
///   P_{k+1}(q) = (q - k(delta+gamma-epsilon+k-1)) P_k(q)
///              - k*epsilon*(n-k+1)*(gamma+k-1) P_{k-1}(q).
/// Returns P_0 .. P_{n+1}; roots of P_{n+1} are the admissible q values.
template <class S>
std::vector<Polynomial<S>> criterionPolynomials(int n, const S& gamma, const S& delta,
                                                const S& epsilon) {
  std::vector<Polynomial<S>> P;
  P.reserve(static_cast<std::size_t>(n) + 2);
  P.push_back(Polynomial<S>::constant(S(1)));
  const Polynomial<S> qPoly(std::vector<S>{S(0), S(1)});
  for (int k = 0; k <= n; ++k) {
    const S kk = S(k);
    Polynomial<S> linear = qPoly - Polynomial<S>::constant(kk * (delta + gamma - epsilon + kk - S(1)));
    Polynomial<S> next = linear * P.back();
    if (k >= 1) {
      const S drop = kk * epsilon * S(n - k + 1) * (gamma + kk - S(1));
      next = next - drop * P[static_cast<std::size_t>(k) - 1];
    }
    P.push_back(next.trim());
  }
  return P;
}

/// Polynomial part of the solution in powers of t = z+1, for an admissible q:
///   u(t) = sum_{k=0}^{n} (-1)^k P_k(q) / (2^k k! (gamma)_k) t^k.
/// Exact when S is Rational and q is an exact root.
template <class S>
Polynomial<S> heunPolynomial(int n, const S& gamma, const S& delta, const S& epsilon,
                             const S& q) {
  const auto P = criterionPolynomials(n, gamma, delta, epsilon);
  std::vector<S> c(static_cast<std::size_t>(n) + 1);
  S sign(1), twoPow(1), factorial(1), pochhammer(1);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      sign = -sign;
      twoPow *= S(2);
      factorial *= S(k);
      pochhammer *= gamma + S(k - 1);
    }
    c[static_cast<std::size_t>(k)] = sign * P[static_cast<std::size_t>(k)](q) /
                                     (twoPow * factorial * pochhammer);
  }
  return Polynomial<S>(std::move(c));
}

/// Applies the differential operator to a candidate polynomial u(t), t = z+1.
/// Multiplying the equation through by (z+1)(z-1) = t(t-2) gives
///   L[u] = t(t-2) u'' + (epsilon/2 t(t-2) + gamma(t-2) + delta t) u'
///        + (alpha/2 t - q) u,
/// which is identically zero exactly when u solves the equation.
template <class S>
Polynomial<S> cheqResidual(const CheqParams<S>& prm, const Polynomial<S>& u) {
  const Polynomial<S> t(std::vector<S>{S(0), S(1)});
  const Polynomial<S> tm2(std::vector<S>{S(-2), S(1)});
  const Polynomial<S> du = u.derivative();
  const Polynomial<S> ddu = du.derivative();
  const S half = S(1) / S(2);
  Polynomial<S> r = t * tm2 * ddu;
  r = r + (half * prm.epsilon * (t * tm2) + prm.gamma * tm2 + prm.delta * t) * du;
  r = r + (half * prm.alpha * t - Polynomial<S>::constant(prm.q)) * u;
  return r.trim();
}

/// Independent power-series route around t = 0 (z = -1). With a_0 = 1,
///   a_{k+1} = ([k(k-1+gamma+delta-epsilon) - q] a_k
///             + (epsilon(k-1) + alpha)/2 a_{k-1}) / (2(k+1)(k+gamma)).
/// When alpha = -n*epsilon and q is admissible the series truncates at
/// degree n and reproduces heunPolynomial term by term; used as a
/// cross-check, never as the production path.
template <class S>
std::vector<S> frobeniusSeries(const CheqParams<S>& prm, int count) {
  std::vector<S> a(static_cast<std::size_t>(count));
  if (count == 0) return a;
  a[0] = S(1);
  const S half = S(1) / S(2);
  for (int k = 0; k + 1 < count; ++k) {
    const S kk = S(k);
    S num = (kk * (kk - S(1) + prm.gamma + prm.delta - prm.epsilon) - prm.q) * a[static_cast<std::size_t>(k)];
    if (k >= 1) num += half * (prm.epsilon * (kk - S(1)) + prm.alpha) * a[static_cast<std::size_t>(k) - 1];
    a[static_cast<std::size_t>(k) + 1] = num / (S(2) * (kk + S(1)) * (kk + prm.gamma));
  }
  return a;
}

/// All roots of a real-coefficient polynomial that is known, from the theory,
/// to have simple real roots. Companion-matrix eigenvalues (with coefficient
/// scaling for balance) polished by Newton iteration. Ascending order; the
/// 1-based position in this ordering is the branch index used throughout.
///
/// Throws RootRealityError if any root has a relative imaginary part above
/// 1e-10 or two roots collide within 1e-10: both signal parameters outside
/// the regime this solver is meant for.
std::vector<double> realRootsAscending(const Polynomial<double>& p);

} // namespace twocenter

#endif
