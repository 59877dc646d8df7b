#include "twocenter/matching.hpp"

#include "twocenter/errors.hpp"
#include "twocenter/eval.hpp"
#include "twocenter/heun.hpp"
#include "twocenter/mathieu.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>

namespace twocenter {

namespace {

// Ascending criterion roots plus everything needed to turn one of them into a
// separation constant at a given R.
struct AxisState {
  std::vector<double> roots;
  double lambdaBase = 0;  // lambda = lambdaBase - q for the chosen root q
};

AxisState axisState(Axis axis, SolutionType type, int level, double z1, double z2, double r) {
  const double zeta = effectiveCharge(axis, z1, z2);
  const double eps = qesEpsilon(type, level, zeta, r);
  const auto crit = criterionPolynomials<double>(level, typeGamma<double>(type),
                                                 typeDelta<double>(type), eps);
  AxisState st;
  st.roots = realRootsAscending(crit.back());
  // separationConstant is affine in q with slope -1; evaluate the q-free part.
  auto prm = cheqParameters<double>(type, level, zeta, r, 0.0);
  st.lambdaBase = separationConstant(prm);
  return st;
}

// Root displacement guard between two consecutive scan abscissae. Criterion
// roots move smoothly in R; a jump far beyond the local slope bound means two
// branches crossed between samples and the 1-based ordering labels would
// silently swap. Refine by halving before giving up.
void checkContinuation(const std::function<std::vector<double>(double)>& rootsAt, double ra,
                       const std::vector<double>& va, double rb, const std::vector<double>& vb,
                       int depth) {
  bool ok = va.size() == vb.size();
  if (ok) {
    for (std::size_t i = 0; i < va.size(); ++i) {
      const double bound = std::max(10.0 * (rb - ra) * std::max(1.0, std::abs(va[i])), 1e-9);
      if (std::abs(vb[i] - va[i]) > bound) { ok = false; break; }
    }
  }
  if (ok) return;
  if (depth >= 8) {
    std::ostringstream msg;
    msg << "criterion root branches could not be tracked across [" << ra << ", " << rb
        << "]; ordering labels would be ambiguous";
    throw BranchCrossingError(msg.str());
  }
  const double mid = 0.5 * (ra + rb);
  const auto vm = rootsAt(mid);
  checkContinuation(rootsAt, ra, va, mid, vm, depth + 1);
  checkContinuation(rootsAt, mid, vm, rb, vb, depth + 1);
}

// First quarter of the abscissae geometric from rMax*1e-4 to rMax*0.05 (the
// interesting small-R structure), remainder uniform up to rMax.
std::vector<double> scanGrid(double rMax, int points) {
  if (points < 8) points = 8;
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(points));
  const int nGeo = points / 4;
  const double lo = rMax * 1e-4;
  const double knee = rMax * 0.05;
  for (int i = 0; i < nGeo; ++i)
    grid.push_back(lo * std::pow(knee / lo, static_cast<double>(i) / (nGeo - 1)));
  const int nUni = points - nGeo;
  for (int i = 1; i <= nUni; ++i)
    grid.push_back(knee + (rMax - knee) * static_cast<double>(i) / nUni);
  return grid;
}

// Bisection on a bracketing interval, then a few secant polish steps. g must
// change sign (or vanish) between lo and hi.
double refineRoot(const std::function<double(double)>& g, double lo, double hi, double glo,
                  double ghi, double relTol) {
  if (glo == 0.0) return lo;
  if (ghi == 0.0) return hi;
  const double floorWidth = 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, hi);
  const double target = std::max(relTol * std::max(1.0, hi), floorWidth);
  for (int it = 0; it < 200 && hi - lo > target; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if (gm == 0.0) return mid;
    if ((gm < 0) == (glo < 0)) { lo = mid; glo = gm; }
    else { hi = mid; ghi = gm; }
  }
  // Secant inside the final bracket; keep the bisection answer if it strays.
  double x0 = lo, f0 = glo, x1 = hi, f1 = ghi;
  for (int it = 0; it < 4; ++it) {
    if (f1 == f0) break;
    const double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
    if (!std::isfinite(x2) || x2 < lo || x2 > hi) break;
    x0 = x1; f0 = f1;
    x1 = x2; f1 = g(x2);
    if (f1 == 0.0) return x1;
  }
  return std::abs(f1) < std::abs(f0) ? x1 : 0.5 * (lo + hi);
}

void dedupeRoots(std::vector<MatchedRoot>& roots) {
  std::sort(roots.begin(), roots.end(),
            [](const MatchedRoot& a, const MatchedRoot& b) { return a.r < b.r; });
  std::vector<MatchedRoot> kept;
  for (const auto& root : roots) {
    bool dup = false;
    for (const auto& k : kept) {
      if (std::abs(root.r - k.r) <= 1e-9 * std::max(1.0, std::abs(k.r)) &&
          std::abs(root.lambda - k.lambda) <= 1e-9 * std::max(1.0, std::abs(k.lambda))) {
        dup = true;
        break;
      }
    }
    if (!dup) kept.push_back(root);
  }
  roots = std::move(kept);
}

// Scan + bisect every (j, k) branch combination of one candidate in a single
// pass so the expensive per-abscissa eigenvalue work is shared.
std::vector<std::vector<std::vector<MatchedRoot>>> matchCandidate(const MatchCandidate& cand,
                                                                  double z1, double z2,
                                                                  double rMax, double tol,
                                                                  int gridPoints) {
  const int nj = cand.radial.level + 1;
  const int nk = cand.angular.level + 1;
  auto radialAt = [&](double r) {
    return axisState(Axis::Radial, cand.radial.type, cand.radial.level, z1, z2, r);
  };
  auto angularAt = [&](double r) {
    return axisState(Axis::Angular, cand.angular.type, cand.angular.level, z1, z2, r);
  };
  auto radialRoots = [&](double r) { return radialAt(r).roots; };
  auto angularRoots = [&](double r) { return angularAt(r).roots; };

  const auto grid = scanGrid(rMax, gridPoints);
  std::vector<AxisState> rad(grid.size()), ang(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    rad[i] = radialAt(grid[i]);
    ang[i] = angularAt(grid[i]);
    if (i > 0) {
      checkContinuation(radialRoots, grid[i - 1], rad[i - 1].roots, grid[i], rad[i].roots, 0);
      checkContinuation(angularRoots, grid[i - 1], ang[i - 1].roots, grid[i], ang[i].roots, 0);
    }
  }

  std::vector<std::vector<std::vector<MatchedRoot>>> out(
      static_cast<std::size_t>(nj), std::vector<std::vector<MatchedRoot>>(static_cast<std::size_t>(nk)));
  for (int j = 1; j <= nj; ++j) {
    for (int k = 1; k <= nk; ++k) {
      auto gAt = [&](double r) {
        const auto rs = radialAt(r);
        const auto as = angularAt(r);
        return (rs.lambdaBase - rs.roots[static_cast<std::size_t>(j - 1)]) -
               (as.lambdaBase - as.roots[static_cast<std::size_t>(k - 1)]);
      };
      auto gCached = [&](std::size_t i) {
        return (rad[i].lambdaBase - rad[i].roots[static_cast<std::size_t>(j - 1)]) -
               (ang[i].lambdaBase - ang[i].roots[static_cast<std::size_t>(k - 1)]);
      };
      auto& sink = out[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)];
      double gPrev = gCached(0);
      if (gPrev == 0.0) sink.push_back({grid[0], rad[0].lambdaBase - rad[0].roots[static_cast<std::size_t>(j - 1)]});
      for (std::size_t i = 1; i < grid.size(); ++i) {
        const double gOrig = gCached(i);
        if (gOrig == 0.0) {
          sink.push_back({grid[i], rad[i].lambdaBase - rad[i].roots[static_cast<std::size_t>(j - 1)]});
        } else if ((gPrev < 0) != (gOrig < 0) && gPrev != 0.0) {
          const double r = refineRoot(gAt, grid[i - 1], grid[i], gPrev, gOrig, tol);
          const auto rs = radialAt(r);
          sink.push_back({r, rs.lambdaBase - rs.roots[static_cast<std::size_t>(j - 1)]});
        }
        gPrev = gOrig;
      }
      dedupeRoots(sink);
    }
  }
  return out;
}

std::string candidateLabel(const AxisCandidate& c) {
  return std::string(1, typeLabel(c.type)) + "(" + std::to_string(c.level) + ")";
}

// Promote a matched root to exact arithmetic when R snaps to a small rational
// and everything re-verifies exactly; see buildEigenfunction.
void tryExactPromotion(ElementaryEigenfunction& sol, const MatchCandidate& cand, int j, int k,
                       const Rational& z1, const Rational& z2) {
  const auto rSnap = snapToRational(sol.r, 1000000, 1e-10);
  if (!rSnap) return;
  const auto qrSnap = snapToRational(sol.radial.q, 1000000, 1e-10);
  const auto qaSnap = snapToRational(sol.angularPoly->q, 1000000, 1e-10);
  if (!qrSnap || !qaSnap) return;
  try {
    auto radialExact = buildFactorExact(Axis::Radial, cand.radial.type, cand.radial.level, j,
                                        z1, z2, *rSnap, *qrSnap);
    auto angularExact = buildFactorExact(Axis::Angular, cand.angular.type, cand.angular.level, k,
                                         z1, z2, *rSnap, *qaSnap);
    if (radialExact.lambda != angularExact.lambda) return;
    sol.rExact = *rSnap;
    sol.lambdaExact = radialExact.lambda;
    sol.radialExact = std::move(radialExact);
    sol.angularExact = std::move(angularExact);
  } catch (const DomainError&) {
    // Snapped value is not an exact criterion root: stay in floating point.
  }
}

ElementaryEigenfunction assembleAsymmetric(const MatchCandidate& cand, int j, int k,
                                           const Rational& z1, const Rational& z2, double r) {
  const double z1d = toDouble(z1);
  const double z2d = toDouble(z2);
  ElementaryEigenfunction sol;
  sol.z1 = z1d;
  sol.z2 = z2d;
  sol.z1Exact = z1;
  sol.z2Exact = z2;
  sol.r = r;
  sol.radial = buildFactor(Axis::Radial, cand.radial.type, cand.radial.level, j, z1d, z2d, r);
  sol.angularPoly = buildFactor(Axis::Angular, cand.angular.type, cand.angular.level, k, z1d, z2d, r);
  sol.energy = sol.radial.energy;
  sol.energyExact = qesEnergy<Rational>(Axis::Radial, cand.radial.type, cand.radial.level, z1 + z2);
  sol.lambda = 0.5 * (sol.radial.lambda + sol.angularPoly->lambda);

  tryExactPromotion(sol, cand, j, k, z1, z2);
  if (sol.rExact) {
    // Re-derive the floating-point view from the exact one so emitted numbers
    // are reproducible bit-for-bit regardless of the bisection path taken.
    sol.r = toDouble(*sol.rExact);
    sol.radial = buildFactor(Axis::Radial, cand.radial.type, cand.radial.level, j, z1d, z2d, sol.r);
    sol.angularPoly = buildFactor(Axis::Angular, cand.angular.type, cand.angular.level, k, z1d, z2d, sol.r);
    sol.lambda = toDouble(*sol.lambdaExact);
  }

  std::ostringstream prov;
  prov << "pair n1=" << cand.pair.n1 << " n2=" << cand.pair.n2 << "; radial "
       << candidateLabel(cand.radial) << " branch " << j << " x angular "
       << candidateLabel(cand.angular) << " branch " << k << "; scan+bisection"
       << (sol.rExact ? "; exact" : "");
  sol.provenance = prov.str();
  return sol;
}

void finalizeList(std::vector<ElementaryEigenfunction>& out) {
  std::sort(out.begin(), out.end(), [](const ElementaryEigenfunction& a,
                                       const ElementaryEigenfunction& b) {
    const double ea = std::abs(a.energy), eb = std::abs(b.energy);
    if (std::abs(ea - eb) > 1e-12 * std::max(1.0, std::max(ea, eb))) return ea > eb;
    return a.r < b.r;
  });
}

// Keep only normalizable candidates and stamp the constant while we are here.
void admitAndNormalize(std::vector<ElementaryEigenfunction>& out, ElementaryEigenfunction&& sol) {
  try {
    sol.normalization = normalize(sol);
  } catch (const NormalizationDivergence&) {
    return;
  }
  out.push_back(std::move(sol));
}

} // namespace

std::vector<DiophantinePair> solveDiophantine(const Rational& z1, const Rational& z2,
                                              long long n1Max) {
  if (z1 == z2)
    throw SymmetricCaseError("equal charges: the two quantum numbers obey no integer ratio "
                             "constraint and polynomial angular factors do not exist");
  if (z1 + z2 == 0) throw DomainError("charge sum must be nonzero");
  // n1 |Z2 - Z1| = n2 (Z1 + Z2) with n1, n2 positive integers: all solutions
  // are integer multiples of the lowest-terms ratio.
  Rational ratio = Rational((z1 + z2) / (z2 - z1));
  if (ratio < 0) ratio = -ratio;
  const BigInt n1Step = boost::multiprecision::numerator(ratio);
  const BigInt n2Step = boost::multiprecision::denominator(ratio);
  std::vector<DiophantinePair> pairs;
  for (BigInt m = 1; BigInt(n1Step * m) <= n1Max; ++m)
    pairs.push_back({static_cast<long long>(BigInt(n1Step * m)),
                     static_cast<long long>(BigInt(n2Step * m))});
  return pairs;
}

std::vector<AxisCandidate> decodeQuantumNumber(int n) {
  std::vector<AxisCandidate> out;
  if (n < 1) return out;
  if (n % 2 == 1) {
    out.push_back({SolutionType::A, (n - 1) / 2});
    if (n >= 3) out.push_back({SolutionType::B, (n - 3) / 2});
  } else {
    out.push_back({SolutionType::C, (n - 2) / 2});
    out.push_back({SolutionType::D, (n - 2) / 2});
  }
  return out;
}

std::vector<MatchCandidate> enumerateCandidates(const DiophantinePair& pair) {
  std::vector<MatchCandidate> out;
  for (const auto& radial : decodeQuantumNumber(pair.n1))
    for (const auto& angular : decodeQuantumNumber(pair.n2))
      out.push_back({radial, angular, pair});
  return out;
}

double defaultRMax(double z1, double z2) {
  return 20.0 * std::max(1.0, 1.0 / std::abs(z1 + z2));
}

std::vector<MatchedRoot> matchR(const MatchCandidate& cand, int branchRadial, int branchAngular,
                                double z1, double z2, double rMax, double tol, int gridPoints) {
  if (branchRadial < 1 || branchRadial > cand.radial.level + 1)
    throw BranchOutOfRange("radial branch index " + std::to_string(branchRadial) +
                           " outside 1.." + std::to_string(cand.radial.level + 1));
  if (branchAngular < 1 || branchAngular > cand.angular.level + 1)
    throw BranchOutOfRange("angular branch index " + std::to_string(branchAngular) +
                           " outside 1.." + std::to_string(cand.angular.level + 1));
  auto all = matchCandidate(cand, z1, z2, rMax, tol, gridPoints);
  return all[static_cast<std::size_t>(branchRadial - 1)][static_cast<std::size_t>(branchAngular - 1)];
}

ElementaryEigenfunction buildEigenfunction(const MatchCandidate& cand, int branchRadial,
                                           int branchAngular, const Rational& z1,
                                           const Rational& z2, double rMatched) {
  return assembleAsymmetric(cand, branchRadial, branchAngular, z1, z2, rMatched);
}

std::vector<ElementaryEigenfunction> solveElementary(const Rational& z1, const Rational& z2,
                                                     const MatchOptions& opts) {
  const auto pairs = solveDiophantine(z1, z2, opts.n1Max);
  const double z1d = toDouble(z1);
  const double z2d = toDouble(z2);
  const double rMax = opts.rMax > 0 ? opts.rMax : defaultRMax(z1d, z2d);

  std::vector<ElementaryEigenfunction> out;
  for (const auto& pair : pairs) {
    for (const auto& cand : enumerateCandidates(pair)) {
      auto rootsByBranch = matchCandidate(cand, z1d, z2d, rMax, opts.tol, opts.gridPoints);
      std::vector<ElementaryEigenfunction> found;
      for (int j = 1; j <= cand.radial.level + 1; ++j) {
        for (int k = 1; k <= cand.angular.level + 1; ++k) {
          for (const auto& root :
               rootsByBranch[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)]) {
            auto sol = assembleAsymmetric(cand, j, k, z1, z2, root.r);
            // Distinct branch pairs can land on the same (R, lambda); such
            // hits describe one eigenfunction and are reported once.
            bool dup = false;
            for (const auto& prev : found) {
              if (std::abs(prev.r - sol.r) <= 1e-9 * std::max(1.0, std::abs(prev.r)) &&
                  std::abs(prev.lambda - sol.lambda) <= 1e-9 * std::max(1.0, std::abs(prev.lambda))) {
                dup = true;
                break;
              }
            }
            if (!dup) found.push_back(std::move(sol));
          }
        }
      }
      for (auto& sol : found) admitAndNormalize(out, std::move(sol));
    }
  }
  finalizeList(out);
  return out;
}

std::vector<ElementaryEigenfunction> solveSymmetric(const Rational& z, const MatchOptions& opts) {
  if (z <= 0) throw DomainError("charge must be positive");
  const double zd = toDouble(z);
  const double rMax = opts.rMax > 0 ? opts.rMax : defaultRMax(zd, zd);
  const auto grid = scanGrid(rMax, opts.gridPoints);

  const SolutionType types[] = {SolutionType::A, SolutionType::B, SolutionType::C,
                                SolutionType::D};
  std::vector<ElementaryEigenfunction> out;
  for (SolutionType type : types) {
    for (int level = 0; level <= opts.nrMax; ++level) {
      const double energy = toDouble(qesEnergy<Rational>(Axis::Radial, type, level, z + z));
      auto radialAt = [&](double r) { return axisState(Axis::Radial, type, level, zd, zd, r); };
      auto radialRoots = [&](double r) { return radialAt(r).roots; };
      std::vector<AxisState> rad(grid.size());
      for (std::size_t i = 0; i < grid.size(); ++i) {
        rad[i] = radialAt(grid[i]);
        if (i > 0)
          checkContinuation(radialRoots, grid[i - 1], rad[i - 1].roots, grid[i], rad[i].roots, 0);
      }

      for (int j = 1; j <= level + 1; ++j) {
        struct AngularChoice { MathieuParity parity; int order; };
        std::vector<AngularChoice> choices;
        for (int nOrd = 0; nOrd <= opts.mathieuNMax; ++nOrd)
          choices.push_back({MathieuParity::Cosine, nOrd});
        for (int nOrd = 1; nOrd <= opts.mathieuNMax; ++nOrd)
          choices.push_back({MathieuParity::Sine, nOrd});
        for (const auto& choice : choices) {
          // Angular equation admits cos-eta-periodic solutions with
          // characteristic a = -lambda - E R^2 / 4 at parameter p = E R^2 / 8;
          // match the radial separation constant against that requirement.
          auto gFrom = [&](const AxisState& rs, double r) {
            const double lambda = rs.lambdaBase - rs.roots[static_cast<std::size_t>(j - 1)];
            const double p = energy * r * r / 8.0;
            return -lambda - energy * r * r / 4.0 -
                   mathieuCharValue(choice.parity, choice.order, p);
          };
          auto gAt = [&](double r) { return gFrom(radialAt(r), r); };
          std::vector<ElementaryEigenfunction> found;
          auto emit = [&](double r) {
            ElementaryEigenfunction sol;
            sol.z1 = zd;
            sol.z2 = zd;
            sol.z1Exact = z;
            sol.z2Exact = z;
            sol.r = r;
            sol.radial = buildFactor(Axis::Radial, type, level, j, zd, zd, r);
            sol.energy = sol.radial.energy;
            sol.energyExact = qesEnergy<Rational>(Axis::Radial, type, level, z + z);
            sol.lambda = sol.radial.lambda;
            sol.angularMathieu =
                MathieuFactor{mathieuCharacteristic(choice.parity, choice.order,
                                                    energy * r * r / 8.0)};
            std::ostringstream prov;
            prov << "equal charges; radial " << typeLabel(type) << "(" << level << ") branch "
                 << j << " x "
                 << (choice.parity == MathieuParity::Cosine ? "cosine" : "sine")
                 << " class order " << choice.order << "; scan+bisection";
            sol.provenance = prov.str();
            bool dup = false;
            for (const auto& prev : found) {
              if (std::abs(prev.r - sol.r) <= 1e-9 * std::max(1.0, std::abs(prev.r)) &&
                  std::abs(prev.lambda - sol.lambda) <= 1e-9 * std::max(1.0, std::abs(prev.lambda))) {
                dup = true;
                break;
              }
            }
            if (!dup) found.push_back(std::move(sol));
          };
          double gPrev = gFrom(rad[0], grid[0]);
          if (gPrev == 0.0) emit(grid[0]);
          for (std::size_t i = 1; i < grid.size(); ++i) {
            const double gCur = gFrom(rad[i], grid[i]);
            if (gCur == 0.0) {
              emit(grid[i]);
            } else if ((gPrev < 0) != (gCur < 0) && gPrev != 0.0) {
              emit(refineRoot(gAt, grid[i - 1], grid[i], gPrev, gCur, opts.tol));
            }
            gPrev = gCur;
          }
          for (auto& sol : found) admitAndNormalize(out, std::move(sol));
        }
      }
    }
  }
  finalizeList(out);
  return out;
}

} // namespace twocenter
