#ifndef TWOCENTER_MATCHING_HPP
#define TWOCENTER_MATCHING_HPP

#include "twocenter/solution.hpp"

#include <vector>

namespace twocenter {

/// A pair (n1, n2) with n1*|Z2-Z1| = n2*(Z1+Z2): both axes then share the
/// energy -2(Z1+Z2)^2/n1^2 = -2(Z2-Z1)^2/n2^2, the precondition for a
/// common elementary solution.
struct DiophantinePair {
  long long n1 = 0;
  long long n2 = 0;
};

/// All pairs with n1 <= n1Max. Writing |Z2-Z1|/(Z1+Z2) = u/v in lowest terms,
/// they are (v*m, u*m) for m = 1, 2, ....
/// Throws SymmetricCaseError for Z1 = Z2 (no pair exists; Mathieu route).
std::vector<DiophantinePair> solveDiophantine(const Rational& z1, const Rational& z2,
                                              long long n1Max);

struct AxisCandidate {
  SolutionType type{};
  int level = 0;  // polynomial degree n^r or n^a
};

struct MatchCandidate {
  AxisCandidate radial;
  AxisCandidate angular;
  DiophantinePair pair;
};

/// Decodings of (n1, n2) into quantized types: odd n -> a((n-1)/2) and, for
/// n >= 3, b((n-3)/2); even n -> c((n-2)/2) and d((n-2)/2). Cartesian product
/// of the radial and angular decodings (branches enumerated by the caller).
std::vector<MatchCandidate> enumerateCandidates(const DiophantinePair& pair);

struct MatchOptions {
  long long n1Max = 6;
  double rMax = 0.0;      // <= 0 means the default 20*max(1, 1/(Z1+Z2))
  double tol = 1e-12;     // relative bisection tolerance on R
  int gridPoints = 2000;  // scan grid size
  int nrMax = 2;          // symmetric case: radial level bound
  int mathieuNMax = 2;    // symmetric case: Mathieu order bound
};

double defaultRMax(double z1, double z2);

struct MatchedRoot {
  double r = 0.0;
  double lambda = 0.0;
};

/// All R in (0, rMax] where the radial branch-j and angular branch-k
/// separation constants coincide. The scan grid is geometric near 0 and
/// uniform above; sign changes are bisected to relative tolerance tol and
/// polished. Root identity across the grid is maintained by ascending-order
/// selection plus a nearest-continuation check; an ambiguous cell is halved
/// up to 8 times before BranchCrossingError.
std::vector<MatchedRoot> matchR(const MatchCandidate& cand, int branchJ, int branchK,
                                double z1, double z2, double rMax, double tol,
                                int gridPoints);

/// Assembles the full eigenfunction at a matched R, then tries to promote the
/// result to exact rationals: R and both accessory parameters are snapped and
/// verified in exact arithmetic (criterion polynomial root and exact lambda
/// equality); on success the exact mirrors are filled.
ElementaryEigenfunction buildEigenfunction(const MatchCandidate& cand, int branchJ,
                                           int branchK, const Rational& z1,
                                           const Rational& z2, double rMatched);

/// Full pipeline for distinct charges: Diophantine pairs, candidates, branch
/// combinations, R-matching, de-duplication, normalizability filter; sorted
/// by |E| descending then R ascending.
std::vector<ElementaryEigenfunction> solveElementary(const Rational& z1, const Rational& z2,
                                                     const MatchOptions& opts);

/// Equal charges: radial QES factor + Mathieu angular factor. Matches R where
/// -lambda(R) - E R^2/4 equals a Mathieu characteristic value a_n(E R^2/8) or
/// b_n(E R^2/8), for radial levels <= nrMax and Mathieu orders <= mathieuNMax.
std::vector<ElementaryEigenfunction> solveSymmetric(const Rational& z, const MatchOptions& opts);

} // namespace twocenter

#endif
