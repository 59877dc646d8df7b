#include "twocenter/mathieu.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <cstdint>
#include <cstring>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace twocenter {

namespace {

// The four parity/period classes of the Fourier recursion. `first` is the
// lowest harmonic (0, 1 or 2), `step` is always 2.
struct ClassSpec {
  int firstHarmonic;
  int eigenIndex;    // rank of the wanted eigenvalue in ascending order
  bool scaledHead;   // true for the even-cosine class (constant term)
  double headShift;  // +-p added to the first diagonal entry (odd classes)
};

ClassSpec classify(MathieuParity parity, int order, double p) {
  if (parity == MathieuParity::Cosine) {
    if (order < 0) throw DomainError("cosine order must be >= 0");
    if (order % 2 == 0) return {0, order / 2, true, 0.0};
    return {1, (order - 1) / 2, false, p};
  }
  if (order < 1) throw DomainError("sine order must be >= 1");
  if (order % 2 == 1) return {1, (order - 1) / 2, false, -p};
  return {2, order / 2 - 1, false, 0.0};
}

// Symmetric tridiagonal of dimension n for the given class.
void fillTridiagonal(const ClassSpec& spec, double p, int n,
                     Eigen::VectorXd& diag, Eigen::VectorXd& sub) {
  diag.resize(n);
  sub.resize(n - 1);
  for (int k = 0; k < n; ++k) {
    const double harmonic = spec.firstHarmonic + 2.0 * k;
    diag[k] = harmonic * harmonic;
  }
  diag[0] += spec.headShift;
  for (int k = 0; k + 1 < n; ++k) sub[k] = p;
  if (spec.scaledHead) sub[0] = std::sqrt(2.0) * p;
}

// k-th smallest eigenvalue of the symmetric tridiagonal (diag, sub) by Sturm
// bisection: the number of negative pivots of LDL^T at shift x counts the
// eigenvalues below x. Only one eigenvalue is ever needed on the scan hot
// path, and this is O(n) per probe while a full QL sweep is O(n^2).
double tridiagonalEigenvalue(const Eigen::VectorXd& diag, const Eigen::VectorXd& sub, int k) {
  const int n = static_cast<int>(diag.size());
  double lo = diag[0], hi = diag[0];
  for (int i = 0; i < n; ++i) {
    const double radius = (i > 0 ? std::abs(sub[i - 1]) : 0.0) +
                          (i + 1 < n ? std::abs(sub[i]) : 0.0);
    lo = std::min(lo, diag[i] - radius);
    hi = std::max(hi, diag[i] + radius);
  }
  auto countBelow = [&](double x) {
    int count = 0;
    double pivot = 1.0;
    for (int i = 0; i < n; ++i) {
      const double offsq = i > 0 ? sub[i - 1] * sub[i - 1] : 0.0;
      pivot = (diag[i] - x) - offsq / pivot;
      if (pivot == 0.0) pivot = -1e-300;  // exact hit: count it below
      if (pivot < 0.0) ++count;
    }
    return count;
  };
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (countBelow(mid) > k) hi = mid;
    else lo = mid;
    if (hi - lo <= 1e-15 * std::max(1.0, std::max(std::abs(lo), std::abs(hi)))) break;
  }
  return 0.5 * (lo + hi);
}

double eigenvalueAt(const ClassSpec& spec, double p, int n) {
  Eigen::VectorXd diag, sub;
  fillTridiagonal(spec, p, n, diag, sub);
  return tridiagonalEigenvalue(diag, sub, spec.eigenIndex);
}

int stabilizedTruncation(const ClassSpec& spec, int order, double p, double* valueOut) {
  int n = std::max(20, 2 * order + static_cast<int>(std::ceil(2.0 * std::sqrt(std::abs(p)))) + 10);
  double value = eigenvalueAt(spec, p, n);
  while (true) {
    const int n2 = 2 * n;
    if (n2 > (1 << 14)) {
      std::ostringstream msg;
      msg << "characteristic value did not stabilize by truncation " << n;
      throw ConvergenceError(msg.str());
    }
    const double next = eigenvalueAt(spec, p, n2);
    if (std::abs(next - value) <= 1e-13 * (1.0 + std::abs(next))) {
      *valueOut = next;
      return n2;
    }
    n = n2;
    value = next;
  }
}

} // namespace

MathieuCharacteristic mathieuCharacteristic(MathieuParity parity, int order, double p) {
  const ClassSpec spec = classify(parity, order, p);
  MathieuCharacteristic out;
  out.parity = parity;
  out.order = order;
  out.p = p;
  out.truncation = stabilizedTruncation(spec, order, p, &out.value);

  Eigen::VectorXd diag, sub;
  fillTridiagonal(spec, p, out.truncation, diag, sub);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  out.value = solver.eigenvalues()[spec.eigenIndex];
  Eigen::VectorXd vec = solver.eigenvectors().col(spec.eigenIndex);

  out.fourier.assign(vec.data(), vec.data() + vec.size());
  if (spec.scaledHead) out.fourier[0] /= std::sqrt(2.0);

  // conventional signs: ce_n(0) > 0, se_n'(0) > 0
  double signProbe = 0.0;
  for (std::size_t k = 0; k < out.fourier.size(); ++k) {
    const double harmonic = spec.firstHarmonic + 2.0 * static_cast<double>(k);
    signProbe += out.fourier[k] * (parity == MathieuParity::Cosine ? 1.0 : harmonic);
  }
  if (signProbe < 0.0)
    for (double& c : out.fourier) c = -c;
  return out;
}

double mathieuCharValue(MathieuParity parity, int order, double p) {
  using Key = std::tuple<int, int, std::int64_t>;
  static std::map<Key, double> cache;
  static std::mutex mutex;

  std::int64_t quantized;
  const double scaled = p * 1e15;
  if (std::abs(scaled) < 9.0e18) {
    quantized = std::llround(scaled);
  } else {
    static_assert(sizeof(double) == sizeof(std::int64_t));
    std::memcpy(&quantized, &p, sizeof(p));
  }
  const Key key{parity == MathieuParity::Cosine ? 0 : 1, order, quantized};
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const ClassSpec spec = classify(parity, order, p);
  double value = 0.0;
  stabilizedTruncation(spec, order, p, &value);
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(key, value);
  return value;
}

double mathieuEval(const MathieuCharacteristic& c, double nu) {
  const int s = c.order % 2;
  const int first = (c.parity == MathieuParity::Sine && s == 0) ? 2 : s;
  // Harmonics step by 2: advance cos/sin with a fixed rotation in long double
  // rather than one trig call per term. The recurrence error stays below
  // double rounding across the truncations in use.
  const long double cd = std::cos(2.0L * static_cast<long double>(nu));
  const long double sd = std::sin(2.0L * static_cast<long double>(nu));
  long double ck = std::cos(static_cast<long double>(first) * nu);
  long double sk = std::sin(static_cast<long double>(first) * nu);
  long double sum = 0.0L;
  for (std::size_t k = 0; k < c.fourier.size(); ++k) {
    sum += static_cast<long double>(c.fourier[k]) *
           (c.parity == MathieuParity::Cosine ? ck : sk);
    const long double cNext = ck * cd - sk * sd;
    sk = sk * cd + ck * sd;
    ck = cNext;
  }
  return static_cast<double>(sum);
}

double mathieuEvalD2(const MathieuCharacteristic& c, double nu) {
  const int s = c.order % 2;
  const int first = (c.parity == MathieuParity::Sine && s == 0) ? 2 : s;
  double sum = 0.0;
  for (std::size_t k = 0; k < c.fourier.size(); ++k) {
    const double harmonic = first + 2.0 * static_cast<double>(k);
    sum -= harmonic * harmonic * c.fourier[k] *
           (c.parity == MathieuParity::Cosine ? std::cos(harmonic * nu)
                                              : std::sin(harmonic * nu));
  }
  return sum;
}

} // namespace twocenter
