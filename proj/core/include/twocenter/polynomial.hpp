#ifndef TWOCENTER_POLYNOMIAL_HPP
#define TWOCENTER_POLYNOMIAL_HPP

#include "twocenter/numeric.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

namespace twocenter {

/// Dense univariate polynomial, coefficients in ascending power order.
/// S is double for numeric work or Rational for exact verification.
template <class S>
class Polynomial {
 public:
  Polynomial() : coeffs_{S(0)} {}
  explicit Polynomial(std::vector<S> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(S(0));
  }

  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(S c) { return Polynomial(std::vector<S>{std::move(c)}); }

  const std::vector<S>& coeffs() const { return coeffs_; }
  std::size_t degree() const { return coeffs_.size() - 1; }

  bool isZero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const S& c) { return c == S(0); });
  }

  S operator()(const S& x) const {
    S acc = coeffs_.back();
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) acc = S(acc * x + coeffs_[i]);
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() == 1) return zero();
    std::vector<S> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = S(static_cast<int>(k)) * coeffs_[k];
    return Polynomial(std::move(d));
  }

  Polynomial& trim() {
    while (coeffs_.size() > 1 && coeffs_.back() == S(0)) coeffs_.pop_back();
    return *this;
  }

  double maxAbsCoeff() const {
    double m = 0.0;
    for (const S& c : coeffs_) m = std::max(m, std::abs(toDouble(c)));
    return m;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<S> r(std::max(a.coeffs_.size(), b.coeffs_.size()), S(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] += b.coeffs_[i];
    return Polynomial(std::move(r));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<S> r(std::max(a.coeffs_.size(), b.coeffs_.size()), S(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] -= b.coeffs_[i];
    return Polynomial(std::move(r));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::vector<S> r(a.coeffs_.size() + b.coeffs_.size() - 1, S(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(r));
  }

  friend Polynomial operator*(const S& s, const Polynomial& p) {
    std::vector<S> r(p.coeffs_);
    for (S& c : r) c *= s;
    return Polynomial(std::move(r));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    x.trim();
    y.trim();
    return x.coeffs_ == y.coeffs_;
  }

 private:
  std::vector<S> coeffs_;
};

/// Rebases p(x) to powers of (x - shift):  result(y) = p(y + shift).
template <class S>
Polynomial<S> shiftArgument(const Polynomial<S>& p, const S& shift) {
  // synthetic division by (x - shift), repeated
  std::vector<S> c = p.coeffs();
  std::vector<S> out(c.size(), S(0));
  for (std::size_t k = 0; k < out.size(); ++k) {
    // remainder of dividing by (x - shift) is p evaluated via Horner; the
    // quotient coefficients become the next working set
    S rem = c.back();
    for (std::size_t i = c.size() - 1; i-- > 0;) {
      S next = c[i] + rem * shift;
      c[i] = rem;
      rem = next;
    }
    out[k] = rem;
    c.pop_back();
    if (c.empty()) break;
  }
  return Polynomial<S>(std::move(out));
}

} // namespace twocenter

#endif
