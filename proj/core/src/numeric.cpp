#include "twocenter/numeric.hpp"

#include <cctype>
#include <cstdlib>

namespace twocenter {

std::optional<Rational> parseRational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') {
    negative = (text[i] == '-');
    ++i;
  }
  BigInt num = 0, den = 1;
  bool sawDigit = false, sawDot = false, sawSlash = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      num = num * 10 + (c - '0');
      if (sawDot) den *= 10;
      sawDigit = true;
    } else if (c == '.' && !sawDot && !sawSlash) {
      sawDot = true;
    } else if (c == '/' && !sawSlash && !sawDot && sawDigit) {
      // integer numerator so far; parse the denominator as an integer
      BigInt d = 0;
      bool anyDen = false;
      for (++i; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
        d = d * 10 + (text[i] - '0');
        anyDen = true;
      }
      if (!anyDen || d == 0) return std::nullopt;
      den = d;
      sawSlash = true;
      break;
    } else {
      return std::nullopt;
    }
  }
  if (!sawDigit) return std::nullopt;
  Rational r(num, den);
  return negative ? Rational(-r) : r;
}

std::optional<Rational> snapToRational(double x, std::int64_t maxDen, double relTol) {
  if (!std::isfinite(x)) return std::nullopt;
  const double tol = relTol * std::max(1.0, std::abs(x));
  // continued-fraction convergents h_k / k_k
  double v = x;
  std::int64_t h0 = 1, h1 = static_cast<std::int64_t>(std::floor(v));
  std::int64_t k0 = 0, k1 = 1;
  double frac = v - std::floor(v);
  for (int it = 0; it < 64; ++it) {
    if (std::abs(x - static_cast<double>(h1) / static_cast<double>(k1)) <= tol)
      return Rational(BigInt(h1), BigInt(k1));
    if (frac < 1e-18) break;
    v = 1.0 / frac;
    const double fl = std::floor(v);
    if (fl > 9.0e17) break;
    const auto a = static_cast<std::int64_t>(fl);
    frac = v - fl;
    const std::int64_t h2 = a * h1 + h0;
    const std::int64_t k2 = a * k1 + k0;
    if (k2 > maxDen || k2 <= 0) break;
    h0 = h1; h1 = h2;
    k0 = k1; k1 = k2;
  }
  if (std::abs(x - static_cast<double>(h1) / static_cast<double>(k1)) <= tol)
    return Rational(BigInt(h1), BigInt(k1));
  return std::nullopt;
}

} // namespace twocenter
