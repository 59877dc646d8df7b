#ifndef TWOCENTER_NUMERIC_HPP
#define TWOCENTER_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>

namespace twocenter {

/// Exact scalar used whenever all inputs of a computation are rational.
/// Arbitrary precision, so recurrence coefficients never overflow.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double toDouble(const Rational& x) { return x.template convert_to<double>(); }
inline double toDouble(double x) { return x; }

template <class S>
S scalarFrom(long long num, long long den) {
  if constexpr (std::is_same_v<S, Rational>) {
    return Rational(num, den);
  } else {
    return static_cast<double>(num) / static_cast<double>(den);
  }
}

inline std::string toString(const Rational& x) { return x.str(); }

/// Parses "5", "-3/8" or a finite decimal like "0.25" into an exact rational.
std::optional<Rational> parseRational(const std::string& text);

/// Nearest small-denominator rational via continued fractions. Returns the
/// first convergent p/q with q <= maxDen and |x - p/q| <= relTol*max(1,|x|),
/// or nullopt if no convergent gets that close. A hit is only a candidate:
/// callers must verify it exactly before trusting it.
std::optional<Rational> snapToRational(double x, std::int64_t maxDen = 1000000,
                                       double relTol = 1e-10);

} // namespace twocenter

#endif
