#pragma once

// Scalar types used throughout lcak.
//
// Every numeric routine is a template over the scalar type. Two instantiations
// exist: `Rational` (exact, GMP-backed) and `double` (tolerance-based). Exact
// mode is what reproduces the literature examples bit-for-bit; float mode is
// what the fuzzers use on badly scaled inputs.

#include <boost/multiprecision/gmp.hpp>

#include <charconv>
#include <cmath>
#include <string>
#include <string_view>
#include <system_error>

#include "lcak/error.hpp"

namespace lcak {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline constexpr double kDefaultTolerance = 1e-9;

enum class ArithmeticMode { Exact, Float };

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr ArithmeticMode mode = ArithmeticMode::Exact;

  static bool is_zero(const Rational& x, double /*tol*/) { return x == 0; }
  static double to_double(const Rational& x) { return x.convert_to<double>(); }
  static Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

  // "1/4", "-3"; integers print without a denominator.
  static std::string to_string(const Rational& x) {
    const auto num = boost::multiprecision::numerator(x);
    const auto den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
  }

  // Accepts "p", "p/q" and finite decimals such as "-0.125" or "2.5e-3".
  static Rational parse(std::string_view text);

  static Rational from_double(double x) { return Rational(x); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr ArithmeticMode mode = ArithmeticMode::Float;

  static bool is_zero(double x, double tol) { return std::abs(x) <= tol; }
  static double to_double(double x) { return x; }
  static double abs(double x) { return std::abs(x); }

  // Shortest representation that round-trips.
  static std::string to_string(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, end);
  }

  static double parse(std::string_view text);

  static double from_double(double x) { return x; }
};

template <class T>
inline bool is_zero(const T& x, double tol = kDefaultTolerance) {
  return ScalarTraits<T>::is_zero(x, tol);
}

// p / q in the scalar type T.
template <class T>
inline T frac(long p, long q) {
  return T(p) / T(q);
}

template <class T>
inline double to_double(const T& x) {
  return ScalarTraits<T>::to_double(x);
}

template <class T>
inline T abs_value(const T& x) {
  return ScalarTraits<T>::abs(x);
}

template <class T>
inline std::string to_string(const T& x) {
  return ScalarTraits<T>::to_string(x);
}

// Converts between the two scalar kinds. Rational -> double rounds.
template <class To, class From>
inline To scalar_cast(const From& x) {
  if constexpr (std::is_same_v<To, From>) {
    return x;
  } else if constexpr (std::is_same_v<To, double>) {
    return ScalarTraits<From>::to_double(x);
  } else {
    return ScalarTraits<To>::from_double(ScalarTraits<From>::to_double(x));
  }
}

inline const char* to_string(ArithmeticMode mode) {
  return mode == ArithmeticMode::Exact ? "exact" : "float";
}

}  // namespace lcak
