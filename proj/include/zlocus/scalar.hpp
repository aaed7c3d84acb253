#pragma once

#include <cmath>
#include <complex>
#include <string_view>

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace zlocus {

// Expression templates are disabled so that `auto` always yields a value.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Complex = std::complex<double>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

enum class ArithmeticMode { Exact, Floating };

template <typename Scalar>
inline constexpr ArithmeticMode arithmetic_mode_v = ArithmeticMode::Floating;
template <>
inline constexpr ArithmeticMode arithmetic_mode_v<Rational> = ArithmeticMode::Exact;

inline double to_double(const Rational& x) { return x.convert_to<double>(); }
inline double to_double(double x) { return x; }

inline Complex to_complex(const Rational& x) { return {to_double(x), 0.0}; }
inline Complex to_complex(double x) { return {x, 0.0}; }
inline Complex to_complex(const Complex& x) { return x; }

inline double magnitude(const Rational& x) { return std::abs(to_double(x)); }
inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(const Complex& x) { return std::abs(x); }

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(const Complex& x) { return x == Complex{}; }

/// Exact value of a finite double (every finite double is dyadic).
Rational exact_rational(double x);

/// Parses an exact rational from "7", "-7/4", "0.125" or "2.5e-3".
Rational parse_rational(std::string_view text);

/// Exact rational square root, if one exists.
bool rational_sqrt(const Rational& x, Rational& root);

template <typename Scalar>
Scalar ipow(Scalar base, unsigned n) {
  Scalar result(1);
  while (n != 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n != 0) base *= base;
  }
  return result;
}

}  // namespace zlocus
