#pragma once

#include <span>
#include <vector>

#include "zlocus/rootfind.hpp"

namespace zlocus {

enum class SequenceKind { ChebyshevU, Fibonacci, ExpTaylor, Gm, Jm };

struct NamedSequence {
  SequenceKind kind{};
  int max_m = 0;
  std::vector<Polynomial<Rational>> polys;  ///< index m
};

/// U_0..U_M from U_{n+1} = 2z U_n - U_{n-1}, checked against the t-coefficients
/// of 1/(1 - 2zt + t^2). Throws OracleMismatch if they differ.
NamedSequence chebyshev_u(int max_m);

/// t-coefficients of t/(1 - t - t^2) through t^M.
std::vector<Integer> fibonacci(int max_m);

/// 1/k! for k = 0..n.
std::vector<Rational> exp_taylor_coefficients(int n);

/// Taylor sections T_m(z) = sum_{k<=m} z^k/k! of e^z for m = 0..n.
NamedSequence exp_taylor(int n);

/// Reversed Taylor sections T*_m(z) = a_0 z^m + a_1 z^(m-1) + ... + a_m for
/// m = 0..M, checked against the t-coefficients of f(t)/(1 - tz).
/// Throws InsufficientCoefficients when fewer than M + 1 coefficients are given.
std::vector<Polynomial<Rational>> reciprocal_taylor_seq(std::span<const Rational> f, int max_m);

/// G_m from G_m = -G_{m-1} - z G_{m-2}, G_0 = 1, G_1 = -1, checked against
/// 1/(1 + t + z t^2).
NamedSequence gm_sequence(int max_m);

/// Zeros 1/(4 cos^2 theta_k) of G_m, theta_k = k pi/(m+1) in (pi/2, pi),
/// ascending. There are floor(m/2) of them.
std::vector<double> gm_zeros(int m);

/// Agreement between gm_zeros(m) and the computed roots of G_m.
inline constexpr double kGmZeroTolerance = 1e-8;

struct GmZeroCheck {
  int m = 0;
  std::vector<double> formula;
  RootSet solved;
  /// max |formula_k - root_k| / max(1, |root_k|) after sorting by real part;
  /// infinite when the counts differ.
  double max_deviation = 0.0;
  bool ok = false;
};

GmZeroCheck gm_zero_check(int m, const SolverConfig& cfg = {});

/// J_m from J_m = -J_{m-1} - z J_{m-3}, J_0 = 1, J_1 = -1, J_2 = 1, checked
/// against 1/(1 + t + z t^3).
NamedSequence jm_sequence(int max_m);

/// Tolerances for J_m zeros: real to kJmImagTolerance (relative), and below
/// -4/27 + kJmBoundSlack.
inline constexpr double kJmImagTolerance = 1e-8;
inline constexpr double kJmBoundSlack = 1e-9;

/// For m = 0..M: every computed zero of J_m is real and < -4/27 + 1e-9.
std::vector<bool> jm_zero_bound_check(int max_m, const SolverConfig& cfg = {});

/// Trigonometric parametrizations of the zeros of G_m and J_m.
struct TrigZeroFormula {
  enum class Kind { Gm, Jm };
  Kind kind{};
  double theta_lo = 0.0;  ///< open interval
  double theta_hi = 0.0;

  static TrigZeroFormula gm();  ///< z = 1/(4 cos^2 theta), theta in (pi/2, pi)
  static TrigZeroFormula jm();  ///< z = 4cos^2 theta/(1 - 4cos^2 theta)^3, theta in (2pi/3, pi)

  double operator()(double theta) const;
  /// theta in the domain with z(theta) = z, by bisection on the increasing
  /// branch; only valid for Kind::Jm and z < -4/27.
  double preimage(double z) const;
};

struct SzegoDemo {
  int n = 0;
  RootSet roots;
  Annulus annulus;  ///< Kakeya bounds (1, n)
};

/// Zeros of the degree-n Taylor section of e^z.
SzegoDemo szego_demo(int n, const SolverConfig& cfg = {});

}  // namespace zlocus
