#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "zlocus/error.hpp"
#include "zlocus/polynomial.hpp"

namespace zlocus {

/// Denominator data a t^2 + b t + c of the generating function
/// 1 / ((a t^2 + b t + c)(1 - t z)).
template <typename Real>
struct QuadraticGF {
  Real a{};
  Real b{};
  Real c{};
};

template <typename Real>
Real discriminant(const QuadraticGF<Real>& q) {
  return q.b * q.b - Real(4) * q.a * q.c;
}

QuadraticGF<double> to_double(const QuadraticGF<Rational>& q);
QuadraticGF<Rational> to_exact(const QuadraticGF<double>& q);

/// Roots of a t^2 + b t + c with |t1| <= |t2|.
struct RootPair {
  Complex t1;
  Complex t2;
};

/// Both roots ordered by modulus; equal moduli are ordered by the principal
/// argument taken in [0, 2pi). Throws DegenerateQuadratic when a = 0.
RootPair quad_roots(const QuadraticGF<double>& q);
RootPair quad_roots(const QuadraticGF<Rational>& q);

/// Exact roots in the quad_roots order when the discriminant is the square
/// of a rational; nullopt otherwise.
std::optional<std::pair<Rational, Rational>> rational_roots(const QuadraticGF<Rational>& q);

/// P_0..P_M by the three-term recurrence
///   P_m = (a z P_{m-3} - (a - b z) P_{m-2} - (b - c z) P_{m-1}) / c
/// from the explicit P_0, P_1, P_2. Works for a = 0 and a = b = 0.
/// Each P_m is stored with m + 1 coefficients.
template <typename Real>
std::vector<Polynomial<Real>> expand_recurrence(const QuadraticGF<Real>& q, int max_m) {
  if (is_zero(q.c)) throw Error(ErrorCode::ZeroConstantTerm, "c = 0");
  if (max_m < 0) throw Error(ErrorCode::InvalidArgument, "negative sequence length");
  using P = Polynomial<Real>;
  const Real inv_c = Real(1) / q.c;
  const P b_minus_cz{q.b, -q.c};
  const P a_minus_bz{q.a, -q.b};
  const P az{Real(0), q.a};

  std::vector<P> seq;
  seq.reserve(static_cast<std::size_t>(max_m) + 1);
  seq.push_back(P::constant(inv_c));
  if (max_m >= 1) seq.push_back(-b_minus_cz * (inv_c * inv_c));
  if (max_m >= 2) seq.push_back(b_minus_cz * b_minus_cz * (inv_c * inv_c * inv_c) - a_minus_bz * (inv_c * inv_c));
  for (int m = 3; m <= max_m; ++m) {
    const auto i = static_cast<std::size_t>(m);
    P next = az * seq[i - 3] - a_minus_bz * seq[i - 2] - b_minus_cz * seq[i - 1];
    seq.push_back((next * inv_c).padded(m + 1));
  }
  return seq;
}

/// Closed form from the roots, evaluated literally:
///   P_m = sum_k (t2^(m+1-k) - t1^(m+1-k)) t1^k t2^k z^k / (a (t2 - t1) t1^(m+1) t2^(m+1)).
template <typename Scalar>
std::vector<Polynomial<Scalar>> closed_form_from_roots(const Scalar& a, const Scalar& t1, const Scalar& t2,
                                                       int max_m) {
  if (is_zero(a)) throw Error(ErrorCode::DegenerateQuadratic, "a = 0");
  if (is_zero(t1) || is_zero(t2)) throw Error(ErrorCode::ZeroRoot, "t1 t2 = 0");
  if (t1 == t2) throw Error(ErrorCode::RepeatedRoot, "t1 = t2");
  if (max_m < 0) throw Error(ErrorCode::InvalidArgument, "negative sequence length");
  const auto n = static_cast<std::size_t>(max_m) + 2;
  std::vector<Scalar> p1(n), p2(n);
  p1[0] = Scalar(1);
  p2[0] = Scalar(1);
  for (std::size_t j = 1; j < n; ++j) {
    p1[j] = p1[j - 1] * t1;
    p2[j] = p2[j - 1] * t2;
  }
  std::vector<Polynomial<Scalar>> seq;
  seq.reserve(n - 1);
  for (std::size_t m = 0; m + 1 < n; ++m) {
    const Scalar denom = a * (t2 - t1) * p1[m + 1] * p2[m + 1];
    auto p = Polynomial<Scalar>::zero(static_cast<Eigen::Index>(m) + 1);
    for (std::size_t k = 0; k <= m; ++k)
      p[static_cast<Eigen::Index>(k)] = (p2[m + 1 - k] - p1[m + 1 - k]) * p1[k] * p2[k] / denom;
    seq.push_back(std::move(p));
  }
  return seq;
}

/// Closed-form expansion in floating point. Complex-conjugate roots are
/// accepted. Throws DegenerateQuadratic, ZeroRoot or RepeatedRoot.
std::vector<Polynomial<Complex>> expand_closed_form(const QuadraticGF<double>& q, int max_m);

/// Closed-form expansion over the rationals; requires rational roots
/// (IrrationalRoots otherwise).
std::vector<Polynomial<Rational>> expand_closed_form_exact(const QuadraticGF<Rational>& q, int max_m);

/// Numerator Q_m(z) = t2^(m+1) - t1^(m+1) + (t1^(m+2) - t2^(m+2)) z + (t2 - t1) (t1 t2)^(m+1) z^(m+2).
template <typename Scalar>
Polynomial<Scalar> product_numerator(const Scalar& t1, const Scalar& t2, int m) {
  const auto u = static_cast<unsigned>(m);
  auto q = Polynomial<Scalar>::zero(m + 3);
  q[0] = ipow(t2, u + 1) - ipow(t1, u + 1);
  q[1] = ipow(t1, u + 2) - ipow(t2, u + 2);
  q[m + 2] = (t2 - t1) * ipow(t1 * t2, u + 1);
  return q;
}

/// The partial-fraction sum S_m(z) = sum_k (t2^(m+1-k) - t1^(m+1-k)) t1^k t2^k z^k.
template <typename Scalar>
Polynomial<Scalar> product_sum(const Scalar& t1, const Scalar& t2, int m) {
  const auto u = static_cast<unsigned>(m);
  auto s = Polynomial<Scalar>::zero(m + 1);
  for (unsigned k = 0; k <= u; ++k)
    s[k] = (ipow(t2, u + 1 - k) - ipow(t1, u + 1 - k)) * ipow(t1 * t2, k);
  return s;
}

/// Q_m(z) - S_m(z) (t1 z - 1)(t2 z - 1), evaluated pointwise.
template <typename Scalar>
Scalar product_identity_residual(const Scalar& t1, const Scalar& t2, int m, const Scalar& z) {
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "negative index");
  const Scalar lhs = product_numerator(t1, t2, m)(z);
  const Scalar rhs = product_sum(t1, t2, m)(z) * (t1 * z - Scalar(1)) * (t2 * z - Scalar(1));
  return lhs - rhs;
}

/// Magnitude scale of the terms entering product_identity_residual, for
/// normalizing floating residuals.
double product_identity_scale(const Complex& t1, const Complex& t2, int m, const Complex& z);

/// Per-m relative deviation between r^m H_m(z) and P_m(r z), where H comes from
/// a (t/r)^2 + b (t/r) + c. Both sides use expand_closed_form. Throws ZeroScale.
std::vector<double> verify_scaling(const QuadraticGF<double>& q, double r, int max_m);

struct Normalized {
  QuadraticGF<double> quad;    ///< (ac/|ac|, b/sqrt|ac|, 1)
  double zero_scale_factor{};  ///< sqrt|ac| / |c|, maps |zeros of H_m| to |zeros of P_m|
  double zero_map{};           ///< sqrt|ac| / c, maps zeros of H_m to zeros of P_m
};

/// Rescales to constant term 1 and |leading coefficient| 1. Throws ZeroProduct.
Normalized normalize(const QuadraticGF<double>& q);

}  // namespace zlocus
