#include "zlocus/seqcore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace zlocus {

QuadraticGF<double> to_double(const QuadraticGF<Rational>& q) {
  return {to_double(q.a), to_double(q.b), to_double(q.c)};
}

QuadraticGF<Rational> to_exact(const QuadraticGF<double>& q) {
  return {exact_rational(q.a), exact_rational(q.b), exact_rational(q.c)};
}

namespace {

double principal_arg_2pi(const Complex& z) {
  double arg = std::arg(z);
  if (arg < 0.0) arg += 2.0 * std::numbers::pi;
  return arg;
}

void order_by_modulus(Complex& t1, Complex& t2) {
  const double m1 = std::abs(t1);
  const double m2 = std::abs(t2);
  const double tie = 4.0 * std::numeric_limits<double>::epsilon() * std::max(m1, m2);
  if (std::abs(m1 - m2) <= tie) {
    if (principal_arg_2pi(t2) < principal_arg_2pi(t1)) std::swap(t1, t2);
  } else if (m2 < m1) {
    std::swap(t1, t2);
  }
}

}  // namespace

RootPair quad_roots(const QuadraticGF<double>& q) {
  if (q.a == 0.0) throw Error(ErrorCode::DegenerateQuadratic, "a = 0");
  const double disc = discriminant(q);
  Complex t1, t2;
  if (disc >= 0.0) {
    // Cancellation-free pairing of the two real roots.
    const double s = std::sqrt(disc);
    const double half = -0.5 * (q.b + std::copysign(s, q.b));
    if (half == 0.0) {
      t1 = t2 = Complex{};
    } else {
      t1 = half / q.a;
      t2 = q.c / half;
    }
  } else {
    const double re = -q.b / (2.0 * q.a);
    const double im = std::sqrt(-disc) / (2.0 * std::abs(q.a));
    t1 = {re, im};
    t2 = {re, -im};
  }
  order_by_modulus(t1, t2);
  return {t1, t2};
}

RootPair quad_roots(const QuadraticGF<Rational>& q) {
  if (is_zero(q.a)) throw Error(ErrorCode::DegenerateQuadratic, "a = 0");
  if (auto exact = rational_roots(q)) return {to_complex(exact->first), to_complex(exact->second)};
  return quad_roots(to_double(q));
}

std::optional<std::pair<Rational, Rational>> rational_roots(const QuadraticGF<Rational>& q) {
  if (is_zero(q.a)) throw Error(ErrorCode::DegenerateQuadratic, "a = 0");
  Rational s;
  if (!rational_sqrt(discriminant(q), s)) return std::nullopt;
  Rational r1 = (-q.b - s) / (Rational(2) * q.a);
  Rational r2 = (-q.b + s) / (Rational(2) * q.a);
  const Rational m1 = abs(r1);
  const Rational m2 = abs(r2);
  // Equal moduli of distinct real roots: the positive root has argument 0.
  if (m2 < m1 || (m1 == m2 && r2 > r1)) std::swap(r1, r2);
  return std::make_pair(r1, r2);
}

std::vector<Polynomial<Complex>> expand_closed_form(const QuadraticGF<double>& q, int max_m) {
  if (q.a == 0.0) throw Error(ErrorCode::DegenerateQuadratic, "a = 0");
  if (q.c == 0.0) throw Error(ErrorCode::ZeroRoot, "c = 0 gives a zero root");
  if (discriminant(q) == 0.0) throw Error(ErrorCode::RepeatedRoot, "b^2 - 4ac = 0");
  if (max_m < 0) throw Error(ErrorCode::InvalidArgument, "negative sequence length");
  const auto [t1, t2] = quad_roots(q);

  // With j = m + 1 - k the coefficient of z^k in P_m is
  //   (t1^-j - t2^-j) / (a (t2 - t1)) = t1^-j g_j / (a t2),
  // where rho = t1 / t2 and g_j = 1 + rho + ... + rho^(j-1).
  const Complex rho = t1 / t2;
  const Complex inv_t1 = 1.0 / t1;
  const Complex prefactor = 1.0 / (q.a * t2);
  const auto n = static_cast<std::size_t>(max_m) + 2;
  std::vector<Complex> weight(n);
  Complex power = 1.0;
  Complex geometric = 0.0;
  for (std::size_t j = 1; j < n; ++j) {
    power *= inv_t1;
    geometric = 1.0 + rho * geometric;
    weight[j] = power * geometric * prefactor;
  }

  std::vector<Polynomial<Complex>> seq;
  seq.reserve(n - 1);
  for (int m = 0; m <= max_m; ++m) {
    auto p = Polynomial<Complex>::zero(m + 1);
    for (int k = 0; k <= m; ++k) p[k] = weight[static_cast<std::size_t>(m + 1 - k)];
    seq.push_back(std::move(p));
  }
  return seq;
}

std::vector<Polynomial<Rational>> expand_closed_form_exact(const QuadraticGF<Rational>& q, int max_m) {
  if (is_zero(q.a)) throw Error(ErrorCode::DegenerateQuadratic, "a = 0");
  if (is_zero(q.c)) throw Error(ErrorCode::ZeroRoot, "c = 0 gives a zero root");
  if (is_zero(discriminant(q))) throw Error(ErrorCode::RepeatedRoot, "b^2 - 4ac = 0");
  const auto roots = rational_roots(q);
  if (!roots) throw Error(ErrorCode::IrrationalRoots, "discriminant is not a rational square");
  return closed_form_from_roots(q.a, roots->first, roots->second, max_m);
}

double product_identity_scale(const Complex& t1, const Complex& t2, int m, const Complex& z) {
  const double a1 = std::abs(t1);
  const double a2 = std::abs(t2);
  const double az = std::abs(z);
  const double e = static_cast<double>(m);
  return std::pow(a1, e + 1) + std::pow(a2, e + 1) + (std::pow(a1, e + 2) + std::pow(a2, e + 2)) * az +
         std::abs(t2 - t1) * std::pow(a1 * a2, e + 1) * std::pow(az, e + 2);
}

std::vector<double> verify_scaling(const QuadraticGF<double>& q, double r, int max_m) {
  if (r == 0.0) throw Error(ErrorCode::ZeroScale, "r = 0");
  const QuadraticGF<double> scaled{q.a / (r * r), q.b / r, q.c};
  const auto p = expand_closed_form(q, max_m);
  const auto h = expand_closed_form(scaled, max_m);
  std::vector<double> deviations;
  deviations.reserve(p.size());
  for (std::size_t m = 0; m < p.size(); ++m) {
    const double rm = std::pow(r, static_cast<double>(m));
    deviations.push_back(relative_coeff_distance(h[m] * Complex(rm), p[m].scaled_argument(Complex(r))));
  }
  return deviations;
}

Normalized normalize(const QuadraticGF<double>& q) {
  const double ac = q.a * q.c;
  if (ac == 0.0) throw Error(ErrorCode::ZeroProduct, "ac = 0");
  const double root = std::sqrt(std::abs(ac));
  Normalized out;
  out.quad = {ac > 0.0 ? 1.0 : -1.0, q.b / root, 1.0};
  out.zero_scale_factor = root / std::abs(q.c);
  out.zero_map = root / q.c;
  return out;
}

}  // namespace zlocus
