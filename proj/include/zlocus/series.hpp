#pragma once

#include <vector>

#include "zlocus/error.hpp"
#include "zlocus/polynomial.hpp"

namespace zlocus {

/// Truncated power series in t whose coefficients are polynomials in z.
/// Entry m holds the coefficient of t^m.
template <typename Scalar>
using BivariateSeries = std::vector<Polynomial<Scalar>>;

template <typename Scalar>
BivariateSeries<Scalar> series_multiply(const BivariateSeries<Scalar>& lhs,
                                        const BivariateSeries<Scalar>& rhs, int order) {
  BivariateSeries<Scalar> out(static_cast<std::size_t>(order) + 1, Polynomial<Scalar>::zero(1));
  for (std::size_t i = 0; i < lhs.size() && i <= static_cast<std::size_t>(order); ++i)
    for (std::size_t j = 0; j < rhs.size() && i + j <= static_cast<std::size_t>(order); ++j)
      out[i + j] += lhs[i] * rhs[j];
  return out;
}

/// Coefficients t^0..t^order of num(t, z) / den(t, z), by power-series long
/// division. The t^0 coefficient of `den` must be a nonzero constant.
template <typename Scalar>
BivariateSeries<Scalar> series_divide(const BivariateSeries<Scalar>& num,
                                      const BivariateSeries<Scalar>& den, int order) {
  if (den.empty() || den[0].effective_degree() != 0)
    throw Error(ErrorCode::InvalidArgument, "series denominator needs a nonzero constant term");
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "negative series order");
  const Scalar lead = den[0][0];
  BivariateSeries<Scalar> out;
  out.reserve(static_cast<std::size_t>(order) + 1);
  for (std::size_t m = 0; m <= static_cast<std::size_t>(order); ++m) {
    Polynomial<Scalar> acc = m < num.size() ? num[m] : Polynomial<Scalar>::zero(1);
    for (std::size_t j = 1; j < den.size() && j <= m; ++j) acc -= den[j] * out[m - j];
    out.push_back(acc / lead);
  }
  return out;
}

/// Lifts a univariate series (scalar coefficients) to a bivariate one.
template <typename Scalar>
BivariateSeries<Scalar> constant_series(const std::vector<Scalar>& coeffs) {
  BivariateSeries<Scalar> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(Polynomial<Scalar>::constant(c));
  return out;
}

}  // namespace zlocus
