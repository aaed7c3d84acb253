#pragma once

#include <algorithm>
#include <initializer_list>
#include <utility>

#include "zlocus/scalar.hpp"

namespace zlocus {

/// Dense polynomial in z; coefficient k multiplies z^k.
///
/// The stored length is part of the value: leading zero coefficients are
/// retained, so a member of a sequence P_0, P_1, ... keeps size m + 1 even
/// when its top coefficient vanishes. Equality ignores trailing zero padding.
template <typename Scalar>
class Polynomial {
 public:
  using Index = Eigen::Index;
  using scalar_type = Scalar;

  Polynomial() = default;
  explicit Polynomial(Vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {}
  Polynomial(std::initializer_list<Scalar> coeffs) : coeffs_(static_cast<Index>(coeffs.size())) {
    Index k = 0;
    for (const auto& c : coeffs) coeffs_(k++) = c;
  }

  static Polynomial zero(Index size) {
    Vector<Scalar> v(size);
    for (Index k = 0; k < size; ++k) v(k) = Scalar(0);
    return Polynomial(std::move(v));
  }
  static Polynomial constant(const Scalar& value) { return Polynomial{value}; }
  static Polynomial monomial(Index k, const Scalar& value = Scalar(1)) {
    Polynomial p = zero(k + 1);
    p.coeffs_(k) = value;
    return p;
  }

  Index size() const { return coeffs_.size(); }
  const Vector<Scalar>& coeffs() const { return coeffs_; }
  Vector<Scalar>& coeffs() { return coeffs_; }
  const Scalar& operator[](Index k) const { return coeffs_(k); }
  Scalar& operator[](Index k) { return coeffs_(k); }

  /// Coefficient of z^k, zero beyond the stored length.
  Scalar coeff(Index k) const { return k < size() ? coeffs_(k) : Scalar(0); }

  /// Highest index with a nonzero coefficient, -1 for the zero polynomial.
  Index effective_degree() const {
    for (Index k = size() - 1; k >= 0; --k)
      if (!zlocus::is_zero(coeffs_(k))) return k;
    return -1;
  }
  bool is_zero() const { return effective_degree() < 0; }

  Scalar operator()(const Scalar& x) const {
    Scalar acc(0);
    for (Index k = size() - 1; k >= 0; --k) acc = acc * x + coeffs_(k);
    return acc;
  }

  Polynomial derivative() const {
    if (size() <= 1) return zero(1);
    Polynomial d = zero(size() - 1);
    for (Index k = 1; k < size(); ++k) d.coeffs_(k - 1) = coeffs_(k) * Scalar(static_cast<long>(k));
    return d;
  }

  /// Coefficient reversal over the stored length: z^(size-1) p(1/z).
  Polynomial reversed() const { return Polynomial(Vector<Scalar>(coeffs_.reverse())); }

  /// Drops exactly-zero leading coefficients (keeps at least one entry).
  Polynomial trimmed() const {
    const Index n = std::max<Index>(effective_degree() + 1, 1);
    if (size() == 0) return zero(1);
    return Polynomial(Vector<Scalar>(coeffs_.head(n)));
  }

  Polynomial padded(Index new_size) const {
    Polynomial p = zero(std::max(new_size, size()));
    p.coeffs_.head(size()) = coeffs_;
    return p;
  }

  /// p(r z).
  Polynomial scaled_argument(const Scalar& r) const {
    Polynomial p = *this;
    Scalar power(1);
    for (Index k = 0; k < size(); ++k) {
      p.coeffs_(k) *= power;
      power *= r;
    }
    return p;
  }

  /// p(-z).
  Polynomial reflected() const { return scaled_argument(Scalar(-1)); }

  template <typename Target, typename Convert>
  Polynomial<Target> cast(Convert convert) const {
    Vector<Target> v(size());
    for (Index k = 0; k < size(); ++k) v(k) = convert(coeffs_(k));
    return Polynomial<Target>(std::move(v));
  }

  Polynomial& operator+=(const Polynomial& other) {
    if (other.size() > size()) *this = padded(other.size());
    coeffs_.head(other.size()) += other.coeffs_;
    return *this;
  }
  Polynomial& operator-=(const Polynomial& other) {
    if (other.size() > size()) *this = padded(other.size());
    coeffs_.head(other.size()) -= other.coeffs_;
    return *this;
  }
  Polynomial& operator*=(const Scalar& s) {
    coeffs_ *= s;
    return *this;
  }
  Polynomial& operator/=(const Scalar& s) {
    coeffs_ /= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator-(Polynomial p) {
    p.coeffs_ = -p.coeffs_;
    return p;
  }
  friend Polynomial operator*(Polynomial p, const Scalar& s) { return p *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial p) { return p *= s; }
  friend Polynomial operator/(Polynomial p, const Scalar& s) { return p /= s; }

  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.size() == 0 || rhs.size() == 0) return Polynomial();
    Polynomial out = zero(lhs.size() + rhs.size() - 1);
    for (Index i = 0; i < lhs.size(); ++i) {
      if (zlocus::is_zero(lhs.coeffs_(i))) continue;
      for (Index j = 0; j < rhs.size(); ++j) out.coeffs_(i + j) += lhs.coeffs_(i) * rhs.coeffs_(j);
    }
    return out;
  }

  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
    const Index n = std::max(lhs.size(), rhs.size());
    for (Index k = 0; k < n; ++k)
      if (lhs.coeff(k) != rhs.coeff(k)) return false;
    return true;
  }

 private:
  Vector<Scalar> coeffs_;
};

template <typename Scalar>
Polynomial<Complex> to_complex(const Polynomial<Scalar>& p) {
  return p.template cast<Complex>([](const Scalar& c) { return zlocus::to_complex(c); });
}

template <typename Scalar>
double max_abs_coeff(const Polynomial<Scalar>& p) {
  double m = 0.0;
  for (Eigen::Index k = 0; k < p.size(); ++k) m = std::max(m, magnitude(p[k]));
  return m;
}

/// Largest coefficient-wise difference, divided by the larger of the two
/// coefficient maxima (floored at 1e-14).
template <typename Lhs, typename Rhs>
double relative_coeff_distance(const Polynomial<Lhs>& lhs, const Polynomial<Rhs>& rhs) {
  const auto a = to_complex(lhs);
  const auto b = to_complex(rhs);
  const Eigen::Index n = std::max(a.size(), b.size());
  double diff = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) diff = std::max(diff, std::abs(a.coeff(k) - b.coeff(k)));
  const double scale = std::max({max_abs_coeff(a), max_abs_coeff(b), 1e-14});
  return diff / scale;
}

}  // namespace zlocus
