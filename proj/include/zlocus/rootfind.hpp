#pragma once

#include <cstdint>
#include <vector>

#include "zlocus/error.hpp"
#include "zlocus/polynomial.hpp"
#include "zlocus/scalar.hpp"

namespace zlocus {

struct SolverConfig {
  double tol = 1e-12;        ///< relative step size at which a root is accepted
  int max_iter = 200;        ///< iterations per attempt
  std::uint64_t seed = 0;    ///< rotates the initial circle of approximations

  void validate() const {
    if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "solver tol must be positive");
    if (max_iter < 1) throw Error(ErrorCode::InvalidArgument, "solver max_iter must be >= 1");
  }
};

/// Zeros of one polynomial, sorted by (real, imaginary).
struct RootSet {
  std::vector<Complex> roots;
  /// |p(r)| / (max|a_k| * max(1, |r|)^n) per root.
  std::vector<double> residuals;
  int iterations = 0;
  bool converged = true;
  /// Number of exactly-zero leading coefficients dropped before solving.
  Eigen::Index dropped_degree = 0;

  bool empty() const { return roots.empty(); }
  std::size_t size() const { return roots.size(); }
  double max_modulus() const;
  double min_modulus() const;
};

struct Annulus {
  double r_min{};
  double r_max{};
};

/// All complex zeros by Aberth-Ehrlich simultaneous iteration.
///
/// Exactly-zero leading coefficients are dropped first and exactly-zero low
/// coefficients become roots at the origin. A run that fails to converge is
/// retried once from a rotated, enlarged circle before converged = false is
/// reported. Throws AllZeroPolynomial or ConstantPolynomial.
RootSet find_roots(const Polynomial<Complex>& p, const SolverConfig& cfg = {});

template <typename Scalar>
RootSet find_roots(const Polynomial<Scalar>& p, const SolverConfig& cfg = {}) {
  return find_roots(to_complex(p), cfg);
}

/// Residuals as stored in RootSet::residuals.
std::vector<double> root_residuals(const Polynomial<Complex>& p, const std::vector<Complex>& roots);

/// Newton refinement with p(z) and p'(z) evaluated exactly at each double
/// iterate, so well-separated simple roots reach full double accuracy even
/// when monomial evaluation in floating point cannot resolve them. A root is
/// moved only if it ends closer to its start than half the distance to any
/// other root. Residuals and order are refreshed.
void polish_roots(const Polynomial<Rational>& p, RootSet& rs, int max_steps = 12);

/// Enestrom-Kakeya annulus [min a_k/a_{k+1}, max a_k/a_{k+1}] for a polynomial
/// with real, strictly positive coefficients (NonPositiveCoefficients otherwise).
Annulus kakeya_annulus(const Polynomial<Complex>& p);

/// Kakeya annulus after bringing the coefficients to positive form through
/// z -> -z and/or a global sign change; moduli of zeros are unchanged.
/// Throws MixedSignPattern when no such normalization exists.
Annulus kakeya_signed(const Polynomial<Complex>& p);

template <typename Scalar>
Annulus kakeya_annulus(const Polynomial<Scalar>& p) {
  return kakeya_annulus(to_complex(p));
}
template <typename Scalar>
Annulus kakeya_signed(const Polynomial<Scalar>& p) {
  return kakeya_signed(to_complex(p));
}

}  // namespace zlocus
