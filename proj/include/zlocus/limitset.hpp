#pragma once

#include <string_view>
#include <vector>

#include "zlocus/rootfind.hpp"
#include "zlocus/seqcore.hpp"

namespace zlocus {

/// One summand alpha(z) * beta(z)^m of an exponential-sum representation.
struct ExpSumTerm {
  Polynomial<Complex> alpha;
  Polynomial<Complex> beta;
};

/// f_m(z) = sum_k alpha_k(z) beta_k(z)^m.
struct ExpSumForm {
  std::vector<ExpSumTerm> terms;

  Complex evaluate(const Complex& z, int m) const;
};

/// The three-term form of the numerator Q_m for a quadratic with real roots
/// of distinct modulus:
///   alpha = (t2 - t2^2 z, -t1 + t1^2 z, (t1 t2^2 - t1^2 t2) z^2),
///   beta  = (t2, t1, t1 t2 z).
/// Self-checks against Q_m for m = 0..10 at 16 pseudo-random points.
/// Throws RepeatedRoot, EqualModulusRoots, ZeroRoot or WrongCase.
ExpSumForm build_expsum(const QuadraticGF<double>& q);
ExpSumForm build_expsum(const QuadraticGF<Rational>& q);

/// (z - 1)^m + z^m + (z + 1)^m.
ExpSumForm shifted_powers_form();

enum class LimitReason { DominantTie, DominantVanishingAlpha, NotInSet };

constexpr std::string_view to_string(LimitReason r) {
  switch (r) {
    case LimitReason::DominantTie: return "DominantTie";
    case LimitReason::DominantVanishingAlpha: return "DominantVanishingAlpha";
    case LimitReason::NotInSet: return "NotInSet";
  }
  return "Unknown";
}

struct LimitClassification {
  bool in_limit = false;
  LimitReason reason = LimitReason::NotInSet;
  /// Term indices of the dominant pair (tie) or the dominant term; -1 unused.
  int witness[2] = {-1, -1};
};

inline constexpr double kDefaultTieTolerance = 1e-6;

/// Membership of z in the limit set of the zeros of f_m: either the two
/// largest |beta_k(z)| agree to tie_tol (relative) with both alphas nonzero, or
/// a unique largest |beta_k(z)| has |alpha_k(z)| <= tie_tol.
LimitClassification sokal_classify(const ExpSumForm& form, const Complex& z,
                                   double tie_tol = kDefaultTieTolerance);

/// 1/|t1| for a, b, c != 0 and b^2 - 4ac > 0 (WrongCase otherwise).
double limit_circle(const QuadraticGF<double>& q);
double limit_circle(const QuadraticGF<Rational>& q);

inline constexpr int kDefaultCircleSamples = 4096;

/// Symmetric Hausdorff distance between a finite root set and the circle
/// |z| = radius. Root-to-circle distances are exact; circle-to-roots uses
/// `circle_samples` equally spaced points. Throws EmptyRootSet.
double hausdorff_to_circle(const RootSet& rs, double radius, int circle_samples = kDefaultCircleSamples);

struct LimitEntry {
  int m = 0;
  double hausdorff = 0.0;
  double radial_spread = 0.0;  ///< max over roots of ||z| - radius|
};

struct LimitReport {
  double radius = 0.0;
  std::vector<LimitEntry> entries;
  /// Every root either classifies into the limit set or lies within
  /// 2 * hausdorff of the circle.
  bool consistent = true;
};

LimitReport convergence_report(const QuadraticGF<Rational>& q, const std::vector<int>& ms,
                               const SolverConfig& cfg = {}, unsigned threads = 1,
                               int circle_samples = kDefaultCircleSamples);
LimitReport convergence_report(const QuadraticGF<double>& q, const std::vector<int>& ms,
                               const SolverConfig& cfg = {}, unsigned threads = 1,
                               int circle_samples = kDefaultCircleSamples);

}  // namespace zlocus
