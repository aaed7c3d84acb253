#pragma once

#include <string_view>
#include <vector>

#include "zlocus/rootfind.hpp"
#include "zlocus/seqcore.hpp"

namespace zlocus {

/// Which disk statement applies to a quadratic denominator.
enum class TheoremCase {
  InsideClosedDisk,        ///< ac < 0, b != 0: zeros in |z| <= 1/|t1|
  OutsideClosedDisk,       ///< ac > 0, b^2 - 4ac > 0: no zeros in |z| <= 1/|t1|
  ConjectureComplexRoots,  ///< ac > 0, b^2 - 4ac <= 0: unproven
  Degenerate,              ///< ac = 0, or ac < 0 with b = 0
};

constexpr std::string_view to_string(TheoremCase c) {
  switch (c) {
    case TheoremCase::InsideClosedDisk: return "InsideClosedDisk";
    case TheoremCase::OutsideClosedDisk: return "OutsideClosedDisk";
    case TheoremCase::ConjectureComplexRoots: return "ConjectureComplexRoots";
    case TheoremCase::Degenerate: return "Degenerate";
  }
  return "Unknown";
}

template <typename Real>
TheoremCase classify_case(const QuadraticGF<Real>& q) {
  const Real ac = q.a * q.c;
  if (ac == Real(0)) return TheoremCase::Degenerate;
  if (ac < Real(0)) return q.b == Real(0) ? TheoremCase::Degenerate : TheoremCase::InsideClosedDisk;
  return discriminant(q) > Real(0) ? TheoremCase::OutsideClosedDisk : TheoremCase::ConjectureComplexRoots;
}

/// 1/|t1|. Throws DegenerateQuadratic (a = 0) or ZeroRoot (c = 0).
double predicted_radius(const QuadraticGF<double>& q);
double predicted_radius(const QuadraticGF<Rational>& q);

/// Relative tolerance applied to the disk boundary in verdicts.
inline constexpr double kBoundaryTolerance = 1e-7;

struct DiskVerdict {
  int m = 0;
  double radius = 0.0;
  double min_modulus = 0.0;
  double max_modulus = 0.0;
  bool satisfied = false;
  /// Signed distance of the extremal modulus from the boundary; positive on
  /// the side the theorem predicts.
  double margin = 0.0;
  /// min_modulus >= radius (1 - tol): no zero in the open ball.
  bool excludes_open_ball = false;
  /// min_modulus > radius with no tolerance: no zero in the closed disk.
  bool excludes_closed_disk = false;
};

/// Solves P_1..P_M and checks the disk statement for the case of q. The
/// expansion is exact (doubles are converted exactly) and only the root solve
/// is floating. Throws WrongCase outside InsideClosedDisk / OutsideClosedDisk.
std::vector<DiskVerdict> verify_disk(const QuadraticGF<Rational>& q, int max_m, const SolverConfig& cfg = {},
                                     unsigned threads = 1);
std::vector<DiskVerdict> verify_disk(const QuadraticGF<double>& q, int max_m, const SolverConfig& cfg = {},
                                     unsigned threads = 1);

/// Root moduli for any quadratic without pass/fail semantics (the complex-root
/// conjecture case included). Counts use the same boundary tolerance.
struct ExplorationEntry {
  int m = 0;
  double radius = 0.0;
  double min_modulus = 0.0;
  double max_modulus = 0.0;
  int inside = 0;
  int outside = 0;
};
std::vector<ExplorationEntry> explore_disk(const QuadraticGF<Rational>& q, int max_m, const SolverConfig& cfg = {},
                                           unsigned threads = 1);

struct ExclusionVerdict {
  int m = 0;
  double min_modulus = 0.0;
  bool satisfied = false;
};

struct MidpointReport {
  double exclusion_radius = 0.0;  ///< (1/|t1| + 1/|t2|) / 2
  /// Largest m <= M with a zero inside the exclusion radius, 0 when none.
  int n_observed = 0;
  std::vector<ExclusionVerdict> verdicts;  ///< m = n_observed + 1 .. M
};

/// Empirical threshold beyond which no zero of P_m lies in the ball of radius
/// (1/|t1| + 1/|t2|)/2. Requires b^2 - 4ac > 0 and a, b, c != 0 (WrongCase).
MidpointReport midpoint_exclusion(const QuadraticGF<Rational>& q, int max_m, const SolverConfig& cfg = {},
                                  unsigned threads = 1);
MidpointReport midpoint_exclusion(const QuadraticGF<double>& q, int max_m, const SolverConfig& cfg = {},
                                  unsigned threads = 1);

/// Solves P_m for every m in `ms`; the expansion is exact.
std::vector<RootSet> solve_sequence(const QuadraticGF<Rational>& q, const std::vector<int>& ms,
                                    const SolverConfig& cfg = {}, unsigned threads = 1);

}  // namespace zlocus
