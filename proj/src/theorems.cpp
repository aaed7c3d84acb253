#include "zlocus/theorems.hpp"

#include <algorithm>
#include <cmath>

#include "zlocus/parallel.hpp"

namespace zlocus {

double predicted_radius(const QuadraticGF<double>& q) {
  if (q.a == 0.0) throw Error(ErrorCode::DegenerateQuadratic, "a = 0");
  if (q.c == 0.0) throw Error(ErrorCode::ZeroRoot, "c = 0 gives a zero root");
  return 1.0 / std::abs(quad_roots(q).t1);
}

double predicted_radius(const QuadraticGF<Rational>& q) {
  if (is_zero(q.a)) throw Error(ErrorCode::DegenerateQuadratic, "a = 0");
  if (is_zero(q.c)) throw Error(ErrorCode::ZeroRoot, "c = 0 gives a zero root");
  return 1.0 / std::abs(quad_roots(q).t1);
}

std::vector<RootSet> solve_sequence(const QuadraticGF<Rational>& q, const std::vector<int>& ms,
                                    const SolverConfig& cfg, unsigned threads) {
  cfg.validate();
  if (ms.empty()) return {};
  for (int m : ms)
    if (m < 0) throw Error(ErrorCode::InvalidArgument, "negative sequence index");
  const int top = *std::max_element(ms.begin(), ms.end());
  const auto seq = expand_recurrence(q, top);
  std::vector<RootSet> out(ms.size());
  parallel_for(ms.size(), threads, [&](std::size_t i) {
    const auto& p = seq[static_cast<std::size_t>(ms[i])];
    if (p.effective_degree() <= 0) return;  // constant: no zeros
    out[i] = find_roots(p, cfg);
  });
  return out;
}

namespace {

std::vector<int> ladder(int first, int last) {
  std::vector<int> ms;
  for (int m = first; m <= last; ++m) ms.push_back(m);
  return ms;
}

void require_converged(const RootSet& rs, int m) {
  if (!rs.converged)
    throw Error(ErrorCode::SolverNotConverged, "root solve for m = " + std::to_string(m) + " did not converge");
}

}  // namespace

std::vector<DiskVerdict> verify_disk(const QuadraticGF<Rational>& q, int max_m, const SolverConfig& cfg,
                                     unsigned threads) {
  const TheoremCase tag = classify_case(q);
  if (tag != TheoremCase::InsideClosedDisk && tag != TheoremCase::OutsideClosedDisk)
    throw Error(ErrorCode::WrongCase, "no disk statement for case " + std::string(to_string(tag)));
  const double radius = predicted_radius(q);
  const auto ms = ladder(1, max_m);
  const auto solved = solve_sequence(q, ms, cfg, threads);

  std::vector<DiskVerdict> verdicts;
  verdicts.reserve(ms.size());
  for (std::size_t i = 0; i < ms.size(); ++i) {
    require_converged(solved[i], ms[i]);
    DiskVerdict v;
    v.m = ms[i];
    v.radius = radius;
    v.min_modulus = solved[i].min_modulus();
    v.max_modulus = solved[i].max_modulus();
    v.excludes_open_ball = v.min_modulus >= radius * (1.0 - kBoundaryTolerance);
    v.excludes_closed_disk = v.min_modulus > radius;
    if (tag == TheoremCase::InsideClosedDisk) {
      v.margin = radius - v.max_modulus;
      v.satisfied = v.max_modulus <= radius * (1.0 + kBoundaryTolerance);
    } else {
      v.margin = v.min_modulus - radius;
      v.satisfied = v.min_modulus > radius * (1.0 - kBoundaryTolerance);
    }
    verdicts.push_back(v);
  }
  return verdicts;
}

std::vector<DiskVerdict> verify_disk(const QuadraticGF<double>& q, int max_m, const SolverConfig& cfg,
                                     unsigned threads) {
  return verify_disk(to_exact(q), max_m, cfg, threads);
}

std::vector<ExplorationEntry> explore_disk(const QuadraticGF<Rational>& q, int max_m, const SolverConfig& cfg,
                                           unsigned threads) {
  const double radius = predicted_radius(q);
  const auto ms = ladder(1, max_m);
  const auto solved = solve_sequence(q, ms, cfg, threads);
  std::vector<ExplorationEntry> out;
  out.reserve(ms.size());
  for (std::size_t i = 0; i < ms.size(); ++i) {
    ExplorationEntry e;
    e.m = ms[i];
    e.radius = radius;
    if (!solved[i].empty()) {
      e.min_modulus = solved[i].min_modulus();
      e.max_modulus = solved[i].max_modulus();
    }
    for (const auto& z : solved[i].roots) {
      if (std::abs(z) <= radius) ++e.inside;
      else ++e.outside;
    }
    out.push_back(e);
  }
  return out;
}

MidpointReport midpoint_exclusion(const QuadraticGF<Rational>& q, int max_m, const SolverConfig& cfg,
                                  unsigned threads) {
  if (is_zero(q.a) || is_zero(q.b) || is_zero(q.c))
    throw Error(ErrorCode::WrongCase, "midpoint exclusion needs a, b, c != 0");
  if (!(discriminant(q) > 0)) throw Error(ErrorCode::WrongCase, "midpoint exclusion needs b^2 - 4ac > 0");
  const auto [t1, t2] = quad_roots(q);
  MidpointReport report;
  report.exclusion_radius = 0.5 * (1.0 / std::abs(t1) + 1.0 / std::abs(t2));

  const auto ms = ladder(1, max_m);
  const auto solved = solve_sequence(q, ms, cfg, threads);
  std::vector<ExclusionVerdict> all;
  all.reserve(ms.size());
  for (std::size_t i = 0; i < ms.size(); ++i) {
    require_converged(solved[i], ms[i]);
    ExclusionVerdict v;
    v.m = ms[i];
    v.min_modulus = solved[i].min_modulus();
    v.satisfied = v.min_modulus >= report.exclusion_radius;
    if (!v.satisfied) report.n_observed = v.m;
    all.push_back(v);
  }
  for (const auto& v : all)
    if (v.m > report.n_observed) report.verdicts.push_back(v);
  return report;
}

MidpointReport midpoint_exclusion(const QuadraticGF<double>& q, int max_m, const SolverConfig& cfg,
                                  unsigned threads) {
  return midpoint_exclusion(to_exact(q), max_m, cfg, threads);
}

}  // namespace zlocus
