#include "zlocus/limitset.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "zlocus/theorems.hpp"

namespace zlocus {

Complex ExpSumForm::evaluate(const Complex& z, int m) const {
  Complex sum = 0.0;
  for (const auto& term : terms) sum += term.alpha(z) * ipow(term.beta(z), static_cast<unsigned>(m));
  return sum;
}

namespace {

template <typename Real>
void require_separated_real_roots(const QuadraticGF<Real>& q) {
  if (q.a == Real(0)) throw Error(ErrorCode::DegenerateQuadratic, "a = 0");
  if (q.c == Real(0)) throw Error(ErrorCode::ZeroRoot, "c = 0 gives a zero root");
  const Real disc = discriminant(q);
  if (disc == Real(0)) throw Error(ErrorCode::RepeatedRoot, "b^2 - 4ac = 0");
  if (disc < Real(0)) throw Error(ErrorCode::EqualModulusRoots, "complex-conjugate roots share their modulus");
  if (q.b == Real(0)) throw Error(ErrorCode::EqualModulusRoots, "b = 0 gives roots +-t");
}

ExpSumForm three_term_form(double t1, double t2) {
  ExpSumForm form;
  form.terms.push_back({Polynomial<Complex>{t2, -t2 * t2}, Polynomial<Complex>{t2}});
  form.terms.push_back({Polynomial<Complex>{-t1, t1 * t1}, Polynomial<Complex>{t1}});
  form.terms.push_back({Polynomial<Complex>{0.0, 0.0, t1 * t2 * t2 - t1 * t1 * t2}, Polynomial<Complex>{0.0, t1 * t2}});
  return form;
}

void self_check(const ExpSumForm& form, double t1, double t2) {
  std::mt19937_64 rng(0x51ab);
  const double reach = 2.0 / std::abs(t1);
  for (int sample = 0; sample < 16; ++sample) {
    const double r = reach * static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const Complex z = std::polar(r, angle);
    for (int m = 0; m <= 10; ++m) {
      const Complex expected = product_numerator(Complex(t1), Complex(t2), m)(z);
      const double scale = product_identity_scale(t1, t2, m, z);
      if (std::abs(form.evaluate(z, m) - expected) > 1e-9 * scale)
        throw Error(ErrorCode::OracleMismatch, "exponential-sum form does not reproduce Q_m");
    }
  }
}

}  // namespace

ExpSumForm build_expsum(const QuadraticGF<double>& q) {
  require_separated_real_roots(q);
  const auto [t1, t2] = quad_roots(q);
  if (std::abs(t1) == std::abs(t2)) throw Error(ErrorCode::EqualModulusRoots, "|t1| = |t2|");
  ExpSumForm form = three_term_form(t1.real(), t2.real());
  self_check(form, t1.real(), t2.real());
  return form;
}

ExpSumForm build_expsum(const QuadraticGF<Rational>& q) {
  require_separated_real_roots(q);
  return build_expsum(to_double(q));
}

ExpSumForm shifted_powers_form() {
  ExpSumForm form;
  form.terms.push_back({Polynomial<Complex>{1.0}, Polynomial<Complex>{-1.0, 1.0}});
  form.terms.push_back({Polynomial<Complex>{1.0}, Polynomial<Complex>{0.0, 1.0}});
  form.terms.push_back({Polynomial<Complex>{1.0}, Polynomial<Complex>{1.0, 1.0}});
  return form;
}

LimitClassification sokal_classify(const ExpSumForm& form, const Complex& z, double tie_tol) {
  if (!(tie_tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tie_tol must be positive");
  LimitClassification out;
  const std::size_t n = form.terms.size();
  if (n == 0) return out;

  std::vector<double> beta(n), alpha(n);
  for (std::size_t k = 0; k < n; ++k) {
    beta[k] = std::abs(form.terms[k].beta(z));
    alpha[k] = std::abs(form.terms[k].alpha(z));
  }
  const double top = *std::max_element(beta.begin(), beta.end());
  std::vector<int> dominant;
  for (std::size_t k = 0; k < n; ++k)
    if (top - beta[k] <= tie_tol * top) dominant.push_back(static_cast<int>(k));

  if (dominant.size() >= 2) {
    for (std::size_t i = 0; i < dominant.size(); ++i)
      for (std::size_t j = i + 1; j < dominant.size(); ++j)
        if (alpha[dominant[i]] > tie_tol && alpha[dominant[j]] > tie_tol) {
          out.in_limit = true;
          out.reason = LimitReason::DominantTie;
          out.witness[0] = dominant[i];
          out.witness[1] = dominant[j];
          return out;
        }
    return out;
  }
  if (alpha[dominant.front()] <= tie_tol) {
    out.in_limit = true;
    out.reason = LimitReason::DominantVanishingAlpha;
    out.witness[0] = dominant.front();
  }
  return out;
}

double limit_circle(const QuadraticGF<double>& q) {
  if (q.a == 0.0 || q.b == 0.0 || q.c == 0.0) throw Error(ErrorCode::WrongCase, "limit circle needs a, b, c != 0");
  if (!(discriminant(q) > 0.0)) throw Error(ErrorCode::WrongCase, "limit circle needs b^2 - 4ac > 0");
  return 1.0 / std::abs(quad_roots(q).t1);
}

double limit_circle(const QuadraticGF<Rational>& q) {
  if (is_zero(q.a) || is_zero(q.b) || is_zero(q.c))
    throw Error(ErrorCode::WrongCase, "limit circle needs a, b, c != 0");
  if (!(discriminant(q) > 0)) throw Error(ErrorCode::WrongCase, "limit circle needs b^2 - 4ac > 0");
  return 1.0 / std::abs(quad_roots(q).t1);
}

double hausdorff_to_circle(const RootSet& rs, double radius, int circle_samples) {
  if (rs.empty()) throw Error(ErrorCode::EmptyRootSet, "no roots");
  if (!(radius > 0.0)) throw Error(ErrorCode::InvalidArgument, "radius must be positive");
  if (circle_samples < 64) throw Error(ErrorCode::InvalidArgument, "need at least 64 circle samples");

  double to_circle = 0.0;
  for (const auto& z : rs.roots) to_circle = std::max(to_circle, std::abs(std::abs(z) - radius));

  double to_roots = 0.0;
  for (int s = 0; s < circle_samples; ++s) {
    const Complex w = std::polar(radius, 2.0 * std::numbers::pi * s / circle_samples);
    double nearest = std::numeric_limits<double>::infinity();
    for (const auto& z : rs.roots) nearest = std::min(nearest, std::abs(w - z));
    to_roots = std::max(to_roots, nearest);
  }
  return std::max(to_circle, to_roots);
}

LimitReport convergence_report(const QuadraticGF<Rational>& q, const std::vector<int>& ms, const SolverConfig& cfg,
                               unsigned threads, int circle_samples) {
  LimitReport report;
  report.radius = limit_circle(q);
  if (ms.empty()) return report;
  const ExpSumForm form = build_expsum(q);
  const auto solved = solve_sequence(q, ms, cfg, threads);
  report.entries.resize(ms.size());
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (!solved[i].converged)
      throw Error(ErrorCode::SolverNotConverged, "root solve for m = " + std::to_string(ms[i]) + " did not converge");
    LimitEntry& e = report.entries[i];
    e.m = ms[i];
    e.hausdorff = hausdorff_to_circle(solved[i], report.radius, circle_samples);
    for (const auto& z : solved[i].roots) {
      const double radial = std::abs(std::abs(z) - report.radius);
      e.radial_spread = std::max(e.radial_spread, radial);
      if (!sokal_classify(form, z).in_limit && radial > 2.0 * e.hausdorff) report.consistent = false;
    }
  }
  return report;
}

LimitReport convergence_report(const QuadraticGF<double>& q, const std::vector<int>& ms, const SolverConfig& cfg,
                               unsigned threads, int circle_samples) {
  return convergence_report(to_exact(q), ms, cfg, threads, circle_samples);
}

}  // namespace zlocus
