#include "zlocus/classic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "zlocus/series.hpp"

namespace zlocus {

namespace {

using RPoly = Polynomial<Rational>;

RPoly rpoly(std::initializer_list<long> coeffs) {
  auto p = RPoly::zero(static_cast<Eigen::Index>(coeffs.size()));
  Eigen::Index k = 0;
  for (long c : coeffs) p[k++] = Rational(c);
  return p;
}

void require_nonnegative(int m, const char* what) {
  if (m < 0) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be >= 0");
}

/// Extracts the t-coefficients of 1/den and compares them with `polys`.
void cross_check(const std::vector<RPoly>& polys, const BivariateSeries<Rational>& den, const char* name) {
  const int order = static_cast<int>(polys.size()) - 1;
  const auto series = series_divide(BivariateSeries<Rational>{RPoly::constant(Rational(1))}, den, order);
  for (std::size_t m = 0; m < polys.size(); ++m)
    if (!(series[m] == polys[m]))
      throw Error(ErrorCode::OracleMismatch, std::string(name) + ": recurrence and series disagree at m = " +
                                                 std::to_string(m));
}

RPoly shift_z(const RPoly& p) {
  auto out = RPoly::zero(p.size() + 1);
  for (Eigen::Index k = 0; k < p.size(); ++k) out[k + 1] = p[k];
  return out;
}

}  // namespace

NamedSequence chebyshev_u(int max_m) {
  require_nonnegative(max_m, "M");
  NamedSequence seq{SequenceKind::ChebyshevU, max_m, {}};
  auto& u = seq.polys;
  u.push_back(rpoly({1}));
  if (max_m >= 1) u.push_back(rpoly({0, 2}));
  for (int n = 2; n <= max_m; ++n) u.push_back((shift_z(u[n - 1]) * Rational(2) - u[n - 2]).trimmed());
  cross_check(u, {rpoly({1}), rpoly({0, -2}), rpoly({1})}, "Chebyshev U");
  return seq;
}

std::vector<Integer> fibonacci(int max_m) {
  require_nonnegative(max_m, "M");
  const auto series = series_divide(constant_series<Rational>({Rational(0), Rational(1)}),
                                    constant_series<Rational>({Rational(1), Rational(-1), Rational(-1)}), max_m);
  std::vector<Integer> out;
  out.reserve(series.size());
  for (const auto& s : series) out.push_back(numerator(s[0]));
  return out;
}

std::vector<Rational> exp_taylor_coefficients(int n) {
  require_nonnegative(n, "n");
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  Integer factorial = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) factorial *= k;
    out.emplace_back(Integer(1), factorial);
  }
  return out;
}

NamedSequence exp_taylor(int n) {
  const auto coeffs = exp_taylor_coefficients(n);
  NamedSequence seq{SequenceKind::ExpTaylor, n, {}};
  for (int m = 0; m <= n; ++m) {
    auto p = RPoly::zero(m + 1);
    for (int k = 0; k <= m; ++k) p[k] = coeffs[static_cast<std::size_t>(k)];
    seq.polys.push_back(std::move(p));
  }
  return seq;
}

std::vector<RPoly> reciprocal_taylor_seq(std::span<const Rational> f, int max_m) {
  require_nonnegative(max_m, "M");
  if (f.size() < static_cast<std::size_t>(max_m) + 1)
    throw Error(ErrorCode::InsufficientCoefficients,
                "need " + std::to_string(max_m + 1) + " coefficients, got " + std::to_string(f.size()));
  std::vector<RPoly> out;
  out.reserve(static_cast<std::size_t>(max_m) + 1);
  for (int m = 0; m <= max_m; ++m) {
    auto p = RPoly::zero(m + 1);
    for (int k = 0; k <= m; ++k) p[m - k] = f[static_cast<std::size_t>(k)];
    out.push_back(std::move(p));
  }

  std::vector<Rational> head(f.begin(), f.begin() + max_m + 1);
  const auto series = series_divide(constant_series(head), {rpoly({1}), rpoly({0, -1})}, max_m);
  for (int m = 0; m <= max_m; ++m)
    if (!(series[static_cast<std::size_t>(m)] == out[static_cast<std::size_t>(m)]))
      throw Error(ErrorCode::OracleMismatch, "reversed section disagrees with f(t)/(1 - tz) at m = " +
                                                 std::to_string(m));
  return out;
}

NamedSequence gm_sequence(int max_m) {
  require_nonnegative(max_m, "M");
  NamedSequence seq{SequenceKind::Gm, max_m, {}};
  auto& g = seq.polys;
  g.push_back(rpoly({1}));
  if (max_m >= 1) g.push_back(rpoly({-1}));
  for (int m = 2; m <= max_m; ++m) g.push_back((-g[m - 1] - shift_z(g[m - 2])).trimmed());
  cross_check(g, {rpoly({1}), rpoly({1}), rpoly({0, 1})}, "G_m");
  return seq;
}

std::vector<double> gm_zeros(int m) {
  require_nonnegative(m, "m");
  const auto formula = TrigZeroFormula::gm();
  std::vector<double> out;
  for (int k = 1; k <= m; ++k) {
    const double theta = k * std::numbers::pi / (m + 1);
    if (2 * k > m + 1) out.push_back(formula(theta));
  }
  std::sort(out.begin(), out.end());
  return out;
}

GmZeroCheck gm_zero_check(int m, const SolverConfig& cfg) {
  GmZeroCheck out;
  out.m = m;
  out.formula = gm_zeros(m);
  const RPoly g = gm_sequence(m).polys.back();
  if (g.effective_degree() >= 1) {
    out.solved = find_roots(g, cfg);
    polish_roots(g, out.solved);
  }
  if (out.solved.size() != out.formula.size()) {
    out.max_deviation = std::numeric_limits<double>::infinity();
    return out;
  }
  for (std::size_t k = 0; k < out.formula.size(); ++k) {
    const Complex& z = out.solved.roots[k];
    out.max_deviation = std::max(out.max_deviation, std::abs(z - out.formula[k]) / std::max(1.0, std::abs(z)));
  }
  out.ok = (out.solved.empty() || out.solved.converged) && out.max_deviation <= kGmZeroTolerance;
  return out;
}

NamedSequence jm_sequence(int max_m) {
  require_nonnegative(max_m, "M");
  NamedSequence seq{SequenceKind::Jm, max_m, {}};
  auto& j = seq.polys;
  const long start[] = {1, -1, 1};
  for (int m = 0; m <= std::min(max_m, 2); ++m) j.push_back(rpoly({start[m]}));
  for (int m = 3; m <= max_m; ++m) j.push_back((-j[m - 1] - shift_z(j[m - 3])).trimmed());
  cross_check(j, {rpoly({1}), rpoly({1}), rpoly({0}), rpoly({0, 1})}, "J_m");
  return seq;
}

std::vector<bool> jm_zero_bound_check(int max_m, const SolverConfig& cfg) {
  const auto seq = jm_sequence(max_m);
  const double bound = -4.0 / 27.0 + kJmBoundSlack;
  std::vector<bool> out;
  out.reserve(seq.polys.size());
  for (const auto& p : seq.polys) {
    if (p.effective_degree() < 1) {
      out.push_back(true);
      continue;
    }
    RootSet rs = find_roots(p, cfg);
    polish_roots(p, rs);
    bool ok = rs.converged;
    for (const auto& z : rs.roots)
      ok = ok && std::abs(z.imag()) <= kJmImagTolerance * std::max(1.0, std::abs(z)) && z.real() < bound;
    out.push_back(ok);
  }
  return out;
}

TrigZeroFormula TrigZeroFormula::gm() { return {Kind::Gm, std::numbers::pi / 2.0, std::numbers::pi}; }

TrigZeroFormula TrigZeroFormula::jm() { return {Kind::Jm, 2.0 * std::numbers::pi / 3.0, std::numbers::pi}; }

double TrigZeroFormula::operator()(double theta) const {
  const double c = std::cos(theta);
  const double four_c2 = 4.0 * c * c;
  if (kind == Kind::Gm) return 1.0 / four_c2;
  const double d = 1.0 - four_c2;
  return four_c2 / (d * d * d);
}

double TrigZeroFormula::preimage(double z) const {
  if (kind != Kind::Jm) throw Error(ErrorCode::InvalidArgument, "preimage is defined for the J_m formula");
  if (!(z < -4.0 / 27.0)) throw Error(ErrorCode::InvalidArgument, "z must be below -4/27");
  double lo = theta_lo;
  double hi = theta_hi;
  for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
    const double mid = 0.5 * (lo + hi);
    if ((*this)(mid) < z) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

SzegoDemo szego_demo(int n, const SolverConfig& cfg) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  auto seq = exp_taylor(n);
  const RPoly& section = seq.polys.back();
  SzegoDemo out;
  out.n = n;
  out.roots = find_roots(section, cfg);
  polish_roots(section, out.roots);
  out.annulus = kakeya_annulus(section);
  return out;
}

}  // namespace zlocus
