#include "zlocus/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace zlocus {

double RootSet::max_modulus() const {
  double m = 0.0;
  for (const auto& r : roots) m = std::max(m, std::abs(r));
  return m;
}

double RootSet::min_modulus() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& r : roots) m = std::min(m, std::abs(r));
  return m;
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct NewtonStep {
  Complex ratio;       // p(z) / p'(z)
  bool at_noise;       // |p(z)| is within the rounding bound of Horner's rule
  bool exact_zero;
};

/// Evaluates p / p' with Horner's rule, switching to the reversed polynomial
/// outside the unit disk so that large |z| never overflows.
class Evaluator {
 public:
  explicit Evaluator(std::vector<Complex> coeffs) : c_(std::move(coeffs)), abs_c_(c_.size()) {
    for (std::size_t k = 0; k < c_.size(); ++k) abs_c_[k] = std::abs(c_[k]);
    noise_ = 4.0 * kEps * static_cast<double>(c_.size());
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }

  NewtonStep newton(const Complex& z) const {
    const int d = degree();
    if (std::abs(z) <= 1.0) {
      Complex p = c_[d], dp = 0.0;
      double bound = abs_c_[d];
      const double az = std::abs(z);
      for (int k = d - 1; k >= 0; --k) {
        dp = dp * z + p;
        p = p * z + c_[k];
        bound = bound * az + abs_c_[k];
      }
      if (p == Complex{}) return {0.0, true, true};
      return {p / dp, std::abs(p) <= noise_ * bound, false};
    }
    const Complex w = 1.0 / z;
    const double aw = std::abs(w);
    Complex r = c_[0], dr = 0.0;
    double bound = abs_c_[0];
    for (int i = 1; i <= d; ++i) {
      dr = dr * w + r;
      r = r * w + c_[i];
      bound = bound * aw + abs_c_[i];
    }
    if (r == Complex{}) return {0.0, true, true};
    return {z * r / (static_cast<double>(d) * r - w * dr), std::abs(r) <= noise_ * bound, false};
  }

  /// p'(z) / p''(z), used to polish a double root.
  Complex derivative_ratio(const Complex& z) const {
    const int d = degree();
    Complex p = c_[d], dp = 0.0, ddp = 0.0;
    for (int k = d - 1; k >= 0; --k) {
      ddp = ddp * z + dp;
      dp = dp * z + p;
      p = p * z + c_[k];
    }
    return dp / (2.0 * ddp);
  }

  /// |p(z)| relative to its Horner rounding bound.
  double noise_ratio(const Complex& z) const {
    const int d = degree();
    Complex p = c_[d];
    double bound = abs_c_[d];
    const double az = std::abs(z);
    for (int k = d - 1; k >= 0; --k) {
      p = p * z + c_[k];
      bound = bound * az + abs_c_[k];
    }
    return bound == 0.0 ? 0.0 : std::abs(p) / (noise_ * bound);
  }

 private:
  std::vector<Complex> c_;
  std::vector<double> abs_c_;
  double noise_ = 0.0;
};

double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Initial approximations on circles read off the upper convex hull of
/// (k, log|c_k|): each hull edge k_i -> k_j contributes k_j - k_i points on
/// the circle of radius (|c_{k_i}| / |c_{k_j}|)^(1/(k_j - k_i)).
std::vector<Complex> initial_points(const std::vector<Complex>& c, double radius_scale, double phase) {
  const int d = static_cast<int>(c.size()) - 1;
  std::vector<int> hull;
  for (int k = 0; k <= d; ++k) {
    if (c[k] == Complex{}) continue;
    const double yk = std::log(std::abs(c[k]));
    while (hull.size() >= 2) {
      const int i = hull[hull.size() - 2];
      const int j = hull.back();
      const double yi = std::log(std::abs(c[i]));
      const double yj = std::log(std::abs(c[j]));
      // Drop j when it lies on or below the chord from i to k.
      if ((yj - yi) * (k - i) <= (yk - yi) * (j - i)) hull.pop_back();
      else break;
    }
    hull.push_back(k);
  }
  std::vector<Complex> z;
  z.reserve(static_cast<std::size_t>(d));
  for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
    const int lo = hull[e];
    const int hi = hull[e + 1];
    const int count = hi - lo;
    const double radius =
        radius_scale * std::pow(std::abs(c[lo]) / std::abs(c[hi]), 1.0 / static_cast<double>(count));
    for (int j = 0; j < count; ++j) {
      const double angle = 2.0 * std::numbers::pi * (static_cast<double>(j) + phase) / count +
                           0.5 * static_cast<double>(e);
      z.push_back(std::polar(radius, angle));
    }
  }
  return z;
}

struct AberthResult {
  std::vector<Complex> roots;
  int iterations = 0;
  bool converged = false;
};

AberthResult aberth(const Evaluator& eval, std::vector<Complex> z, const SolverConfig& cfg) {
  const std::size_t n = z.size();
  std::vector<char> done(n, 0);
  AberthResult out;
  for (int it = 1; it <= cfg.max_iter; ++it) {
    out.iterations = it;
    bool all_done = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      const NewtonStep step = eval.newton(z[i]);
      if (step.exact_zero) {
        done[i] = 1;
        continue;
      }
      Complex repulsion = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      Complex w = step.ratio / (1.0 - step.ratio * repulsion);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = step.ratio;
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
        // Stationary point of p: nudge off it.
        w = Complex(cfg.tol, cfg.tol) * std::max(1.0, std::abs(z[i])) * 1e3;
      }
      z[i] -= w;
      if (std::abs(w) <= cfg.tol * std::abs(z[i]) || step.at_noise) done[i] = 1;
      else all_done = false;
    }
    if (all_done) {
      out.converged = true;
      break;
    }
  }
  out.roots = std::move(z);
  return out;
}

/// Replaces two approximations of one double root by the zero of p' between them.
void merge_double_roots(const Evaluator& eval, std::vector<Complex>& z) {
  const std::size_t n = z.size();
  std::vector<char> used(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (used[i]) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (used[j]) continue;
      const double window = 1e-5 * std::max(1.0, std::abs(z[i]));
      if (std::abs(z[i] - z[j]) > window) continue;
      Complex w = 0.5 * (z[i] + z[j]);
      for (int k = 0; k < 8; ++k) {
        const Complex step = eval.derivative_ratio(w);
        if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
        w -= step;
        if (std::abs(step) <= kEps * std::max(1.0, std::abs(w))) break;
      }
      if (std::abs(w - 0.5 * (z[i] + z[j])) <= window && eval.noise_ratio(w) <= 4.0) {
        z[i] = z[j] = w;
        used[i] = used[j] = 1;
        break;
      }
    }
  }
}

double scaled_residual(const Polynomial<Complex>& p, Eigen::Index degree, double max_coeff, const Complex& root) {
  // |p(r)| / max(1, |r|)^n, evaluated without overflow.
  if (std::abs(root) <= 1.0) {
    Complex acc = 0.0;
    for (Eigen::Index k = degree; k >= 0; --k) acc = acc * root + p[k];
    return std::abs(acc) / max_coeff;
  }
  const Complex w = 1.0 / root;
  Complex acc = 0.0;
  for (Eigen::Index k = 0; k <= degree; ++k) acc = acc * w + p[k];
  return std::abs(acc) / max_coeff;
}

struct ExactComplex {
  Rational re;
  Rational im;
};

/// Exact p(z) and p'(z) at z = x + iy.
std::pair<ExactComplex, ExactComplex> exact_eval(const Polynomial<Rational>& p, const Complex& z) {
  const Rational x = exact_rational(z.real());
  const Rational y = exact_rational(z.imag());
  const bool real_axis = y.is_zero();
  ExactComplex v{p[p.size() - 1], Rational(0)};
  ExactComplex d{Rational(0), Rational(0)};
  const auto mul_z = [&](ExactComplex& w) {
    if (real_axis) {
      w.re *= x;
      w.im *= x;
      return;
    }
    Rational re = w.re * x - w.im * y;
    w.im = w.re * y + w.im * x;
    w.re = std::move(re);
  };
  for (Eigen::Index k = p.size() - 2; k >= 0; --k) {
    mul_z(d);
    d.re += v.re;
    d.im += v.im;
    mul_z(v);
    v.re += p[k];
  }
  return {v, d};
}

void sort_roots(std::vector<Complex>& roots) {
  std::sort(roots.begin(), roots.end(), [](const Complex& x, const Complex& y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
}

}  // namespace

std::vector<double> root_residuals(const Polynomial<Complex>& p, const std::vector<Complex>& roots) {
  const Eigen::Index degree = p.effective_degree();
  const double scale = max_abs_coeff(p);
  std::vector<double> out;
  out.reserve(roots.size());
  for (const auto& r : roots) out.push_back(degree < 0 ? 0.0 : scaled_residual(p, degree, scale, r));
  return out;
}

void polish_roots(const Polynomial<Rational>& p, RootSet& rs, int max_steps) {
  const std::vector<Complex> start = rs.roots;
  for (std::size_t i = 0; i < start.size(); ++i) {
    double separation = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < start.size(); ++j)
      if (j != i) separation = std::min(separation, std::abs(start[i] - start[j]));
    Complex z = start[i];
    double last_step = std::numeric_limits<double>::infinity();
    for (int step = 0; step < max_steps; ++step) {
      const auto [v, d] = exact_eval(p, z);
      if (v.re.is_zero() && v.im.is_zero()) break;
      const Rational norm = d.re * d.re + d.im * d.im;
      if (norm.is_zero()) break;
      const Complex w(to_double(Rational((v.re * d.re + v.im * d.im) / norm)),
                      to_double(Rational((v.im * d.re - v.re * d.im) / norm)));
      const double size = std::abs(w);
      if (!(size < last_step)) break;
      z -= w;
      last_step = size;
      if (size <= kEps * std::abs(z)) break;
    }
    if (std::abs(z - start[i]) < 0.5 * separation) rs.roots[i] = z;
  }
  sort_roots(rs.roots);
  rs.residuals = root_residuals(to_complex(p), rs.roots);
}

RootSet find_roots(const Polynomial<Complex>& p, const SolverConfig& cfg) {
  cfg.validate();
  const Eigen::Index degree = p.effective_degree();
  if (degree < 0) throw Error(ErrorCode::AllZeroPolynomial, "all coefficients are zero");
  if (degree == 0) throw Error(ErrorCode::ConstantPolynomial, "effective degree 0");

  RootSet out;
  out.dropped_degree = p.size() - 1 - degree;

  Eigen::Index low = 0;
  while (p[low] == Complex{}) ++low;
  std::vector<Complex> roots(static_cast<std::size_t>(low), Complex{});

  std::vector<Complex> reduced(static_cast<std::size_t>(degree - low) + 1);
  const double scale = max_abs_coeff(p);
  for (Eigen::Index k = low; k <= degree; ++k) reduced[static_cast<std::size_t>(k - low)] = p[k] / scale;
  const int d = static_cast<int>(degree - low);

  if (d == 1) {
    roots.push_back(-reduced[0] / reduced[1]);
  } else if (d > 1) {
    const Evaluator eval(reduced);
    std::mt19937_64 rng(cfg.seed);
    AberthResult run = aberth(eval, initial_points(reduced, 1.0, 0.25 + 0.5 * unit_draw(rng)), cfg);
    out.iterations = run.iterations;
    if (!run.converged) {
      run = aberth(eval, initial_points(reduced, 1.1 + 0.2 * unit_draw(rng), unit_draw(rng)), cfg);
      out.iterations += run.iterations;
    }
    out.converged = run.converged;
    merge_double_roots(eval, run.roots);
    roots.insert(roots.end(), run.roots.begin(), run.roots.end());
  }

  sort_roots(roots);
  out.residuals = root_residuals(p, roots);
  out.roots = std::move(roots);
  return out;
}

Annulus kakeya_annulus(const Polynomial<Complex>& p) {
  if (p.size() < 2) throw Error(ErrorCode::ConstantPolynomial, "need degree >= 1");
  for (Eigen::Index k = 0; k < p.size(); ++k)
    if (p[k].imag() != 0.0 || !(p[k].real() > 0.0))
      throw Error(ErrorCode::NonPositiveCoefficients, "coefficient " + std::to_string(k) + " is not real positive");
  Annulus a{std::numeric_limits<double>::infinity(), 0.0};
  for (Eigen::Index k = 0; k + 1 < p.size(); ++k) {
    const double ratio = p[k].real() / p[k + 1].real();
    a.r_min = std::min(a.r_min, ratio);
    a.r_max = std::max(a.r_max, ratio);
  }
  return a;
}

Annulus kakeya_signed(const Polynomial<Complex>& p) {
  if (p.size() < 2) throw Error(ErrorCode::ConstantPolynomial, "need degree >= 1");
  for (Eigen::Index k = 0; k < p.size(); ++k)
    if (p[k].imag() != 0.0) throw Error(ErrorCode::NonPositiveCoefficients, "non-real coefficient");
  const auto all_positive = [](const Polynomial<Complex>& q) {
    for (Eigen::Index k = 0; k < q.size(); ++k)
      if (!(q[k].real() > 0.0)) return false;
    return true;
  };
  const Polynomial<Complex> reflected = p.reflected();
  for (const auto& candidate : {p, -p, reflected, -reflected})
    if (all_positive(candidate)) return kakeya_annulus(candidate);
  throw Error(ErrorCode::MixedSignPattern, "coefficients are neither one-signed nor alternating");
}

}  // namespace zlocus
