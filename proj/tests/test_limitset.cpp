#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "zlocus/limitset.hpp"
#include "zlocus/theorems.hpp"

using namespace zlocus;
using Q = QuadraticGF<Rational>;

namespace {

Q quad(long a, long b, long c) { return {Rational(a), Rational(b), Rational(c)}; }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

double max_abs_real(const RootSet& rs) {
  double worst = 0.0;
  for (const auto& z : rs.roots) worst = std::max(worst, std::abs(z.real()));
  return worst;
}

}  // namespace

TEST_CASE("the three-term form for (1, 1, -2)") {
  const ExpSumForm form = build_expsum(quad(1, 1, -2));
  REQUIRE(form.terms.size() == 3);
  const Complex z(0.3, -0.7);
  CHECK(form.terms[0].beta(z) == Complex(-2.0));
  CHECK(form.terms[1].beta(z) == Complex(1.0));
  CHECK(std::abs(form.terms[2].beta(z) - (-2.0 * z)) < 1e-15);
  // At z = 0, m = 0 the sum collapses to t2 - t1.
  CHECK(form.evaluate(0.0, 0) == Complex(-3.0));
}

TEST_CASE("the three-term form reproduces the numerator") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (const Q& q : {quad(1, 1, -2), quad(1, 5, 6), quad(6, 5, 1), quad(-3, 7, 2)}) {
    const ExpSumForm form = build_expsum(q);
    const auto [t1, t2] = quad_roots(q);
    for (int sample = 0; sample < 32; ++sample) {
      const Complex z = Complex(u(rng), u(rng)) * (2.0 / std::abs(t1));
      for (int m = 0; m <= 20; ++m) {
        const Complex expected = product_numerator(t1, t2, m)(z);
        CHECK(std::abs(form.evaluate(z, m) - expected) / product_identity_scale(t1, t2, m, z) < 1e-9);
      }
    }
  }
}

TEST_CASE("build_expsum preconditions") {
  CHECK(code_of([] { build_expsum(quad(1, 2, 1)); }) == ErrorCode::RepeatedRoot);
  CHECK(code_of([] { build_expsum(quad(1, 1, 2)); }) == ErrorCode::EqualModulusRoots);
  CHECK(code_of([] { build_expsum(quad(1, 0, -4)); }) == ErrorCode::EqualModulusRoots);
  CHECK(code_of([] { build_expsum(quad(1, 1, 0)); }) == ErrorCode::ZeroRoot);
  CHECK(code_of([] { build_expsum(quad(0, 1, 1)); }) == ErrorCode::DegenerateQuadratic);
}

TEST_CASE("classifier on the shifted powers example") {
  const ExpSumForm f = shifted_powers_form();
  auto c = sokal_classify(f, Complex(0, 2));
  CHECK(c.in_limit);
  CHECK(c.reason == LimitReason::DominantTie);
  CHECK(c.witness[0] == 0);
  CHECK(c.witness[1] == 2);

  c = sokal_classify(f, Complex(2, 0));
  CHECK_FALSE(c.in_limit);
  CHECK(c.reason == LimitReason::NotInSet);
}

TEST_CASE("the point 1/t2 is caught by the vanishing coefficient rule") {
  const ExpSumForm form = build_expsum(quad(1, 1, -2));
  const auto c = sokal_classify(form, Complex(-0.5));
  CHECK(c.in_limit);
  CHECK(c.reason == LimitReason::DominantVanishingAlpha);
  CHECK(c.witness[0] == 0);
  CHECK_THROWS_AS(sokal_classify(form, 0.0, 0.0), Error);
}

TEST_CASE("classifier agrees with the circle away from the special points") {
  for (const Q& q : {quad(1, 1, -2), quad(1, 5, 6), quad(2, -7, 3)}) {
    const ExpSumForm form = build_expsum(q);
    const auto [t1, t2] = quad_roots(q);
    const double radius = 1.0 / std::abs(t1);
    for (int k = 0; k < 720; ++k) {
      const double angle = 2 * std::numbers::pi * k / 720;
      const Complex on = std::polar(radius, angle);
      if (std::abs(on - 1.0 / t1) > 1e-3) CHECK(sokal_classify(form, on).in_limit);
      for (double factor : {0.2, 0.5, 0.94, 1.06, 1.5, 3.0}) {
        const Complex off = std::polar(radius * factor, angle);
        if (std::abs(off - 1.0 / t2) < 1e-9) continue;
        CHECK_FALSE(sokal_classify(form, off).in_limit);
      }
    }
  }
}

TEST_CASE("classification is stable under perturbations far below the tie tolerance") {
  const Q q = quad(1, 1, -2);
  const ExpSumForm form = build_expsum(q);
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double radius = 1.0;
  const double nudge = 0.1 * kDefaultTieTolerance * radius * 0.5;
  for (int k = 0; k < 500; ++k) {
    const Complex z = std::polar(radius * (k % 2 ? 1.0 : 1.3), 2 * std::numbers::pi * u(rng));
    const Complex w = z + Complex(u(rng), u(rng)) * (nudge / std::sqrt(2.0));
    CHECK(sokal_classify(form, z).in_limit == sokal_classify(form, w).in_limit);
  }
}

TEST_CASE("zeros of the shifted powers example lie near the imaginary axis") {
  for (int m : {10, 20, 30, 40, 50}) {
    const auto p = oracle::shifted_powers(m);
    RootSet rs = find_roots(p);
    REQUIRE(rs.converged);
    const double raw = max_abs_real(rs);
    polish_roots(p, rs);
    CAPTURE(m);
    CHECK(rs.size() == static_cast<std::size_t>(m));
    CHECK(max_abs_real(rs) <= raw);
    CHECK(max_abs_real(rs) < 0.15);
  }
}

TEST_CASE("limit circle examples") {
  CHECK(limit_circle(quad(1, 1, -2)) == 1.0);
  CHECK(limit_circle(quad(1, 5, 6)) == 0.5);
  CHECK(limit_circle(quad(6, 5, 1)) == doctest::Approx(3.0));
  CHECK(limit_circle(QuadraticGF<double>{1, 5, 6}) == 0.5);
  CHECK(code_of([] { limit_circle(quad(1, 1, 2)); }) == ErrorCode::WrongCase);
  CHECK(code_of([] { limit_circle(quad(1, 0, -2)); }) == ErrorCode::WrongCase);
}

TEST_CASE("Hausdorff distance examples") {
  RootSet origin;
  origin.roots = {Complex(0.0)};
  CHECK(hausdorff_to_circle(origin, 1.0) == 1.0);

  RootSet ring;
  const int n = 360;
  for (int k = 0; k < n; ++k) ring.roots.push_back(std::polar(2.0, 2 * std::numbers::pi * k / n));
  const double h = hausdorff_to_circle(ring, 2.0);
  CHECK(h >= 0.0);
  CHECK(h <= std::numbers::pi * 2.0 / n);

  RootSet dense;
  for (int k = 0; k < kDefaultCircleSamples; ++k)
    dense.roots.push_back(std::polar(1.0, 2 * std::numbers::pi * k / kDefaultCircleSamples));
  CHECK(hausdorff_to_circle(dense, 1.0) < 1e-12);

  CHECK(code_of([] { hausdorff_to_circle(RootSet{}, 1.0); }) == ErrorCode::EmptyRootSet);
  CHECK_THROWS_AS(hausdorff_to_circle(origin, 0.0), Error);
  CHECK_THROWS_AS(hausdorff_to_circle(origin, 1.0, 10), Error);
}

TEST_CASE("convergence report for (1, 1, -2)") {
  const LimitReport r = convergence_report(quad(1, 1, -2), {15, 30, 100}, {}, 3);
  CHECK(r.radius == 1.0);
  REQUIRE(r.entries.size() == 3);
  CHECK(r.entries[0].m == 15);
  CHECK(r.entries[2].m == 100);
  CHECK(r.entries[0].radial_spread > r.entries[1].radial_spread);
  CHECK(r.entries[1].radial_spread > r.entries[2].radial_spread);
  CHECK(r.entries[2].hausdorff < r.entries[0].hausdorff);
  CHECK(r.consistent);
  for (const auto& e : r.entries) {
    CHECK(e.hausdorff >= 0.0);
    CHECK(e.radial_spread <= e.hausdorff);
  }
}

TEST_CASE("convergence report radius uses the smaller root") {
  const LimitReport r = convergence_report(quad(6, 5, 1), {15, 30});
  CHECK(r.radius == doctest::Approx(3.0));
  CHECK(r.entries.size() == 2);
  CHECK(convergence_report(quad(1, 1, -2), {}).entries.empty());
}
