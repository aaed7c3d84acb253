#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "zlocus/classic.hpp"
#include "zlocus/rootfind.hpp"
#include "zlocus/seqcore.hpp"

using namespace zlocus;
using C = Polynomial<Complex>;

namespace {

/// |p(z)| <= 1e-6 * degree * max|a| * max(1, |z|)^degree for every root.
bool residual_sound(const C& p, const RootSet& rs) {
  const double degree = static_cast<double>(p.effective_degree());
  for (const auto& z : rs.roots) {
    const double bound = 1e-6 * degree * max_abs_coeff(p) * std::pow(std::max(1.0, std::abs(z)), degree);
    if (!(std::abs(p(z)) <= bound)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("z^2 - 1") {
  const RootSet rs = find_roots(C{Complex(-1), Complex(0), Complex(1)});
  REQUIRE(rs.size() == 2);
  CHECK(rs.roots[0] == Complex(-1.0));
  CHECK(rs.roots[1] == Complex(1.0));
  CHECK(rs.residuals[0] == 0.0);
  CHECK(rs.residuals[1] == 0.0);
  CHECK(rs.converged);
}

TEST_CASE("1 - z has the single root 1") {
  const auto g2 = gm_sequence(2).polys[2];
  const RootSet rs = find_roots(g2);
  REQUIRE(rs.size() == 1);
  CHECK(rs.roots[0] == Complex(1.0));
}

TEST_CASE("P_15 for (1, 1, -2) stays in the unit disk") {
  const auto p = expand_recurrence(QuadraticGF<Rational>{1, 1, -2}, 15)[15];
  const RootSet rs = find_roots(p);
  CHECK(rs.size() == 15);
  CHECK(rs.converged);
  CHECK(rs.max_modulus() <= 1.0 + 1e-8);
}

TEST_CASE("roots come back sorted by real then imaginary part") {
  const RootSet rs = find_roots(oracle::from_roots<Complex>({{2, 1}, {-1, 0}, {2, -1}, {0, 3}, {0, -3}}));
  for (std::size_t i = 1; i < rs.size(); ++i) {
    const auto& x = rs.roots[i - 1];
    const auto& y = rs.roots[i];
    CHECK((x.real() < y.real() || (x.real() == y.real() && x.imag() <= y.imag())));
  }
}

TEST_CASE("products of known linear factors are recovered") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 300; ++trial) {
    const int distinct = 1 + static_cast<int>(rng() % 6);
    std::vector<Complex> roots;
    for (int i = 0; i < distinct && static_cast<int>(roots.size()) < 8; ++i) {
      const Complex r(u(rng), (rng() % 3 == 0) ? 0.0 : u(rng));
      roots.push_back(r);
      if (rng() % 4 == 0 && roots.size() < 8) roots.push_back(r);  // double root
    }
    const Complex lead(u(rng) + 4.0, u(rng));
    const C p = oracle::from_roots(roots, lead);
    const RootSet rs = find_roots(p);
    CAPTURE(trial);
    CHECK(rs.converged);
    CHECK(oracle::multiset_distance(rs.roots, roots) < 1e-8);
    CHECK(residual_sound(p, rs));
  }
}

TEST_CASE("residuals are small whenever the solve converged") {
  std::mt19937_64 rng(43);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 200; ++trial) {
    const int degree = 1 + static_cast<int>(rng() % 40);
    auto p = C::zero(degree + 1);
    for (int k = 0; k <= degree; ++k) p[k] = Complex(g(rng), g(rng));
    const RootSet rs = find_roots(p);
    REQUIRE(rs.converged);
    CHECK(rs.size() == static_cast<std::size_t>(degree));
    for (double r : rs.residuals) CHECK(r <= 1e-8);
    CHECK(residual_sound(p, rs));
  }
}

TEST_CASE("solves are deterministic for a fixed seed") {
  const auto p = expand_recurrence(QuadraticGF<Rational>{3, -2, -7}, 40)[40];
  SolverConfig cfg;
  cfg.seed = 1234;
  const RootSet a = find_roots(p, cfg);
  const RootSet b = find_roots(p, cfg);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a.roots[i].real() == b.roots[i].real());
    CHECK(a.roots[i].imag() == b.roots[i].imag());
  }
}

TEST_CASE("zero leading coefficients are dropped and recorded") {
  const C p{Complex(-2), Complex(1), Complex(0), Complex(0)};
  const RootSet rs = find_roots(p);
  CHECK(rs.dropped_degree == 2);
  REQUIRE(rs.size() == 1);
  CHECK(rs.roots[0] == Complex(2.0));
}

TEST_CASE("zero low coefficients become roots at the origin") {
  const RootSet rs = find_roots(C{Complex(0), Complex(0), Complex(-1), Complex(1)});
  REQUIRE(rs.size() == 3);
  CHECK(rs.roots[0] == Complex(0.0));
  CHECK(rs.roots[1] == Complex(0.0));
  CHECK(std::abs(rs.roots[2] - 1.0) < 1e-14);
}

TEST_CASE("find_roots rejects constants and the zero polynomial") {
  try {
    find_roots(C{Complex(3), Complex(0)});
    FAIL("expected ConstantPolynomial");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConstantPolynomial);
  }
  try {
    find_roots(C::zero(4));
    FAIL("expected AllZeroPolynomial");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AllZeroPolynomial);
  }
  SolverConfig bad;
  bad.tol = 0.0;
  CHECK_THROWS_AS(find_roots(C{Complex(1), Complex(1)}, bad), Error);
  bad = SolverConfig{};
  bad.max_iter = 0;
  CHECK_THROWS_AS(find_roots(C{Complex(1), Complex(1)}, bad), Error);
}

TEST_CASE("a tiny iteration budget reports non-convergence after the restart") {
  SolverConfig cfg;
  cfg.max_iter = 1;
  const auto p = expand_recurrence(QuadraticGF<Rational>{1, 1, -2}, 30)[30];
  const RootSet rs = find_roots(p, cfg);
  CHECK_FALSE(rs.converged);
  CHECK(rs.iterations == 2);
  CHECK(rs.size() == 30);
}

TEST_CASE("exact polishing sharpens clustered real roots") {
  const auto g = gm_sequence(40).polys[40];
  RootSet rs = find_roots(g);
  polish_roots(g, rs);
  const auto formula = gm_zeros(40);
  REQUIRE(rs.size() == formula.size());
  for (std::size_t k = 0; k < formula.size(); ++k)
    CHECK(std::abs(rs.roots[k] - formula[k]) <= 1e-12 * formula[k]);
}

TEST_CASE("Kakeya annulus examples") {
  Annulus a = kakeya_annulus(C{Complex(1), Complex(1), Complex(1)});
  CHECK(a.r_min == 1.0);
  CHECK(a.r_max == 1.0);
  a = kakeya_annulus(C{Complex(2), Complex(4)});
  CHECK(a.r_min == 0.5);
  CHECK(a.r_max == 0.5);
  for (int n : {1, 5, 30}) {
    const auto coeffs = exp_taylor_coefficients(n);
    auto p = Polynomial<Rational>::zero(n + 1);
    for (int k = 0; k <= n; ++k) p[k] = coeffs[k];
    a = kakeya_annulus(p);
    CHECK(a.r_min == doctest::Approx(1.0));
    CHECK(a.r_max == doctest::Approx(n));
  }
}

TEST_CASE("Kakeya annulus preconditions") {
  try {
    kakeya_annulus(C{Complex(1), Complex(0), Complex(1)});
    FAIL("expected NonPositiveCoefficients");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonPositiveCoefficients);
  }
  CHECK_THROWS_AS(kakeya_annulus(C{Complex(1), Complex(1, 1)}), Error);
  CHECK_THROWS_AS(kakeya_annulus(C{Complex(1)}), Error);
}

TEST_CASE("signed Kakeya annulus normalizes signs") {
  Annulus a = kakeya_signed(C{Complex(1), Complex(-1), Complex(1)});
  CHECK(a.r_min == 1.0);
  CHECK(a.r_max == 1.0);
  a = kakeya_signed(C{Complex(-1), Complex(-1), Complex(-1)});
  CHECK(a.r_min == 1.0);
  a = kakeya_signed(C{Complex(-1), Complex(2), Complex(-8)});
  CHECK(a.r_min == 0.25);
  CHECK(a.r_max == 0.5);
  try {
    kakeya_signed(C{Complex(1), Complex(-2), Complex(-3)});
    FAIL("expected MixedSignPattern");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MixedSignPattern);
  }
}

TEST_CASE("the normalized (1, 5, 6) sequence has its Kakeya annulus beyond the disk") {
  const Normalized n = normalize({1, 5, 6});
  const auto h = expand_recurrence(to_exact(n.quad), 8)[8];
  const Annulus a = kakeya_signed(h);
  const double radius = 1.0 / std::abs(quad_roots(n.quad).t1);
  CHECK(a.r_min > radius);
  for (const auto& z : find_roots(h).roots) CHECK(std::abs(z) >= a.r_min - 1e-8);
}

TEST_CASE("roots of positive-coefficient polynomials lie in the Kakeya annulus") {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> u(0.05, 20.0);
  for (int trial = 0; trial < 300; ++trial) {
    const int degree = 1 + static_cast<int>(rng() % 15);
    auto p = C::zero(degree + 1);
    for (int k = 0; k <= degree; ++k) p[k] = u(rng);
    const Annulus a = kakeya_annulus(p);
    CHECK(a.r_min <= a.r_max);
    for (const auto& z : find_roots(p).roots) {
      CHECK(std::abs(z) >= a.r_min - 1e-8);
      CHECK(std::abs(z) <= a.r_max + 1e-8);
    }
  }
}
