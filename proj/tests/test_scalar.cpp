#include <doctest.h>

#include <cmath>
#include <limits>

#include "zlocus/error.hpp"
#include "zlocus/polynomial.hpp"
#include "zlocus/scalar.hpp"

using namespace zlocus;

TEST_CASE("exact_rational reproduces the double bit for bit") {
  for (double x : {0.0, 1.0, -0.1, 1e-300, 3.141592653589793, -2.5e17, std::ldexp(1.0, -1074)}) {
    const Rational r = exact_rational(x);
    CHECK(r.convert_to<double>() == x);
  }
  CHECK(exact_rational(0.5) == Rational(1, 2));
  CHECK(exact_rational(-0.75) == Rational(-3, 4));
  CHECK(exact_rational(0.1) != Rational(1, 10));
  CHECK_THROWS_AS(exact_rational(std::numeric_limits<double>::infinity()), Error);
  CHECK_THROWS_AS(exact_rational(std::nan("")), Error);
}

TEST_CASE("parse_rational accepts integers, fractions and decimals") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK(parse_rational("+7") == Rational(7));
  CHECK(parse_rational("1/3") == Rational(1, 3));
  CHECK(parse_rational("-4/6") == Rational(-2, 3));
  CHECK(parse_rational("0.1") == Rational(1, 10));
  CHECK(parse_rational("-2.50") == Rational(-5, 2));
  CHECK(parse_rational("1e-3") == Rational(1, 1000));
  CHECK(parse_rational("2.5E2") == Rational(250));
  CHECK(parse_rational(".5") == Rational(1, 2));
}

TEST_CASE("parse_rational rejects malformed text") {
  for (const char* bad : {"", "-", "1/0", "abc", "1.2.3", "1/2/3", "1e", "e5", "1 2", "0x10", "1e99999"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), Error);
  }
}

TEST_CASE("rational_sqrt finds exact square roots only") {
  Rational root;
  CHECK(rational_sqrt(Rational(9, 4), root));
  CHECK(root == Rational(3, 2));
  CHECK(rational_sqrt(Rational(0), root));
  CHECK(root == 0);
  CHECK_FALSE(rational_sqrt(Rational(2), root));
  CHECK_FALSE(rational_sqrt(Rational(-4), root));
  CHECK_FALSE(rational_sqrt(Rational(4, 3), root));
}

TEST_CASE("polynomial evaluation, calculus and reshaping") {
  const Polynomial<Rational> p{Rational(1), Rational(-3), Rational(0), Rational(2)};  // 1 - 3z + 2z^3
  CHECK(p(Rational(2)) == Rational(11));
  CHECK(p.effective_degree() == 3);
  CHECK(p.derivative() == Polynomial<Rational>{Rational(-3), Rational(0), Rational(6)});
  CHECK(p.reversed() == Polynomial<Rational>{Rational(2), Rational(0), Rational(-3), Rational(1)});
  CHECK(p.reflected() == Polynomial<Rational>{Rational(1), Rational(3), Rational(0), Rational(-2)});
  CHECK(p.scaled_argument(Rational(2)) == Polynomial<Rational>{Rational(1), Rational(-6), Rational(0), Rational(16)});

  const auto padded = p.padded(6);
  CHECK(padded.size() == 6);
  CHECK(padded == p);
  CHECK(padded.trimmed().size() == 4);
  CHECK(Polynomial<Rational>::zero(3).effective_degree() == -1);
  CHECK(Polynomial<Rational>::zero(3).trimmed().size() == 1);
  CHECK(Polynomial<Rational>::monomial(2, Rational(5)) == Polynomial<Rational>{Rational(0), Rational(0), Rational(5)});
}

TEST_CASE("polynomial arithmetic") {
  using P = Polynomial<Rational>;
  const P x{Rational(1), Rational(1)};
  const P y{Rational(-1), Rational(1)};
  CHECK(x * y == P{Rational(-1), Rational(0), Rational(1)});
  CHECK(x + y == P{Rational(0), Rational(2)});
  CHECK(x - y == P{Rational(2)});
  CHECK(-x == P{Rational(-1), Rational(-1)});
  CHECK(x * Rational(3) == P{Rational(3), Rational(3)});
  CHECK(x / Rational(2) == P{Rational(1, 2), Rational(1, 2)});
}

TEST_CASE("reversal is an involution when both end coefficients are nonzero") {
  const Polynomial<Rational> p{Rational(2), Rational(0), Rational(5, 3), Rational(-1)};
  CHECK(p.reversed().reversed() == p);
}

TEST_CASE("relative_coeff_distance scales by the larger coefficient vector") {
  const Polynomial<Complex> a{Complex(1.0), Complex(100.0)};
  const Polynomial<Complex> b{Complex(2.0), Complex(100.0)};
  CHECK(relative_coeff_distance(a, b) == doctest::Approx(0.01));
  CHECK(relative_coeff_distance(a, a) == 0.0);
  const Polynomial<Complex> tiny{Complex(1e-20)};
  CHECK(relative_coeff_distance(tiny, Polynomial<Complex>{Complex(0.0)}) == doctest::Approx(1e-6));
}
