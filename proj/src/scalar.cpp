#include "zlocus/scalar.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "zlocus/error.hpp"

namespace zlocus {

Rational exact_rational(double x) {
  if (!std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, "non-finite value");
  int exponent = 0;
  const double mantissa = std::frexp(x, &exponent);
  // mantissa * 2^53 is an integer for every double.
  const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  Rational r(scaled);
  exponent -= 53;
  const Rational two(2);
  if (exponent > 0) r *= ipow(two, static_cast<unsigned>(exponent));
  if (exponent < 0) r /= ipow(two, static_cast<unsigned>(-exponent));
  return r;
}

namespace {

Integer parse_digits(std::string_view digits, std::string_view original) {
  if (digits.empty()) throw Error(ErrorCode::InvalidArgument, "malformed number '" + std::string(original) + "'");
  for (char ch : digits)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw Error(ErrorCode::InvalidArgument, "malformed number '" + std::string(original) + "'");
  return Integer(std::string(digits));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view original = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  Rational value;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const Integer num = parse_digits(text.substr(0, slash), original);
    const Integer den = parse_digits(text.substr(slash + 1), original);
    if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator in '" + std::string(original) + "'");
    value = Rational(num, den);
  } else {
    long exponent = 0;
    if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp_text = text.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      const Integer magnitude = parse_digits(exp_text, original);
      if (magnitude > 4000) throw Error(ErrorCode::InvalidArgument, "exponent out of range");
      exponent = magnitude.convert_to<long>() * (exp_negative ? -1 : 1);
      text = text.substr(0, e);
    }
    std::string digits;
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
      const std::string_view frac = text.substr(dot + 1);
      digits = std::string(text.substr(0, dot)) + std::string(frac);
      exponent -= static_cast<long>(frac.size());
    } else {
      digits = std::string(text);
    }
    value = Rational(parse_digits(digits, original));
    const Rational ten(10);
    if (exponent > 0) value *= ipow(ten, static_cast<unsigned>(exponent));
    if (exponent < 0) value /= ipow(ten, static_cast<unsigned>(-exponent));
  }
  return negative ? -value : value;
}

bool rational_sqrt(const Rational& x, Rational& root) {
  if (x < 0) return false;
  const Integer num = boost::multiprecision::numerator(x);
  const Integer den = boost::multiprecision::denominator(x);
  const Integer sn = boost::multiprecision::sqrt(num);
  const Integer sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return false;
  root = Rational(sn, sd);
  return true;
}

}  // namespace zlocus
