#include "gion/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace gion {

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) {
    throw std::domain_error("rational_from_double: value is not finite");
  }
  if (value == 0.0) {
    return Rational(0);
  }
  int exp2 = 0;
  const double mantissa = std::frexp(value, &exp2);
  // mantissa * 2^53 is an exact 53-bit integer for every finite double
  const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  exp2 -= 53;
  Rational result(scaled);
  if (exp2 >= 0) {
    result *= Rational(BigInt(1) << exp2);
  } else {
    result /= Rational(BigInt(1) << -exp2);
  }
  return result;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

namespace {

bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    s.remove_prefix(1);
  }
  if (s.empty()) {
    return false;
  }
  for (const char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return true;
}

Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  std::string digits;
  long long frac_digits = 0;
  bool seen_digit = false;
  bool seen_point = false;
  std::size_t i = 0;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) {
        ++frac_digits;
      }
      seen_digit = true;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) {
    throw std::invalid_argument("parse_rational: malformed number '" +
                                std::string(text) + "'");
  }

  long long exp10 = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    std::string_view etail = s.substr(i + 1);
    if (!is_integer_text(etail)) {
      throw std::invalid_argument("parse_rational: malformed exponent in '" +
                                  std::string(text) + "'");
    }
    exp10 = std::stoll(std::string(etail));
    i = s.size();
  }
  if (i != s.size()) {
    throw std::invalid_argument("parse_rational: malformed number '" +
                                std::string(text) + "'");
  }

  Rational value{BigInt(digits)};
  const long long shift = exp10 - frac_digits;
  const BigInt pow10 = boost::multiprecision::pow(
      BigInt(10), static_cast<unsigned>(shift < 0 ? -shift : shift));
  if (shift >= 0) {
    value *= Rational(pow10);
  } else {
    value /= Rational(pow10);
  }
  return negative ? -value : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("parse_rational: empty input");
  }
  const std::size_t slash = text.find('/');
  if (slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den)) {
      throw std::invalid_argument("parse_rational: malformed fraction '" +
                                  std::string(text) + "'");
    }
    // the big-integer parser takes a sign only as '-'
    if (num.front() == '+') {
      num.remove_prefix(1);
    }
    if (den.front() == '+') {
      den.remove_prefix(1);
    }
    BigInt n{std::string(num)};
    BigInt d{std::string(den)};
    if (d == 0) {
      throw std::invalid_argument("parse_rational: zero denominator in '" +
                                  std::string(text) + "'");
    }
    if (d < 0) {
      n = -n;
      d = -d;
    }
    return Rational(n, d);
  }
  return parse_decimal(text);
}

std::string to_string(const Rational& value) { return value.str(); }

int sign(const Rational& value) { return value.sign(); }

}  // namespace gion
