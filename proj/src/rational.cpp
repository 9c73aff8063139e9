#include "demyanov/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "demyanov/errors.hpp"

namespace demyanov {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw std::invalid_argument("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  const bool negative = !num.empty() && num.front() == '-';
  if (negative) num.remove_prefix(1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("invalid rational literal \"" + std::string(text) + "\"");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  if (negative) n = -n;
  return Rational(n, d);
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.sign() == 0) throw InvariantViolation("division by zero rational");
  value_ /= rhs.value_;
  return *this;
}

}  // namespace demyanov
