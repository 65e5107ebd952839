#include "holdercurve/exactnum.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "holdercurve/errors.hpp"

namespace holdercurve {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  if (pos == text.size()) {
    throw std::invalid_argument("malformed rational '" + std::string(whole) +
                                "'");
  }
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("malformed rational '" + std::string(whole) +
                                  "'");
    }
  }
  std::string digits(text);
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  return BigInt(digits);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

FieldOrderMismatch::FieldOrderMismatch(int lhs, int rhs)
    : std::invalid_argument("cyclotomic field order mismatch: Q(zeta_" +
                            std::to_string(lhs) + ") vs Q(zeta_" +
                            std::to_string(rhs) + ")"),
      lhs_(lhs),
      rhs_(rhs) {}

BigRational::BigRational(std::int64_t value) : value_(value) {}

BigRational::BigRational(const BigInt& value) : value_(value) {}

BigRational::BigRational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  // The Boost constructor rejects negative denominators; move the sign up.
  if (denominator < 0) {
    value_ = boost::multiprecision::cpp_rational(-numerator, -denominator);
  } else {
    value_ = boost::multiprecision::cpp_rational(numerator, denominator);
  }
}

BigRational BigRational::parse(std::string_view text) {
  const std::string_view body = trim(text);
  const auto slash = body.find('/');
  if (slash == std::string_view::npos) {
    return BigRational(parse_integer(body, text));
  }
  const BigInt num = parse_integer(trim(body.substr(0, slash)), text);
  const std::string_view den_text = trim(body.substr(slash + 1));
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw std::invalid_argument("malformed rational '" + std::string(text) +
                                "': signed denominator");
  }
  const BigInt den = parse_integer(den_text, text);
  if (den == 0) {
    throw std::invalid_argument("malformed rational '" + std::string(text) +
                                "': zero denominator");
  }
  return BigRational(num, den);
}

BigInt BigRational::numerator() const {
  return boost::multiprecision::numerator(value_);
}

BigInt BigRational::denominator() const {
  return boost::multiprecision::denominator(value_);
}

bool BigRational::is_zero() const { return value_ == 0; }

bool BigRational::is_integer() const { return denominator() == 1; }

int BigRational::sign() const { return value_.sign(); }

double BigRational::to_double() const { return value_.convert_to<double>(); }

std::string BigRational::str() const {
  return numerator().str() + "/" + denominator().str();
}

BigRational BigRational::operator-() const { return BigRational(-value_); }

BigRational& BigRational::operator+=(const BigRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::strong_ordering operator<=>(const BigRational& lhs,
                                 const BigRational& rhs) {
  if (lhs.value_ < rhs.value_) return std::strong_ordering::less;
  if (lhs.value_ > rhs.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const BigRational& value) {
  return os << value.str();
}

BigRational min(const BigRational& a, const BigRational& b) {
  return b < a ? b : a;
}

BigRational max(const BigRational& a, const BigRational& b) {
  return a < b ? b : a;
}

}  // namespace holdercurve
