#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace holdercurve {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number in lowest terms with a positive denominator.
///
/// Serialized as "p/q" (always with an explicit denominator); `parse`
/// also accepts a bare integer "p".
class BigRational {
 public:
  BigRational() = default;
  BigRational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  explicit BigRational(const BigInt& value);
  /// Throws std::domain_error when `denominator` is zero.
  BigRational(const BigInt& numerator, const BigInt& denominator);

  /// Throws std::invalid_argument on malformed text or a zero denominator.
  static BigRational parse(std::string_view text);

  BigInt numerator() const;
  BigInt denominator() const;

  bool is_zero() const;
  bool is_integer() const;
  int sign() const;

  /// Nearest double (may round; used only at presentation and in the
  /// numeric bridge).
  double to_double() const;

  /// Canonical "p/q" form.
  std::string str() const;

  BigRational operator-() const;
  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  /// Throws std::domain_error on division by zero.
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational lhs, const BigRational& rhs) {
    return lhs += rhs;
  }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) {
    return lhs -= rhs;
  }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) {
    return lhs *= rhs;
  }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) {
    return lhs /= rhs;
  }

  friend bool operator==(const BigRational& lhs, const BigRational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const BigRational& lhs,
                                          const BigRational& rhs);

 private:
  explicit BigRational(boost::multiprecision::cpp_rational value)
      : value_(std::move(value)) {}

  boost::multiprecision::cpp_rational value_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& value);

BigRational min(const BigRational& a, const BigRational& b);
BigRational max(const BigRational& a, const BigRational& b);

}  // namespace holdercurve
