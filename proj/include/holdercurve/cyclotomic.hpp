#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "holdercurve/exactnum.hpp"

namespace holdercurve {

/// Integer polynomial, coefficients from degree 0 upward.
using IntPolynomial = std::vector<BigInt>;

/// Euler's totient. Requires n >= 1.
int euler_phi(int n);

/// The n-th cyclotomic polynomial, obtained by dividing x^n - 1 by Phi_d for
/// every proper divisor d of n. Results are memoized per n.
IntPolynomial cyclotomic_polynomial(int n);

/// Element of Q(zeta_N) stored as a polynomial in zeta_N of degree < phi(N),
/// reduced modulo Phi_N. The representation is canonical, so equality and the
/// zero test are exact coefficient comparisons.
class CyclotomicNumber {
 public:
  static CyclotomicNumber zero(int order);
  static CyclotomicNumber one(int order);
  static CyclotomicNumber rational(int order, const BigRational& value);
  /// zeta_N^(k mod N); negative k allowed.
  static CyclotomicNumber root_of_unity(int order, std::int64_t k);

  /// Takes already-reduced coefficients; `coeffs.size()` must equal phi(order).
  CyclotomicNumber(int order, std::vector<BigRational> coeffs);

  int order() const noexcept { return order_; }
  std::span<const BigRational> coeffs() const noexcept { return coeffs_; }

  bool is_zero() const;

  /// Image under Q(zeta_M) -> Q(zeta_N), zeta_M -> zeta_N^(N/M). Requires
  /// order() | new_order.
  CyclotomicNumber lifted(int new_order) const;

  /// sum_j coeffs[j] * exp(2 pi i j / N), summed in index order.
  std::complex<double> to_complex() const;

  /// Human-readable form, e.g. "1/1 + -2/3*z^2" (z = zeta_N).
  std::string str() const;

  CyclotomicNumber operator-() const;
  friend CyclotomicNumber operator+(const CyclotomicNumber& a,
                                    const CyclotomicNumber& b);
  friend CyclotomicNumber operator-(const CyclotomicNumber& a,
                                    const CyclotomicNumber& b);
  friend CyclotomicNumber operator*(const CyclotomicNumber& a,
                                    const CyclotomicNumber& b);
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

 private:
  int order_;
  std::vector<BigRational> coeffs_;
};

}  // namespace holdercurve
