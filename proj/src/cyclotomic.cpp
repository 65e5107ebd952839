#include "holdercurve/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "holdercurve/errors.hpp"

namespace holdercurve {

namespace {

void require_order(int n) {
  if (n < 1) {
    throw std::invalid_argument("cyclotomic order must be >= 1, got " +
                                std::to_string(n));
  }
}

IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial out(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Exact quotient of `num` by the monic polynomial `den`.
IntPolynomial divide_exact(IntPolynomial num, const IntPolynomial& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) throw std::logic_error("degree underflow");
  IntPolynomial quot(num.size() - dd, BigInt(0));
  for (std::size_t k = quot.size(); k-- > 0;) {
    const BigInt c = num[k + dd];
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
  }
  for (const auto& r : num) {
    if (r != 0) throw std::logic_error("cyclotomic division left a remainder");
  }
  return quot;
}

// Reduction tables for Q(zeta_N): powers[j] = x^j mod Phi_N for 0 <= j < N.
struct FieldTables {
  int order = 0;
  int phi = 0;
  std::vector<std::vector<BigRational>> powers;
};

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

const FieldTables& field_tables(int n) {
  require_order(n);
  static std::map<int, std::unique_ptr<const FieldTables>> cache;
  {
    std::lock_guard lock(cache_mutex());
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  const IntPolynomial phi_poly = cyclotomic_polynomial(n);
  auto tables = std::make_unique<FieldTables>();
  tables->order = n;
  tables->phi = static_cast<int>(phi_poly.size()) - 1;
  const int phi = tables->phi;
  tables->powers.reserve(static_cast<std::size_t>(n));
  std::vector<BigRational> current(static_cast<std::size_t>(phi), BigRational(0));
  current[0] = BigRational(1);
  for (int j = 0; j < n; ++j) {
    tables->powers.push_back(current);
    // current <- x * current mod Phi_N; Phi_N is monic.
    const BigRational top = current[static_cast<std::size_t>(phi - 1)];
    for (int i = phi - 1; i > 0; --i) {
      current[static_cast<std::size_t>(i)] = current[static_cast<std::size_t>(i - 1)];
    }
    current[0] = BigRational(0);
    if (!top.is_zero()) {
      for (int i = 0; i < phi; ++i) {
        current[static_cast<std::size_t>(i)] -=
            top * BigRational(phi_poly[static_cast<std::size_t>(i)]);
      }
    }
  }
  std::lock_guard lock(cache_mutex());
  return *cache.try_emplace(n, std::move(tables)).first->second;
}

void require_same_order(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.order() != b.order()) throw FieldOrderMismatch(a.order(), b.order());
}

}  // namespace

int euler_phi(int n) {
  require_order(n);
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

IntPolynomial cyclotomic_polynomial(int n) {
  require_order(n);
  static std::map<int, IntPolynomial> cache;
  static std::mutex mutex;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  IntPolynomial numerator(static_cast<std::size_t>(n) + 1, BigInt(0));
  numerator[0] = -1;
  numerator[static_cast<std::size_t>(n)] = 1;
  IntPolynomial divisor{BigInt(1)};
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) divisor = multiply(divisor, cyclotomic_polynomial(d));
  }
  IntPolynomial result = divide_exact(std::move(numerator), divisor);
  std::lock_guard lock(mutex);
  cache.emplace(n, result);
  return result;
}

CyclotomicNumber::CyclotomicNumber(int order, std::vector<BigRational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  const int phi = euler_phi(order);
  if (static_cast<int>(coeffs_.size()) != phi) {
    throw std::invalid_argument("Q(zeta_" + std::to_string(order) +
                                ") element needs " + std::to_string(phi) +
                                " coefficients, got " +
                                std::to_string(coeffs_.size()));
  }
}

CyclotomicNumber CyclotomicNumber::zero(int order) {
  return CyclotomicNumber(
      order, std::vector<BigRational>(static_cast<std::size_t>(euler_phi(order)),
                                      BigRational(0)));
}

CyclotomicNumber CyclotomicNumber::one(int order) {
  return rational(order, BigRational(1));
}

CyclotomicNumber CyclotomicNumber::rational(int order,
                                            const BigRational& value) {
  auto out = zero(order);
  out.coeffs_[0] = value;
  return out;
}

CyclotomicNumber CyclotomicNumber::root_of_unity(int order, std::int64_t k) {
  const auto& tables = field_tables(order);
  std::int64_t r = k % order;
  if (r < 0) r += order;
  return CyclotomicNumber(order, tables.powers[static_cast<std::size_t>(r)]);
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

CyclotomicNumber CyclotomicNumber::lifted(int new_order) const {
  require_order(new_order);
  if (new_order % order_ != 0) {
    throw std::invalid_argument("cannot lift Q(zeta_" + std::to_string(order_) +
                                ") into Q(zeta_" + std::to_string(new_order) +
                                "): order does not divide");
  }
  if (new_order == order_) return *this;
  const auto& tables = field_tables(new_order);
  const std::size_t step = static_cast<std::size_t>(new_order / order_);
  auto out = zero(new_order);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j].is_zero()) continue;
    const auto& power = tables.powers[j * step];
    for (std::size_t i = 0; i < power.size(); ++i) {
      if (!power[i].is_zero()) out.coeffs_[i] += coeffs_[j] * power[i];
    }
  }
  return out;
}

std::complex<double> CyclotomicNumber::to_complex() const {
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j].is_zero()) continue;
    const double angle =
        2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(order_);
    sum += coeffs_[j].to_double() * std::polar(1.0, angle);
  }
  return sum;
}

std::string CyclotomicNumber::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[j].str();
    if (j == 1) os << "*z";
    if (j > 1) os << "*z^" << j;
  }
  if (first) os << "0/1";
  return os.str();
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  auto out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CyclotomicNumber operator+(const CyclotomicNumber& a,
                           const CyclotomicNumber& b) {
  require_same_order(a, b);
  auto out = a;
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += b.coeffs_[i];
  return out;
}

CyclotomicNumber operator-(const CyclotomicNumber& a,
                           const CyclotomicNumber& b) {
  require_same_order(a, b);
  auto out = a;
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] -= b.coeffs_[i];
  return out;
}

CyclotomicNumber operator*(const CyclotomicNumber& a,
                           const CyclotomicNumber& b) {
  require_same_order(a, b);
  const auto& tables = field_tables(a.order_);
  const std::size_t phi = a.coeffs_.size();
  std::vector<BigRational> product(2 * phi - 1, BigRational(0));
  for (std::size_t i = 0; i < phi; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (!b.coeffs_[j].is_zero()) product[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  auto out = CyclotomicNumber::zero(a.order_);
  const std::size_t order = static_cast<std::size_t>(a.order_);
  for (std::size_t k = 0; k < product.size(); ++k) {
    if (product[k].is_zero()) continue;
    if (k < phi) {
      out.coeffs_[k] += product[k];
      continue;
    }
    // x^N = 1 modulo Phi_N, so x^k reduces through x^(k mod N).
    const auto& power = tables.powers[k % order];
    for (std::size_t i = 0; i < phi; ++i) {
      if (!power[i].is_zero()) out.coeffs_[i] += product[k] * power[i];
    }
  }
  return out;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

}  // namespace holdercurve
