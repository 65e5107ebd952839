#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "holdercurve/cyclotomic.hpp"
#include "holdercurve/exactnum.hpp"
#include "holdercurve/puiseux.hpp"

namespace testing_support {

inline holdercurve::BigRational q(long long p, long long d = 1) {
  return holdercurve::BigRational(holdercurve::BigInt(p), holdercurve::BigInt(d));
}

// (t^n, sum c t^e) with rational coefficients over Q(zeta_order).
inline holdercurve::PuiseuxBranch rational_branch(
    std::int64_t n, const std::vector<std::pair<std::int64_t, holdercurve::BigRational>>& terms,
    std::int64_t truncation, int order = 0) {
  if (order == 0) order = static_cast<int>(n);
  std::vector<holdercurve::PuiseuxTerm> out;
  for (const auto& [e, c] : terms) {
    out.push_back({e, holdercurve::CyclotomicNumber::rational(order, c)});
  }
  return holdercurve::PuiseuxBranch(n, std::move(out), truncation, order);
}

}  // namespace testing_support
