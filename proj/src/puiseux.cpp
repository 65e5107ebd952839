#include "holdercurve/puiseux.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "holdercurve/errors.hpp"

namespace holdercurve {

PuiseuxBranch::PuiseuxBranch(std::int64_t multiplicity,
                             std::vector<PuiseuxTerm> terms,
                             std::int64_t truncation, int field_order)
    : n_(multiplicity),
      terms_(std::move(terms)),
      truncation_(truncation),
      field_order_(field_order) {
  if (n_ < 1) {
    throw ValidationError("branch multiplicity must be >= 1, got " +
                          std::to_string(n_));
  }
  if (truncation_ < 1) {
    throw ValidationError("branch truncation must be >= 1, got " +
                          std::to_string(truncation_));
  }
  if (field_order_ < 1 || field_order_ % n_ != 0) {
    throw ValidationError("field order " + std::to_string(field_order_) +
                          " is not a multiple of the multiplicity " +
                          std::to_string(n_));
  }
  std::int64_t previous = 0;
  for (const auto& term : terms_) {
    if (term.exponent <= previous) {
      throw ValidationError(
          term.exponent <= 0
              ? "term exponent must be positive, got " + std::to_string(term.exponent)
              : "term exponents must be strictly increasing (" +
                    std::to_string(previous) + " then " +
                    std::to_string(term.exponent) + ")");
    }
    if (term.exponent > truncation_) {
      throw ValidationError("term exponent " + std::to_string(term.exponent) +
                            " exceeds truncation " + std::to_string(truncation_));
    }
    if (term.coeff.order() != field_order_) {
      throw ValidationError("coefficient of t^" + std::to_string(term.exponent) +
                            " is not in Q(zeta_" + std::to_string(field_order_) +
                            ")");
    }
    if (term.coeff.is_zero()) {
      throw ValidationError("zero coefficient listed for t^" +
                            std::to_string(term.exponent));
    }
    previous = term.exponent;
  }
}

const BigRational& DifferenceOrder::value() const {
  if (!exact_) {
    throw std::logic_error("difference order is only bounded below by " +
                           value_.str());
  }
  return value_;
}

PuiseuxBranch conjugate(const PuiseuxBranch& branch, std::int64_t k) {
  const std::int64_t n = branch.multiplicity();
  const std::int64_t order = branch.field_order();
  k %= n;
  if (k < 0) k += n;
  if (k == 0) return branch;
  // zeta_n^k = zeta_N^(k N / n); the t^m coefficient picks up its m-th power.
  const std::int64_t base = (k * (order / n)) % order;
  std::vector<PuiseuxTerm> terms;
  terms.reserve(branch.terms().size());
  for (const auto& term : branch.terms()) {
    const std::int64_t power = (base * (term.exponent % order)) % order;
    terms.push_back(
        {term.exponent,
         term.coeff * CyclotomicNumber::root_of_unity(branch.field_order(), power)});
  }
  return PuiseuxBranch(n, std::move(terms), branch.truncation(),
                       branch.field_order());
}

DifferenceOrder difference_order(const PuiseuxBranch& b1,
                                 const PuiseuxBranch& b2) {
  if (b1.field_order() != b2.field_order()) {
    throw FieldOrderMismatch(b1.field_order(), b2.field_order());
  }
  const std::int64_t n = std::lcm(b1.multiplicity(), b2.multiplicity());
  const std::int64_t scale1 = n / b1.multiplicity();
  const std::int64_t scale2 = n / b2.multiplicity();
  const std::int64_t known = std::min(b1.truncation() * scale1,
                                      b2.truncation() * scale2);
  const auto t1 = b1.terms();
  const auto t2 = b2.terms();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < t1.size() || j < t2.size()) {
    const std::int64_t e1 = i < t1.size() ? t1[i].exponent * scale1 : INT64_MAX;
    const std::int64_t e2 = j < t2.size() ? t2[j].exponent * scale2 : INT64_MAX;
    const std::int64_t e = std::min(e1, e2);
    if (e > known) break;
    // Coefficients are nonzero, so a term present on one side only is a
    // difference.
    if (e1 != e2 || !(t1[i].coeff == t2[j].coeff)) {
      return DifferenceOrder::exact(BigRational(BigInt(e), BigInt(n)));
    }
    ++i;
    ++j;
  }
  return DifferenceOrder::truncated(BigRational(BigInt(known + 1), BigInt(n)));
}

CurveGerm::CurveGerm(std::vector<PuiseuxBranch> branches)
    : branches_(std::move(branches)) {
  if (branches_.empty()) throw ValidationError("germ has no branches");
  const int order = branches_.front().field_order();
  for (const auto& b : branches_) {
    if (b.field_order() != order) {
      throw ValidationError("branches of one germ must share a field order (" +
                            std::to_string(order) + " vs " +
                            std::to_string(b.field_order()) + ")");
    }
  }
  // Identical entries are duplicates. Entries that agree only as far as
  // their truncations reach cannot be told apart yet: that is a truncation
  // failure for the pair, not a malformed germ.
  for (std::size_t a = 0; a < branches_.size(); ++a) {
    for (std::size_t b = a + 1; b < branches_.size(); ++b) {
      for (std::int64_t k = 0; k < branches_[b].multiplicity(); ++k) {
        const PuiseuxBranch other = conjugate(branches_[b], k);
        if (branches_[a] == other) {
          throw ValidationError("duplicate branch: branches " + std::to_string(a) +
                                " and " + std::to_string(b) +
                                " coincide under conjugation k=" +
                                std::to_string(k));
        }
        const auto order_ab = difference_order(branches_[a], other);
        if (!order_ab.is_exact()) {
          throw TruncationError(
              "branches " + std::to_string(a) + " and " + std::to_string(b) +
                  " agree under conjugation k=" + std::to_string(k) +
                  " as far as both are known; they differ at x-order >= " +
                  order_ab.bound().str(),
              order_ab.bound().str(), std::pair{a, b});
        }
      }
    }
  }
}

}  // namespace holdercurve
