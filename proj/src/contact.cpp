#include "holdercurve/contact.hpp"

#include <stdexcept>
#include <string>

#include "holdercurve/errors.hpp"
#include "holdercurve/invariants.hpp"

namespace holdercurve {

namespace {

BigRational exact_or_throw(const DifferenceOrder& order, std::int64_t k) {
  if (!order.is_exact()) {
    throw TruncationError(
        "branches agree with conjugate k=" + std::to_string(k) +
            " as far as both are known; x-order of difference is at least " +
            order.bound().str(),
        order.bound().str());
  }
  return order.value();
}

}  // namespace

BigRational coincidence(const PuiseuxBranch& b1, const PuiseuxBranch& b2) {
  BigRational best = exact_or_throw(difference_order(b1, b2), 0);
  for (std::int64_t k = 1; k < b2.multiplicity(); ++k) {
    best = max(best, exact_or_throw(difference_order(b1, conjugate(b2, k)), k));
  }
  return best;
}

BigRational symbolic_contact(const PuiseuxBranch& b1, const PuiseuxBranch& b2) {
  return coincidence(b1, b2);
}

std::int64_t intersection_multiplicity(const PuiseuxBranch& b1,
                                       const PuiseuxBranch& b2) {
  BigRational sum(0);
  for (std::int64_t k = 0; k < b2.multiplicity(); ++k) {
    sum += exact_or_throw(difference_order(b1, conjugate(b2, k)), k);
  }
  const BigRational total = BigRational(b1.multiplicity()) * sum;
  if (!total.is_integer() || total.sign() <= 0) {
    throw std::logic_error("intersection multiplicity " + total.str() +
                           " is not a positive integer");
  }
  return total.numerator().convert_to<std::int64_t>();
}

ContactReport contact_report(const CurveGerm& germ) {
  const std::size_t r = germ.size();
  for (std::size_t i = 0; i < r; ++i) {
    try {
      (void)characteristic_data(germ[i]);
    } catch (const TruncationError& e) {
      throw TruncationError("branch " + std::to_string(i) + ": " + e.what(),
                            e.lower_bound());
    } catch (const ValidationError& e) {
      throw ValidationError("branch " + std::to_string(i) + ": " + e.what());
    }
  }
  ContactReport report;
  report.branch_count = r;
  report.contact.assign(r, std::vector<std::optional<BigRational>>(r));
  report.intersection.assign(r, std::vector<std::optional<std::int64_t>>(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      try {
        const BigRational c = symbolic_contact(germ[i], germ[j]);
        const std::int64_t m = intersection_multiplicity(germ[i], germ[j]);
        report.contact[i][j] = report.contact[j][i] = c;
        report.intersection[i][j] = report.intersection[j][i] = m;
      } catch (const TruncationError& e) {
        throw TruncationError("branches " + std::to_string(i) + " and " +
                                  std::to_string(j) + ": " + e.what(),
                              e.lower_bound(), std::pair{i, j});
      }
    }
  }
  return report;
}

}  // namespace holdercurve
