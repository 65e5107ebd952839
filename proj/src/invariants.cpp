#include "holdercurve/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "holdercurve/errors.hpp"

namespace holdercurve {

CharacteristicData characteristic_data(const PuiseuxBranch& branch) {
  const std::int64_t n = branch.multiplicity();
  CharacteristicData data;
  data.beta.push_back(n);
  data.e.push_back(n);
  if (n == 1) return data;

  const auto terms = branch.terms();
  if (!terms.empty() && terms.front().exponent < n) {
    throw ValidationError(
        "term t^" + std::to_string(terms.front().exponent) +
        " has order below n = " + std::to_string(n) +
        "; x is tangent to the branch, swap coordinates so that n is the "
        "multiplicity");
  }

  std::int64_t e = n;
  for (const auto& term : terms) {
    if (e == 1) break;
    if (term.exponent % e == 0) continue;
    const std::int64_t next = std::gcd(e, term.exponent);
    data.pairs.push_back({term.exponent / next, e / next});
    data.beta.push_back(term.exponent);
    data.e.push_back(next);
    e = next;
  }
  if (e != 1) {
    throw TruncationError(
        "characteristic sequence stalls at e = " + std::to_string(e) +
        " within truncation " + std::to_string(branch.truncation()) +
        ": the branch is not primitive as far as its terms are known");
  }
  return data;
}

PuiseuxBranch lipschitz_normal_form(const PuiseuxBranch& branch) {
  const CharacteristicData data = characteristic_data(branch);
  std::vector<PuiseuxTerm> kept;
  auto next_beta = data.beta.begin() + 1;
  for (const auto& term : branch.terms()) {
    if (next_beta == data.beta.end()) break;
    if (term.exponent == *next_beta) {
      kept.push_back(term);
      ++next_beta;
    }
  }
  return PuiseuxBranch(branch.multiplicity(), std::move(kept), data.beta.back(),
                       branch.field_order());
}

std::int64_t multiplicity(const PuiseuxBranch& branch) {
  return branch.multiplicity();
}

}  // namespace holdercurve
