#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "holdercurve/exactnum.hpp"
#include "holdercurve/puiseux.hpp"

namespace holdercurve {

/// Coincidence exponent: the largest x-order of agreement between b1 and the
/// conjugates of b2. Throws TruncationError if any conjugate comparison is
/// inconclusive, since the maximum could hide beyond the known terms.
BigRational coincidence(const PuiseuxBranch& b1, const PuiseuxBranch& b2);

/// Contact Cont(b1, b2) of two distinct analytic branches, computed as their
/// coincidence exponent.
BigRational symbolic_contact(const PuiseuxBranch& b1, const PuiseuxBranch& b2);

/// Local intersection number n1 * sum_k ord_x(y1 - conj_k(y2)).
/// Throws TruncationError when a summand is inconclusive and
/// std::logic_error if the result is not a positive integer.
std::int64_t intersection_multiplicity(const PuiseuxBranch& b1,
                                       const PuiseuxBranch& b2);

/// Pairwise contact and intersection data of a germ's branches.
struct ContactReport {
  std::size_t branch_count = 0;
  // r x r, symmetric, diagonal unset.
  std::vector<std::vector<std::optional<BigRational>>> contact;
  std::vector<std::vector<std::optional<std::int64_t>>> intersection;
};

/// Validates every branch with characteristic_data, then fills both matrices.
/// A TruncationError names the offending branch pair.
ContactReport contact_report(const CurveGerm& germ);

}  // namespace holdercurve
