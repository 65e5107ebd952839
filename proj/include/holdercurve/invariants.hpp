#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "holdercurve/puiseux.hpp"

namespace holdercurve {

/// Characteristic pair (m_i, n_i) with beta_i = m_i e_i and e_{i-1} = n_i e_i.
struct CharacteristicPair {
  std::int64_t m;
  std::int64_t n;

  friend bool operator==(const CharacteristicPair&, const CharacteristicPair&) = default;
};

/// Characteristic exponents (beta_0 = n, beta_1, ..., beta_g), the gcd chain
/// (e_0 = n, ..., e_g = 1) and the characteristic pairs of a branch. A smooth
/// branch has beta = (1), e = (1) and no pairs.
struct CharacteristicData {
  std::vector<std::int64_t> beta;
  std::vector<std::int64_t> e;
  std::vector<CharacteristicPair> pairs;

  std::size_t genus() const noexcept { return pairs.size(); }

  friend bool operator==(const CharacteristicData&, const CharacteristicData&) = default;
};

/// Runs the gcd recursion: beta_{i+1} is the smallest term exponent not
/// divisible by e_i, e_{i+1} = gcd(e_i, beta_{i+1}), until e_g = 1.
///
/// Throws ValidationError when a term exponent is below n on a singular
/// branch (x would not be a transversal coordinate, so n is not the
/// multiplicity), and TruncationError when the chain stalls at some e_i > 1
/// among the known terms.
CharacteristicData characteristic_data(const PuiseuxBranch& branch);

/// Keeps only the terms at the characteristic exponents, truncated at beta_g.
PuiseuxBranch lipschitz_normal_form(const PuiseuxBranch& branch);

std::int64_t multiplicity(const PuiseuxBranch& branch);

}  // namespace holdercurve
