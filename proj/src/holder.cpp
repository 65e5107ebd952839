#include "holdercurve/holder.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "holdercurve/errors.hpp"

namespace holdercurve {

namespace {

const std::vector<CharacteristicPair> kSmoothPairs{{1, 1}};

std::span<const CharacteristicPair> effective_pairs(const CharacteristicData& d) {
  if (d.pairs.empty()) return kSmoothPairs;
  return d.pairs;
}

std::vector<CharacteristicData> branch_data(const CurveGerm& germ,
                                            const char* which) {
  std::vector<CharacteristicData> out;
  out.reserve(germ.size());
  for (std::size_t i = 0; i < germ.size(); ++i) {
    try {
      out.push_back(characteristic_data(germ[i]));
    } catch (const TruncationError& e) {
      throw TruncationError(std::string(which) + " germ, branch " +
                                std::to_string(i) + ": " + e.what(),
                            e.lower_bound());
    } catch (const ValidationError& e) {
      throw ValidationError(std::string(which) + " germ, branch " +
                            std::to_string(i) + ": " + e.what());
    }
  }
  return out;
}

ContactReport germ_contacts(const CurveGerm& germ, const char* which) {
  try {
    return contact_report(germ);
  } catch (const TruncationError& e) {
    throw TruncationError(std::string(which) + " germ, " + e.what(),
                          e.lower_bound(), e.branch_pair());
  }
}

bool matches(const std::vector<std::size_t>& sigma,
             const std::vector<CharacteristicData>& d1,
             const std::vector<CharacteristicData>& d2, const ContactReport& c1,
             const ContactReport& c2) {
  const std::size_t r = sigma.size();
  for (std::size_t i = 0; i < r; ++i) {
    if (d1[i].beta != d2[sigma[i]].beta) return false;
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      if (*c1.contact[i][j] != *c2.contact[sigma[i]][sigma[j]]) return false;
    }
  }
  return true;
}

}  // namespace

const char* to_string(ObstructionKind kind) {
  switch (kind) {
    case ObstructionKind::CharExponents:
      return "char_exponents";
    case ObstructionKind::Contact:
      return "contact";
    case ObstructionKind::Baseline:
      return "baseline";
  }
  return "unknown";
}

const char* to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::EquivalentInvariants:
      return "equivalent_invariants";
    case VerdictStatus::CertifiedDistinct:
      return "certified_distinct";
  }
  return "unknown";
}

std::optional<std::string> HolderVerdict::alpha0_expression() const {
  if (!k0) return std::nullopt;
  return "(" + k0->str() + ")^(1/4)";
}

std::optional<double> HolderVerdict::alpha0() const {
  if (!k0) return std::nullopt;
  return std::pow(k0->to_double(), 0.25);
}

std::string HolderVerdict::statement() const {
  std::ostringstream os;
  if (status == VerdictStatus::EquivalentInvariants) {
    os << "branchwise characteristic exponents and pairwise contacts match: "
          "the germs are topologically equivalent, hence bi-Lipschitz "
          "equivalent";
    return os.str();
  }
  os.precision(6);
  os << std::fixed << "no bi-α-Hölder homeomorphism exists for any α ∈ (α₀, 1), α₀ = "
     << *alpha0_expression() << " ≈ " << *alpha0();
  return os.str();
}

BigRational obstruction_number(std::span<const CharacteristicPair> pairs_c,
                               std::span<const CharacteristicPair> pairs_c_tilde,
                               std::size_t i, std::size_t j) {
  if (j < 1 || j > pairs_c.size()) {
    throw std::out_of_range("obstruction index j=" + std::to_string(j) +
                            " outside 1.." + std::to_string(pairs_c.size()));
  }
  if (i < 1 || i > pairs_c_tilde.size()) {
    throw std::out_of_range("obstruction index i=" + std::to_string(i) +
                            " outside 1.." + std::to_string(pairs_c_tilde.size()));
  }
  BigInt q_prod = 1;
  for (std::size_t k = 0; k < i; ++k) q_prod *= pairs_c_tilde[k].n;
  BigInt n_prod = 1;
  for (std::size_t k = 0; k < j; ++k) n_prod *= pairs_c[k].n;
  const BigInt a = BigInt(pairs_c[j - 1].m) * q_prod;
  const BigInt b = BigInt(pairs_c_tilde[i - 1].m) * n_prod;
  return min(BigRational(a + b, 2 * b), BigRational(a + b, 2 * a));
}

BigRational branch_obstruction(const CharacteristicData& c,
                               const CharacteristicData& c_tilde) {
  if (c.beta == c_tilde.beta) return BigRational(1);
  const auto pairs = effective_pairs(c);
  const auto pairs_tilde = effective_pairs(c_tilde);
  const std::size_t g = pairs.size();
  const std::size_t gt = pairs_tilde.size();

  std::optional<BigRational> best;
  auto consider = [&](std::size_t i, std::size_t j) {
    const BigRational k = obstruction_number(pairs, pairs_tilde, i, j);
    if (k < BigRational(1) && (!best || *best < k)) best = k;
  };
  if (g == gt) {
    for (std::size_t i = 1; i <= g; ++i) consider(i, i);
  } else if (g > gt) {
    for (std::size_t j = gt; j <= g; ++j) consider(gt, j);
  } else {
    for (std::size_t i = g; i <= gt; ++i) consider(i, g);
  }
  if (!best) {
    throw std::logic_error(
        "distinct characteristic exponents produced no obstruction number < 1");
  }
  return *best;
}

BigRational contact_obstruction(const BigRational& cont1,
                                const BigRational& cont2) {
  if (cont1 == cont2) return BigRational(1);
  return min(cont1 / cont2, cont2 / cont1);
}

HolderVerdict classify(const CurveGerm& g1, const CurveGerm& g2,
                       const ClassifyOptions& options) {
  const auto d1 = branch_data(g1, "first");
  const auto d2 = branch_data(g2, "second");
  const std::size_t r = g1.size();
  const std::size_t s = g2.size();

  HolderVerdict verdict{VerdictStatus::CertifiedDistinct, std::nullopt,
                        std::nullopt, {}};
  verdict.obstructions.push_back({ObstructionKind::Baseline, BigRational(1, 2),
                                  "baseline element 1/2 of E"});
  if (r != s) {
    verdict.obstructions.front().witness +=
        "; branch counts differ (" + std::to_string(r) + " vs " +
        std::to_string(s) + ")";
    verdict.k0 = BigRational(1, 2);
    return verdict;
  }
  if (r > options.permutation_cap) {
    throw CapExceededError("germs have " + std::to_string(r) +
                           " branches, above the permutation cap of " +
                           std::to_string(options.permutation_cap));
  }

  const ContactReport c1 = germ_contacts(g1, "first");
  const ContactReport c2 = germ_contacts(g2, "second");

  std::vector<std::size_t> sigma(r);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  do {
    if (matches(sigma, d1, d2, c1, c2)) {
      return HolderVerdict{VerdictStatus::EquivalentInvariants, sigma,
                           std::nullopt, {}};
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  for (std::size_t u = 0; u < r; ++u) {
    for (std::size_t v = 0; v < s; ++v) {
      const BigRational k = branch_obstruction(d1[u], d2[v]);
      if (k < BigRational(1)) {
        verdict.obstructions.push_back(
            {ObstructionKind::CharExponents, k,
             "characteristic exponents of branch " + std::to_string(u) +
                 " (first) vs branch " + std::to_string(v) + " (second)"});
      }
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      for (std::size_t u = 0; u < s; ++u) {
        for (std::size_t v = u + 1; v < s; ++v) {
          const BigRational& a = *c1.contact[i][j];
          const BigRational& b = *c2.contact[u][v];
          const BigRational k = contact_obstruction(a, b);
          if (k < BigRational(1)) {
            verdict.obstructions.push_back(
                {ObstructionKind::Contact, k,
                 "Cont(" + std::to_string(i) + "," + std::to_string(j) +
                     ") = " + a.str() + " (first) vs Cont(" +
                     std::to_string(u) + "," + std::to_string(v) +
                     ") = " + b.str() + " (second)"});
          }
        }
      }
    }
  }
  BigRational k0 = verdict.obstructions.front().value;
  for (const auto& o : verdict.obstructions) k0 = max(k0, o.value);
  verdict.k0 = k0;
  return verdict;
}

}  // namespace holdercurve
