#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "holdercurve/contact.hpp"
#include "holdercurve/exactnum.hpp"
#include "holdercurve/invariants.hpp"
#include "holdercurve/puiseux.hpp"

namespace holdercurve {

enum class ObstructionKind { CharExponents, Contact, Baseline };

const char* to_string(ObstructionKind kind);

/// One element of the obstruction set E, with the data that produced it.
struct Obstruction {
  ObstructionKind kind;
  BigRational value;  // in (0, 1]
  std::string witness;
};

enum class VerdictStatus { EquivalentInvariants, CertifiedDistinct };

const char* to_string(VerdictStatus status);

struct HolderVerdict {
  VerdictStatus status;
  // sigma[i] = index in the second germ matched to branch i of the first.
  // Present iff EquivalentInvariants.
  std::optional<std::vector<std::size_t>> matching;
  // max E. Present iff CertifiedDistinct.
  std::optional<BigRational> k0;
  std::vector<Obstruction> obstructions;

  /// Exact threshold as a string, e.g. "(4/5)^(1/4)".
  std::optional<std::string> alpha0_expression() const;
  /// k0^(1/4) in double precision.
  std::optional<double> alpha0() const;
  /// One-line human-readable conclusion.
  std::string statement() const;
};

/// The obstruction number k_ij(C, C~) for characteristic pairs (m, n) of C
/// and (l, q) of C~. With A = m_j q_1...q_i and B = l_i n_1...n_j the value
/// is min((A+B)/2B, (A+B)/2A), which lies in (1/2, 1].
///
/// `i` indexes the pairs of C~ and `j` those of C; both are 1-based
/// characteristic indices. Throws std::out_of_range on a bad index.
BigRational obstruction_number(std::span<const CharacteristicPair> pairs_c,
                               std::span<const CharacteristicPair> pairs_c_tilde,
                               std::size_t i, std::size_t j);

/// Threshold below which alpha^4 must lie for a bi-alpha-Hoelder map between
/// two branches to exist; 1 iff the characteristic exponents agree.
///
/// Equal genus: the largest k_ii different from 1. Different genus: the
/// largest k_ij below 1 over i = g~ <= j <= g (or j = g <= i <= g~). A smooth
/// branch enters with the formal pair (1, 1).
BigRational branch_obstruction(const CharacteristicData& c,
                               const CharacteristicData& c_tilde);

/// 1 if the contacts agree, else min(cont1/cont2, cont2/cont1).
BigRational contact_obstruction(const BigRational& cont1,
                                const BigRational& cont2);

struct ClassifyOptions {
  std::size_t permutation_cap = 8;
};

/// Compares two germs through branchwise characteristic exponents and
/// pairwise contacts. Either finds a matching bijection (EquivalentInvariants)
/// or certifies that no bi-alpha-Hoelder homeomorphism exists for
/// alpha^4 > k0 = max E.
///
/// Throws CapExceededError when matching would need more than
/// `permutation_cap` branches, and propagates TruncationError /
/// ValidationError from the invariant computations.
HolderVerdict classify(const CurveGerm& g1, const CurveGerm& g2,
                       const ClassifyOptions& options = {});

}  // namespace holdercurve
