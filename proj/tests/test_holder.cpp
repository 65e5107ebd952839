#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "holdercurve/errors.hpp"
#include "holdercurve/germ_io.hpp"
#include "holdercurve/holder.hpp"
#include "holdercurve/invariants.hpp"
#include "oracles/oracles.hpp"
#include "support.hpp"

using namespace holdercurve;
using testing_support::q;
using testing_support::rational_branch;

namespace {

using Pairs = std::vector<CharacteristicPair>;

const std::filesystem::path kData = HOLDERCURVE_DATA_DIR;

// Both fractions of the obstruction number, evaluated with plain integers.
BigRational reference_k(const Pairs& c, const Pairs& ct, std::size_t i, std::size_t j) {
  long long qprod = 1;
  for (std::size_t k = 0; k < i; ++k) qprod *= ct[k].n;
  long long nprod = 1;
  for (std::size_t k = 0; k < j; ++k) nprod *= c[k].n;
  const long long a = c[j - 1].m * qprod;
  const long long b = ct[i - 1].m * nprod;
  const BigRational first(BigInt(a + b), BigInt(2 * b));
  const BigRational second(BigInt(a + b), BigInt(2 * a));
  return first < second ? first : second;
}

CharacteristicData data_of(std::int64_t n, const std::vector<std::int64_t>& exps) {
  std::vector<std::pair<std::int64_t, BigRational>> terms;
  for (auto e : exps) terms.push_back({e, q(1)});
  return characteristic_data(rational_branch(n, terms, exps.empty() ? 4 : exps.back()));
}

// Random pair list as produced by a primitive branch.
Pairs random_pairs(std::mt19937& rng) {
  const auto b = oracle::random_branch(rng, 12, 4, 24);
  return characteristic_data(b).pairs;
}

std::vector<CurveGerm> sanity_corpus() {
  std::vector<CurveGerm> out;
  for (const char* f : {"y2_x3.json", "y2_x5.json", "t4_t6_t7.json", "axis_and_parabola.json",
                        "axis_and_cubic.json", "parabola_and_axis.json", "node.json",
                        "cusp_i_coeff.json"}) {
    out.push_back(load_germ(kData / f));
  }
  const auto axis = rational_branch(1, {}, 12, 2);
  const auto cusp = rational_branch(2, {{3, q(1)}}, 12);
  const auto line = rational_branch(1, {{1, q(1)}}, 12, 2);
  out.push_back(CurveGerm({axis, cusp, line}));
  out.push_back(CurveGerm({line, axis, cusp}));
  out.push_back(CurveGerm({cusp, rational_branch(2, {{3, q(1)}, {4, q(1)}}, 12)}));
  return out;
}

}  // namespace

TEST(ObstructionNumber, Examples) {
  EXPECT_EQ(obstruction_number(Pairs{{5, 2}}, Pairs{{3, 2}}, 1, 1), q(4, 5));
  EXPECT_EQ(obstruction_number(Pairs{{3, 2}}, Pairs{{3, 2}}, 1, 1), q(1));
  EXPECT_EQ(obstruction_number(Pairs{{3, 2}, {7, 2}}, Pairs{{3, 2}}, 1, 2), q(13, 14));
  EXPECT_THROW(obstruction_number(Pairs{{3, 2}}, Pairs{{3, 2}}, 1, 2), std::out_of_range);
  EXPECT_THROW(obstruction_number(Pairs{{3, 2}}, Pairs{{3, 2}}, 0, 1), std::out_of_range);
}

TEST(ObstructionNumber, MatchesReferenceAndRange) {
  std::mt19937 rng(1234);
  int ones = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const auto c = random_pairs(rng);
    const auto ct = random_pairs(rng);
    if (c.empty() || ct.empty()) continue;
    for (std::size_t i = 1; i <= ct.size(); ++i) {
      for (std::size_t j = 1; j <= c.size(); ++j) {
        const auto k = obstruction_number(c, ct, i, j);
        EXPECT_EQ(k, reference_k(c, ct, i, j));
        EXPECT_GT(k, q(1, 2));
        EXPECT_LE(k, q(1));
        long long qprod = 1;
        long long nprod = 1;
        for (std::size_t t = 0; t < i; ++t) qprod *= ct[t].n;
        for (std::size_t t = 0; t < j; ++t) nprod *= c[t].n;
        const bool balanced = c[j - 1].m * qprod == ct[i - 1].m * nprod;
        EXPECT_EQ(k == q(1), balanced);
        ones += balanced;
      }
    }
  }
  EXPECT_GT(ones, 0);
}

TEST(BranchObstruction, Examples) {
  const auto c5 = data_of(2, {5});
  const auto c3 = data_of(2, {3});
  const auto c467 = data_of(4, {6, 7});
  EXPECT_EQ(branch_obstruction(c5, c3), q(4, 5));
  EXPECT_EQ(branch_obstruction(c3, c3), q(1));
  EXPECT_EQ(branch_obstruction(c3, c467), q(13, 14));
  EXPECT_EQ(branch_obstruction(c467, c3), q(13, 14));
}

TEST(BranchObstruction, SmoothAgainstSingular) {
  const auto smooth = data_of(1, {});
  const auto cusp = data_of(2, {3});
  // Formal pair (1, 1) on the smooth side: A = 3, B = 2, min(5/4, 5/6).
  EXPECT_EQ(branch_obstruction(smooth, cusp), q(5, 6));
  EXPECT_EQ(branch_obstruction(cusp, smooth), q(5, 6));
}

TEST(BranchObstruction, SymmetricAndOneIffEqualExponents) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = characteristic_data(oracle::random_branch(rng, 12, 4, 24));
    const auto b = characteristic_data(oracle::random_branch(rng, 12, 4, 24));
    const auto k = branch_obstruction(a, b);
    EXPECT_EQ(k, branch_obstruction(b, a));
    EXPECT_EQ(k == q(1), a.beta == b.beta);
    EXPECT_GT(k, q(1, 2));
    EXPECT_LE(k, q(1));
  }
}

TEST(ContactObstruction, Examples) {
  EXPECT_EQ(contact_obstruction(q(2), q(3)), q(2, 3));
  EXPECT_EQ(contact_obstruction(q(5, 2), q(5, 2)), q(1));
  EXPECT_EQ(contact_obstruction(q(3, 2), q(4)), q(3, 8));
}

TEST(Classify, CuspPair) {
  const auto v = classify(load_germ(kData / "y2_x5.json"), load_germ(kData / "y2_x3.json"));
  EXPECT_EQ(v.status, VerdictStatus::CertifiedDistinct);
  ASSERT_TRUE(v.k0.has_value());
  EXPECT_EQ(*v.k0, q(4, 5));
  EXPECT_EQ(*v.alpha0_expression(), "(4/5)^(1/4)");
  EXPECT_NEAR(*v.alpha0(), 0.945742, 1e-5);
  ASSERT_EQ(v.obstructions.size(), 2u);
  EXPECT_EQ(v.obstructions[0].kind, ObstructionKind::Baseline);
  EXPECT_EQ(v.obstructions[1].kind, ObstructionKind::CharExponents);
  EXPECT_EQ(v.obstructions[1].value, q(4, 5));
}

TEST(Classify, ContactObstruction) {
  const auto v = classify(load_germ(kData / "axis_and_parabola.json"),
                          load_germ(kData / "axis_and_cubic.json"));
  EXPECT_EQ(v.status, VerdictStatus::CertifiedDistinct);
  EXPECT_EQ(*v.k0, q(2, 3));
  EXPECT_NEAR(*v.alpha0(), 0.90360, 1e-5);
  const bool has_contact = std::any_of(v.obstructions.begin(), v.obstructions.end(),
                                       [](const Obstruction& o) {
                                         return o.kind == ObstructionKind::Contact &&
                                                o.value == q(2, 3);
                                       });
  EXPECT_TRUE(has_contact);
}

TEST(Classify, PermutedBranchesMatch) {
  const auto axis = rational_branch(1, {}, 12, 2);
  const auto cusp = rational_branch(2, {{3, q(1)}}, 12);
  const auto line = rational_branch(1, {{1, q(1)}}, 12, 2);
  const auto v = classify(CurveGerm({axis, cusp, line}), CurveGerm({line, axis, cusp}));
  EXPECT_EQ(v.status, VerdictStatus::EquivalentInvariants);
  ASSERT_TRUE(v.matching.has_value());
  // sigma maps first-germ branch i to second-germ branch sigma[i].
  EXPECT_EQ(*v.matching, (std::vector<std::size_t>{1, 2, 0}));
  EXPECT_FALSE(v.k0.has_value());
}

TEST(Classify, DifferentBranchCountsFallBackToBaseline) {
  const auto v = classify(load_germ(kData / "y2_x3.json"), load_germ(kData / "node.json"));
  EXPECT_EQ(v.status, VerdictStatus::CertifiedDistinct);
  EXPECT_EQ(*v.k0, q(1, 2));
}

TEST(Classify, PermutationCap) {
  std::vector<PuiseuxBranch> lines;
  for (int i = 1; i <= 9; ++i) lines.push_back(rational_branch(1, {{1, q(i)}}, 4));
  const CurveGerm germ(lines);
  EXPECT_THROW(classify(germ, germ), CapExceededError);
  EXPECT_EQ(classify(germ, germ, ClassifyOptions{9}).status, VerdictStatus::EquivalentInvariants);
}

TEST(Classify, TruncationPropagates) {
  const CurveGerm stalled({rational_branch(4, {{6, q(1)}}, 6)});
  EXPECT_THROW(classify(stalled, load_germ(kData / "y2_x3.json")), TruncationError);
}

TEST(Classify, SanityCorpus) {
  const auto corpus = sanity_corpus();
  ASSERT_GE(corpus.size(), 10u);
  for (std::size_t a = 0; a < corpus.size(); ++a) {
    const auto self = classify(corpus[a], corpus[a]);
    EXPECT_EQ(self.status, VerdictStatus::EquivalentInvariants) << a;
    for (std::size_t b = 0; b < corpus.size(); ++b) {
      const auto ab = classify(corpus[a], corpus[b]);
      const auto ba = classify(corpus[b], corpus[a]);
      EXPECT_EQ(ab.status, ba.status) << a << " vs " << b;
      EXPECT_EQ(ab.k0, ba.k0) << a << " vs " << b;
      if (ab.status == VerdictStatus::CertifiedDistinct) {
        EXPECT_GE(*ab.k0, q(1, 2));
        EXPECT_LT(*ab.k0, q(1));
        BigRational best = ab.obstructions.front().value;
        for (const auto& o : ab.obstructions) best = std::max(best, o.value);
        EXPECT_EQ(best, *ab.k0);
      } else {
        ASSERT_TRUE(ab.matching.has_value());
        ASSERT_TRUE(ba.matching.has_value());
        // The reverse matching is the inverse permutation, up to the choice
        // among equally good matchings; compare invariants instead.
        EXPECT_EQ(ab.matching->size(), ba.matching->size());
      }
    }
  }
}

TEST(Classify, ScalingInvarianceForSingleBranchGerms) {
  std::mt19937 rng(606);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = oracle::random_branch(rng, 12, 4, 24);
    const auto b = oracle::random_branch(rng, 12, 4, 24);
    const auto v = classify(CurveGerm({a}), CurveGerm({b}));
    const auto w = classify(CurveGerm({lipschitz_normal_form(a)}),
                            CurveGerm({lipschitz_normal_form(b)}));
    EXPECT_EQ(v.status, w.status);
    EXPECT_EQ(v.k0, w.k0);
  }
}
