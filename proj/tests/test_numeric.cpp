#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "holdercurve/contact.hpp"
#include "holdercurve/errors.hpp"
#include "holdercurve/numeric.hpp"
#include "support.hpp"

using namespace holdercurve;
using testing_support::q;
using testing_support::rational_branch;

namespace {

const RadiusGrid kGrid = RadiusGrid::geometric(0.1, 1e-4, 16);

// Brute force straight from the definition, no shared code with the library.
double brute_gap(const std::vector<Point2>& a, const std::vector<Point2>& b, double r) {
  auto len = [](const Point2& p) {
    return std::sqrt(std::norm(p[0]) + std::norm(p[1]));
  };
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : a) {
    if (len(p) < r) continue;
    for (const auto& s : b) {
      if (len(s) < r) continue;
      const Point2 d{p[0] - s[0], p[1] - s[1]};
      best = std::min(best, len(d));
    }
  }
  return best;
}

ArcSample ray(double angle, const RadiusGrid& grid) {
  ArcSample arc;
  for (double s : grid.values()) {
    const Point2 p{std::complex<double>(s * std::cos(angle), 0.0),
                   std::complex<double>(s * std::sin(angle), 0.0)};
    arc.points.push_back(p);
    arc.radii.push_back(norm(p));
  }
  return arc;
}

double estimate_germs(const CurveGerm& a, const CurveGerm& b) {
  const auto sa = sample_germ(a, kGrid);
  const auto sb = sample_germ(b, kGrid);
  return estimate_contact(sa, sb, kGrid).slope;
}

}  // namespace

TEST(RadiusGrid, Geometric) {
  const auto g = RadiusGrid::geometric(0.1, 1e-4, 16);
  ASSERT_EQ(g.size(), 16u);
  EXPECT_DOUBLE_EQ(g.r_max(), 0.1);
  EXPECT_DOUBLE_EQ(g.r_min(), 1e-4);
  const double ratio = g.values()[1] / g.values()[0];
  for (std::size_t i = 1; i < g.size(); ++i) {
    EXPECT_LT(g.values()[i], g.values()[i - 1]);
    EXPECT_NEAR(g.values()[i] / g.values()[i - 1], ratio, 1e-12);
  }
  EXPECT_THROW(RadiusGrid::geometric(1e-4, 0.1, 16), ValidationError);
  EXPECT_THROW(RadiusGrid::geometric(0.1, 0.0, 16), ValidationError);
  EXPECT_THROW(RadiusGrid::geometric(0.1, 1e-4, 1), ValidationError);
}

TEST(SampleBranchArc, DirectEvaluation) {
  const auto grid = RadiusGrid::geometric(0.1, 0.01, 4);
  const auto axis = sample_branch_arc(rational_branch(1, {}, 4), 0, 0.7, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    EXPECT_NEAR(std::abs(axis.points[i][0] - std::polar(grid.values()[i], 0.7)), 0.0, 1e-15);
    EXPECT_EQ(axis.points[i][1], std::complex<double>(0.0, 0.0));
  }

  const auto cusp5 = sample_branch_arc(rational_branch(2, {{5, q(1)}}, 8), 0, 0.0, grid);
  EXPECT_NEAR(cusp5.points[0][0].real(), 0.01, 1e-12);
  EXPECT_NEAR(cusp5.points[0][1].real(), 1e-5, 1e-12);

  const auto cusp3 = sample_branch_arc(rational_branch(2, {{3, q(1)}}, 8), 1, 0.0, grid);
  EXPECT_NEAR(std::abs(cusp3.points[0][0] - 0.01), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(cusp3.points[0][1] + 1e-3), 0.0, 1e-12);
}

TEST(SampleBranchArc, RadiiAreNorms) {
  const auto b = rational_branch(4, {{6, q(1)}, {7, q(-2)}}, 8);
  const auto arc = sample_branch_arc(b, 3, 1.1, RadiusGrid::geometric(0.5, 1e-3, 20));
  for (std::size_t i = 0; i < arc.points.size(); ++i) {
    EXPECT_NEAR(arc.radii[i], norm(arc.points[i]), 1e-12 * arc.radii[i]);
  }
}

TEST(SampleBranchArc, RejectsLargeParameters) {
  EXPECT_THROW(sample_branch_arc(rational_branch(1, {}, 4), 0, 0.0,
                                 RadiusGrid::geometric(1.5, 0.1, 8)),
               NumericError);
}

TEST(GapFunction, AxisAndParabola) {
  const auto grid = RadiusGrid::geometric(0.2, 1e-3, 200);
  const auto a = sample_branch_arc(rational_branch(1, {}, 4), 0, 0.0, grid);
  const auto b = sample_branch_arc(rational_branch(1, {{2, q(1)}}, 4), 0, 0.0, grid);
  EXPECT_NEAR(gap_function(a, b, 0.1), 0.01, 1.5e-3);
  EXPECT_DOUBLE_EQ(gap_function(a, b, 0.1), brute_gap(a.points, b.points, 0.1));
  EXPECT_EQ(gap_function(a, a, 0.05), 0.0);
  EXPECT_THROW(gap_function(a, b, 1.0), NumericError);
}

TEST(GapFunction, MatchesBruteForceOnRandomSets) {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  std::uniform_real_distribution<double> radius(0.05, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    ArcSample a;
    ArcSample b;
    for (auto* arc : {&a, &b}) {
      for (int i = 0; i < 40; ++i) {
        const Point2 p{std::complex<double>(coord(rng), coord(rng)),
                       std::complex<double>(coord(rng), coord(rng))};
        arc->points.push_back(p);
        arc->radii.push_back(norm(p));
      }
    }
    const double r = radius(rng);
    try {
      EXPECT_DOUBLE_EQ(gap_function(a, b, r), brute_gap(a.points, b.points, r));
    } catch (const NumericError&) {
      EXPECT_TRUE(std::isinf(brute_gap(a.points, b.points, r)));
    }
  }
}

TEST(GapFunction, AddingPointsNeverIncreasesTheGap) {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  ArcSample a;
  ArcSample b;
  for (auto* arc : {&a, &b}) {
    for (int i = 0; i < 30; ++i) {
      const Point2 p{std::complex<double>(coord(rng), 0.0),
                     std::complex<double>(coord(rng), 0.0)};
      arc->points.push_back(p);
      arc->radii.push_back(norm(p));
    }
  }
  double previous = gap_function(a, b, 0.2);
  for (int i = 0; i < 40; ++i) {
    const Point2 p{std::complex<double>(coord(rng), coord(rng)),
                       std::complex<double>(coord(rng), coord(rng))};
    (i % 2 ? a : b).points.push_back(p);
    (i % 2 ? a : b).radii.push_back(norm(p));
    const double now = gap_function(a, b, 0.2);
    EXPECT_LE(now, previous);
    previous = now;
  }
}

TEST(EstimateContact, SimpleArcs) {
  const auto axis = sample_branch_arc(rational_branch(1, {}, 4), 0, 0.0, kGrid);
  const auto parabola = sample_branch_arc(rational_branch(1, {{2, q(1)}}, 4), 0, 0.0, kGrid);
  const auto cubic = sample_branch_arc(rational_branch(1, {{3, q(1)}}, 4), 0, 0.0, kGrid);
  const auto e2 = estimate_contact(axis, parabola, kGrid);
  EXPECT_NEAR(e2.slope, 2.0, 0.05);
  EXPECT_GE(e2.r_squared, 0.99);
  EXPECT_NEAR(estimate_contact(axis, cubic, kGrid).slope, 3.0, 0.08);
  EXPECT_NEAR(estimate_contact(ray(0.0, kGrid), ray(0.6, kGrid), kGrid).slope, 1.0, 0.05);
  EXPECT_EQ(e2.samples.size(), kGrid.size());
}

TEST(EstimateContact, Failures) {
  const auto axis = sample_branch_arc(rational_branch(1, {}, 4), 0, 0.0, kGrid);
  EXPECT_THROW(estimate_contact(axis, axis, kGrid), NumericError);
  EXPECT_THROW(estimate_contact(axis, axis, RadiusGrid::geometric(0.1, 0.01, 4)), NumericError);
}

TEST(EstimateContact, AgreesWithSymbolicContact) {
  const auto axis = rational_branch(1, {}, 12, 2);
  struct Case {
    PuiseuxBranch a;
    PuiseuxBranch b;
  };
  const std::vector<Case> corpus{
      {rational_branch(1, {{1, q(1)}}, 12, 2), rational_branch(1, {{1, q(-1)}}, 12, 2)},
      {axis, rational_branch(2, {{3, q(1)}}, 12)},
      {axis, rational_branch(1, {{2, q(1)}}, 12, 2)},
      {axis, rational_branch(2, {{5, q(1)}}, 12)},
      {axis, rational_branch(1, {{3, q(1)}}, 12, 2)},
      {rational_branch(2, {{3, q(1)}}, 12), rational_branch(2, {{3, q(1)}, {4, q(1)}}, 12)},
  };
  for (const auto& c : corpus) {
    const double exact = symbolic_contact(c.a, c.b).to_double();
    const double slope = estimate_germs(CurveGerm({c.a}), CurveGerm({c.b}));
    EXPECT_NEAR(slope, exact, 0.1) << "exact " << exact;
    EXPECT_GE(slope, 0.9);
  }
}

TEST(RadialHolderMap, IdentityAndScaling) {
  const auto arc = sample_branch_arc(rational_branch(2, {{3, q(1)}}, 8), 1, 0.4, kGrid.powered(0.5));
  const auto same = radial_holder_map(arc, 1.0);
  for (std::size_t i = 0; i < arc.points.size(); ++i) {
    EXPECT_EQ(same.points[i], arc.points[i]);
  }
  ArcSample single;
  const Point2 p{std::complex<double>(0.06, 0.0), std::complex<double>(0.0, 0.08)};
  single.points.push_back(p);
  single.radii.push_back(norm(p));
  const auto mapped = radial_holder_map(single, 2.0);
  EXPECT_NEAR(mapped.radii[0], 0.01, 1e-15);
  EXPECT_NEAR(mapped.points[0][0].real() / mapped.radii[0], 0.6, 1e-12);
  EXPECT_NEAR(mapped.points[0][1].imag() / mapped.radii[0], 0.8, 1e-12);
  EXPECT_THROW(radial_holder_map(arc, 0.5), ValidationError);
}

TEST(RadialHolderMap, ImageContactOfAxisAndParabola) {
  const auto axis = sample_branch_arc(rational_branch(1, {}, 4), 0, 0.0, kGrid);
  const auto parabola = sample_branch_arc(rational_branch(1, {{2, q(1)}}, 4), 0, 0.0, kGrid);
  const auto grid2 = kGrid.powered(2.0);
  const auto est = estimate_contact(radial_holder_map(axis, 2.0), radial_holder_map(parabola, 2.0), grid2);
  EXPECT_NEAR(est.slope, 1.5, 0.05);
}

TEST(Proposition1, AxisAndParabola) {
  const auto a = sample_germ(CurveGerm({rational_branch(1, {}, 4)}), kGrid);
  const auto b = sample_germ(CurveGerm({rational_branch(1, {{2, q(1)}}, 4)}), kGrid);
  for (double beta : {1.0, 1.25, 2.0}) {
    const auto rep = check_proposition1(a, b, beta, kGrid, 0.1);
    EXPECT_TRUE(rep.passed()) << "beta " << beta;
    EXPECT_NEAR(rep.original.slope, 2.0, 0.05);
    EXPECT_NEAR(rep.mapped.slope, (beta + 1.0) / beta, 0.1) << "beta " << beta;
  }
}

TEST(Proposition1, HoldsOnCuspCorpus) {
  const auto axis = CurveGerm({rational_branch(1, {}, 12, 2)});
  const auto cusp = CurveGerm({rational_branch(2, {{3, q(1)}}, 12)});
  const auto a = sample_germ(axis, kGrid);
  const auto b = sample_germ(cusp, kGrid);
  for (double beta : {1.0, 1.25, 2.0}) {
    EXPECT_TRUE(check_proposition1(a, b, beta, kGrid, 0.1).passed()) << beta;
  }
}

TEST(ProofArcs, CuspY2X5) {
  const auto b = rational_branch(2, {{5, q(1)}}, 8);
  const auto arcs = proof_arcs(b, 1, kGrid);
  EXPECT_EQ(arcs[0].meta.label, "Sigma1");
  EXPECT_EQ(arcs[2].meta.conjugate, 1);
  // Sigma1 and Sigma3 share x and differ only in the sign of the t^5 term.
  for (std::size_t i = 0; i < kGrid.size(); ++i) {
    EXPECT_NEAR(std::abs(arcs[0].points[i][0] - arcs[2].points[i][0]), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(arcs[0].points[i][1] + arcs[2].points[i][1]), 0.0, 1e-15);
  }
  EXPECT_NEAR(estimate_contact(arcs[0], arcs[2], kGrid).slope, 2.5, 0.1);
  EXPECT_NEAR(estimate_contact(arcs[0], arcs[1], kGrid).slope, 1.0, 0.05);
}

TEST(ProofArcs, TwoPairBranch) {
  const auto b = rational_branch(4, {{6, q(1)}, {7, q(1)}}, 8);
  EXPECT_NEAR(estimate_contact(proof_arcs(b, 1, kGrid)[0], proof_arcs(b, 1, kGrid)[2], kGrid).slope,
              1.5, 0.1);
  const auto arcs2 = proof_arcs(b, 2, kGrid);
  EXPECT_NEAR(estimate_contact(arcs2[0], arcs2[2], kGrid).slope, 1.75, 0.1);
}

TEST(ProofArcs, IndexOutOfRange) {
  EXPECT_THROW(proof_arcs(rational_branch(1, {}, 4), 1, kGrid), std::out_of_range);
  EXPECT_THROW(proof_arcs(rational_branch(2, {{3, q(1)}}, 4), 2, kGrid), std::out_of_range);
  EXPECT_THROW(proof_arcs(rational_branch(2, {{3, q(1)}}, 4), 0, kGrid), std::out_of_range);
}
