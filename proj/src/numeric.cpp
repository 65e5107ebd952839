#include "holdercurve/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "holdercurve/errors.hpp"
#include "holdercurve/invariants.hpp"

namespace holdercurve {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double max_radius(std::span<const ArcSample> arcs) {
  double best = 0.0;
  for (const auto& arc : arcs) {
    for (double r : arc.radii) best = std::max(best, r);
  }
  return best;
}

}  // namespace

double norm(const Point2& p) {
  return std::sqrt(std::norm(p[0]) + std::norm(p[1]));
}

double distance(const Point2& a, const Point2& b) {
  return std::sqrt(std::norm(a[0] - b[0]) + std::norm(a[1] - b[1]));
}

RadiusGrid RadiusGrid::geometric(double r_max, double r_min, std::size_t count) {
  if (!(r_min > 0.0) || !(r_max > r_min) || !std::isfinite(r_max)) {
    throw ValidationError("radius grid needs 0 < r_min < r_max");
  }
  if (count < 2) throw ValidationError("radius grid needs at least 2 points");
  std::vector<double> values(count);
  const double log_max = std::log(r_max);
  const double step = (std::log(r_min) - log_max) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    values[i] = std::exp(log_max + step * static_cast<double>(i));
  }
  values.front() = r_max;
  values.back() = r_min;
  return RadiusGrid(std::move(values));
}

std::string RadiusGrid::description() const {
  std::ostringstream os;
  os.precision(6);
  os << "geometric " << r_max() << " -> " << r_min() << ", " << size()
     << " points";
  return os.str();
}

RadiusGrid RadiusGrid::powered(double p) const {
  if (!(p > 0.0)) throw ValidationError("grid exponent must be positive");
  std::vector<double> out(values_.size());
  std::transform(values_.begin(), values_.end(), out.begin(),
                 [p](double r) { return std::pow(r, p); });
  return RadiusGrid(std::move(out));
}

ArcSample sample_branch_arc(const PuiseuxBranch& branch, std::int64_t conj,
                            double angle, const RadiusGrid& s_grid) {
  if (s_grid.size() == 0) throw NumericError("empty radius grid");
  if (s_grid.r_max() > kMaxParameterRadius || !(s_grid.r_min() > 0.0)) {
    throw NumericError("parameter radii must lie in (0, " +
                       std::to_string(kMaxParameterRadius) + "], got up to " +
                       std::to_string(s_grid.r_max()));
  }
  const double n = static_cast<double>(branch.multiplicity());
  const double phase =
      kTwoPi * static_cast<double>(conj) / n + angle / n;

  std::vector<std::pair<double, std::complex<double>>> terms;
  terms.reserve(branch.terms().size());
  for (const auto& term : branch.terms()) {
    terms.emplace_back(static_cast<double>(term.exponent), term.coeff.to_complex());
  }

  ArcSample arc;
  arc.meta.conjugate = conj;
  arc.meta.angle = angle;
  arc.meta.grid = s_grid.description() + " in |t|";
  arc.points.reserve(s_grid.size());
  arc.radii.reserve(s_grid.size());
  for (double s : s_grid.values()) {
    const std::complex<double> x = std::polar(std::pow(s, n), n * phase);
    std::complex<double> y{0.0, 0.0};
    for (const auto& [m, a] : terms) y += a * std::polar(std::pow(s, m), m * phase);
    const Point2 p{x, y};
    arc.points.push_back(p);
    arc.radii.push_back(norm(p));
  }
  return arc;
}

std::vector<ArcSample> sample_germ(const CurveGerm& germ,
                                   const RadiusGrid& x_grid,
                                   std::size_t angles) {
  if (angles == 0) throw ValidationError("angle count must be positive");
  std::vector<ArcSample> arcs;
  for (std::size_t b = 0; b < germ.size(); ++b) {
    const auto& branch = germ[b];
    const RadiusGrid s_grid =
        x_grid.powered(1.0 / static_cast<double>(branch.multiplicity()));
    for (std::int64_t k = 0; k < branch.multiplicity(); ++k) {
      for (std::size_t a = 0; a < angles; ++a) {
        const double theta =
            kTwoPi * static_cast<double>(a) / static_cast<double>(angles);
        ArcSample arc = sample_branch_arc(branch, k, theta, s_grid);
        arc.meta.branch = b;
        arcs.push_back(std::move(arc));
      }
    }
  }
  return arcs;
}

double gap_function(const ArcSample& a, const ArcSample& b, double r) {
  return gap_function(std::span<const ArcSample>(&a, 1),
                      std::span<const ArcSample>(&b, 1), r);
}

double gap_function(std::span<const ArcSample> a, std::span<const ArcSample> b,
                    double r) {
  if (max_radius(a) < r || max_radius(b) < r) {
    throw NumericError("no sampled point has norm >= " + std::to_string(r));
  }
  double best = std::numeric_limits<double>::infinity();
  for (const auto& arc_a : a) {
    for (std::size_t i = 0; i < arc_a.points.size(); ++i) {
      if (arc_a.radii[i] < r) continue;
      for (const auto& arc_b : b) {
        for (std::size_t j = 0; j < arc_b.points.size(); ++j) {
          if (arc_b.radii[j] < r) continue;
          best = std::min(best, distance(arc_a.points[i], arc_b.points[j]));
        }
      }
    }
  }
  return best;
}

ContactEstimate estimate_contact(std::span<const ArcSample> a,
                                 std::span<const ArcSample> b,
                                 const RadiusGrid& grid) {
  if (grid.size() < 8) {
    throw NumericError("contact estimation needs at least 8 grid points, got " +
                       std::to_string(grid.size()));
  }
  ContactEstimate est;
  est.r_max = grid.r_max();
  est.r_min = grid.r_min();
  std::vector<double> xs;
  std::vector<double> ys;
  for (double r : grid.values()) {
    const double gap = gap_function(a, b, r);
    if (!(gap > 0.0)) {
      throw NumericError("gap vanishes at r = " + std::to_string(r) +
                         ": the sampled sets meet away from the origin");
    }
    est.samples.emplace_back(r, gap);
    xs.push_back(std::log(r));
    ys.push_back(std::log(gap));
  }
  const double count = static_cast<double>(xs.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= count;
  mean_y /= count;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
    sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
    syy += (ys[i] - mean_y) * (ys[i] - mean_y);
  }
  if (syy == 0.0) {
    throw NumericError("degenerate regression: all gaps are equal");
  }
  est.slope = sxy / sxx;
  const double intercept = mean_y - est.slope * mean_x;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double resid = ys[i] - (intercept + est.slope * xs[i]);
    ss_res += resid * resid;
  }
  est.r_squared = 1.0 - ss_res / syy;
  return est;
}

ContactEstimate estimate_contact(const ArcSample& a, const ArcSample& b,
                                 const RadiusGrid& grid) {
  return estimate_contact(std::span<const ArcSample>(&a, 1),
                          std::span<const ArcSample>(&b, 1), grid);
}

ArcSample radial_holder_map(const ArcSample& arc, double beta) {
  if (!(beta >= 1.0)) {
    throw ValidationError("radial Hölder map needs beta >= 1");
  }
  ArcSample out;
  out.meta = arc.meta;
  out.meta.holder_beta = arc.meta.holder_beta * beta;
  out.points.reserve(arc.points.size());
  out.radii.reserve(arc.points.size());
  for (const auto& p : arc.points) {
    const double scale = std::pow(norm(p), beta - 1.0);
    const Point2 q{p[0] * scale, p[1] * scale};
    out.points.push_back(q);
    out.radii.push_back(norm(q));
  }
  return out;
}

Proposition1Report check_proposition1(std::span<const ArcSample> a,
                                      std::span<const ArcSample> b, double beta,
                                      const RadiusGrid& grid, double tolerance) {
  Proposition1Report report;
  report.beta = beta;
  report.alpha = 1.0 / beta;
  report.tolerance = tolerance;
  std::vector<ArcSample> mapped_a;
  std::vector<ArcSample> mapped_b;
  for (const auto& arc : a) mapped_a.push_back(radial_holder_map(arc, beta));
  for (const auto& arc : b) mapped_b.push_back(radial_holder_map(arc, beta));
  report.original = estimate_contact(a, b, grid);
  report.mapped = estimate_contact(mapped_a, mapped_b, grid.powered(beta));
  const double c = report.original.slope;
  const double c_mapped = report.mapped.slope;
  const double alpha2 = report.alpha * report.alpha;
  report.lower_bound_holds = alpha2 * c_mapped <= c * (1.0 + tolerance);
  report.upper_bound_holds = c <= c_mapped / alpha2 * (1.0 + tolerance);
  return report;
}

std::array<ArcSample, 4> proof_arcs(const PuiseuxBranch& branch, std::size_t j,
                                    const RadiusGrid& x_grid) {
  const CharacteristicData data = characteristic_data(branch);
  if (j < 1 || j > data.genus()) {
    throw std::out_of_range("characteristic index " + std::to_string(j) +
                            " outside 1.." + std::to_string(data.genus()));
  }
  const PuiseuxBranch model = lipschitz_normal_form(branch);
  const std::int64_t n = branch.multiplicity();
  // n_1 ... n_{j-1} = n / e_{j-1}: fixes every term below beta_j.
  const std::int64_t shift = n / data.e[j - 1];
  const RadiusGrid s_grid = x_grid.powered(1.0 / static_cast<double>(n));
  std::array<ArcSample, 4> arcs{
      sample_branch_arc(model, 0, 0.0, s_grid),
      sample_branch_arc(model, 0, std::numbers::pi / 2.0, s_grid),
      sample_branch_arc(model, shift, 0.0, s_grid),
      sample_branch_arc(model, shift, 1.5 * std::numbers::pi, s_grid),
  };
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    arcs[k].meta.label = "Sigma" + std::to_string(k + 1);
  }
  return arcs;
}

}  // namespace holdercurve
