#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "holdercurve/puiseux.hpp"

namespace holdercurve {

/// A point of C^2.
using Point2 = std::array<std::complex<double>, 2>;

double norm(const Point2& p);
double distance(const Point2& a, const Point2& b);

/// Strictly decreasing geometric sequence of radii.
class RadiusGrid {
 public:
  /// `count` >= 2 radii from r_max down to r_min. Throws ValidationError
  /// unless 0 < r_min < r_max.
  static RadiusGrid geometric(double r_max, double r_min, std::size_t count);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double r_max() const noexcept { return values_.front(); }
  double r_min() const noexcept { return values_.back(); }
  std::string description() const;

  /// The grid {r^p}; still geometric and decreasing for p > 0.
  RadiusGrid powered(double p) const;

 private:
  explicit RadiusGrid(std::vector<double> values) : values_(std::move(values)) {}
  std::vector<double> values_;
};

struct ArcMeta {
  std::size_t branch = 0;
  std::int64_t conjugate = 0;
  double angle = 0.0;
  std::string grid;
  double holder_beta = 1.0;  // exponent of the radial map applied, 1 if none
  std::string label;
};

/// Ordered samples of a real arc on a curve, with their Euclidean norms.
struct ArcSample {
  std::vector<Point2> points;
  std::vector<double> radii;
  ArcMeta meta;
};

/// Default floor for sampled radii; smaller values lose the signal to
/// cancellation in double precision.
inline constexpr double kMinSampleRadius = 1e-6;
/// Sampling is restricted to |t| <= kMaxParameterRadius, so any |x| grid
/// inside the unit disc is admissible for every multiplicity.
inline constexpr double kMaxParameterRadius = 1.0;
inline constexpr std::size_t kDefaultAngles = 64;

/// Evaluates (t^n, y(t)) for t = zeta_n^conj * s * e^{i angle / n}, s over
/// `s_grid` (the |t| values). Throws NumericError for an empty grid or radii
/// outside (0, kMaxParameterRadius].
ArcSample sample_branch_arc(const PuiseuxBranch& branch, std::int64_t conj,
                            double angle, const RadiusGrid& s_grid);

/// Samples every branch of a germ over all conjugates and `angles` uniformly
/// spaced x-arguments. `x_grid` holds |x| values; branch b is evaluated at
/// |t| = |x|^(1/n_b), so all arcs share the same x-moduli.
std::vector<ArcSample> sample_germ(const CurveGerm& germ,
                                   const RadiusGrid& x_grid,
                                   std::size_t angles = kDefaultAngles);

/// inf { |a - b| : a in A, b in B, |a| >= r, |b| >= r } over the samples.
/// Throws NumericError if either side has no point of norm >= r.
double gap_function(const ArcSample& a, const ArcSample& b, double r);
double gap_function(std::span<const ArcSample> a, std::span<const ArcSample> b,
                    double r);

struct ContactEstimate {
  double slope = 0.0;
  double r_squared = 0.0;
  double r_min = 0.0;
  double r_max = 0.0;
  // (r, gap) for every grid point, in grid order.
  std::vector<std::pair<double, double>> samples;
};

/// Least-squares slope of ln gap(r) against ln r over the grid.
/// Needs at least 8 grid points; throws NumericError on a failed or zero gap
/// or when all gaps coincide.
ContactEstimate estimate_contact(std::span<const ArcSample> a,
                                 std::span<const ArcSample> b,
                                 const RadiusGrid& grid);
ContactEstimate estimate_contact(const ArcSample& a, const ArcSample& b,
                                 const RadiusGrid& grid);

/// p -> p * |p|^(beta - 1); a bi-(1/beta)-Hoelder map for beta >= 1.
ArcSample radial_holder_map(const ArcSample& arc, double beta);

struct Proposition1Report {
  double beta = 1.0;
  double alpha = 1.0;
  double tolerance = 0.1;
  ContactEstimate original;
  ContactEstimate mapped;
  bool lower_bound_holds = false;  // alpha^2 c' <= c (1 + tol)
  bool upper_bound_holds = false;  // c <= c' / alpha^2 (1 + tol)
  bool passed() const noexcept { return lower_bound_holds && upper_bound_holds; }
};

/// Checks alpha^2 Cont(h A, h B) <= Cont(A, B) <= Cont(h A, h B) / alpha^2
/// for h = radial_holder_map(., beta), alpha = 1 / beta, on estimated
/// contacts. The mapped sets are estimated on the image grid {r^beta}.
Proposition1Report check_proposition1(std::span<const ArcSample> a,
                                      std::span<const ArcSample> b, double beta,
                                      const RadiusGrid& grid,
                                      double tolerance = 0.1);

/// The four arcs used to separate branches with different characteristic
/// exponents at index j (1-based), sampled on the normal form of `branch`
/// over |x| in `x_grid`:
///   [0] x = r           (angle 0, conjugate 0)
///   [1] x = i r         (angle pi/2)
///   [2] x = r, conjugate n_1...n_{j-1}: agrees with [0] below beta_j and
///       differs at beta_j
///   [3] x = -i r        (angle 3 pi/2, same conjugate as [2])
/// Throws std::out_of_range unless 1 <= j <= genus.
std::array<ArcSample, 4> proof_arcs(const PuiseuxBranch& branch, std::size_t j,
                                    const RadiusGrid& x_grid);

}  // namespace holdercurve
