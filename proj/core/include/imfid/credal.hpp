#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "imfid/contour.hpp"
#include "imfid/rng.hpp"

namespace imfid {

// Empirical F(alpha) = P{pi(Y) <= alpha} for a sample Y, on an alpha grid.
struct CalibrationCurve {
  std::vector<double> alpha;
  std::vector<double> F;
  std::vector<double> std_error;
};

struct MembershipResult {
  CalibrationCurve curve;
  bool member = false;
  std::vector<double> violations;  // alpha values with F > alpha + 3 SE
};

struct MaximalityResult {
  CalibrationCurve curve;
  double ks = 0.0;    // sup distance between the law of pi(Y) and Unif(0,1)
  double band = 0.0;  // 1% asymptotic KS critical value
  bool maximal = false;
};

// Evenly spaced alpha grid {step, 2 step, ..., 1 - step} plus 1.
std::vector<double> default_alpha_grid(double step = 0.01);

// pi evaluated at each sample point; throws when a point lies outside the
// contour's grid span.
std::vector<double> contour_values_at(const Contour& contour, std::span<const double> points);

// Kolmogorov-Smirnov distance between the empirical law of `values` and
// Uniform(0,1); handles ties exactly.
double ks_uniform(std::vector<double> values);

CalibrationCurve calibration_curve(std::span<const double> pi_values, std::span<const double> alpha_grid);

// Credal-set membership: F(alpha) <= alpha + 3 SE for every alpha, with SE the
// binomial error at F = alpha for m draws plus the contour's m_c pivot draws.
MembershipResult membership_check(const Contour& contour, std::span<const double> draws,
                                  std::span<const double> alpha_grid);

// Maximality: pi(Y) ~ Unif(0,1). The band is 1.63 sqrt(1/m + 1/m_c) where m_c
// is the contour's own Monte Carlo size (omitted for exact contours).
MaximalityResult maximality_check(const Contour& contour, std::span<const double> draws,
                                  std::span<const double> alpha_grid);

// Probability distribution built from a unimodal contour with CDF
// side_split * pi left of the mode and 1 - (1 - side_split) * pi right of it,
// so that pi(Y) ~ Unif(0,1) under it. On the circle the domain is cut at the
// antipode of the mode and grid points are unwrapped around the mode.
class ProbabilityApproximation {
 public:
  ProbabilityApproximation(Group group, std::vector<double> grid, std::vector<double> cdf, double mode,
                           double side_split);

  const Group& group() const noexcept { return group_; }
  // Increasing grid (unwrapped around the mode on the circle).
  const std::vector<double>& grid() const noexcept { return grid_; }
  const std::vector<double>& cdf_values() const noexcept { return cdf_; }
  double mode() const noexcept { return mode_; }
  double side_split() const noexcept { return side_split_; }

  // CDF at theta (unwrapped around the mode on the circle); clamped outside
  // the grid.
  double cdf(double theta) const;
  // Central difference of the CDF over [theta - h, theta + h].
  double density(double theta, double half_width) const;
  // Inverse-CDF sampling; values returned in canonical group coordinates.
  std::vector<double> sample(std::size_t m, Seed seed) const;

 private:
  double unwrap(double theta) const;
  double interpolate(double t) const;

  Group group_;
  std::vector<double> grid_;
  std::vector<double> cdf_;
  double mode_;
  double side_split_;
};

ProbabilityApproximation possibility_to_probability(const Contour& contour, double side_split = 0.5);

}  // namespace imfid
