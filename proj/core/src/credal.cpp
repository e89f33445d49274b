#include "imfid/credal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "imfid/error.hpp"
#include "imfid/report.hpp"

namespace imfid {

namespace {

constexpr double kKsOnePercent = 1.63;
constexpr double kMonotoneTolerance = 1e-12;

void check_alpha_grid(std::span<const double> alpha_grid) {
  if (alpha_grid.empty()) throw PreconditionError("alpha grid must be nonempty");
  for (double a : alpha_grid) {
    if (!(a >= 0.0 && a <= 1.0)) throw PreconditionError("alpha values must lie in [0,1]");
  }
}

}  // namespace

std::vector<double> default_alpha_grid(double step) {
  std::vector<double> grid;
  for (int i = 1; static_cast<double>(i) * step < 1.0 - 1e-12; ++i) grid.push_back(static_cast<double>(i) * step);
  grid.push_back(1.0);
  return grid;
}

std::vector<double> contour_values_at(const Contour& contour, std::span<const double> points) {
  std::vector<double> out(points.size());
  std::transform(points.begin(), points.end(), out.begin(), [&](double p) { return contour.value_at(p); });
  return out;
}

double ks_uniform(std::vector<double> values) {
  if (values.empty()) throw PreconditionError("ks_uniform needs values");
  std::sort(values.begin(), values.end());
  const double m = static_cast<double>(values.size());
  double d = 0.0;
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i;
    while (j < values.size() && values[j] == values[i]) ++j;
    const double v = std::clamp(values[i], 0.0, 1.0);
    d = std::max({d, std::abs(static_cast<double>(i) / m - v), std::abs(static_cast<double>(j) / m - v)});
    i = j;
  }
  return d;
}

CalibrationCurve calibration_curve(std::span<const double> pi_values, std::span<const double> alpha_grid) {
  check_alpha_grid(alpha_grid);
  std::vector<double> sorted(pi_values.begin(), pi_values.end());
  std::sort(sorted.begin(), sorted.end());
  CalibrationCurve curve;
  for (double a : alpha_grid) {
    const auto hits = static_cast<std::size_t>(std::upper_bound(sorted.begin(), sorted.end(), a) - sorted.begin());
    const Estimate e = binomial_estimate(hits, sorted.size());
    curve.alpha.push_back(a);
    curve.F.push_back(e.value);
    curve.std_error.push_back(e.std_error);
  }
  return curve;
}

MembershipResult membership_check(const Contour& contour, std::span<const double> draws,
                                  std::span<const double> alpha_grid) {
  if (draws.empty()) throw PreconditionError("membership_check needs draws");
  const auto pi = contour_values_at(contour, draws);
  MembershipResult result{calibration_curve(pi, alpha_grid), true, {}};
  // SE at the boundary F = alpha, counting the contour's own Monte Carlo error.
  double inv = 1.0 / static_cast<double>(draws.size());
  if (contour.meta().draws > 0) inv += 1.0 / static_cast<double>(contour.meta().draws);
  for (std::size_t k = 0; k < result.curve.alpha.size(); ++k) {
    const double a = result.curve.alpha[k];
    if (result.curve.F[k] > a + 3.0 * std::sqrt(a * (1.0 - a) * inv)) {
      result.violations.push_back(result.curve.alpha[k]);
    }
  }
  result.member = result.violations.empty();
  return result;
}

MaximalityResult maximality_check(const Contour& contour, std::span<const double> draws,
                                  std::span<const double> alpha_grid) {
  if (draws.empty()) throw PreconditionError("maximality_check needs draws");
  auto pi = contour_values_at(contour, draws);
  MaximalityResult result;
  result.curve = calibration_curve(pi, alpha_grid);
  result.ks = ks_uniform(std::move(pi));
  double inv = 1.0 / static_cast<double>(draws.size());
  if (contour.meta().draws > 0) inv += 1.0 / static_cast<double>(contour.meta().draws);
  result.band = kKsOnePercent * std::sqrt(inv);
  result.maximal = result.ks <= result.band;
  return result;
}

// ---------------------------------------------------------------------------

ProbabilityApproximation::ProbabilityApproximation(Group group, std::vector<double> grid, std::vector<double> cdf,
                                                   double mode, double side_split)
    : group_(group), grid_(std::move(grid)), cdf_(std::move(cdf)), mode_(mode), side_split_(side_split) {}

double ProbabilityApproximation::unwrap(double theta) const {
  return group_.is_circle() ? mode_ + angle_diff(theta, mode_) : theta;
}

double ProbabilityApproximation::interpolate(double t) const {
  if (t <= grid_.front()) return cdf_.front();
  if (t >= grid_.back()) return cdf_.back();
  const auto it = std::upper_bound(grid_.begin(), grid_.end(), t);
  const std::size_t i = static_cast<std::size_t>(it - grid_.begin());
  const double w = (t - grid_[i - 1]) / (grid_[i] - grid_[i - 1]);
  return cdf_[i - 1] + w * (cdf_[i] - cdf_[i - 1]);
}

double ProbabilityApproximation::cdf(double theta) const { return interpolate(unwrap(theta)); }

double ProbabilityApproximation::density(double theta, double half_width) const {
  if (!(half_width > 0.0)) throw PreconditionError("density half-width must be positive");
  const double t = unwrap(theta);
  return (interpolate(t + half_width) - interpolate(t - half_width)) / (2.0 * half_width);
}

std::vector<double> ProbabilityApproximation::sample(std::size_t m, Seed seed) const {
  Engine engine = make_engine(seed);
  std::uniform_real_distribution<double> uniform{0.0, 1.0};
  std::vector<double> out(m);
  for (double& v : out) {
    const double u = uniform(engine);
    double t;
    if (u <= cdf_.front()) {
      t = grid_.front();
    } else if (u >= cdf_.back()) {
      t = grid_.back();
    } else {
      const auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
      const std::size_t i = static_cast<std::size_t>(it - cdf_.begin());
      const double span = cdf_[i] - cdf_[i - 1];
      const double w = span > 0.0 ? (u - cdf_[i - 1]) / span : 0.0;
      t = grid_[i - 1] + w * (grid_[i] - grid_[i - 1]);
    }
    v = group_.canonical(t).value;
  }
  return out;
}

ProbabilityApproximation possibility_to_probability(const Contour& contour, double side_split) {
  if (!(side_split > 0.0 && side_split < 1.0)) throw PreconditionError("side_split must lie in (0,1)");
  const Group group = contour.group();
  const double mode = contour.grid()[contour.argmax()];

  std::vector<double> grid;
  std::vector<double> pi;
  if (!group.is_circle()) {
    grid = contour.grid();
    pi = contour.values();
  } else {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(contour.size() + 2);
    for (std::size_t i = 0; i < contour.size(); ++i) {
      pts.emplace_back(angle_diff(contour.grid()[i], mode), contour.values()[i]);
    }
    std::sort(pts.begin(), pts.end());
    // Interpolating across the minimum can overshoot the neighbouring grid values.
    const double antipode =
        std::min({contour.value_at(mode + std::numbers::pi), pts.front().second, pts.back().second});
    if (pts.front().first > -std::numbers::pi) pts.insert(pts.begin(), {-std::numbers::pi, antipode});
    pts.emplace_back(std::numbers::pi, antipode);
    for (const auto& [d, v] : pts) {
      grid.push_back(mode + d);
      pi.push_back(v);
    }
  }

  const auto peak = static_cast<std::size_t>(std::max_element(pi.begin(), pi.end()) - pi.begin());
  for (std::size_t i = 1; i <= peak; ++i) {
    if (pi[i] < pi[i - 1] - kMonotoneTolerance) {
      throw UnsupportedShapeError("contour is not unimodal: decreases left of the mode at " + std::to_string(grid[i]));
    }
  }
  for (std::size_t i = peak + 1; i < pi.size(); ++i) {
    if (pi[i] > pi[i - 1] + kMonotoneTolerance) {
      throw UnsupportedShapeError("contour is not unimodal: increases right of the mode at " + std::to_string(grid[i]));
    }
  }

  std::vector<double> cdf(pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i) {
    cdf[i] = i <= peak ? side_split * pi[i] : 1.0 - (1.0 - side_split) * pi[i];
  }
  return ProbabilityApproximation{group, std::move(grid), std::move(cdf), mode, side_split};
}

}  // namespace imfid
