#include <gtest/gtest.h>

#include <cmath>

#include "imfid/credal.hpp"
#include "imfid/error.hpp"
#include "imfid/fiducial.hpp"
#include "imfid/im.hpp"
#include "test_data.hpp"

using namespace imfid;

namespace {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

Contour exact_location_contour(double center, double sd, const std::vector<double>& grid) {
  std::vector<double> v;
  for (double t : grid) v.push_back(2.0 * (1.0 - normal_cdf(std::abs(t - center) / sd)));
  return Contour(Group(GroupKind::Additive), grid, v, {});
}

}  // namespace

TEST(Ks, KnownValues) {
  EXPECT_DOUBLE_EQ(ks_uniform({0.5}), 0.5);
  EXPECT_DOUBLE_EQ(ks_uniform({0.25, 0.75}), 0.25);
  // Ties: all mass at 0.5 gives a jump of size 1 at 0.5.
  EXPECT_DOUBLE_EQ(ks_uniform({0.5, 0.5, 0.5}), 0.5);
  EXPECT_DOUBLE_EQ(ks_uniform({1.0, 1.0}), 1.0);
  EXPECT_THROW(ks_uniform({}), PreconditionError);
}

TEST(Calibration, CurveCounts) {
  const std::vector<double> pi{0.1, 0.2, 0.2, 0.9};
  const std::vector<double> alpha{0.2, 0.5, 1.0};
  const auto curve = calibration_curve(pi, alpha);
  EXPECT_DOUBLE_EQ(curve.F[0], 0.75);
  EXPECT_DOUBLE_EQ(curve.F[1], 0.75);
  EXPECT_DOUBLE_EQ(curve.F[2], 1.0);
  EXPECT_EQ(default_alpha_grid().size(), 100u);
  EXPECT_DOUBLE_EQ(default_alpha_grid().back(), 1.0);
}

TEST(Credal, FiducialIsMaximalMember) {
  const auto grid = make_grid(-8.0, 8.0, 0.01);
  const Contour c = exact_location_contour(0.0, 1.0, grid);
  const Model loc = Model::gaussian_location(1.0, 1);
  const std::vector<double> x{0.0};
  const auto draws = fiducial_sample(loc, x, 50'000, 2).values();
  const auto alpha = default_alpha_grid(0.05);
  const auto max = maximality_check(c, draws, alpha);
  EXPECT_TRUE(max.maximal) << max.ks;
  EXPECT_NEAR(max.band, 1.63 / std::sqrt(50'000.0), 1e-12);
  EXPECT_TRUE(membership_check(c, draws, alpha).member);
}

TEST(Credal, DiffuseDistributionIsNotMember) {
  const auto grid = make_grid(-12.0, 12.0, 0.01);
  const Contour c = exact_location_contour(0.0, 1.0, grid);
  const Model loc = Model::gaussian_location(2.0, 1);
  const std::vector<double> x{0.0};
  const auto wide = fiducial_sample(loc, x, 20'000, 3).values();
  const auto alpha = default_alpha_grid(0.05);
  const auto mem = membership_check(c, wide, alpha);
  EXPECT_FALSE(mem.member);
  EXPECT_FALSE(mem.violations.empty());
  // Concentrated draws are members but not maximal.
  const Model narrow_model = Model::gaussian_location(0.5, 1);
  const auto narrow = fiducial_sample(narrow_model, x, 20'000, 4).values();
  EXPECT_TRUE(membership_check(c, narrow, alpha).member);
  EXPECT_FALSE(maximality_check(c, narrow, alpha).maximal);
}

TEST(Transform, LocationCdfMatchesFiducial) {
  const auto grid = make_grid(-6.0, 6.0, 0.01);
  const Contour c = exact_location_contour(0.3, 1.0, grid);
  const auto dist = possibility_to_probability(c);
  for (double t : {-2.0, -0.5, 0.3, 1.0, 2.5}) EXPECT_NEAR(dist.cdf(t), normal_cdf(t - 0.3), 2e-5) << t;
  const auto samples = dist.sample(50'000, 8);
  EXPECT_LT(ks_uniform(contour_values_at(c, samples)), 0.01);
}

TEST(Transform, SideSplitAndShapes) {
  const Contour c(Group(GroupKind::Additive), {-1.0, 0.0, 1.0}, {0.0, 1.0, 0.0}, {});
  const auto dist = possibility_to_probability(c, 0.25);
  EXPECT_DOUBLE_EQ(dist.cdf(0.0), 0.25);
  EXPECT_DOUBLE_EQ(dist.cdf(1.0), 1.0);
  EXPECT_DOUBLE_EQ(dist.cdf(-1.0), 0.0);
  const Contour bimodal(Group(GroupKind::Additive), {0.0, 1.0, 2.0, 3.0, 4.0}, {0.2, 1.0, 0.3, 0.9, 0.1}, {});
  EXPECT_THROW(possibility_to_probability(bimodal), UnsupportedShapeError);
  EXPECT_THROW(possibility_to_probability(c, 1.0), PreconditionError);
}

TEST(Transform, VonMisesDensityMatchesFiducial) {
  const Model vm = Model::von_mises(2.0, 9);
  const auto x = test_data::roulette();
  const Contour c = contour_grid(vm, x, make_grid(0.0, kTwoPi - 0.015, 0.01), 1'000'000, 21);
  const auto dist = possibility_to_probability(c);
  double worst = 0.0;
  for (double t = 0.0; t < kTwoPi; t += 0.05) {
    if (std::abs(angle_diff(t, test_data::kRouletteG + std::numbers::pi)) < 0.1) continue;
    worst = std::max(worst, std::abs(dist.density(t, 0.05) - fiducial_density(vm, x, {t})));
  }
  EXPECT_LT(worst, 0.02);
}

TEST(Credal, PointMassAtMle) {
  const auto grid = make_grid(-6.0, 6.0, 0.01);
  const Contour c = exact_location_contour(0.0, 1.0, grid);
  const std::vector<double> point(1'000, 0.0);
  const auto alpha = default_alpha_grid();
  const auto mem = membership_check(c, point, alpha);
  EXPECT_TRUE(mem.member);
  for (std::size_t i = 0; i + 1 < alpha.size(); ++i) EXPECT_DOUBLE_EQ(mem.curve.F[i], 0.0);
  const auto max = maximality_check(c, point, alpha);
  EXPECT_DOUBLE_EQ(max.ks, 1.0);
  EXPECT_FALSE(max.maximal);
}

TEST(Credal, SampledFiducialMaximalBothModels) {
  const auto alpha = default_alpha_grid();
  const Model loc = Model::gaussian_location(1.0, 5);
  const auto x = loc.sample_data({0.0}, 5, 8);
  const double xbar = loc.mle(x).value;
  const Contour c = contour_grid(loc, x, make_grid(std::round(xbar * 100) / 100 - 3.0, std::round(xbar * 100) / 100 + 3.0, 0.01),
                                 100'000, 9);
  EXPECT_LE(maximality_check(c, fiducial_sample(loc, x, 100'000, 10).values(), alpha).ks, 0.01);

  const Model vm = Model::von_mises(2.0, 9);
  const auto r = test_data::roulette();
  const Contour cv = contour_grid(vm, r, make_grid(0.0, kTwoPi - 0.015, 0.01), 100'000, 11);
  EXPECT_LE(maximality_check(cv, fiducial_sample(vm, r, 100'000, 12).values(), alpha).ks, 0.01);
}

TEST(Transform, UnitLocationCdfAndDraws) {
  const Model loc = Model::gaussian_location(1.0, 1);
  const std::vector<double> x{0.0};
  const auto grid = make_grid(-5.0, 5.0, 0.01);
  const Contour c = contour_grid(loc, x, grid, 4'000'000, 14);
  const auto dist = possibility_to_probability(c);
  double worst = 0.0;
  for (double t : grid) worst = std::max(worst, std::abs(dist.cdf(t) - normal_cdf(t)));
  EXPECT_LE(worst, 1e-3);
  const auto draws = dist.sample(100'000, 15);
  EXPECT_LE(maximality_check(c, draws, default_alpha_grid()).ks, 0.01);
}
