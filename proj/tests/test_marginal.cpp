#include <gtest/gtest.h>

#include <cmath>

#include "imfid/error.hpp"
#include "imfid/fiducial.hpp"
#include "imfid/im.hpp"
#include "imfid/marginal.hpp"
#include "test_data.hpp"

using namespace imfid;

TEST(Feature, ByName) {
  EXPECT_DOUBLE_EQ(FeatureMap::by_name("cos")(0.0), 1.0);
  EXPECT_DOUBLE_EQ(FeatureMap::by_name("sin")(0.0), 0.0);
  EXPECT_DOUBLE_EQ(FeatureMap::by_name("identity")(2.5), 2.5);
  EXPECT_THROW(FeatureMap::by_name("tan"), PreconditionError);
}

TEST(Feature, CosinePreimageHasTwoBranches) {
  const auto grid = make_grid(0.0, kTwoPi - 0.015, 0.01);
  const auto feature = FeatureMap::cosine();
  const auto image = feature.image(grid, true);
  const auto idx = feature.preimage(image, std::cos(1.0));
  bool near_plus = false;
  bool near_minus = false;
  for (auto i : idx) {
    near_plus |= std::abs(grid[i] - 1.0) < 0.011;
    near_minus |= std::abs(grid[i] - (kTwoPi - 1.0)) < 0.011;
  }
  EXPECT_TRUE(near_plus);
  EXPECT_TRUE(near_minus);
}

TEST(Marginal, IdentityIsNoOp) {
  const Contour c(Group(GroupKind::Additive), {-1.0, 0.0, 1.0}, {0.5, 1.0, 0.5}, {});
  const auto m = marginal_contour(c, FeatureMap::identity(), std::vector<double>{-1.0, 0.0, 1.0});
  EXPECT_EQ(m.values(), c.values());
  EXPECT_EQ(m.meta().feature, "identity");
}

TEST(Marginal, CosineOfExactContour) {
  // pi(theta) = 1 - |theta - 1| / pi on the circle; pi_cos(phi) = max over
  // the two preimage branches.
  std::vector<double> grid = make_grid(0.0, kTwoPi - 0.0015, 0.001);
  std::vector<double> v;
  for (double t : grid) v.push_back(1.0 - std::abs(angle_diff(t, 1.0)) / std::numbers::pi);
  const Contour c(Group(GroupKind::Circle), grid, v, {});
  const auto fgrid = make_grid(-1.0, 1.0, 0.01);
  const auto m = marginal_contour(c, FeatureMap::cosine(), fgrid);
  for (std::size_t i = 0; i < fgrid.size(); ++i) {
    const double a = std::acos(fgrid[i]);
    const double expected =
        std::max(1.0 - std::abs(angle_diff(a, 1.0)) / std::numbers::pi, 1.0 - std::abs(angle_diff(-a, 1.0)) / std::numbers::pi);
    EXPECT_NEAR(m.values()[i], expected, 0.02) << fgrid[i];
  }
  EXPECT_NEAR(fgrid[m.argmax()], std::cos(1.0), 0.01);
  EXPECT_THROW(marginal_contour(c, FeatureMap::cosine(), std::vector<double>{-1.0, 1.5}), PreconditionError);
}

TEST(Histogram, FreedmanDiaconis) {
  std::vector<double> v;
  for (int i = 0; i < 1000; ++i) v.push_back(i / 1000.0);
  const auto h = freedman_diaconis_histogram(v);
  EXPECT_NEAR(h.bin_width, 2.0 * 0.5 / 10.0, 0.01);
  std::size_t total = 0;
  for (auto c : h.counts) total += c;
  EXPECT_EQ(total, 1000u);
  EXPECT_THROW(freedman_diaconis_histogram({}), PreconditionError);
}

TEST(Marginal, RouletteModesOrdering) {
  const Model vm = Model::von_mises(2.0, 9);
  const auto x = test_data::roulette();
  const Contour c = contour_grid(vm, x, make_grid(0.0, kTwoPi - 0.015, 0.01), 100'000, 1);
  const auto fgrid = make_grid(-1.0, 1.0, 0.001);
  const auto m = marginal_contour(c, FeatureMap::cosine(), fgrid);
  EXPECT_NEAR(fgrid[m.argmax()], 0.63, 0.01);
  const auto fd = marginal_fiducial(fiducial_sample(vm, x, 100'000, 2), FeatureMap::cosine());
  EXPECT_GT(fd.mode, 0.63);
  for (double v : fd.values) {
    ASSERT_GE(v, -1.0);
    ASSERT_LE(v, 1.0);
  }
}

TEST(Marginal, IdentityFiducialAndGap) {
  const Model loc = Model::gaussian_location(1.0, 1);
  const std::vector<double> x{0.0};
  const auto grid = make_grid(-5.0, 5.0, 0.01);
  const Contour c = contour_grid(loc, x, grid, 100'000, 103);
  const auto draws = fiducial_sample(loc, x, 100'000, 203);
  const auto fd = marginal_fiducial(draws, FeatureMap::identity());
  EXPECT_EQ(fd.values, draws.values());
  const auto m = marginal_contour(c, FeatureMap::identity(), grid);
  const auto gap = marginal_maximality_gap(m, fd.values, default_alpha_grid());
  EXPECT_LE(gap.maximality.ks, 0.01);
  EXPECT_TRUE(gap.membership.member);
}

TEST(Marginal, CosineTwoBranchRule) {
  const Model vm = Model::von_mises(2.0, 9);
  const auto x = test_data::roulette();
  const Contour c = contour_grid(vm, x, make_grid(0.0, kTwoPi - 0.015, 0.01), 50'000, 5);
  const auto fgrid = make_grid(-0.99, 0.99, 0.01);
  const auto m = marginal_contour(c, FeatureMap::cosine(), fgrid);
  for (std::size_t i = 0; i < fgrid.size(); ++i) {
    const double a = std::acos(fgrid[i]);
    const double expected = std::max(c.value_at(a), c.value_at(kTwoPi - a));
    EXPECT_NEAR(m.values()[i], expected, 0.02) << fgrid[i];
  }
}
