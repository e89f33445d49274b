#include <gtest/gtest.h>

#include <numbers>
#include <sstream>

#include "imfid/credal.hpp"
#include "imfid/error.hpp"
#include "imfid/io.hpp"

using namespace imfid;

namespace {

std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')); }

}  // namespace

TEST(Read, DegreesHeader) {
  std::istringstream in("angle_deg\n90\n\n180\n");
  const auto x = read_observations(in, GroupKind::Circle);
  ASSERT_EQ(x.size(), 2u);
  EXPECT_DOUBLE_EQ(x[0], std::numbers::pi / 2);
  EXPECT_DOUBLE_EQ(x[1], std::numbers::pi);
}

TEST(Read, RadiansDefault) {
  std::istringstream in("0.5\n1.5\n");
  EXPECT_EQ(read_observations(in, GroupKind::Circle), (std::vector<double>{0.5, 1.5}));
  std::istringstream named("angle_rad\n0.5\n");
  EXPECT_EQ(read_observations(named, GroupKind::Circle), (std::vector<double>{0.5}));
}

TEST(Read, AdditiveColumnName) {
  std::istringstream in("x\n1\n-2.5\n");
  EXPECT_EQ(read_observations(in, GroupKind::Additive), (std::vector<double>{1.0, -2.5}));
}

TEST(Read, Malformed) {
  std::istringstream empty("");
  EXPECT_THROW(read_observations(empty, GroupKind::Additive), InputError);
  std::istringstream bad("1\nabc\n");
  EXPECT_THROW(read_observations(bad, GroupKind::Additive), InputError);
  std::istringstream header("degrees\n1\n");
  EXPECT_THROW(read_observations(header, GroupKind::Circle), InputError);
  EXPECT_THROW(read_observations(std::filesystem::path("/nonexistent/file.csv"), GroupKind::Circle), InputError);
}

TEST(Read, ShippedRouletteFile) {
  const auto x = read_observations(std::filesystem::path(IMFID_TEST_DATA_DIR) / "roulette.csv", GroupKind::Circle);
  ASSERT_EQ(x.size(), 9u);
  EXPECT_DOUBLE_EQ(x[0], 43.0 * std::numbers::pi / 180.0);
}

TEST(Write, Schemas) {
  const Contour c(Group(GroupKind::Additive), {0.0, 0.5}, {1.0, 0.25}, {});
  std::ostringstream contour;
  write_contour_csv(contour, c);
  EXPECT_EQ(contour.str(), "theta,pi\n0,1\n0.5,0.25\n");

  std::ostringstream draws;
  write_draws_csv(draws, std::vector<double>{0.1});
  EXPECT_EQ(draws.str(), "draw\n0.10000000000000001\n");

  ExperimentReport report;
  report.rows.push_back({{0.5, -1.0}, 0.25, 0.5, 0.125, true});
  std::ostringstream validity;
  write_validity_csv(validity, report);
  EXPECT_EQ(validity.str(), "alpha,frequency,stderr,flag\n0.25,0.5,0.125,1\n");
  std::ostringstream exceed;
  write_exceedance_csv(exceed, report);
  EXPECT_EQ(exceed.str(), "theta,alpha,exceedance,stderr,flag\n0.5;-1,0.25,0.5,0.125,1\n");

  std::ostringstream calib;
  write_calibration_csv(calib, CalibrationCurve{{0.5}, {0.25}, {0.0}});
  EXPECT_EQ(calib.str(), "alpha,F,stderr\n0.5,0.25,0\n");

  std::ostringstream transform;
  write_transform_csv(transform, possibility_to_probability(Contour(Group(GroupKind::Additive), {-1.0, 0.0, 1.0}, {0.0, 1.0, 0.0}, {})));
  EXPECT_EQ(first_line(transform.str()), "theta,cdf");

  std::ostringstream side;
  write_sidecar(side, {{"seed", "3"}, {"model", "vonmises"}});
  EXPECT_EQ(side.str(), "seed=3\nmodel=vonmises\n");
}

TEST(Write, NumbersRoundTrip) {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-17, 123456789.123}) EXPECT_EQ(std::stod(format_number(v)), v);
}
