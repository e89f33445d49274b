#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "imfid_cli/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = imfid::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("imfid_cli_" + name);
  fs::remove_all(dir);
  return dir;
}

const std::string kRoulette = std::string(IMFID_TEST_DATA_DIR) + "/roulette.csv";

}  // namespace

TEST(Cli, ContourWritesCsvAndSidecar) {
  const auto dir = fresh_dir("contour");
  const auto r = run({"contour", "--data", kRoulette, "--seed", "1", "--draws", "20000", "--out", dir.string(), "--svg"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(slurp(dir / "contour.csv").substr(0, 9), "theta,pi\n");
  const auto meta = slurp(dir / "contour.meta");
  EXPECT_NE(meta.find("model=vonmises"), std::string::npos);
  EXPECT_NE(meta.find("seed=1"), std::string::npos);
  EXPECT_NE(meta.find("pivot_scaling=mean"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir / "contour.svg"));
}

TEST(Cli, SameSeedSameBytes) {
  const auto a = fresh_dir("seed_a");
  const auto b = fresh_dir("seed_b");
  for (const auto& d : {a, b}) {
    ASSERT_EQ(run({"fiducial", "--data", kRoulette, "--seed", "5", "--draws", "5000", "--out", d.string()}).code, 0);
  }
  EXPECT_EQ(slurp(a / "fiducial_draws.csv"), slurp(b / "fiducial_draws.csv"));
}

TEST(Cli, MissingSeedIsUsageError) {
  const auto r = run({"contour", "--data", kRoulette});
  EXPECT_EQ(r.code, imfid::cli::kUsage);
  EXPECT_NE(r.err.find("--seed"), std::string::npos);
}

TEST(Cli, BadInputs) {
  EXPECT_EQ(run({}).code, imfid::cli::kUsage);
  EXPECT_EQ(run({"nope"}).code, imfid::cli::kUsage);
  EXPECT_EQ(run({"contour", "--data", "/no/such.csv", "--seed", "1"}).code, imfid::cli::kUsage);
  EXPECT_EQ(run({"contour", "--model", "cauchy", "--simulate", "n=3", "--seed", "1"}).code, imfid::cli::kUsage);
  EXPECT_EQ(run({"contour", "--simulate", "n=3", "--seed", "1", "--grid", "1:0"}).code, imfid::cli::kUsage);
}

TEST(Cli, DegenerateDataIsModelError) {
  const auto dir = fresh_dir("degenerate");
  fs::create_directories(dir);
  {
    std::ofstream f(dir / "bad.csv");
    f << "angle_deg\n0\n180\n";
  }
  const auto r = run({"contour", "--data", (dir / "bad.csv").string(), "--seed", "1", "--out", dir.string()});
  EXPECT_EQ(r.code, imfid::cli::kModel);
}

TEST(Cli, BudgetExceeded) {
  const auto r = run({"falseconf", "--preset", "ball-2d", "--seed", "1", "--budget", "1000", "--out",
                      fresh_dir("budget").string()});
  EXPECT_EQ(r.code, imfid::cli::kBudget);
}

TEST(Cli, ValidityAndFalseconfSchemas) {
  const auto dir = fresh_dir("validity");
  ASSERT_EQ(run({"validity", "--model", "gaussian-location", "--simulate", "n=5,theta=0", "--seed", "2", "--reps",
                 "1000", "--draws", "1000", "--out", dir.string()})
                .code,
            0);
  EXPECT_EQ(slurp(dir / "validity.csv").substr(0, 27), "alpha,frequency,stderr,flag");
  ASSERT_EQ(run({"falseconf", "--preset", "halfspace-1d", "--seed", "2", "--reps", "1000", "--draws", "1000", "--alphas",
                 "0.1", "--out", dir.string()})
                .code,
            0);
  EXPECT_EQ(slurp(dir / "falseconf.csv").substr(0, 34), "theta,alpha,exceedance,stderr,flag");
}

TEST(Cli, MarginalAndTransform) {
  const auto dir = fresh_dir("marginal");
  const auto r = run({"marginal", "--data", kRoulette, "--seed", "3", "--draws", "20000", "--feature", "cos", "--out",
                      dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("NOT-MAXIMAL"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir / "marginal_contour.csv"));
  EXPECT_TRUE(fs::exists(dir / "marginal_draws.csv"));
  EXPECT_EQ(run({"transform", "--data", kRoulette, "--seed", "3", "--draws", "20000", "--out", dir.string()}).code, 0);
  EXPECT_EQ(slurp(dir / "transform.csv").substr(0, 9), "theta,cdf");
  EXPECT_EQ(run({"maximality", "--data", kRoulette, "--seed", "3", "--draws", "20000", "--out", dir.string()}).code, 0);
  EXPECT_EQ(slurp(dir / "calibration.csv").substr(0, 14), "alpha,F,stderr");
}

TEST(Cli, SimulatedGaussian) {
  const auto dir = fresh_dir("sim");
  const auto r = run({"contour", "--model", "gaussian-location", "--sigma", "2", "--simulate", "n=4,theta=1", "--seed",
                      "4", "--draws", "5000", "--out", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(slurp(dir / "contour.meta").find("model=gaussian-location"), std::string::npos);
}

TEST(Cli, DocumentedExamples) {
  const auto dir = fresh_dir("examples");
  auto r = run({"contour", "--model", "vonmises", "--kappa", "2", "--data", kRoulette, "--grid", "0:6.283:0.01",
                "--draws", "100000", "--seed", "42", "--out", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("peak theta 0.890000"), std::string::npos) << r.out;

  r = run({"maximality", "--model", "vonmises", "--data", kRoulette, "--draws", "100000", "--seed", "1", "--out",
           dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("verdict MAXIMAL"), std::string::npos) << r.out;

  r = run({"marginal", "--feature", "cos", "--data", kRoulette, "--seed", "1", "--out", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto pos = r.out.find("im peak ");
  ASSERT_NE(pos, std::string::npos);
  EXPECT_NEAR(std::stod(r.out.substr(pos + 8)), 0.63, 0.01);

  r = run({"falseconf", "--preset", "ball-2d", "--seed", "9", "--alphas", "0.1", "--out", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("FLAG"), std::string::npos) << r.out;
}

TEST(Cli, SimulatedGaussianContourIsSymmetric) {
  const auto dir = fresh_dir("symmetric");
  ASSERT_EQ(run({"contour", "--model", "gaussian-location", "--sigma", "1", "--simulate", "n=1,theta=0", "--seed", "7",
                 "--grid", "-4:4:0.01", "--draws", "40000", "--out", dir.string()})
                .code,
            0);
  std::ifstream in(dir / "contour.csv");
  std::string line;
  std::getline(in, line);
  std::vector<double> theta;
  std::vector<double> pi;
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    theta.push_back(std::stod(line.substr(0, comma)));
    pi.push_back(std::stod(line.substr(comma + 1)));
  }
  const auto meta = slurp(dir / "contour.meta");
  const auto gpos = meta.find("\ng=");
  ASSERT_NE(gpos, std::string::npos);
  const double g = std::stod(meta.substr(gpos + 3));
  // pi(g + d) against pi(g - d) on the interpolant.
  auto at = [&](double t) {
    const auto it = std::upper_bound(theta.begin(), theta.end(), t);
    const std::size_t i = static_cast<std::size_t>(it - theta.begin());
    const double w = (t - theta[i - 1]) / (theta[i] - theta[i - 1]);
    return pi[i - 1] + w * (pi[i] - pi[i - 1]);
  };
  for (double d = 0.0; d < 2.5; d += 0.05) EXPECT_NEAR(at(g + d), at(g - d), 2.0 / std::sqrt(40'000.0)) << d;
}
