#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace imfid {

// Monte Carlo proportion with its binomial standard error.
struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
};

Estimate binomial_estimate(std::size_t successes, std::size_t trials);

// One (theta, alpha) cell of a calibration experiment: the frequency of the
// event {probability <= alpha} and whether it exceeds alpha by more than 3 SE.
struct ReportRow {
  std::vector<double> theta;
  double alpha = 0.0;
  double estimate = 0.0;
  double std_error = 0.0;
  bool flag = false;
};

ReportRow make_row(std::vector<double> theta, double alpha, std::size_t hits, std::size_t trials);

struct ExperimentReport {
  std::vector<ReportRow> rows;
  // Configuration echo, written as a key=value sidecar.
  std::vector<std::pair<std::string, std::string>> config;
  // Per-replicate statistic (pi_X(theta) or Q_X(A)) for the first theta.
  std::vector<double> replicate_values;

  bool any_flag() const;
};

}  // namespace imfid
