#include "imfid/report.hpp"

#include <algorithm>
#include <cmath>

namespace imfid {

Estimate binomial_estimate(std::size_t successes, std::size_t trials) {
  if (trials == 0) return {};
  const double p = static_cast<double>(successes) / static_cast<double>(trials);
  return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(trials))};
}

ReportRow make_row(std::vector<double> theta, double alpha, std::size_t hits, std::size_t trials) {
  const Estimate e = binomial_estimate(hits, trials);
  return {std::move(theta), alpha, e.value, e.std_error, e.value > alpha + 3.0 * e.std_error};
}

bool ExperimentReport::any_flag() const {
  return std::any_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.flag; });
}

}  // namespace imfid
