#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "imfid/hypothesis.hpp"
#include "imfid/model.hpp"
#include "imfid/report.hpp"

namespace imfid {

// `dimension` independent copies of a scalar invariant model; the product
// group acts coordinatewise and the fiducial distribution is the product of
// the coordinate fiducials. Data for one replicate is dimension x n values.
struct ProductModel {
  Model component;
  std::size_t dimension = 1;
};

// {theta : c . theta <= k} for the additive group R^d. On the circle group
// (d = 1) the only shipped homomorphism is the identity, read as the arc
// [0, k] in canonical coordinates.
Hypothesis homomorphism_hypothesis(std::vector<double> direction, double k,
                                   GroupKind kind = GroupKind::Additive);

// {theta : ||theta|| <= radius}; not a homomorphism hypothesis.
Hypothesis ball_hypothesis(std::size_t dimension, double radius);

struct FalseConfidenceOptions {
  std::size_t reps = 10'000;
  std::size_t draws = 10'000;  // inner fiducial draws per replicate
  Seed seed = 0;
  unsigned threads = 1;
  // Upper limit on reps * draws * dimension * |theta_list|.
  double budget = 4e9;
};

// Exceedance P_theta{Q_X(A) <= alpha} for each theta in theta_list (each must
// satisfy A) and each alpha, with Q_X(A) estimated from fiducial draws. The
// same nested sample is reused across alpha.
ExperimentReport fc_sweep(const ProductModel& model, const Hypothesis& hypothesis,
                          std::span<const std::vector<double>> theta_list, std::span<const double> alpha_grid,
                          const FalseConfidenceOptions& options);

// fc_sweep restricted to homomorphism hypotheses, where no flag is expected.
ExperimentReport thm2_check(const ProductModel& model, const Hypothesis& hypothesis,
                            std::span<const std::vector<double>> theta_list, std::span<const double> alpha_grid,
                            const FalseConfidenceOptions& options);

}  // namespace imfid
