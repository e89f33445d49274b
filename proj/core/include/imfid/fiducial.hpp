#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "imfid/hypothesis.hpp"
#include "imfid/model.hpp"
#include "imfid/report.hpp"

namespace imfid {

struct FiducialMeta {
  std::string model_id;
  GroupElement position;
  OrbitLabel label;
  std::size_t draws = 0;
  Seed seed = 0;
};

// Sample from Q_x: each draw is g o H_i^{-1} with H_i from the conditional
// pivot law given the observed orbit label.
struct FiducialDraws {
  Group group{GroupKind::Additive};
  std::vector<GroupElement> draws;
  FiducialMeta meta;

  std::vector<double> values() const;
};

FiducialDraws fiducial_sample(const Model& model, std::span<const double> x, std::size_t m, Seed seed);

// Closed-form fiducial density q_x(theta) with respect to Lebesgue measure on
// the group coordinate (right Haar for both shipped groups).
double fiducial_density(const Model& model, std::span<const double> x, GroupElement theta);

// Q_x(A) by Monte Carlo with m fiducial draws.
Estimate fiducial_prob(const Model& model, std::span<const double> x, const Hypothesis& hypothesis,
                       std::size_t m, Seed seed);

// Highest-density 1 - alpha region from the closed-form density, as an
// interval around the observed g (may extend past [0, 2pi) on the circle).
Interval credible_region(const Model& model, std::span<const double> x, double alpha);

// Equal-tailed 1 - alpha region from fiducial draws, in coordinates around g.
Interval credible_region(const FiducialDraws& draws, double alpha);

// The `level` quantile of the draws (taken around g on the circle); level 0.95
// gives the upper 95% fiducial bound.
double fiducial_upper_quantile(const FiducialDraws& draws, double level);

}  // namespace imfid
