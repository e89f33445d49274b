#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "imfid/contour.hpp"
#include "imfid/hypothesis.hpp"
#include "imfid/model.hpp"
#include "imfid/report.hpp"

namespace imfid {

inline constexpr std::size_t kDefaultPivotDraws = 100'000;
inline constexpr double kDefaultGridStep = 0.01;
inline constexpr std::size_t kMinContourDraws = 1'000;

// R(x, theta) = L_x(theta) / sup L_x, evaluated through (theta^{-1} o g, u).
double relative_likelihood(const Model& model, std::span<const double> x, GroupElement theta);

// Monte Carlo estimate of pi_x(theta) = P{f(H,u) <= f(theta^{-1} o g, u) | U=u}
// with m conditional pivot draws; ties count as <=.
Estimate contour_at(const Model& model, std::span<const double> x, GroupElement theta,
                    std::size_t m, Seed seed);

// The same estimate at every grid point from one shared pivot sample, so each
// value equals contour_at(..., grid[i], m, seed).
Contour contour_grid(const Model& model, std::span<const double> x, std::span<const double> grid,
                     std::size_t m, Seed seed);

// Evenly spaced grid start, start + step, ... up to and including stop (within
// half a step).
std::vector<double> make_grid(double start, double stop, double step);

// Possibility of A: sup of the interpolated contour over A. Throws on a
// hypothesis whose closed form is empty; returns 0 with a warning when A misses
// the grid span.
double upper_prob(const Contour& contour, const Hypothesis& hypothesis);

// Necessity of A: 1 - upper_prob(complement of A), with sup over the empty
// set taken as 0.
double lower_prob(const Contour& contour, const Hypothesis& hypothesis);

// {theta : pi(theta) >= alpha} on the interpolant, as maximal intervals. On
// the circle the intervals are canonical pieces of [0, 2pi].
std::vector<Interval> plausibility_region(const Contour& contour, double alpha);

// The single interval of `region` that contains `center`, with circular pieces
// joined across 0 and expressed in coordinates around `center`.
Interval region_around(const std::vector<Interval>& region, const Group& group, double center);

struct ValidityOptions {
  std::size_t reps = 10'000;
  std::size_t draws = 5'000;
  Seed seed = 0;
  unsigned threads = 1;
};

// Frequency over datasets X ~ P_theta of {pi_X(theta) <= alpha} for each alpha,
// flagging alpha where the frequency exceeds alpha + 3 SE.
ExperimentReport validity_check(const Model& model, GroupElement theta,
                                std::span<const double> alpha_grid, const ValidityOptions& options);

}  // namespace imfid
