#include "imfid/fiducial.hpp"

#include <algorithm>
#include <cmath>

#include "imfid/error.hpp"

namespace imfid {

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw PreconditionError("alpha must lie in (0,1)");
}

// Draw offsets relative to g, sorted; signed and in [-pi, pi) on the circle.
std::vector<double> sorted_offsets(const FiducialDraws& draws) {
  std::vector<double> offsets(draws.draws.size());
  std::transform(draws.draws.begin(), draws.draws.end(), offsets.begin(), [&](GroupElement d) {
    return draws.group.signed_offset(draws.meta.position, d);
  });
  std::sort(offsets.begin(), offsets.end());
  return offsets;
}

double empirical_quantile(const std::vector<double>& sorted, double p) {
  const double pos = p * static_cast<double>(sorted.size() - 1);
  const auto i = static_cast<std::size_t>(std::floor(pos));
  const std::size_t j = std::min(i + 1, sorted.size() - 1);
  return sorted[i] + (pos - static_cast<double>(i)) * (sorted[j] - sorted[i]);
}

}  // namespace

std::vector<double> FiducialDraws::values() const {
  std::vector<double> out(draws.size());
  std::transform(draws.begin(), draws.end(), out.begin(), [](GroupElement g) { return g.value; });
  return out;
}

FiducialDraws fiducial_sample(const Model& model, std::span<const double> x, std::size_t m, Seed seed) {
  const OrbitCoords coords = model.decompose(x);
  const Group group = model.group();
  auto pivots = model.sample_pivot_given_u(coords.label, m, seed);
  for (GroupElement& h : pivots) h = group.compose(coords.position, group.invert(h));
  return {group, std::move(pivots), {std::string(model.id()), coords.position, coords.label, m, seed}};
}

double fiducial_density(const Model& model, std::span<const double> x, GroupElement theta) {
  const OrbitCoords coords = model.decompose(x);
  const Group group = model.group();
  const double h = group.signed_offset(group.canonical(theta.value), coords.position);
  return model.pivot_law(coords.label).density(h);
}

Estimate fiducial_prob(const Model& model, std::span<const double> x, const Hypothesis& hypothesis,
                       std::size_t m, Seed seed) {
  if (m < 1'000) throw PreconditionError("fiducial_prob needs at least 1000 draws");
  if (hypothesis.dimension() != 1) throw PreconditionError("fiducial_prob needs a scalar hypothesis");
  const FiducialDraws draws = fiducial_sample(model, x, m, seed);
  const auto hits = static_cast<std::size_t>(std::count_if(
      draws.draws.begin(), draws.draws.end(), [&](GroupElement d) { return hypothesis.contains(d.value); }));
  return binomial_estimate(hits, m);
}

Interval credible_region(const Model& model, std::span<const double> x, double alpha) {
  check_alpha(alpha);
  const OrbitCoords coords = model.decompose(x);
  // Both pivot laws are symmetric and unimodal, so the HDR is g -/+ q.
  const double q = model.pivot_law(coords.label).central_quantile(1.0 - alpha);
  return {coords.position.value - q, coords.position.value + q};
}

Interval credible_region(const FiducialDraws& draws, double alpha) {
  check_alpha(alpha);
  if (draws.draws.empty()) throw PreconditionError("credible_region needs draws");
  const auto offsets = sorted_offsets(draws);
  const double g = draws.meta.position.value;
  return {g + empirical_quantile(offsets, 0.5 * alpha), g + empirical_quantile(offsets, 1.0 - 0.5 * alpha)};
}

double fiducial_upper_quantile(const FiducialDraws& draws, double level) {
  if (!(level > 0.0 && level < 1.0)) throw PreconditionError("quantile level must lie in (0,1)");
  if (draws.draws.empty()) throw PreconditionError("quantile needs draws");
  return draws.meta.position.value + empirical_quantile(sorted_offsets(draws), level);
}

}  // namespace imfid
