#include "imfid/marginal.hpp"

#include <algorithm>
#include <cmath>
#include <spdlog/spdlog.h>

#include "imfid/error.hpp"

namespace imfid {

FeatureMap::FeatureMap(std::string name, std::function<double(double)> forward)
    : name_(std::move(name)), forward_(std::move(forward)) {
  if (!forward_) throw PreconditionError("feature map needs a forward function");
}

FeatureMap FeatureMap::identity() {
  return {"identity", [](double t) { return t; }};
}

FeatureMap FeatureMap::cosine() {
  return {"cos", [](double t) { return std::cos(t); }};
}

FeatureMap FeatureMap::sine() {
  return {"sin", [](double t) { return std::sin(t); }};
}

FeatureMap FeatureMap::by_name(const std::string& name) {
  if (name == "identity") return identity();
  if (name == "cos") return cosine();
  if (name == "sin") return sine();
  throw PreconditionError("unknown feature '" + name + "' (expected identity, cos or sin)");
}

FeatureMap::GridImage FeatureMap::image(std::span<const double> grid, bool circular) const {
  GridImage img;
  const std::size_t n = grid.size();
  img.phi.resize(n);
  std::transform(grid.begin(), grid.end(), img.phi.begin(), forward_);
  img.tolerance.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double spacing = 0.0;
    if (i > 0) spacing = std::max(spacing, std::abs(img.phi[i] - img.phi[i - 1]));
    if (i + 1 < n) spacing = std::max(spacing, std::abs(img.phi[i + 1] - img.phi[i]));
    if (circular && n > 1 && (i == 0 || i + 1 == n)) {
      spacing = std::max(spacing, std::abs(img.phi.front() - img.phi.back()));
    }
    img.tolerance[i] = 0.5 * spacing;
  }
  return img;
}

std::vector<std::size_t> FeatureMap::preimage(const GridImage& image, double phi0) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < image.phi.size(); ++i) {
    if (std::abs(image.phi[i] - phi0) <= image.tolerance[i]) out.push_back(i);
  }
  return out;
}

Contour marginal_contour(const Contour& contour, const FeatureMap& feature, std::span<const double> feature_grid) {
  if (feature_grid.empty()) throw PreconditionError("feature grid must be nonempty");
  const auto img = feature.image(contour.grid(), contour.group().is_circle());
  double lo = img.phi[0] - img.tolerance[0];
  double hi = img.phi[0] + img.tolerance[0];
  for (std::size_t i = 1; i < img.phi.size(); ++i) {
    lo = std::min(lo, img.phi[i] - img.tolerance[i]);
    hi = std::max(hi, img.phi[i] + img.tolerance[i]);
  }
  std::size_t empty = 0;
  std::vector<double> values(feature_grid.size(), 0.0);
  for (std::size_t k = 0; k < feature_grid.size(); ++k) {
    const double phi0 = feature_grid[k];
    if (phi0 < lo || phi0 > hi) {
      throw PreconditionError("feature grid value " + std::to_string(phi0) + " outside the feature's range [" +
                              std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    const auto pre = feature.preimage(img, phi0);
    if (pre.empty()) {
      ++empty;
      continue;
    }
    double best = 0.0;
    for (std::size_t i : pre) best = std::max(best, contour.values()[i]);
    values[k] = best;
  }
  if (empty > 0) {
    spdlog::warn("{} feature grid value(s) have an empty grid preimage; marginal contour set to 0 there", empty);
  }
  ContourMeta meta = contour.meta();
  meta.feature = feature.name();
  return Contour{Group{GroupKind::Additive}, {feature_grid.begin(), feature_grid.end()}, std::move(values),
                 std::move(meta)};
}

Histogram freedman_diaconis_histogram(std::span<const double> values) {
  if (values.empty()) throw PreconditionError("histogram needs values");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  auto quantile = [&](double p) {
    const double pos = p * static_cast<double>(sorted.size() - 1);
    const auto i = static_cast<std::size_t>(pos);
    const std::size_t j = std::min(i + 1, sorted.size() - 1);
    return sorted[i] + (pos - static_cast<double>(i)) * (sorted[j] - sorted[i]);
  };
  const double iqr = quantile(0.75) - quantile(0.25);
  const double range = sorted.back() - sorted.front();
  double width = 2.0 * iqr / std::cbrt(static_cast<double>(sorted.size()));
  if (!(width > 0.0)) width = range > 0.0 ? range : 1.0;
  const auto bins = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(range / width)));
  Histogram h{sorted.front(), width, std::vector<std::size_t>(bins, 0)};
  for (double v : sorted) {
    auto k = static_cast<std::size_t>((v - h.origin) / width);
    h.counts[std::min(k, bins - 1)]++;
  }
  return h;
}

FeatureDraws marginal_fiducial(const FiducialDraws& draws, const FeatureMap& feature) {
  if (draws.draws.empty()) throw PreconditionError("marginal_fiducial needs draws");
  FeatureDraws out;
  out.feature = feature.name();
  out.values.resize(draws.draws.size());
  std::transform(draws.draws.begin(), draws.draws.end(), out.values.begin(),
                 [&](GroupElement g) { return feature(g.value); });
  out.histogram = freedman_diaconis_histogram(out.values);
  const auto& counts = out.histogram.counts;
  const auto fullest = static_cast<std::size_t>(std::max_element(counts.begin(), counts.end()) - counts.begin());
  out.mode = out.histogram.bin_center(fullest);
  return out;
}

MarginalGap marginal_maximality_gap(const Contour& marginal, std::span<const double> feature_values,
                                    std::span<const double> alpha_grid) {
  return {maximality_check(marginal, feature_values, alpha_grid),
          membership_check(marginal, feature_values, alpha_grid)};
}

}  // namespace imfid
