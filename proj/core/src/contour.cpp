#include "imfid/contour.hpp"

#include <algorithm>
#include <cmath>

#include "imfid/error.hpp"

namespace imfid {

Contour::Contour(Group group, std::vector<double> grid, std::vector<double> values, ContourMeta meta)
    : group_(group), grid_(std::move(grid)), values_(std::move(values)), meta_(std::move(meta)) {
  if (grid_.empty()) throw PreconditionError("contour grid must be nonempty");
  if (grid_.size() != values_.size()) throw PreconditionError("contour grid and values differ in length");
  if (std::adjacent_find(grid_.begin(), grid_.end(), std::greater_equal<>()) != grid_.end()) {
    throw PreconditionError("contour grid must be strictly increasing");
  }
  if (group_.is_circle() && (grid_.front() < 0.0 || grid_.back() >= kTwoPi)) {
    throw PreconditionError("circular contour grid must lie in [0, 2pi)");
  }
  for (double v : values_) {
    if (!(v >= 0.0 && v <= 1.0)) throw PreconditionError("contour values must lie in [0,1]");
  }
}

bool Contour::in_span(double theta) const {
  return group_.is_circle() || (theta >= grid_.front() && theta <= grid_.back());
}

std::optional<double> Contour::try_value_at(double theta) const {
  const std::size_t n = grid_.size();
  if (group_.is_circle()) {
    theta = wrap_angle(theta);
    if (n == 1) return values_[0];
    const auto it = std::upper_bound(grid_.begin(), grid_.end(), theta);
    if (it == grid_.begin() || it == grid_.end()) {
      // Wrap segment from the last grid point to the first (+2pi).
      const double left = grid_.back();
      const double right = grid_.front() + kTwoPi;
      const double t = theta < grid_.front() ? theta + kTwoPi : theta;
      const double w = (t - left) / (right - left);
      return values_.back() + w * (values_.front() - values_.back());
    }
    const std::size_t i = static_cast<std::size_t>(it - grid_.begin());
    const double w = (theta - grid_[i - 1]) / (grid_[i] - grid_[i - 1]);
    return values_[i - 1] + w * (values_[i] - values_[i - 1]);
  }
  if (theta < grid_.front() || theta > grid_.back() || std::isnan(theta)) return std::nullopt;
  if (n == 1) return values_[0];
  auto it = std::upper_bound(grid_.begin(), grid_.end(), theta);
  if (it == grid_.end()) return values_.back();
  const std::size_t i = static_cast<std::size_t>(it - grid_.begin());
  const double w = (theta - grid_[i - 1]) / (grid_[i] - grid_[i - 1]);
  return values_[i - 1] + w * (values_[i] - values_[i - 1]);
}

double Contour::value_at(double theta) const {
  if (auto v = try_value_at(theta)) return *v;
  throw PreconditionError("point " + std::to_string(theta) + " outside contour grid span [" +
                          std::to_string(grid_.front()) + ", " + std::to_string(grid_.back()) + "]");
}

std::size_t Contour::argmax() const {
  return static_cast<std::size_t>(std::max_element(values_.begin(), values_.end()) - values_.begin());
}

double Contour::max_value() const { return values_[argmax()]; }

}  // namespace imfid
