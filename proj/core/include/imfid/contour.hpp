#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "imfid/group.hpp"
#include "imfid/model.hpp"
#include "imfid/rng.hpp"

namespace imfid {

struct ContourMeta {
  std::string model_id;
  GroupElement position;     // observed g
  OrbitLabel label;          // observed u
  std::size_t draws = 0;     // pivot draws m; 0 for an exact contour
  Seed seed = 0;
  std::string feature;       // set for marginal contours
};

// Tabulated possibility contour with linear interpolation between grid
// points. On the circle the grid lives in [0, 2pi) and the interpolant wraps
// from the last grid point to the first.
class Contour {
 public:
  Contour(Group group, std::vector<double> grid, std::vector<double> values, ContourMeta meta);

  const Group& group() const noexcept { return group_; }
  const std::vector<double>& grid() const noexcept { return grid_; }
  const std::vector<double>& values() const noexcept { return values_; }
  const ContourMeta& meta() const noexcept { return meta_; }
  std::size_t size() const noexcept { return grid_.size(); }

  // Interpolated value; nullopt outside the grid span on the line.
  std::optional<double> try_value_at(double theta) const;
  // Throws PreconditionError outside the grid span.
  double value_at(double theta) const;

  bool in_span(double theta) const;
  double span_lo() const noexcept { return grid_.front(); }
  double span_hi() const noexcept { return grid_.back(); }

  // Index of the first grid point attaining the maximum.
  std::size_t argmax() const;
  double max_value() const;

 private:
  Group group_;
  std::vector<double> grid_;
  std::vector<double> values_;
  ContourMeta meta_;
};

}  // namespace imfid
