#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "imfid/group.hpp"

namespace imfid {

// Closed interval [lo, hi] on a group coordinate; lo == hi is a point.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const noexcept { return hi - lo; }
  bool contains(double v) const noexcept { return lo <= v && v <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Sorts and merges overlapping/touching intervals.
std::vector<Interval> normalize_intervals(std::vector<Interval> intervals);

// Homomorphism form psi(theta) = c . theta <= k.
struct LinearForm {
  std::vector<double> direction;
  double bound = 0.0;

  double apply(std::span<const double> theta) const;
};

// A subset A of the parameter space. Always carries a predicate; scalar
// hypotheses may also carry an exact interval representation, which lets
// suprema over A be taken exactly on an interpolated contour.
class Hypothesis {
 public:
  using Predicate = std::function<bool(std::span<const double>)>;

  static Hypothesis everything(GroupKind kind = GroupKind::Additive, std::size_t dimension = 1);
  static Hypothesis nothing(GroupKind kind = GroupKind::Additive);
  static Hypothesis point(double value, GroupKind kind = GroupKind::Additive);
  // Union of closed intervals. On the circle, intervals are arcs given as
  // [from, to] with from <= to in unwrapped coordinates.
  static Hypothesis intervals(std::vector<Interval> intervals,
                              GroupKind kind = GroupKind::Additive);
  // Counterclockwise arc from `from` to `to`.
  static Hypothesis arc(double from, double to);
  static Hypothesis predicate(std::string name, std::size_t dimension, Predicate pred,
                              GroupKind kind = GroupKind::Additive);
  // {theta : direction . theta <= bound} on the additive group R^d.
  static Hypothesis half_space(std::vector<double> direction, double bound);

  const std::string& name() const noexcept { return name_; }
  std::size_t dimension() const noexcept { return dimension_; }
  GroupKind kind() const noexcept { return kind_; }

  bool contains(std::span<const double> theta) const;
  bool contains(double theta) const { return contains(std::span<const double>(&theta, 1)); }

  // Exact representation, canonical for the group: merged, and within
  // [0, 2pi] on the circle.
  const std::optional<std::vector<Interval>>& closed_form() const noexcept { return intervals_; }
  const std::optional<LinearForm>& linear_form() const noexcept { return linear_; }

  // True when the closed form is known to be empty.
  bool is_empty() const noexcept { return intervals_ && intervals_->empty(); }

  // Set complement. The closed form of the complement is its closure, which
  // gives the same supremum on a continuous contour.
  Hypothesis complement() const;

 private:
  Hypothesis() = default;

  std::string name_;
  std::size_t dimension_ = 1;
  GroupKind kind_ = GroupKind::Additive;
  Predicate pred_;
  std::optional<std::vector<Interval>> intervals_;
  std::optional<LinearForm> linear_;
};

}  // namespace imfid
