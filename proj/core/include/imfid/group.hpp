#pragma once

#include <numbers>
#include <string_view>

namespace imfid {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Maps any angle into [0, 2pi).
double wrap_angle(double a) noexcept;

// Signed angular difference a - b mapped into [-pi, pi).
double angle_diff(double a, double b) noexcept;

enum class GroupKind {
  Additive,  // (R, +)
  Circle,    // SO(2), angles in [0, 2pi)
};

std::string_view to_string(GroupKind kind) noexcept;

// A parameter value, identified with the group element acting on the data.
struct GroupElement {
  double value = 0.0;

  friend bool operator==(GroupElement, GroupElement) = default;
};

// The group structure shared by the sample space action and the parameter
// space. Values are stored in canonical form (angles wrapped).
class Group {
 public:
  constexpr explicit Group(GroupKind kind) noexcept : kind_(kind) {}

  constexpr GroupKind kind() const noexcept { return kind_; }
  constexpr bool is_circle() const noexcept { return kind_ == GroupKind::Circle; }

  GroupElement identity() const noexcept { return {0.0}; }
  GroupElement compose(GroupElement a, GroupElement b) const noexcept;
  GroupElement invert(GroupElement a) const noexcept;
  GroupElement canonical(double value) const noexcept;

  // Length of invert(a) o b measured in the group coordinate; |b - a| on the
  // line, shortest arc on the circle.
  double distance(GroupElement a, GroupElement b) const noexcept;

  // invert(a) o b as a signed real, in [-pi, pi) on the circle.
  double signed_offset(GroupElement a, GroupElement b) const noexcept;

  friend bool operator==(Group, Group) = default;

 private:
  GroupKind kind_;
};

}  // namespace imfid
