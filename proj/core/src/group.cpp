#include "imfid/group.hpp"

#include <cmath>

namespace imfid {

double wrap_angle(double a) noexcept {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod of a tiny negative value can round up to exactly 2pi
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double angle_diff(double a, double b) noexcept {
  double d = wrap_angle(a - b);
  if (d >= std::numbers::pi) d -= kTwoPi;
  return d;
}

std::string_view to_string(GroupKind kind) noexcept {
  switch (kind) {
    case GroupKind::Additive:
      return "additive";
    case GroupKind::Circle:
      return "circle";
  }
  return "unknown";
}

GroupElement Group::compose(GroupElement a, GroupElement b) const noexcept {
  return canonical(a.value + b.value);
}

GroupElement Group::invert(GroupElement a) const noexcept { return canonical(-a.value); }

GroupElement Group::canonical(double value) const noexcept {
  return {is_circle() ? wrap_angle(value) : value};
}

double Group::distance(GroupElement a, GroupElement b) const noexcept {
  return std::abs(signed_offset(a, b));
}

double Group::signed_offset(GroupElement a, GroupElement b) const noexcept {
  return is_circle() ? angle_diff(b.value, a.value) : b.value - a.value;
}

}  // namespace imfid
