#include "imfid/hypothesis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "imfid/error.hpp"

namespace imfid {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool in_intervals(const std::vector<Interval>& set, double v) {
  return std::any_of(set.begin(), set.end(), [v](const Interval& iv) { return iv.contains(v); });
}

// Splits unwrapped arcs into canonical pieces of [0, 2pi].
std::vector<Interval> canonical_arcs(const std::vector<Interval>& arcs) {
  std::vector<Interval> out;
  for (const auto& a : arcs) {
    if (a.hi - a.lo >= kTwoPi) return {{0.0, kTwoPi}};
    const double lo = wrap_angle(a.lo);
    const double hi = lo + (a.hi - a.lo);
    if (hi <= kTwoPi) {
      out.push_back({lo, hi});
    } else {
      out.push_back({lo, kTwoPi});
      out.push_back({0.0, hi - kTwoPi});
    }
  }
  return normalize_intervals(std::move(out));
}

std::vector<Interval> complement_closure(const std::vector<Interval>& set, GroupKind kind) {
  const bool circle = kind == GroupKind::Circle;
  const double lo_end = circle ? 0.0 : -kInf;
  const double hi_end = circle ? kTwoPi : kInf;
  if (set.empty()) return {{lo_end, hi_end}};
  std::vector<Interval> out;
  if (set.front().lo > lo_end) out.push_back({lo_end, set.front().lo});
  for (std::size_t i = 1; i < set.size(); ++i) out.push_back({set[i - 1].hi, set[i].lo});
  if (set.back().hi < hi_end) out.push_back({set.back().hi, hi_end});
  return out;
}

}  // namespace

std::vector<Interval> normalize_intervals(std::vector<Interval> intervals) {
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi); });
  std::vector<Interval> merged;
  for (const auto& iv : intervals) {
    if (!merged.empty() && iv.lo <= merged.back().hi) {
      merged.back().hi = std::max(merged.back().hi, iv.hi);
    } else {
      merged.push_back(iv);
    }
  }
  return merged;
}

double LinearForm::apply(std::span<const double> theta) const {
  return std::inner_product(direction.begin(), direction.end(), theta.begin(), 0.0);
}

Hypothesis Hypothesis::everything(GroupKind kind, std::size_t dimension) {
  Hypothesis h;
  h.name_ = "everything";
  h.dimension_ = dimension;
  h.kind_ = kind;
  h.pred_ = [](std::span<const double>) { return true; };
  if (dimension == 1) {
    h.intervals_ = kind == GroupKind::Circle ? std::vector<Interval>{{0.0, kTwoPi}}
                                             : std::vector<Interval>{{-kInf, kInf}};
  }
  return h;
}

Hypothesis Hypothesis::nothing(GroupKind kind) {
  Hypothesis h;
  h.name_ = "nothing";
  h.kind_ = kind;
  h.pred_ = [](std::span<const double>) { return false; };
  h.intervals_ = std::vector<Interval>{};
  return h;
}

Hypothesis Hypothesis::point(double value, GroupKind kind) {
  return intervals({{value, value}}, kind);
}

Hypothesis Hypothesis::intervals(std::vector<Interval> intervals, GroupKind kind) {
  for (const auto& iv : intervals) {
    if (!(iv.lo <= iv.hi)) throw PreconditionError("interval hypothesis needs lo <= hi");
  }
  Hypothesis h;
  h.name_ = "intervals";
  h.kind_ = kind;
  auto set = kind == GroupKind::Circle ? canonical_arcs(intervals) : normalize_intervals(std::move(intervals));
  h.pred_ = [set, kind](std::span<const double> theta) {
    const double v = kind == GroupKind::Circle ? wrap_angle(theta[0]) : theta[0];
    return in_intervals(set, v) || (kind == GroupKind::Circle && v == 0.0 && in_intervals(set, kTwoPi));
  };
  h.intervals_ = std::move(set);
  return h;
}

Hypothesis Hypothesis::arc(double from, double to) {
  const double lo = wrap_angle(from);
  double span = wrap_angle(to) - lo;
  if (span < 0.0) span += kTwoPi;
  auto h = intervals({{lo, lo + span}}, GroupKind::Circle);
  h.name_ = "arc";
  return h;
}

Hypothesis Hypothesis::predicate(std::string name, std::size_t dimension, Predicate pred, GroupKind kind) {
  if (!pred) throw PreconditionError("predicate hypothesis needs a callable");
  if (dimension == 0) throw PreconditionError("hypothesis dimension must be at least 1");
  Hypothesis h;
  h.name_ = std::move(name);
  h.dimension_ = dimension;
  h.kind_ = kind;
  h.pred_ = std::move(pred);
  return h;
}

Hypothesis Hypothesis::half_space(std::vector<double> direction, double bound) {
  if (direction.empty() ||
      std::all_of(direction.begin(), direction.end(), [](double c) { return c == 0.0; })) {
    throw PreconditionError("half-space direction must be nonzero");
  }
  Hypothesis h;
  h.name_ = "half-space";
  h.dimension_ = direction.size();
  h.kind_ = GroupKind::Additive;
  h.linear_ = LinearForm{direction, bound};
  h.pred_ = [form = *h.linear_](std::span<const double> theta) { return form.apply(theta) <= form.bound; };
  if (direction.size() == 1) {
    const double edge = bound / direction[0];
    h.intervals_ = direction[0] > 0.0 ? std::vector<Interval>{{-kInf, edge}}
                                      : std::vector<Interval>{{edge, kInf}};
  }
  return h;
}

bool Hypothesis::contains(std::span<const double> theta) const {
  if (theta.size() != dimension_) {
    throw InputShapeError("hypothesis of dimension " + std::to_string(dimension_) +
                          " evaluated at a point of dimension " + std::to_string(theta.size()));
  }
  return pred_(theta);
}

Hypothesis Hypothesis::complement() const {
  Hypothesis h;
  h.name_ = "not(" + name_ + ")";
  h.dimension_ = dimension_;
  h.kind_ = kind_;
  h.pred_ = [pred = pred_](std::span<const double> theta) { return !pred(theta); };
  if (intervals_) h.intervals_ = complement_closure(*intervals_, kind_);
  return h;
}

}  // namespace imfid
