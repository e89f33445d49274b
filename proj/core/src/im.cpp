#include "imfid/im.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "imfid/error.hpp"
#include "imfid/parallel.hpp"

namespace imfid {

namespace {

// Sorted log f(H_j, u) over the pivot sample.
std::vector<double> sorted_pivot_scores(const Model& model, const OrbitLabel& label, std::size_t m,
                                        Seed seed) {
  const auto pivots = model.sample_pivot_given_u(label, m, seed);
  std::vector<double> scores(pivots.size());
  std::transform(pivots.begin(), pivots.end(), scores.begin(),
                 [&](GroupElement h) { return model.log_relative_likelihood(h, label); });
  std::sort(scores.begin(), scores.end());
  return scores;
}

std::size_t count_at_most(const std::vector<double>& sorted, double bound) {
  return static_cast<std::size_t>(std::upper_bound(sorted.begin(), sorted.end(), bound) - sorted.begin());
}

double observed_score(const Model& model, const OrbitCoords& coords, GroupElement theta) {
  const Group group = model.group();
  const GroupElement h = group.compose(group.invert(theta), coords.position);
  return model.log_relative_likelihood(h, coords.label);
}

void check_draws(std::size_t m) {
  if (m < kMinContourDraws) {
    throw PreconditionError("contour needs at least " + std::to_string(kMinContourDraws) + " pivot draws");
  }
}

double crossing(double a, double va, double b, double vb, double level) {
  if (vb == va) return a;
  return a + (level - va) / (vb - va) * (b - a);
}

}  // namespace

double relative_likelihood(const Model& model, std::span<const double> x, GroupElement theta) {
  const OrbitCoords coords = model.decompose(x);
  return std::exp(observed_score(model, coords, model.group().canonical(theta.value)));
}

Estimate contour_at(const Model& model, std::span<const double> x, GroupElement theta, std::size_t m,
                    Seed seed) {
  check_draws(m);
  const OrbitCoords coords = model.decompose(x);
  const auto pivots = model.sample_pivot_given_u(coords.label, m, seed);
  const double bound = observed_score(model, coords, theta);
  std::size_t hits = 0;
  for (GroupElement h : pivots) hits += model.log_relative_likelihood(h, coords.label) <= bound;
  return binomial_estimate(hits, m);
}

Contour contour_grid(const Model& model, std::span<const double> x, std::span<const double> grid,
                     std::size_t m, Seed seed) {
  check_draws(m);
  if (grid.empty()) throw PreconditionError("contour grid must be nonempty");
  const OrbitCoords coords = model.decompose(x);
  const auto scores = sorted_pivot_scores(model, coords.label, m, seed);
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double bound = observed_score(model, coords, {grid[i]});
    values[i] = static_cast<double>(count_at_most(scores, bound)) / static_cast<double>(m);
  }
  ContourMeta meta{std::string(model.id()), coords.position, coords.label, m, seed, {}};
  return Contour{model.group(), {grid.begin(), grid.end()}, std::move(values), std::move(meta)};
}

std::vector<double> make_grid(double start, double stop, double step) {
  if (!(step > 0.0)) throw PreconditionError("grid step must be positive");
  if (!(stop >= start)) throw PreconditionError("grid stop must not precede start");
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 0.5)) + 1;
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) grid[i] = start + static_cast<double>(i) * step;
  return grid;
}

double upper_prob(const Contour& contour, const Hypothesis& hypothesis) {
  if (hypothesis.dimension() != 1) throw PreconditionError("upper_prob needs a scalar hypothesis");
  if (hypothesis.is_empty()) throw PreconditionError("upper_prob of an empty hypothesis");

  const auto& grid = contour.grid();
  const auto& values = contour.values();
  double sup = -1.0;

  if (const auto& set = hypothesis.closed_form()) {
    const bool circle = contour.group().is_circle();
    for (const Interval& iv : *set) {
      double lo = iv.lo;
      double hi = iv.hi;
      if (!circle) {
        lo = std::max(lo, contour.span_lo());
        hi = std::min(hi, contour.span_hi());
        if (lo > hi) continue;
      }
      sup = std::max({sup, *contour.try_value_at(lo), *contour.try_value_at(hi)});
      const auto first = std::upper_bound(grid.begin(), grid.end(), lo);
      const auto last = std::lower_bound(grid.begin(), grid.end(), hi);
      for (auto it = first; it < last; ++it) sup = std::max(sup, values[static_cast<std::size_t>(it - grid.begin())]);
    }
  } else {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (hypothesis.contains(grid[i])) sup = std::max(sup, values[i]);
    }
  }
  if (sup < 0.0) {
    spdlog::warn("hypothesis '{}' does not meet the contour grid span; upper probability set to 0",
                 hypothesis.name());
    return 0.0;
  }
  return sup;
}

double lower_prob(const Contour& contour, const Hypothesis& hypothesis) {
  if (hypothesis.dimension() != 1) throw PreconditionError("lower_prob needs a scalar hypothesis");
  if (hypothesis.is_empty()) throw PreconditionError("lower_prob of an empty hypothesis");
  const Hypothesis complement = hypothesis.complement();
  if (complement.is_empty()) return 1.0;
  return 1.0 - upper_prob(contour, complement);
}

std::vector<Interval> plausibility_region(const Contour& contour, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw PreconditionError("alpha must lie in (0,1)");
  const auto& grid = contour.grid();
  const auto& values = contour.values();
  const std::size_t n = grid.size();
  std::vector<Interval> region;

  if (!contour.group().is_circle()) {
    std::size_t i = 0;
    while (i < n) {
      if (values[i] < alpha) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j + 1 < n && values[j + 1] >= alpha) ++j;
      const double lo = i == 0 ? grid[0] : crossing(grid[i - 1], values[i - 1], grid[i], values[i], alpha);
      const double hi = j + 1 == n ? grid[j] : crossing(grid[j + 1], values[j + 1], grid[j], values[j], alpha);
      region.push_back({lo, hi});
      i = j + 1;
    }
    return region;
  }

  // Circle: walk the grid cyclically starting just after a point below alpha.
  const auto below = std::find_if(values.begin(), values.end(), [alpha](double v) { return v < alpha; });
  if (below == values.end()) return {{0.0, kTwoPi}};
  const std::size_t start = static_cast<std::size_t>(below - values.begin());
  auto unwrapped = [&](std::size_t k) { return grid[(start + k) % n] + (start + k >= n ? kTwoPi : 0.0); };
  auto value = [&](std::size_t k) { return values[(start + k) % n]; };
  std::vector<Interval> arcs;
  std::size_t k = 1;
  while (k < n) {
    if (value(k) < alpha) {
      ++k;
      continue;
    }
    std::size_t j = k;
    while (j + 1 < n + 1 && value(j + 1) >= alpha) ++j;
    const double lo = crossing(unwrapped(k - 1), value(k - 1), unwrapped(k), value(k), alpha);
    const double hi = crossing(unwrapped(j + 1), value(j + 1), unwrapped(j), value(j), alpha);
    arcs.push_back({lo, hi});
    k = j + 1;
  }
  for (const Interval& a : arcs) {
    const double lo = wrap_angle(a.lo);
    const double hi = lo + a.length();
    if (hi <= kTwoPi) {
      region.push_back({lo, hi});
    } else {
      region.push_back({lo, kTwoPi});
      region.push_back({0.0, hi - kTwoPi});
    }
  }
  return normalize_intervals(std::move(region));
}

Interval region_around(const std::vector<Interval>& region, const Group& group, double center) {
  if (!group.is_circle()) {
    for (const Interval& iv : region) {
      if (iv.contains(center)) return iv;
    }
    throw PreconditionError("no region interval contains the center point");
  }
  std::vector<Interval> arcs = region;
  if (arcs.size() >= 2 && arcs.front().lo == 0.0 && arcs.back().hi == kTwoPi) {
    arcs.front() = {arcs.back().lo - kTwoPi, arcs.front().hi};
    arcs.pop_back();
  }
  const double c = wrap_angle(center);
  for (Interval iv : arcs) {
    for (double shift : {0.0, kTwoPi, -kTwoPi}) {
      if (iv.contains(c + shift)) return {iv.lo - shift + (center - c), iv.hi - shift + (center - c)};
    }
  }
  throw PreconditionError("no region arc contains the center point");
}

ExperimentReport validity_check(const Model& model, GroupElement theta, std::span<const double> alpha_grid,
                                const ValidityOptions& options) {
  if (options.reps < 1'000) throw PreconditionError("validity_check needs at least 1000 replicates");
  check_draws(options.draws);
  for (double a : alpha_grid) {
    if (!(a >= 0.0 && a <= 1.0)) throw PreconditionError("alpha values must lie in [0,1]");
  }
  theta = model.group().canonical(theta.value);

  std::vector<double> pvalues(options.reps);
  parallel_for(options.reps, options.threads, [&](std::size_t r) {
    const auto x = model.sample_data(theta, model.sample_size(), derive_seed(options.seed, r, 0));
    pvalues[r] = contour_at(model, x, theta, options.draws, derive_seed(options.seed, r, 1)).value;
  });

  ExperimentReport report;
  for (double a : alpha_grid) {
    const auto hits = static_cast<std::size_t>(
        std::count_if(pvalues.begin(), pvalues.end(), [a](double p) { return p <= a; }));
    report.rows.push_back(make_row({theta.value}, a, hits, options.reps));
  }
  report.config = {{"experiment", "validity"},
                   {"model", std::string(model.id())},
                   {"theta", fmt::format("{}", theta.value)},
                   {"reps", std::to_string(options.reps)},
                   {"draws", std::to_string(options.draws)},
                   {"seed", std::to_string(options.seed)}};
  report.replicate_values = std::move(pvalues);
  return report;
}

}  // namespace imfid
