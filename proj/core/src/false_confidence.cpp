#include "imfid/false_confidence.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include "imfid/error.hpp"
#include "imfid/parallel.hpp"

namespace imfid {

Hypothesis homomorphism_hypothesis(std::vector<double> direction, double k, GroupKind kind) {
  if (direction.empty() ||
      std::all_of(direction.begin(), direction.end(), [](double c) { return c == 0.0; })) {
    throw PreconditionError("homomorphism direction must be nonzero");
  }
  if (kind == GroupKind::Additive) return Hypothesis::half_space(std::move(direction), k);
  if (direction.size() != 1 || direction[0] != 1.0) {
    throw PreconditionError("circle-group homomorphism hypotheses support only the identity map");
  }
  if (!(k >= 0.0 && k < kTwoPi)) throw PreconditionError("circle-group bound must lie in [0, 2pi)");
  return Hypothesis::intervals({{0.0, k}}, GroupKind::Circle);
}

Hypothesis ball_hypothesis(std::size_t dimension, double radius) {
  if (!(radius > 0.0)) throw PreconditionError("ball radius must be positive");
  return Hypothesis::predicate(fmt::format("ball(r={})", radius), dimension,
                               [r2 = radius * radius](std::span<const double> theta) {
                                 double s = 0.0;
                                 for (double t : theta) s += t * t;
                                 return s <= r2;
                               });
}

ExperimentReport fc_sweep(const ProductModel& model, const Hypothesis& hypothesis,
                          std::span<const std::vector<double>> theta_list, std::span<const double> alpha_grid,
                          const FalseConfidenceOptions& options) {
  const std::size_t dim = model.dimension;
  if (dim == 0) throw PreconditionError("product model dimension must be at least 1");
  if (hypothesis.dimension() != dim) throw PreconditionError("hypothesis and model dimensions differ");
  if (theta_list.empty()) throw PreconditionError("fc_sweep needs at least one theta");
  if (options.reps == 0 || options.draws == 0) throw PreconditionError("reps and draws must be positive");
  for (double a : alpha_grid) {
    if (!(a >= 0.0 && a <= 1.0)) throw PreconditionError("alpha values must lie in [0,1]");
  }
  const double cost = static_cast<double>(options.reps) * static_cast<double>(options.draws) *
                      static_cast<double>(dim) * static_cast<double>(theta_list.size());
  if (cost > options.budget) {
    throw BudgetError(fmt::format("fc_sweep needs {:.3g} draws, budget is {:.3g}", cost, options.budget));
  }
  for (const auto& theta : theta_list) {
    if (theta.size() != dim) throw InputShapeError("theta has the wrong dimension");
    if (!hypothesis.contains(theta)) {
      throw PreconditionError(
          fmt::format("theta ({}) is not in the hypothesis; false confidence concerns true hypotheses only",
                      fmt::join(theta, ", ")));
    }
  }

  const Model& comp = model.component;
  const Group group = comp.group();
  const std::size_t n = comp.sample_size();
  ExperimentReport report;

  for (std::size_t t = 0; t < theta_list.size(); ++t) {
    const auto& theta = theta_list[t];
    std::vector<double> q_values(options.reps);
    parallel_for(options.reps, options.threads, [&](std::size_t r) {
      const Seed rep_seed = derive_seed(options.seed, t, r);
      std::vector<GroupElement> position(dim);
      std::vector<PivotLaw> laws;
      laws.reserve(dim);
      std::vector<double> data(n);
      for (std::size_t d = 0; d < dim; ++d) {
        Engine data_engine = make_engine(derive_seed(rep_seed, 0, d));
        comp.sample_data(data_engine, group.canonical(theta[d]), data);
        OrbitCoords coords = comp.decompose(data);
        position[d] = coords.position;
        laws.push_back(comp.pivot_law(coords.label));
      }
      std::vector<std::vector<double>> pivots(dim, std::vector<double>(options.draws));
      for (std::size_t d = 0; d < dim; ++d) {
        Engine engine = make_engine(derive_seed(rep_seed, 1, d));
        laws[d].sample(engine, pivots[d]);
      }
      std::vector<double> point(dim);
      std::size_t hits = 0;
      for (std::size_t j = 0; j < options.draws; ++j) {
        for (std::size_t d = 0; d < dim; ++d) {
          point[d] = group.compose(position[d], group.invert(group.canonical(pivots[d][j]))).value;
        }
        hits += hypothesis.contains(point);
      }
      q_values[r] = static_cast<double>(hits) / static_cast<double>(options.draws);
    });
    for (double a : alpha_grid) {
      const auto hits = static_cast<std::size_t>(
          std::count_if(q_values.begin(), q_values.end(), [a](double q) { return q <= a; }));
      report.rows.push_back(make_row(theta, a, hits, options.reps));
    }
    if (t == 0) report.replicate_values = std::move(q_values);
  }

  std::vector<std::string> thetas;
  for (const auto& theta : theta_list) thetas.push_back(fmt::format("{}", fmt::join(theta, ";")));
  report.config = {{"experiment", "false-confidence"},
                   {"model", std::string(comp.id())},
                   {"dimension", std::to_string(dim)},
                   {"hypothesis", hypothesis.name()},
                   {"theta", fmt::format("{}", fmt::join(thetas, " "))},
                   {"reps", std::to_string(options.reps)},
                   {"draws", std::to_string(options.draws)},
                   {"seed", std::to_string(options.seed)}};
  return report;
}

ExperimentReport thm2_check(const ProductModel& model, const Hypothesis& hypothesis,
                            std::span<const std::vector<double>> theta_list, std::span<const double> alpha_grid,
                            const FalseConfidenceOptions& options) {
  const bool circular_identity = hypothesis.kind() == GroupKind::Circle && hypothesis.closed_form().has_value();
  if (!hypothesis.linear_form() && !circular_identity) {
    throw PreconditionError("thm2_check needs a homomorphism hypothesis");
  }
  auto report = fc_sweep(model, hypothesis, theta_list, alpha_grid, options);
  report.config.front().second = "homomorphism-check";
  return report;
}

}  // namespace imfid
