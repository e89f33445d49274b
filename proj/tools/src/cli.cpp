#include "imfid_cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fmt/format.h>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "imfid/imfid.hpp"
#include "imfid_cli/svg.hpp"

namespace imfid::cli {

namespace fs = std::filesystem;

namespace {

// Roulette wheel stopping angles in degrees (n = 9); data/roulette.csv holds
// the same values.
constexpr double kRouletteDegrees[] = {43, 45, 52, 61, 75, 88, 88, 279, 357};

struct RunConfig {
  std::string command;
  std::string model = "vonmises";
  double sigma = 1.0;
  double kappa = 2.0;
  std::string scaling = "mean";
  std::string data_path;
  std::string simulate;
  std::string grid;
  std::size_t draws = kDefaultPivotDraws;
  std::size_t reps = 10'000;
  std::optional<Seed> seed;
  std::string out_dir = ".";
  unsigned threads = 1;
  bool svg = false;

  std::string feature = "cos";
  std::string feature_grid = "-1:1:0.001";
  std::string alphas = "0.01,0.05,0.1,0.25,0.5";
  double theta = 0.0;
  double level = 0.05;
  double side_split = 0.5;
  std::string preset = "ball-2d";
  double budget = 4e9;
};

struct Prepared {
  Model model;
  std::vector<double> x;
  std::vector<double> grid;
  Seed seed;
};

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw PreconditionError("cannot parse number '" + item + "' in list '" + text + "'");
    }
  }
  if (out.empty()) throw PreconditionError("empty list '" + text + "'");
  return out;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(parse_list(item).at(0));
  if (parts.size() != 3) throw PreconditionError("grid must be start:stop:step, got '" + text + "'");
  return make_grid(parts[0], parts[1], parts[2]);
}

Model make_model(const RunConfig& cfg, std::size_t n) {
  if (cfg.model == "gaussian-location") return Model::gaussian_location(cfg.sigma, n);
  if (cfg.model == "vonmises") {
    if (cfg.scaling != "mean" && cfg.scaling != "total") {
      throw PreconditionError("--pivot-scaling must be 'mean' or 'total'");
    }
    return Model::von_mises(cfg.kappa, n,
                            cfg.scaling == "mean" ? PivotScaling::MeanResultant : PivotScaling::TotalResultant);
  }
  throw PreconditionError("unknown model '" + cfg.model + "' (expected gaussian-location or vonmises)");
}

GroupKind model_kind(const RunConfig& cfg) {
  return cfg.model == "vonmises" ? GroupKind::Circle : GroupKind::Additive;
}

Seed require_seed(const RunConfig& cfg) {
  if (!cfg.seed) throw PreconditionError("--seed is required for '" + cfg.command + "'");
  return *cfg.seed;
}

std::vector<double> roulette_radians() {
  std::vector<double> x;
  for (double d : kRouletteDegrees) x.push_back(d * std::numbers::pi / 180.0);
  return x;
}

Prepared prepare(const RunConfig& cfg) {
  const Seed seed = require_seed(cfg);
  std::vector<double> x;
  if (!cfg.data_path.empty() && !cfg.simulate.empty()) throw PreconditionError("use either --data or --simulate");
  if (!cfg.data_path.empty()) {
    x = read_observations(fs::path(cfg.data_path), model_kind(cfg));
  } else if (!cfg.simulate.empty()) {
    std::size_t n = 0;
    double theta = 0.0;
    std::stringstream ss(cfg.simulate);
    std::string kv;
    while (std::getline(ss, kv, ',')) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw PreconditionError("--simulate expects key=value pairs, got '" + kv + "'");
      const std::string key = kv.substr(0, eq);
      const double value = parse_list(kv.substr(eq + 1)).at(0);
      if (key == "n") {
        if (value < 1 || value != std::floor(value)) throw PreconditionError("--simulate n must be a positive integer");
        n = static_cast<std::size_t>(value);
      } else if (key == "theta") {
        theta = value;
      } else {
        throw PreconditionError("unknown --simulate key '" + key + "'");
      }
    }
    if (n == 0) throw PreconditionError("--simulate needs n=<size>");
    const Model sim = make_model(cfg, n);
    x = sim.sample_data(sim.group().canonical(theta), n, derive_seed(seed, 0x5151));
  } else {
    throw PreconditionError("'" + cfg.command + "' needs --data or --simulate");
  }
  Model model = make_model(cfg, x.size());
  std::vector<double> grid;
  if (!cfg.grid.empty()) {
    grid = parse_grid(cfg.grid);
  } else if (model.is_von_mises()) {
    grid = make_grid(0.0, kTwoPi - 1.5 * kDefaultGridStep, kDefaultGridStep);
  } else {
    const double center = model.mle(x).value;
    const double half = 6.0 * cfg.sigma / std::sqrt(static_cast<double>(x.size()));
    grid = make_grid(std::round((center - half) * 100.0) / 100.0, std::round((center + half) * 100.0) / 100.0,
                     kDefaultGridStep);
  }
  return {std::move(model), std::move(x), std::move(grid), seed};
}

fs::path ensure_out_dir(const RunConfig& cfg) {
  fs::path dir(cfg.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw InputError("cannot create output directory " + dir.string());
  return dir;
}

void emit(const fs::path& path, const std::function<void(std::ostream&)>& writer) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  writer(out);
  if (!out) throw InputError("write failed for " + path.string());
}

Sidecar model_sidecar(const RunConfig& cfg, const Prepared& p) {
  Sidecar s{{"command", cfg.command}, {"model", std::string(p.model.id())}};
  if (p.model.is_von_mises()) {
    s.emplace_back("kappa", format_number(cfg.kappa));
    s.emplace_back("pivot_scaling", cfg.scaling);
  } else {
    s.emplace_back("sigma", format_number(cfg.sigma));
  }
  const OrbitCoords coords = p.model.decompose(p.x);
  s.emplace_back("n", std::to_string(p.x.size()));
  s.emplace_back("g", format_number(coords.position.value));
  if (p.model.is_von_mises()) s.emplace_back("u", format_number(coords.label.at(0)));
  s.emplace_back("draws", std::to_string(cfg.draws));
  s.emplace_back("seed", std::to_string(p.seed));
  return s;
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_contour(const RunConfig& cfg, std::ostream& out) {
  const Prepared p = prepare(cfg);
  const fs::path dir = ensure_out_dir(cfg);
  const Contour c = contour_grid(p.model, p.x, p.grid, cfg.draws, p.seed);
  emit(dir / "contour.csv", [&](std::ostream& o) { write_contour_csv(o, c); });
  auto meta = model_sidecar(cfg, p);
  meta.emplace_back("grid", cfg.grid.empty() ? "default" : cfg.grid);
  emit(dir / "contour.meta", [&](std::ostream& o) { write_sidecar(o, meta); });
  if (cfg.svg) {
    write_line_svg(dir / "contour.svg", c.grid(), c.values(), {"IM possibility contour", "theta", "pi"});
  }
  out << fmt::format("mle {:.6f}\npeak theta {:.6f} pi {:.6f}\n", p.model.mle(p.x).value, c.grid()[c.argmax()],
                     c.max_value());
  return kOk;
}

int cmd_fiducial(const RunConfig& cfg, std::ostream& out) {
  const Prepared p = prepare(cfg);
  const fs::path dir = ensure_out_dir(cfg);
  const FiducialDraws draws = fiducial_sample(p.model, p.x, cfg.draws, p.seed);
  const auto values = draws.values();
  emit(dir / "fiducial_draws.csv", [&](std::ostream& o) { write_draws_csv(o, values); });
  emit(dir / "fiducial_draws.meta", [&](std::ostream& o) { write_sidecar(o, model_sidecar(cfg, p)); });
  if (cfg.svg) {
    std::vector<double> dens(p.grid.size());
    for (std::size_t i = 0; i < p.grid.size(); ++i) dens[i] = fiducial_density(p.model, p.x, {p.grid[i]});
    write_histogram_svg(dir / "fiducial.svg", values, 60, p.grid, dens, {"Fiducial distribution", "theta", "density"});
  }
  const Interval hdr = credible_region(p.model, p.x, cfg.level);
  out << fmt::format("position {:.6f}\nhdr {:.0f}% [{:.6f}, {:.6f}]\n", draws.meta.position.value,
                     100.0 * (1.0 - cfg.level), hdr.lo, hdr.hi);
  return kOk;
}

int cmd_maximality(const RunConfig& cfg, std::ostream& out) {
  const Prepared p = prepare(cfg);
  const fs::path dir = ensure_out_dir(cfg);
  const Contour c = contour_grid(p.model, p.x, p.grid, cfg.draws, derive_seed(p.seed, 1));
  const FiducialDraws draws = fiducial_sample(p.model, p.x, cfg.draws, derive_seed(p.seed, 2));
  const auto values = draws.values();
  const auto alpha = default_alpha_grid();
  const MaximalityResult max = maximality_check(c, values, alpha);
  const MembershipResult mem = membership_check(c, values, alpha);
  emit(dir / "calibration.csv", [&](std::ostream& o) { write_calibration_csv(o, max.curve); });
  auto meta = model_sidecar(cfg, p);
  meta.emplace_back("ks", format_number(max.ks));
  meta.emplace_back("band", format_number(max.band));
  emit(dir / "calibration.meta", [&](std::ostream& o) { write_sidecar(o, meta); });
  out << fmt::format("ks {:.6f} band {:.6f}\nverdict {}\nmembership {}\n", max.ks, max.band,
                     max.maximal ? "MAXIMAL" : "NOT-MAXIMAL", mem.member ? "MEMBER" : "NOT-MEMBER");
  return kOk;
}

int cmd_transform(const RunConfig& cfg, std::ostream& out) {
  const Prepared p = prepare(cfg);
  const fs::path dir = ensure_out_dir(cfg);
  const Contour c = contour_grid(p.model, p.x, p.grid, cfg.draws, p.seed);
  const ProbabilityApproximation dist = possibility_to_probability(c, cfg.side_split);
  emit(dir / "transform.csv", [&](std::ostream& o) { write_transform_csv(o, dist); });
  auto meta = model_sidecar(cfg, p);
  meta.emplace_back("side_split", format_number(cfg.side_split));
  emit(dir / "transform.meta", [&](std::ostream& o) { write_sidecar(o, meta); });
  out << fmt::format("mode {:.6f}\n", dist.mode());
  return kOk;
}

struct MarginalOutputs {
  Contour marginal;
  FeatureDraws draws;
  MarginalGap gap;
};

MarginalOutputs run_marginal(const Prepared& p, const RunConfig& cfg) {
  const FeatureMap feature = FeatureMap::by_name(cfg.feature);
  const Contour c = contour_grid(p.model, p.x, p.grid, cfg.draws, derive_seed(p.seed, 1));
  const auto fgrid = parse_grid(cfg.feature_grid);
  Contour marginal = marginal_contour(c, feature, fgrid);
  FeatureDraws fd = marginal_fiducial(fiducial_sample(p.model, p.x, cfg.draws, derive_seed(p.seed, 2)), feature);
  MarginalGap gap = marginal_maximality_gap(marginal, fd.values, default_alpha_grid());
  return {std::move(marginal), std::move(fd), std::move(gap)};
}

int cmd_marginal(const RunConfig& cfg, std::ostream& out) {
  const Prepared p = prepare(cfg);
  const fs::path dir = ensure_out_dir(cfg);
  const auto r = run_marginal(p, cfg);
  emit(dir / "marginal_contour.csv", [&](std::ostream& o) { write_contour_csv(o, r.marginal); });
  emit(dir / "marginal_draws.csv", [&](std::ostream& o) { write_draws_csv(o, r.draws.values); });
  auto meta = model_sidecar(cfg, p);
  meta.emplace_back("feature", cfg.feature);
  meta.emplace_back("feature_grid", cfg.feature_grid);
  meta.emplace_back("fiducial_mode", format_number(r.draws.mode));
  meta.emplace_back("ks", format_number(r.gap.maximality.ks));
  emit(dir / "marginal.meta", [&](std::ostream& o) { write_sidecar(o, meta); });
  if (cfg.svg) {
    write_line_svg(dir / "marginal_contour.svg", r.marginal.grid(), r.marginal.values(),
                   {"Marginal IM possibility contour", cfg.feature, "pi"});
    write_histogram_svg(dir / "marginal_draws.svg", r.draws.values, r.draws.histogram.counts.size(), {}, {},
                        {"Marginal fiducial samples", cfg.feature, "density"});
  }
  out << fmt::format("im peak {:.6f}\nfiducial mode {:.6f}\nks {:.6f} band {:.6f}\nverdict {}\nmembership {}\n",
                     r.marginal.grid()[r.marginal.argmax()], r.draws.mode, r.gap.maximality.ks, r.gap.maximality.band,
                     r.gap.maximality.maximal ? "MAXIMAL" : "NOT-MAXIMAL",
                     r.gap.membership.member ? "MEMBER" : "NOT-MEMBER");
  return kOk;
}

int cmd_validity(const RunConfig& cfg, std::ostream& out) {
  const Seed seed = require_seed(cfg);
  std::size_t n = 0;
  double theta = cfg.theta;
  if (!cfg.simulate.empty()) {
    std::stringstream ss(cfg.simulate);
    std::string kv;
    while (std::getline(ss, kv, ',')) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw PreconditionError("--simulate expects key=value pairs");
      const double v = parse_list(kv.substr(eq + 1)).at(0);
      if (kv.substr(0, eq) == "n") n = static_cast<std::size_t>(v);
      else if (kv.substr(0, eq) == "theta") theta = v;
      else throw PreconditionError("unknown --simulate key '" + kv.substr(0, eq) + "'");
    }
  }
  if (n == 0) throw PreconditionError("validity needs --simulate n=<size>[,theta=<value>]");
  const Model model = make_model(cfg, n);
  const fs::path dir = ensure_out_dir(cfg);
  const auto alphas = parse_list(cfg.alphas);
  const auto report = validity_check(model, model.group().canonical(theta), alphas,
                                     {cfg.reps, cfg.draws, seed, cfg.threads});
  emit(dir / "validity.csv", [&](std::ostream& o) { write_validity_csv(o, report); });
  emit(dir / "validity.meta", [&](std::ostream& o) { write_sidecar(o, report.config); });
  for (const auto& row : report.rows) {
    out << fmt::format("alpha {:.4f} frequency {:.4f} se {:.4f}{}\n", row.alpha, row.estimate, row.std_error,
                       row.flag ? " FLAG" : "");
  }
  return kOk;
}

struct FalseConfPreset {
  ProductModel model;
  Hypothesis hypothesis;
  std::vector<std::vector<double>> thetas;
  bool homomorphism;
};

FalseConfPreset falseconf_preset(const std::string& name) {
  if (name == "ball-2d") {
    return {{Model::gaussian_location(2.0, 1), 2}, ball_hypothesis(2, 1.0), {{0.999, 0.0}}, false};
  }
  if (name == "halfspace-2d") {
    return {{Model::gaussian_location(1.0, 1), 2}, homomorphism_hypothesis({1.0, 0.0}, 0.0), {{0.0, 0.0}, {-2.0, 0.0}},
            true};
  }
  if (name == "halfspace-1d") {
    return {{Model::gaussian_location(1.0, 1), 1}, homomorphism_hypothesis({1.0}, 0.0), {{0.0}, {-1.0}}, true};
  }
  throw PreconditionError("unknown preset '" + name + "' (expected ball-2d, halfspace-2d or halfspace-1d)");
}

ExperimentReport run_falseconf(const FalseConfPreset& preset, std::span<const double> alphas,
                               const FalseConfidenceOptions& options) {
  return preset.homomorphism ? thm2_check(preset.model, preset.hypothesis, preset.thetas, alphas, options)
                             : fc_sweep(preset.model, preset.hypothesis, preset.thetas, alphas, options);
}

int cmd_falseconf(const RunConfig& cfg, std::ostream& out) {
  const Seed seed = require_seed(cfg);
  const auto preset = falseconf_preset(cfg.preset);
  const auto alphas = parse_list(cfg.alphas);
  const fs::path dir = ensure_out_dir(cfg);
  const auto report = run_falseconf(preset, alphas, {cfg.reps, cfg.draws, seed, cfg.threads, cfg.budget});
  emit(dir / "falseconf.csv", [&](std::ostream& o) { write_exceedance_csv(o, report); });
  auto meta = report.config;
  meta.emplace_back("preset", cfg.preset);
  emit(dir / "falseconf.meta", [&](std::ostream& o) { write_sidecar(o, meta); });
  for (const auto& row : report.rows) {
    std::vector<std::string> coords;
    for (double t : row.theta) coords.push_back(fmt::format("{}", t));
    out << fmt::format("theta ({}) alpha {:.4f} exceedance {:.4f} se {:.4f}{}\n", fmt::join(coords, ","), row.alpha,
                       row.estimate, row.std_error, row.flag ? " FLAG" : "");
  }
  return kOk;
}

int cmd_reproduce(const RunConfig& cfg, std::ostream& out) {
  const Seed seed = cfg.seed.value_or(20231015);
  const fs::path dir = ensure_out_dir(cfg);
  constexpr std::size_t kDraws = 100'000;
  constexpr std::size_t kReps = 10'000;
  constexpr std::size_t kInner = 2'000;
  std::vector<std::pair<std::string, std::string>> manifest;
  auto record = [&](const std::string& file, const std::string& what) { manifest.emplace_back(file, what); };

  // Roulette wheel: fiducial and IM output for the mean angle.
  RunConfig rc = cfg;
  rc.command = "reproduce";
  rc.model = "vonmises";
  rc.kappa = 2.0;
  rc.draws = kDraws;
  rc.seed = seed;
  Prepared roulette{make_model(rc, 9), roulette_radians(), make_grid(0.0, 6.28, 0.01), seed};
  if (!cfg.data_path.empty()) roulette.x = read_observations(fs::path(cfg.data_path), GroupKind::Circle);
  roulette.model = make_model(rc, roulette.x.size());

  const Contour contour = contour_grid(roulette.model, roulette.x, roulette.grid, kDraws, derive_seed(seed, 1));
  const FiducialDraws fid = fiducial_sample(roulette.model, roulette.x, kDraws, derive_seed(seed, 2));
  const auto fid_values = fid.values();
  std::vector<double> density(roulette.grid.size());
  for (std::size_t i = 0; i < density.size(); ++i) density[i] = fiducial_density(roulette.model, roulette.x, {roulette.grid[i]});

  emit(dir / "fig2a_fiducial_draws.csv", [&](std::ostream& o) { write_draws_csv(o, fid_values); });
  write_histogram_svg(dir / "fig2a_fiducial.svg", fid_values, 60, roulette.grid, density,
                      {"Fiducial distribution", "theta", "density"});
  record("fig2a_fiducial_draws.csv", "Figure 2(a): fiducial draws for the roulette mean angle");
  record("fig2a_fiducial.svg", "Figure 2(a): fiducial histogram with closed-form density");
  emit(dir / "fig2b_contour.csv", [&](std::ostream& o) { write_contour_csv(o, contour); });
  write_line_svg(dir / "fig2b_contour.svg", contour.grid(), contour.values(), {"IM possibility contour", "theta", "pi"});
  record("fig2b_contour.csv", "Figure 2(b): IM possibility contour for the roulette mean angle");
  record("fig2b_contour.svg", "Figure 2(b): contour plot");

  // Marginalisation to cos(theta).
  const FeatureMap cosine = FeatureMap::cosine();
  const auto fgrid = make_grid(-1.0, 1.0, 0.001);
  const Contour marg = marginal_contour(contour, cosine, fgrid);
  const FeatureDraws marg_draws = marginal_fiducial(fid, cosine);
  const MarginalGap gap = marginal_maximality_gap(marg, marg_draws.values, default_alpha_grid());
  emit(dir / "fig3a_marginal_draws.csv", [&](std::ostream& o) { write_draws_csv(o, marg_draws.values); });
  write_histogram_svg(dir / "fig3a_marginal_draws.svg", marg_draws.values, marg_draws.histogram.counts.size(), {}, {},
                      {"Marginal fiducial samples", "cos theta", "density"});
  emit(dir / "fig3b_marginal_contour.csv", [&](std::ostream& o) { write_contour_csv(o, marg); });
  write_line_svg(dir / "fig3b_marginal_contour.svg", marg.grid(), marg.values(),
                 {"Marginal IM possibility contour", "cos theta", "pi"});
  emit(dir / "fig3.meta", [&](std::ostream& o) {
    write_sidecar(o, {{"feature", "cos"},
                      {"im_peak", format_number(marg.grid()[marg.argmax()])},
                      {"fiducial_mode", format_number(marg_draws.mode)},
                      {"ks", format_number(gap.maximality.ks)},
                      {"band", format_number(gap.maximality.band)},
                      {"member", gap.membership.member ? "1" : "0"}});
  });
  record("fig3a_marginal_draws.csv", "Figure 3(a): marginal fiducial samples of cos(theta)");
  record("fig3a_marginal_draws.svg", "Figure 3(a): marginal fiducial histogram");
  record("fig3b_marginal_contour.csv", "Figure 3(b): marginal IM contour of cos(theta)");
  record("fig3b_marginal_contour.svg", "Figure 3(b): marginal contour plot");
  record("fig3.meta", "Figure 3: modes and marginal maximality gap");

  // Maximality of the fiducial distribution in the credal set.
  const auto alpha = default_alpha_grid();
  const MaximalityResult max_vm = maximality_check(contour, fid_values, alpha);
  emit(dir / "maximality_vonmises.csv", [&](std::ostream& o) { write_calibration_csv(o, max_vm.curve); });
  record("maximality_vonmises.csv", "Fiducial maximality calibration curve, roulette data");
  const Model gauss = Model::gaussian_location(1.0, 5);
  const auto gx = gauss.sample_data({0.0}, 5, derive_seed(seed, 3));
  const double gbar = gauss.mle(gx).value;
  const Contour gcontour =
      contour_grid(gauss, gx, make_grid(std::round((gbar - 3.0) * 100) / 100, std::round((gbar + 3.0) * 100) / 100, 0.01),
                   kDraws, derive_seed(seed, 4));
  const MaximalityResult max_g =
      maximality_check(gcontour, fiducial_sample(gauss, gx, kDraws, derive_seed(seed, 5)).values(), alpha);
  emit(dir / "maximality_gaussian.csv", [&](std::ostream& o) { write_calibration_csv(o, max_g.curve); });
  record("maximality_gaussian.csv", "Fiducial maximality calibration curve, Gaussian location n=5");

  const ProbabilityApproximation approx = possibility_to_probability(contour);
  emit(dir / "transform_vonmises.csv", [&](std::ostream& o) { write_transform_csv(o, approx); });
  record("transform_vonmises.csv", "Maximal probabilistic approximation of the roulette contour");

  // Validity.
  const std::vector<double> alphas{0.01, 0.05, 0.1, 0.25, 0.5};
  const auto val_g = validity_check(gauss, {0.0}, alphas, {kReps, kInner, derive_seed(seed, 6), cfg.threads});
  emit(dir / "validity_gaussian.csv", [&](std::ostream& o) { write_validity_csv(o, val_g); });
  record("validity_gaussian.csv", "Validity of the IM contour, Gaussian location n=5");
  const auto val_vm =
      validity_check(Model::von_mises(2.0, 9), {1.0}, alphas, {kReps, kInner, derive_seed(seed, 7), cfg.threads});
  emit(dir / "validity_vonmises.csv", [&](std::ostream& o) { write_validity_csv(o, val_vm); });
  record("validity_vonmises.csv", "Validity of the IM contour, von Mises kappa=2 n=9");

  // False confidence.
  const FalseConfidenceOptions fc{kReps, kInner, derive_seed(seed, 8), cfg.threads, cfg.budget};
  const auto half = run_falseconf(falseconf_preset("halfspace-2d"), alphas, fc);
  emit(dir / "falseconf_halfspace.csv", [&](std::ostream& o) { write_exceedance_csv(o, half); });
  record("falseconf_halfspace.csv", "Homomorphism (half-space) hypotheses: no false confidence");
  const auto ball = run_falseconf(falseconf_preset("ball-2d"), alphas, fc);
  emit(dir / "falseconf_ball.csv", [&](std::ostream& o) { write_exceedance_csv(o, ball); });
  record("falseconf_ball.csv", "Ball hypothesis: false confidence present");

  emit(dir / "manifest.txt", [&](std::ostream& o) {
    for (const auto& [file, what] : manifest) o << file << " : " << what << '\n';
  });
  out << fmt::format("wrote {} files to {}\n", manifest.size() + 1, dir.string());
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Possibilistic inferential models and fiducial distributions for invariant models", "imfid"};
  app.require_subcommand(1);

  auto add_model = [&](CLI::App* sub) {
    sub->add_option("--model", cfg.model, "gaussian-location or vonmises")->capture_default_str();
    sub->add_option("--sigma", cfg.sigma, "Gaussian scale (known)")->capture_default_str();
    sub->add_option("--kappa", cfg.kappa, "von Mises concentration (known)")->capture_default_str();
    sub->add_option("--pivot-scaling", cfg.scaling, "von Mises pivot concentration: mean (kappa*u) or total (kappa*n*u)")
        ->capture_default_str();
  };
  auto add_data = [&](CLI::App* sub) {
    sub->add_option("--data", cfg.data_path, "CSV file, one observation per line");
    sub->add_option("--simulate", cfg.simulate, "simulate data instead, e.g. n=5,theta=0");
    sub->add_option("--grid", cfg.grid, "parameter grid start:stop:step");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--draws", cfg.draws, "Monte Carlo draws m")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "RNG seed (required)");
    sub->add_option("--out", cfg.out_dir, "output directory")->capture_default_str();
    sub->add_option("--threads", cfg.threads, "worker threads (0 = all cores)")->capture_default_str();
    sub->add_flag("--svg", cfg.svg, "also write SVG plots");
  };

  auto* contour = app.add_subcommand("contour", "IM possibility contour on a grid");
  add_model(contour);
  add_data(contour);
  add_common(contour);

  auto* fiducial = app.add_subcommand("fiducial", "fiducial draws and credible region");
  add_model(fiducial);
  add_data(fiducial);
  add_common(fiducial);
  fiducial->add_option("--alpha", cfg.level, "credible region level alpha")->capture_default_str();

  auto* maximality = app.add_subcommand("maximality", "calibration of fiducial draws against the contour");
  add_model(maximality);
  add_data(maximality);
  add_common(maximality);

  auto* transform = app.add_subcommand("transform", "maximal probabilistic approximation of the contour");
  add_model(transform);
  add_data(transform);
  add_common(transform);
  transform->add_option("--side-split", cfg.side_split, "mass left of the mode")->capture_default_str();

  auto* marginal = app.add_subcommand("marginal", "marginal contour and marginal fiducial for a feature");
  add_model(marginal);
  add_data(marginal);
  add_common(marginal);
  marginal->add_option("--feature", cfg.feature, "identity, cos or sin")->capture_default_str();
  marginal->add_option("--feature-grid", cfg.feature_grid, "feature grid start:stop:step")->capture_default_str();

  auto* validity = app.add_subcommand("validity", "frequency of pi_X(theta) <= alpha over simulated data");
  add_model(validity);
  add_common(validity);
  validity->add_option("--simulate", cfg.simulate, "n=<size>[,theta=<value>]")->required();
  validity->add_option("--theta", cfg.theta, "true parameter");
  validity->add_option("--reps", cfg.reps, "simulated datasets")->capture_default_str();
  validity->add_option("--alphas", cfg.alphas, "comma-separated alpha values")->capture_default_str();

  auto* falseconf = app.add_subcommand("falseconf", "false-confidence exceedance for a preset hypothesis");
  add_common(falseconf);
  falseconf->add_option("--preset", cfg.preset, "ball-2d, halfspace-2d or halfspace-1d")->capture_default_str();
  falseconf->add_option("--reps", cfg.reps, "simulated datasets")->capture_default_str();
  falseconf->add_option("--alphas", cfg.alphas, "comma-separated alpha values")->capture_default_str();
  falseconf->add_option("--budget", cfg.budget, "maximum total fiducial draws")->capture_default_str();

  auto* reproduce = app.add_subcommand("reproduce", "write every figure and check at desk scale");
  reproduce->add_option("--seed", cfg.seed, "base seed (default fixed)");
  reproduce->add_option("--out", cfg.out_dir, "output directory")->capture_default_str();
  reproduce->add_option("--threads", cfg.threads, "worker threads (0 = all cores)")->capture_default_str();
  reproduce->add_option("--data", cfg.data_path, "roulette data override");
  reproduce->add_option("--budget", cfg.budget, "maximum total fiducial draws")->capture_default_str();

  // falseconf defaults differ from the contour default of 1e5 draws.
  falseconf->preparse_callback([&](std::size_t) { cfg.draws = 10'000; });
  validity->preparse_callback([&](std::size_t) { cfg.draws = 5'000; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    if (cfg.command == "contour") return cmd_contour(cfg, out);
    if (cfg.command == "fiducial") return cmd_fiducial(cfg, out);
    if (cfg.command == "maximality") return cmd_maximality(cfg, out);
    if (cfg.command == "transform") return cmd_transform(cfg, out);
    if (cfg.command == "marginal") return cmd_marginal(cfg, out);
    if (cfg.command == "validity") return cmd_validity(cfg, out);
    if (cfg.command == "falseconf") return cmd_falseconf(cfg, out);
    if (cfg.command == "reproduce") return cmd_reproduce(cfg, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kModel;
  }
  err << "error: unknown command\n";
  return kUsage;
}

}  // namespace imfid::cli
