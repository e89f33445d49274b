#include "imfid/model.hpp"

#include <algorithm>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "imfid/error.hpp"

namespace imfid {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double uniform01(Engine& engine) { return std::uniform_real_distribution<double>{0.0, 1.0}(engine); }

}  // namespace

std::string_view to_string(PivotScaling scaling) noexcept {
  return scaling == PivotScaling::MeanResultant ? "mean" : "total";
}

double log_bessel_i0(double x) {
  x = std::abs(x);
  if (x < 500.0) return std::log(boost::math::cyl_bessel_i(0, x));
  // Hankel expansion; relative error below 1e-12 for x >= 500.
  const double t = 1.0 / (8.0 * x);
  const double series = 1.0 + t * (1.0 + t * (4.5 + t * (37.5 + t * 459.375)));
  return x - 0.5 * std::log(2.0 * std::numbers::pi * x) + std::log(series);
}

double sample_von_mises(Engine& engine, double concentration) {
  if (concentration < 1e-8) return uniform01(engine) * kTwoPi - std::numbers::pi;
  const double kappa = concentration;
  const double tau = 1.0 + std::sqrt(1.0 + 4.0 * kappa * kappa);
  const double rho = (tau - std::sqrt(2.0 * tau)) / (2.0 * kappa);
  const double r = (1.0 + rho * rho) / (2.0 * rho);
  for (;;) {
    const double u1 = uniform01(engine);
    const double u2 = uniform01(engine);
    const double u3 = uniform01(engine);
    const double z = std::cos(std::numbers::pi * u1);
    const double f = (1.0 + r * z) / (r + z);
    const double c = kappa * (r - f);
    if (c * (2.0 - c) - u2 > 0.0 || std::log(c / u2) + 1.0 - c >= 0.0) {
      const double angle = std::acos(std::clamp(f, -1.0, 1.0));
      const double h = u3 > 0.5 ? angle : -angle;
      return h >= std::numbers::pi ? h - kTwoPi : h;
    }
  }
}

// ---------------------------------------------------------------------------
// PivotLaw

PivotLaw PivotLaw::normal(double sd) {
  if (!(sd > 0.0)) throw PreconditionError("pivot standard deviation must be positive");
  return PivotLaw{Family::Normal, sd};
}

PivotLaw PivotLaw::von_mises(double concentration) {
  if (!(concentration > 0.0)) throw DegenerateOrbitError("von Mises pivot concentration must be positive");
  return PivotLaw{Family::VonMises, concentration};
}

double PivotLaw::sample(Engine& engine) const {
  if (family_ == Family::Normal) return std::normal_distribution<double>{0.0, scale_}(engine);
  return sample_von_mises(engine, scale_);
}

void PivotLaw::sample(Engine& engine, std::span<double> out) const {
  if (family_ == Family::Normal) {
    std::normal_distribution<double> normal{0.0, scale_};
    for (double& v : out) v = normal(engine);
    return;
  }
  for (double& v : out) v = sample_von_mises(engine, scale_);
}

double PivotLaw::density(double h) const {
  if (family_ == Family::Normal) {
    const double z = h / scale_;
    return std::exp(-0.5 * z * z) / (scale_ * std::sqrt(2.0 * std::numbers::pi));
  }
  return std::exp(scale_ * std::cos(h) - log_bessel_i0(scale_)) / kTwoPi;
}

double PivotLaw::central_mass(double q) const {
  if (q <= 0.0) return 0.0;
  if (family_ == Family::Normal) {
    return std::erf(q / (scale_ * std::numbers::sqrt2));
  }
  if (q >= std::numbers::pi) return 1.0;
  // Integrate exp{c (cos h - 1)} to avoid overflow, then rescale.
  const double c = scale_;
  const double log_norm = log_bessel_i0(c) - c;
  auto integrand = [c](double h) { return std::exp(c * (std::cos(h) - 1.0)); };
  const double half = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, 0.0, q, 15, 1e-13);
  return std::min(1.0, 2.0 * half * std::exp(-log_norm) / kTwoPi);
}

double PivotLaw::central_quantile(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("central_quantile: p must lie in [0,1]");
  if (family_ == Family::Normal) {
    if (p >= 1.0) return std::numeric_limits<double>::infinity();
    const boost::math::normal_distribution<double> normal{0.0, scale_};
    return boost::math::quantile(normal, 0.5 + 0.5 * p);
  }
  double lo = 0.0;
  double hi = std::numbers::pi;
  for (int i = 0; i < 200 && hi - lo > 1e-14; ++i) {
    const double mid = 0.5 * (lo + hi);
    (central_mass(mid) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// ---------------------------------------------------------------------------
// Model

Model::Model(ModelParams params, std::size_t n) : params_(params), n_(n) {
  if (n_ == 0) throw PreconditionError("sample size must be at least 1");
}

Model Model::gaussian_location(double sigma, std::size_t n) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw PreconditionError("sigma must be positive");
  return Model{GaussianLocation{sigma}, n};
}

Model Model::von_mises(double kappa, std::size_t n, PivotScaling scaling) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) throw PreconditionError("kappa must be positive");
  return Model{VonMisesRotation{kappa, scaling}, n};
}

std::string_view Model::id() const noexcept {
  return is_von_mises() ? "vonmises" : "gaussian-location";
}

Group Model::group() const noexcept {
  return Group{is_von_mises() ? GroupKind::Circle : GroupKind::Additive};
}

Model Model::with_sample_size(std::size_t n) const { return Model{params_, n}; }

void Model::check_length(std::span<const double> x) const {
  if (x.size() != n_) {
    throw InputShapeError("data has " + std::to_string(x.size()) + " observations, model expects " +
                          std::to_string(n_));
  }
}

double Model::log_density(std::span<const double> x, GroupElement theta) const {
  check_length(x);
  return std::visit(
      Overloaded{
          [&](const GaussianLocation& p) {
            const double norm = -0.5 * std::log(2.0 * std::numbers::pi * p.sigma * p.sigma);
            double sum = 0.0;
            for (double xi : x) {
              const double z = (xi - theta.value) / p.sigma;
              sum += norm - 0.5 * z * z;
            }
            return sum;
          },
          [&](const VonMisesRotation& p) {
            const double norm = -std::log(kTwoPi) - log_bessel_i0(p.kappa);
            double sum = 0.0;
            for (double xi : x) sum += norm + p.kappa * std::cos(xi - theta.value);
            return sum;
          }},
      params_);
}

std::vector<double> Model::act(GroupElement g, std::span<const double> x) const {
  check_length(x);
  const Group grp = group();
  std::vector<double> out(x.size());
  std::transform(x.begin(), x.end(), out.begin(),
                 [&](double xi) { return grp.compose(g, {xi}).value; });
  return out;
}

OrbitCoords Model::decompose(std::span<const double> x) const {
  check_length(x);
  if (!is_von_mises()) {
    const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
    OrbitLabel residuals(x.size());
    std::transform(x.begin(), x.end(), residuals.begin(), [mean](double xi) { return xi - mean; });
    return {{mean}, std::move(residuals)};
  }
  double c = 0.0;
  double s = 0.0;
  for (double xi : x) {
    c += std::cos(xi);
    s += std::sin(xi);
  }
  c /= static_cast<double>(x.size());
  s /= static_cast<double>(x.size());
  const double resultant = std::hypot(c, s);
  if (resultant < kDegenerateResultant) {
    throw DegenerateOrbitError("von Mises data has zero resultant length; mean direction undefined");
  }
  return {{wrap_angle(std::atan2(s, c))}, {resultant}};
}

std::vector<double> Model::reduce(std::span<const double> x) const {
  check_length(x);
  if (!is_von_mises()) return {x.begin(), x.end()};
  double c = 0.0;
  double s = 0.0;
  for (double xi : x) {
    c += std::cos(xi);
    s += std::sin(xi);
  }
  return {c / static_cast<double>(x.size()), s / static_cast<double>(x.size())};
}

std::vector<double> Model::recompose(const OrbitCoords& coords) const {
  if (!is_von_mises()) {
    std::vector<double> x(coords.label.size());
    std::transform(coords.label.begin(), coords.label.end(), x.begin(),
                   [&](double r) { return coords.position.value + r; });
    return x;
  }
  const double u = coords.label.at(0);
  return {u * std::cos(coords.position.value), u * std::sin(coords.position.value)};
}

GroupElement Model::mle(std::span<const double> x) const { return decompose(x).position; }

std::vector<double> Model::sample_data(GroupElement theta, std::size_t n, Seed seed) const {
  if (n == 0) throw PreconditionError("sample_data: n must be at least 1");
  std::vector<double> out(n);
  Engine engine = make_engine(seed);
  sample_data(engine, theta, out);
  return out;
}

void Model::sample_data(Engine& engine, GroupElement theta, std::span<double> out) const {
  std::visit(Overloaded{[&](const GaussianLocation& p) {
                          std::normal_distribution<double> normal{theta.value, p.sigma};
                          for (double& v : out) v = normal(engine);
                        },
                        [&](const VonMisesRotation& p) {
                          for (double& v : out) v = wrap_angle(theta.value + sample_von_mises(engine, p.kappa));
                        }},
             params_);
}

PivotLaw Model::pivot_law(const OrbitLabel& label) const {
  return std::visit(
      Overloaded{[&](const GaussianLocation& p) {
                   return PivotLaw::normal(p.sigma / std::sqrt(static_cast<double>(n_)));
                 },
                 [&](const VonMisesRotation& p) {
                   if (label.size() != 1 || !(label[0] >= kDegenerateResultant)) {
                     throw DegenerateOrbitError("von Mises orbit label must be a positive resultant length");
                   }
                   double conc = p.kappa * label[0];
                   if (p.scaling == PivotScaling::TotalResultant) conc *= static_cast<double>(n_);
                   return PivotLaw::von_mises(conc);
                 }},
      params_);
}

double Model::log_relative_likelihood(GroupElement h, const OrbitLabel& label) const {
  return std::visit(
      Overloaded{[&](const GaussianLocation& p) {
                   const double z = h.value / p.sigma;
                   return -0.5 * static_cast<double>(n_) * z * z;
                 },
                 [&](const VonMisesRotation& p) {
                   if (label.size() != 1 || !(label[0] >= kDegenerateResultant)) {
                     throw DegenerateOrbitError("von Mises orbit label must be a positive resultant length");
                   }
                   return p.kappa * static_cast<double>(n_) * label[0] * (std::cos(h.value) - 1.0);
                 }},
      params_);
}

std::vector<GroupElement> Model::sample_pivot_given_u(const OrbitLabel& label, std::size_t m,
                                                      Seed seed) const {
  if (m == 0) throw PreconditionError("sample_pivot_given_u: m must be at least 1");
  const PivotLaw law = pivot_law(label);
  const Group grp = group();
  Engine engine = make_engine(seed);
  std::vector<double> raw(m);
  law.sample(engine, raw);
  std::vector<GroupElement> draws(m);
  std::transform(raw.begin(), raw.end(), draws.begin(), [&](double h) { return grp.canonical(h); });
  return draws;
}

}  // namespace imfid
