#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "imfid/group.hpp"
#include "imfid/rng.hpp"

namespace imfid {

// Which resultant length scales the von Mises conditional pivot law.
//
// MeanResultant uses concentration kappa * u with u the mean resultant length,
// the form the roulette figures are drawn with. TotalResultant uses
// kappa * n * u, which is what conditioning the joint density of n iid angles
// on U = u actually gives. Both yield valid contours; the mean form is more
// diffuse than the true conditional law and therefore conservative.
enum class PivotScaling { MeanResultant, TotalResultant };

std::string_view to_string(PivotScaling scaling) noexcept;

struct GaussianLocation {
  double sigma = 1.0;
};

struct VonMisesRotation {
  double kappa = 1.0;
  PivotScaling scaling = PivotScaling::MeanResultant;
};

using ModelParams = std::variant<GaussianLocation, VonMisesRotation>;

// Orbit label: residuals x - mean for the location model, the single mean
// resultant length for the von Mises model.
using OrbitLabel = std::vector<double>;

// Position-orbit coordinates t(x) = (g, u).
struct OrbitCoords {
  GroupElement position;
  OrbitLabel label;
};

// Conditional law of the pivot H = theta^{-1} o G given U = u. Both shipped
// laws are symmetric about the identity and unimodal, so the relative
// likelihood ordering of pivot values is the ordering by |H|.
class PivotLaw {
 public:
  enum class Family { Normal, VonMises };

  static PivotLaw normal(double sd);
  static PivotLaw von_mises(double concentration);

  Family family() const noexcept { return family_; }
  // Standard deviation (Normal) or concentration (VonMises).
  double scale() const noexcept { return scale_; }

  double sample(Engine& engine) const;
  void sample(Engine& engine, std::span<double> out) const;
  double density(double h) const;
  // P(|H| <= q).
  double central_mass(double q) const;
  // q such that P(|H| <= q) = p.
  double central_quantile(double p) const;

 private:
  PivotLaw(Family family, double scale) : family_(family), scale_(scale) {}

  Family family_;
  double scale_;
};

// Draws one von Mises(0, concentration) variate in [-pi, pi) (Best-Fisher).
double sample_von_mises(Engine& engine, double concentration);

// log I0(x) for x >= 0, stable for large arguments.
double log_bessel_i0(double x);

// An invariant statistical model with T = G = Gbar. Immutable.
class Model {
 public:
  static Model gaussian_location(double sigma, std::size_t n);
  static Model von_mises(double kappa, std::size_t n,
                         PivotScaling scaling = PivotScaling::MeanResultant);

  std::string_view id() const noexcept;
  std::size_t sample_size() const noexcept { return n_; }
  Group group() const noexcept;
  const ModelParams& params() const noexcept { return params_; }
  bool is_von_mises() const noexcept {
    return std::holds_alternative<VonMisesRotation>(params_);
  }

  // Same model for a different sample size.
  Model with_sample_size(std::size_t n) const;

  // Joint log density of the n observations under p_theta.
  double log_density(std::span<const double> x, GroupElement theta) const;

  std::vector<double> act(GroupElement g, std::span<const double> x) const;

  OrbitCoords decompose(std::span<const double> x) const;

  // The data in the coordinates t is a bijection of: the observations for the
  // location model, the sufficient statistic (mean cos, mean sin) for von Mises.
  std::vector<double> reduce(std::span<const double> x) const;
  std::vector<double> recompose(const OrbitCoords& coords) const;

  GroupElement mle(std::span<const double> x) const;

  std::vector<double> sample_data(GroupElement theta, std::size_t n, Seed seed) const;
  void sample_data(Engine& engine, GroupElement theta, std::span<double> out) const;

  PivotLaw pivot_law(const OrbitLabel& label) const;

  // log f(h, u) normalised to 0 at h = identity; equals log R(x, theta) for
  // h = theta^{-1} o g.
  double log_relative_likelihood(GroupElement h, const OrbitLabel& label) const;

  std::vector<GroupElement> sample_pivot_given_u(const OrbitLabel& label, std::size_t m,
                                                 Seed seed) const;

 private:
  Model(ModelParams params, std::size_t n);
  void check_length(std::span<const double> x) const;

  ModelParams params_;
  std::size_t n_;
};

// Mean resultant length below which the orbit position is undefined.
inline constexpr double kDegenerateResultant = 1e-12;

}  // namespace imfid
