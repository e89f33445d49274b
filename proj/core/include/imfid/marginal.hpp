#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "imfid/contour.hpp"
#include "imfid/credal.hpp"
#include "imfid/fiducial.hpp"

namespace imfid {

// Scalar feature phi of the group coordinate, with a grid-based preimage.
class FeatureMap {
 public:
  FeatureMap(std::string name, std::function<double(double)> forward);

  static FeatureMap identity();
  static FeatureMap cosine();
  static FeatureMap sine();
  // Looks up a shipped feature by name ("identity", "cos", "sin").
  static FeatureMap by_name(const std::string& name);

  const std::string& name() const noexcept { return name_; }
  double operator()(double theta) const { return forward_(theta); }

  // phi at each grid point and the matching tolerance: half the largest
  // phi-spacing to a neighbouring grid point (cyclic on the circle).
  struct GridImage {
    std::vector<double> phi;
    std::vector<double> tolerance;
  };
  GridImage image(std::span<const double> grid, bool circular) const;

  // Indices of grid points with |phi(theta_i) - phi0| <= tolerance_i.
  std::vector<std::size_t> preimage(const GridImage& image, double phi0) const;

 private:
  std::string name_;
  std::function<double(double)> forward_;
};

// Extension principle: pi_marg(phi0) = max of pi over the grid preimage of
// phi0. Empty preimages give 0 with a warning.
Contour marginal_contour(const Contour& contour, const FeatureMap& feature, std::span<const double> feature_grid);

struct Histogram {
  double origin = 0.0;
  double bin_width = 0.0;
  std::vector<std::size_t> counts;

  double bin_center(std::size_t k) const { return origin + (static_cast<double>(k) + 0.5) * bin_width; }
};

// Freedman-Diaconis histogram: bin width 2 IQR m^{-1/3}.
Histogram freedman_diaconis_histogram(std::span<const double> values);

struct FeatureDraws {
  std::string feature;
  std::vector<double> values;
  Histogram histogram;
  double mode = 0.0;  // centre of the fullest bin (lowest on ties)
};

FeatureDraws marginal_fiducial(const FiducialDraws& draws, const FeatureMap& feature);

struct MarginalGap {
  MaximalityResult maximality;
  MembershipResult membership;
};

// Calibration of the pushed-forward fiducial draws against the marginal contour.
MarginalGap marginal_maximality_gap(const Contour& marginal, std::span<const double> feature_values,
                                    std::span<const double> alpha_grid);

}  // namespace imfid
