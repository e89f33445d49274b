#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "imfid/contour.hpp"
#include "imfid/credal.hpp"
#include "imfid/fiducial.hpp"
#include "imfid/group.hpp"
#include "imfid/report.hpp"

namespace imfid {

// Reads one observation per line. For circle models an optional first line
// `angle_deg` or `angle_rad` selects the unit (degrees are converted to
// radians); without a header values are taken in radians. For additive models
// a non-numeric first line is treated as a column name. Blank lines are
// skipped. Throws InputError on malformed input.
std::vector<double> read_observations(std::istream& in, GroupKind kind);
std::vector<double> read_observations(const std::filesystem::path& path, GroupKind kind);

// Numbers are written with 17 significant digits.
std::string format_number(double v);

void write_contour_csv(std::ostream& out, const Contour& contour);                  // theta,pi
void write_draws_csv(std::ostream& out, std::span<const double> draws);             // draw
void write_validity_csv(std::ostream& out, const ExperimentReport& report);         // alpha,frequency,stderr,flag
void write_exceedance_csv(std::ostream& out, const ExperimentReport& report);       // theta,alpha,exceedance,stderr,flag
void write_calibration_csv(std::ostream& out, const CalibrationCurve& curve);       // alpha,F,stderr
void write_transform_csv(std::ostream& out, const ProbabilityApproximation& dist);  // theta,cdf

using Sidecar = std::vector<std::pair<std::string, std::string>>;
void write_sidecar(std::ostream& out, const Sidecar& entries);

}  // namespace imfid
