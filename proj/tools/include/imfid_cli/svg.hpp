#pragma once

#include <filesystem>
#include <span>
#include <string>

namespace imfid::cli {

struct PlotLabels {
  std::string title;
  std::string x;
  std::string y;
};

// Single polyline plot.
void write_line_svg(const std::filesystem::path& path, std::span<const double> xs, std::span<const double> ys,
                    const PlotLabels& labels);

// Normalised histogram of `samples` with an optional density curve overlaid.
void write_histogram_svg(const std::filesystem::path& path, std::span<const double> samples, std::size_t bins,
                         std::span<const double> curve_x, std::span<const double> curve_y,
                         const PlotLabels& labels);

}  // namespace imfid::cli
