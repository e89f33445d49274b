#include "imfid_cli/svg.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <fstream>
#include <vector>

#include "imfid/error.hpp"

namespace imfid::cli {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 400.0;
constexpr double kMargin = 50.0;

struct Frame {
  double x0, x1, y0, y1;

  double px(double x) const { return kMargin + (x - x0) / (x1 - x0) * (kWidth - 2 * kMargin); }
  double py(double y) const { return kHeight - kMargin - (y - y0) / (y1 - y0) * (kHeight - 2 * kMargin); }
};

std::ofstream open_svg(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << fmt::format(R"(<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" font-family="sans-serif" font-size="12">)",
                     kWidth, kHeight)
      << '\n';
  return out;
}

void axes(std::ofstream& out, const Frame& f, const PlotLabels& labels) {
  out << fmt::format(R"(<rect x="{}" y="{}" width="{}" height="{}" fill="none" stroke="black"/>)", kMargin, kMargin,
                     kWidth - 2 * kMargin, kHeight - 2 * kMargin)
      << '\n';
  out << fmt::format(R"(<text x="{}" y="20" text-anchor="middle">{}</text>)", kWidth / 2, labels.title) << '\n';
  out << fmt::format(R"(<text x="{}" y="{}" text-anchor="middle">{}</text>)", kWidth / 2, kHeight - 10, labels.x)
      << '\n';
  out << fmt::format(R"svg(<text x="15" y="{}" transform="rotate(-90 15 {})" text-anchor="middle">{}</text>)svg",
                     kHeight / 2, kHeight / 2, labels.y)
      << '\n';
  for (int k = 0; k <= 4; ++k) {
    const double xv = f.x0 + (f.x1 - f.x0) * k / 4.0;
    const double yv = f.y0 + (f.y1 - f.y0) * k / 4.0;
    out << fmt::format(R"(<text x="{:.1f}" y="{}" text-anchor="middle">{:.3g}</text>)", f.px(xv),
                       kHeight - kMargin + 15, xv)
        << '\n';
    out << fmt::format(R"(<text x="{}" y="{:.1f}" text-anchor="end">{:.3g}</text>)", kMargin - 4, f.py(yv) + 4, yv)
        << '\n';
  }
}

void polyline(std::ofstream& out, const Frame& f, std::span<const double> xs, std::span<const double> ys,
              const char* colour) {
  out << R"(<polyline fill="none" stroke=")" << colour << R"(" stroke-width="1.5" points=")";
  for (std::size_t i = 0; i < xs.size(); ++i) out << fmt::format("{:.2f},{:.2f} ", f.px(xs[i]), f.py(ys[i]));
  out << "\"/>\n";
}

}  // namespace

void write_line_svg(const std::filesystem::path& path, std::span<const double> xs, std::span<const double> ys,
                    const PlotLabels& labels) {
  if (xs.empty() || xs.size() != ys.size()) throw PreconditionError("plot needs matching nonempty series");
  const auto [xmin, xmax] = std::minmax_element(xs.begin(), xs.end());
  const double ymax = std::max(*std::max_element(ys.begin(), ys.end()), 1e-12);
  const Frame f{*xmin, *xmax > *xmin ? *xmax : *xmin + 1.0, 0.0, ymax * 1.05};
  auto out = open_svg(path);
  axes(out, f, labels);
  polyline(out, f, xs, ys, "black");
  out << "</svg>\n";
}

void write_histogram_svg(const std::filesystem::path& path, std::span<const double> samples, std::size_t bins,
                         std::span<const double> curve_x, std::span<const double> curve_y,
                         const PlotLabels& labels) {
  if (samples.empty() || bins == 0) throw PreconditionError("histogram needs samples and bins");
  const auto [smin, smax] = std::minmax_element(samples.begin(), samples.end());
  const double lo = *smin;
  const double width = (*smax > lo ? *smax - lo : 1.0) / static_cast<double>(bins);
  std::vector<double> density(bins, 0.0);
  for (double s : samples) {
    auto k = static_cast<std::size_t>((s - lo) / width);
    density[std::min(k, bins - 1)] += 1.0;
  }
  for (double& d : density) d /= static_cast<double>(samples.size()) * width;
  double ymax = *std::max_element(density.begin(), density.end());
  if (!curve_y.empty()) ymax = std::max(ymax, *std::max_element(curve_y.begin(), curve_y.end()));
  double x0 = lo;
  double x1 = lo + width * static_cast<double>(bins);
  if (!curve_x.empty()) {
    x0 = std::min(x0, curve_x.front());
    x1 = std::max(x1, curve_x.back());
  }
  const Frame f{x0, x1, 0.0, ymax * 1.05};
  auto out = open_svg(path);
  axes(out, f, labels);
  for (std::size_t k = 0; k < bins; ++k) {
    const double left = lo + width * static_cast<double>(k);
    out << fmt::format(R"(<rect x="{:.2f}" y="{:.2f}" width="{:.2f}" height="{:.2f}" fill="#bbbbbb" stroke="white" stroke-width="0.3"/>)",
                       f.px(left), f.py(density[k]), f.px(left + width) - f.px(left), f.py(0.0) - f.py(density[k]))
        << '\n';
  }
  if (!curve_x.empty()) polyline(out, f, curve_x, curve_y, "black");
  out << "</svg>\n";
}

}  // namespace imfid::cli
