#include "imfid/io.hpp"

#include <charconv>
#include <cmath>
#include <fmt/format.h>
#include <fmt/ranges.h>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>

#include "imfid/error.hpp"

namespace imfid {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool parse_double(const std::string& s, double& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last && std::isfinite(out);
}

}  // namespace

std::vector<double> read_observations(std::istream& in, GroupKind kind) {
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  bool first_content = true;
  double unit = 1.0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string field = trim(line);
    if (field.empty()) continue;
    double v = 0.0;
    if (parse_double(field, v)) {
      values.push_back(v * unit);
      first_content = false;
      continue;
    }
    if (first_content) {
      first_content = false;
      if (kind == GroupKind::Circle) {
        if (field == "angle_deg") {
          unit = std::numbers::pi / 180.0;
        } else if (field != "angle_rad") {
          throw InputError(fmt::format("line {}: unknown header '{}' (expected angle_deg or angle_rad)", line_no, field));
        }
      }
      continue;
    }
    throw InputError(fmt::format("line {}: '{}' is not a number", line_no, field));
  }
  if (values.empty()) throw InputError("data file contains no observations");
  return values;
}

std::vector<double> read_observations(const std::filesystem::path& path, GroupKind kind) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open data file " + path.string());
  return read_observations(in, kind);
}

std::string format_number(double v) { return fmt::format("{:.17g}", v); }

void write_contour_csv(std::ostream& out, const Contour& contour) {
  out << "theta,pi\n";
  for (std::size_t i = 0; i < contour.size(); ++i) {
    out << format_number(contour.grid()[i]) << ',' << format_number(contour.values()[i]) << '\n';
  }
}

void write_draws_csv(std::ostream& out, std::span<const double> draws) {
  out << "draw\n";
  for (double d : draws) out << format_number(d) << '\n';
}

void write_validity_csv(std::ostream& out, const ExperimentReport& report) {
  out << "alpha,frequency,stderr,flag\n";
  for (const auto& row : report.rows) {
    out << format_number(row.alpha) << ',' << format_number(row.estimate) << ',' << format_number(row.std_error)
        << ',' << (row.flag ? 1 : 0) << '\n';
  }
}

void write_exceedance_csv(std::ostream& out, const ExperimentReport& report) {
  out << "theta,alpha,exceedance,stderr,flag\n";
  for (const auto& row : report.rows) {
    std::vector<std::string> coords;
    for (double t : row.theta) coords.push_back(format_number(t));
    out << fmt::format("{}", fmt::join(coords, ";")) << ',' << format_number(row.alpha) << ','
        << format_number(row.estimate) << ',' << format_number(row.std_error) << ',' << (row.flag ? 1 : 0) << '\n';
  }
}

void write_calibration_csv(std::ostream& out, const CalibrationCurve& curve) {
  out << "alpha,F,stderr\n";
  for (std::size_t k = 0; k < curve.alpha.size(); ++k) {
    out << format_number(curve.alpha[k]) << ',' << format_number(curve.F[k]) << ','
        << format_number(curve.std_error[k]) << '\n';
  }
}

void write_transform_csv(std::ostream& out, const ProbabilityApproximation& dist) {
  out << "theta,cdf\n";
  for (std::size_t i = 0; i < dist.grid().size(); ++i) {
    out << format_number(dist.grid()[i]) << ',' << format_number(dist.cdf_values()[i]) << '\n';
  }
}

void write_sidecar(std::ostream& out, const Sidecar& entries) {
  for (const auto& [key, value] : entries) out << key << '=' << value << '\n';
}

}  // namespace imfid
