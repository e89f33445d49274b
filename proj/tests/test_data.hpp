#pragma once

#include <numbers>
#include <vector>

namespace test_data {

// Roulette stopping angles (degrees) and their orbit coordinates computed
// independently with numpy.
inline constexpr double kRouletteDegrees[] = {43, 45, 52, 61, 75, 88, 88, 279, 357};
inline constexpr double kRouletteG = 0.8909936742704354;
inline constexpr double kRouletteU = 0.7109909988631772;

inline std::vector<double> roulette() {
  std::vector<double> x;
  for (double d : kRouletteDegrees) x.push_back(d * std::numbers::pi / 180.0);
  return x;
}

}  // namespace test_data
