#include "dimdist/sweep.hpp"

namespace dimdist::reference {

WinProbSurface compute_surface(const GameSpec& spec) {
  WinProbSurface out{spec, std::vector<double>(kGridPoints, 0.0)};
  for (int i0 = 0; i0 < kGridSize; ++i0) {
    for (int i1 = 0; i1 < kGridSize; ++i1) {
      out.values[i0 * kGridSize + i1] = win_probability(spec, grid_angle(i0), grid_angle(i1));
    }
  }
  return out;
}

std::vector<SweepResult> sweep_pairs(const std::vector<GameSpec>& pairs, double tie_tol) {
  std::vector<SweepResult> out;
  out.reserve(pairs.size());
  for (const auto& spec : pairs) out.push_back(find_max(reference::compute_surface(spec), tie_tol));
  return out;
}

}  // namespace dimdist::reference
