#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "dimdist/game.hpp"
#include "dimdist/rounding.hpp"

namespace dimdist {

/// Bob's angles are searched on {i * pi/32 : i = 0..63} in each coordinate.
inline constexpr int kGridSize = 64;
inline constexpr int kGridPoints = kGridSize * kGridSize;
inline constexpr double kDefaultTieTolerance = 1e-9;

double grid_angle(int index) noexcept;

struct AngleGridPoint {
  int i0 = 0;
  int i1 = 0;

  /// Throws InputError for indices outside [0, 63].
  static AngleGridPoint make(int i0, int i1);
  static AngleGridPoint from_flat(int flat) noexcept { return {flat / kGridSize, flat % kGridSize}; }

  int flat() const noexcept { return i0 * kGridSize + i1; }
  double theta0() const noexcept { return grid_angle(i0); }
  double theta1() const noexcept { return grid_angle(i1); }

  friend bool operator==(const AngleGridPoint&, const AngleGridPoint&) = default;
  friend auto operator<=>(const AngleGridPoint&, const AngleGridPoint&) = default;
};

struct WinProbSurface {
  GameSpec spec;
  std::vector<double> values;  // row-major [i0][i1], kGridPoints entries

  double at(AngleGridPoint p) const noexcept { return values[p.flat()]; }
  double at(int i0, int i1) const noexcept { return values[i0 * kGridSize + i1]; }
};

struct SweepResult {
  GameSpec spec;
  double max_value = 0.0;
  std::vector<AngleGridPoint> argmax;  // ascending (i0, i1)
  AngleGridPoint canonical_argmax;
};

/// Exact-maximum tie set: every point within `tie_tol` of the maximum.
/// Throws InputError for negative tolerance.
SweepResult find_max(const WinProbSurface& surface, double tie_tol = kDefaultTieTolerance);

/// Presentation tie set: every point whose rounded value equals the rounded maximum.
SweepResult find_max_rounded(const WinProbSurface& surface, Precision precision);

/// All ordered (f, g) pairs for a game, f-major in enumeration order:
/// 14 x 14 for qubits, 14 x 510 for qutrits.
std::vector<GameSpec> enumerate_pairs(Dimension dim);

/// Grid evaluator with every Born-rule joint distribution precomputed.
/// Surfaces it produces are bit-identical to per-point win_probability calls.
class GridKernel {
 public:
  /// `threads` <= 0 keeps the OpenMP default.
  explicit GridKernel(Dimension dim, int threads = 0);

  Dimension dim() const noexcept { return dim_; }
  const JointDistribution& joint(int s, int t, AngleGridPoint p) const noexcept {
    return joints_[static_cast<std::size_t>((2 * s + t) * kGridPoints + p.flat())];
  }

  double win_probability(const GameSpec& spec, AngleGridPoint p) const;
  WinProbSurface surface(const GameSpec& spec) const;

  /// One result per enumerate_pairs(dim()) entry, in that order. Pairs are
  /// evaluated in parallel; output does not depend on the thread count.
  std::vector<SweepResult> sweep_all(double tie_tol = kDefaultTieTolerance, int threads = 0) const;

 private:
  Dimension dim_;
  std::vector<JointDistribution> joints_;
};

/// Per-point surface via game-engine win_probability.
WinProbSurface compute_surface(const GameSpec& spec);

/// Convenience wrapper: builds a kernel and sweeps every pair.
std::vector<SweepResult> sweep_all(Dimension dim, double tie_tol = kDefaultTieTolerance, int threads = 0);

namespace reference {

/// Serial reference implementations kept for testing the kernel path.
WinProbSurface compute_surface(const GameSpec& spec);
std::vector<SweepResult> sweep_pairs(const std::vector<GameSpec>& pairs, double tie_tol = kDefaultTieTolerance);

}  // namespace reference

}  // namespace dimdist
