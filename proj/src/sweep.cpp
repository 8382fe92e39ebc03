#include "dimdist/sweep.hpp"

#include <algorithm>
#include <array>
#include <numbers>
#include <string>

#include <omp.h>

#include "dimdist/error.hpp"

namespace dimdist {
namespace {

void apply_threads(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

SweepResult collect(const WinProbSurface& surface, double max_value, auto&& in_tie_set) {
  SweepResult r{surface.spec, max_value, {}, {}};
  for (int flat = 0; flat < kGridPoints; ++flat) {
    if (in_tie_set(surface.values[flat])) r.argmax.push_back(AngleGridPoint::from_flat(flat));
  }
  r.canonical_argmax = r.argmax.front();
  return r;
}

double surface_max(const WinProbSurface& surface) {
  return *std::max_element(surface.values.begin(), surface.values.end());
}

// Winning mass for both possible values of f(s, t), summed in the same
// row-major order as winning_mass().
struct CellMass {
  double when_zero;
  double when_one;
};

CellMass split_mass(const GameSpec& spec, const JointDistribution& p) noexcept {
  const int d = to_int(spec.dim);
  CellMass m{0.0, 0.0};
  for (int u = 0; u < d; ++u) {
    for (int v = 0; v < d; ++v) {
      if (spec.score(u, v) == 0) {
        m.when_zero += p.p[u][v];
      } else {
        m.when_one += p.p[u][v];
      }
    }
  }
  return m;
}

}  // namespace

double grid_angle(int index) noexcept { return index * std::numbers::pi / 32.0; }

AngleGridPoint AngleGridPoint::make(int i0, int i1) {
  if (i0 < 0 || i0 >= kGridSize || i1 < 0 || i1 >= kGridSize) {
    throw InputError("grid index out of range: (" + std::to_string(i0) + "," + std::to_string(i1) + ")");
  }
  return {i0, i1};
}

SweepResult find_max(const WinProbSurface& surface, double tie_tol) {
  if (!(tie_tol >= 0.0)) throw InputError("tie tolerance must be non-negative");
  const double best = surface_max(surface);
  return collect(surface, best, [&](double v) { return v >= best - tie_tol; });
}

SweepResult find_max_rounded(const WinProbSurface& surface, Precision precision) {
  const double best = surface_max(surface);
  const ClassKey top = round_key(best, precision);
  return collect(surface, best, [&](double v) { return round_key(v, precision) == top; });
}

std::vector<GameSpec> enumerate_pairs(Dimension dim) {
  std::vector<GameSpec> out;
  const auto fs = enumerate_f2();
  if (dim == Dimension::Two) {
    out.reserve(fs.size() * fs.size());
    for (auto f : fs)
      for (auto g : fs) out.push_back(GameSpec::game1(f, g));
  } else {
    const auto gs = enumerate_g3();
    out.reserve(fs.size() * gs.size());
    for (auto f : fs)
      for (auto g : gs) out.push_back(GameSpec::game2(f, g));
  }
  return out;
}

GridKernel::GridKernel(Dimension dim, int threads) : dim_(make_dimension(to_int(dim))) {
  apply_threads(threads);
  joints_.resize(static_cast<std::size_t>(4 * kGridPoints));
  const auto state = max_entangled(dim_);
  const std::array<OrthonormalBasis, 2> alice{alice_basis(dim_, 0), alice_basis(dim_, 1)};
#pragma omp parallel for schedule(static)
  for (int flat = 0; flat < kGridPoints; ++flat) {
    const auto p = AngleGridPoint::from_flat(flat);
    for (int t = 0; t < 2; ++t) {
      const auto bob = bob_basis(dim_, t, p.theta0(), p.theta1());
      for (int s = 0; s < 2; ++s) {
        joints_[static_cast<std::size_t>((2 * s + t) * kGridPoints + flat)] =
            joint_distribution(state, alice[s], bob);
      }
    }
  }
}

double GridKernel::win_probability(const GameSpec& spec, AngleGridPoint p) const {
  spec.validate();
  if (spec.dim != dim_) throw InputError("game dimension does not match kernel dimension");
  double total = 0.0;
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t) total += winning_mass(spec, joint(s, t, p), s, t);
  return 0.25 * total;
}

WinProbSurface GridKernel::surface(const GameSpec& spec) const {
  spec.validate();
  if (spec.dim != dim_) throw InputError("game dimension does not match kernel dimension");
  WinProbSurface out{spec, std::vector<double>(kGridPoints, 0.0)};
  for (int flat = 0; flat < kGridPoints; ++flat) {
    const auto p = AngleGridPoint::from_flat(flat);
    double total = 0.0;
    for (int s = 0; s < 2; ++s)
      for (int t = 0; t < 2; ++t) total += winning_mass(spec, joint(s, t, p), s, t);
    out.values[flat] = 0.25 * total;
  }
  return out;
}

std::vector<SweepResult> GridKernel::sweep_all(double tie_tol, int threads) const {
  if (!(tie_tol >= 0.0)) throw InputError("tie tolerance must be non-negative");
  apply_threads(threads);
  const auto fs = enumerate_f2();
  std::vector<GameSpec> scorers;
  if (dim_ == Dimension::Two) {
    for (auto g : enumerate_f2()) scorers.push_back(GameSpec{dim_, tables::kAnd, g});
  } else {
    for (auto g : enumerate_g3()) scorers.push_back(GameSpec{dim_, tables::kAnd, g});
  }
  const int n_scorers = static_cast<int>(scorers.size());
  const int n_f = static_cast<int>(fs.size());
  std::vector<SweepResult> results(static_cast<std::size_t>(n_f * n_scorers));

  // Each scoring table is independent; its masses are shared by all 14 f.
#pragma omp parallel
  {
    std::vector<CellMass> mass(static_cast<std::size_t>(4 * kGridPoints));
    WinProbSurface surf{scorers.front(), std::vector<double>(kGridPoints, 0.0)};
#pragma omp for schedule(dynamic, 4)
    for (int gi = 0; gi < n_scorers; ++gi) {
      const GameSpec& scorer = scorers[gi];
      for (int st = 0; st < 4; ++st)
        for (int flat = 0; flat < kGridPoints; ++flat)
          mass[st * kGridPoints + flat] = split_mass(scorer, joints_[st * kGridPoints + flat]);

      for (int fi = 0; fi < n_f; ++fi) {
        GameSpec spec = scorer;
        spec.f = fs[fi];
        std::array<int, 4> target{};
        for (int st = 0; st < 4; ++st) target[st] = spec.f.at(st);
        for (int flat = 0; flat < kGridPoints; ++flat) {
          double total = 0.0;
          for (int st = 0; st < 4; ++st) {
            const CellMass& m = mass[st * kGridPoints + flat];
            total += target[st] ? m.when_one : m.when_zero;
          }
          surf.values[flat] = 0.25 * total;
        }
        surf.spec = spec;
        results[static_cast<std::size_t>(fi * n_scorers + gi)] = find_max(surf, tie_tol);
      }
    }
  }
  return results;
}

WinProbSurface compute_surface(const GameSpec& spec) {
  spec.validate();
  return GridKernel(spec.dim).surface(spec);
}

std::vector<SweepResult> sweep_all(Dimension dim, double tie_tol, int threads) {
  return GridKernel(dim, threads).sweep_all(tie_tol, threads);
}

}  // namespace dimdist
