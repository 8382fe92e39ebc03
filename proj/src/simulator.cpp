#include "dimdist/simulator.hpp"

#include <array>
#include <cmath>
#include <random>
#include <string>

#include "dimdist/error.hpp"

namespace dimdist {

void ProtocolConfig::validate() const {
  if (rounds < 1) throw InputError("rounds must be >= 1, got " + std::to_string(rounds));
  if (!std::isfinite(theta0) || !std::isfinite(theta1)) throw InputError("angles must be finite");
  game(Dimension::Two).validate();
  game(Dimension::Three).validate();
}

GameSpec ProtocolConfig::game(Dimension dim) const {
  return dim == Dimension::Two ? GameSpec{Dimension::Two, f, g_d2} : GameSpec{Dimension::Three, f, g_d3};
}

ProtocolResult run_protocol(const ProtocolConfig& cfg) {
  cfg.validate();
  ProtocolResult result;
  result.rounds = cfg.rounds;
  result.expected_d2 = win_probability(cfg.game(Dimension::Two), cfg.theta0, cfg.theta1);
  result.expected_d3 = win_probability(cfg.game(Dimension::Three), cfg.theta0, cfg.theta1);

  const GameSpec game = cfg.game(cfg.true_dim);
  const int d = to_int(cfg.true_dim);
  const auto state = max_entangled(cfg.true_dim);
  std::array<JointDistribution, 4> joint{};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      joint[2 * x + y] = joint_distribution(state, alice_basis(cfg.true_dim, x),
                                            bob_basis(cfg.true_dim, y, cfg.theta0, cfg.theta1));

  std::mt19937_64 rng(cfg.seed);
  if (cfg.keep_log) result.log.reserve(static_cast<std::size_t>(cfg.rounds));
  for (std::int64_t i = 0; i < cfg.rounds; ++i) {
    const std::uint64_t q = rng();
    const int x = static_cast<int>(q & 1u);
    const int y = static_cast<int>((q >> 1) & 1u);
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;

    const auto& p = joint[2 * x + y];
    int a = d - 1, b = d - 1;
    double cumulative = 0.0;
    for (int cell = 0; cell < d * d; ++cell) {
      cumulative += p.p[cell / d][cell % d];
      if (u < cumulative) {
        a = cell / d;
        b = cell % d;
        break;
      }
    }
    const int won = game.score(a, b) == game.f.at(2 * x + y) ? 1 : 0;
    result.wins += won;
    if (cfg.keep_log) result.log.push_back({x, y, a, b, won});
  }
  result.S = static_cast<double>(result.wins) / static_cast<double>(cfg.rounds);
  result.decided_dim = decide_dimension(result.S, result.expected_d2, result.expected_d3);
  return result;
}

int decide_dimension(double S, double expected_d2, double expected_d3) {
  if (std::fabs(expected_d2 - expected_d3) < 1e-6) {
    throw DegenerateConfigError("expected statistics coincide (" + std::to_string(expected_d2) + " vs " +
                                std::to_string(expected_d3) + "); this configuration cannot tell 2 from 3");
  }
  // A midpoint computed in floating point can land an ulp off; call that a tie.
  constexpr double kTie = 1e-12;
  return std::fabs(S - expected_d2) <= std::fabs(S - expected_d3) + kTie ? 2 : 3;
}

std::int64_t required_rounds(double gap, double error_prob) {
  if (!(gap > 0.0 && gap <= 1.0)) throw InputError("gap must lie in (0, 1], got " + std::to_string(gap));
  if (!(error_prob > 0.0 && error_prob < 1.0)) {
    throw InputError("error probability must lie in (0, 1), got " + std::to_string(error_prob));
  }
  auto ok = [&](std::int64_t n) { return 2.0 * std::exp(-static_cast<double>(n) * gap * gap / 2.0) <= error_prob; };
  auto n = static_cast<std::int64_t>(std::ceil(2.0 * std::log(2.0 / error_prob) / (gap * gap)));
  n = std::max<std::int64_t>(n, 1);
  while (n > 1 && ok(n - 1)) --n;
  while (!ok(n)) ++n;
  return n;
}

}  // namespace dimdist
