#include "dimdist/game.hpp"

#include <cmath>
#include <string>

#include "dimdist/error.hpp"

namespace dimdist {
namespace {

void require_finite(double theta) {
  if (!std::isfinite(theta)) throw InputError("measurement angle must be finite");
}

}  // namespace

GameSpec GameSpec::game1(TruthTable2 f, TruthTable2 g) {
  GameSpec s{Dimension::Two, f, g};
  s.validate();
  return s;
}

GameSpec GameSpec::game2(TruthTable2 f, TruthTable3 g) {
  GameSpec s{Dimension::Three, f, g};
  s.validate();
  return s;
}

int GameSpec::score(int u, int v) const noexcept {
  if (const auto* g2 = std::get_if<TruthTable2>(&g)) return g2->at(2 * u + v);
  return std::get<TruthTable3>(g).at(3 * u + v);
}

void GameSpec::validate() const {
  if (f.is_constant()) throw InputError("question function " + to_string(f) + " is constant");
  if (dim == Dimension::Two) {
    if (!std::holds_alternative<TruthTable2>(g)) {
      throw InputError("qubit game needs a 2-input scoring table, got a 3-input one");
    }
    return;
  }
  if (!std::holds_alternative<TruthTable3>(g)) {
    throw InputError("qutrit game needs a 3-input scoring table, got a 2-input one");
  }
  if (std::get<TruthTable3>(g).is_constant()) {
    throw InputError("scoring function " + to_string(std::get<TruthTable3>(g)) + " is constant");
  }
}

GameSpec GameSpec::complement() const {
  GameSpec out = *this;
  out.f = f.complement();
  std::visit([&](auto t) { out.g = t.complement(); }, g);
  return out;
}

double winning_mass(const GameSpec& spec, const JointDistribution& p, int s, int t) noexcept {
  const int target = spec.f.at(2 * s + t);
  const int d = to_int(spec.dim);
  double mass = 0.0;
  for (int u = 0; u < d; ++u) {
    for (int v = 0; v < d; ++v) {
      if (spec.score(u, v) == target) mass += p.p[u][v];
    }
  }
  return mass;
}

double conditional_win(const GameSpec& spec, double theta0, double theta1, int s, int t) {
  spec.validate();
  require_finite(theta0);
  require_finite(theta1);
  const auto p = joint_distribution(max_entangled(spec.dim), alice_basis(spec.dim, s),
                                    bob_basis(spec.dim, t, theta0, theta1));
  return winning_mass(spec, p, s, t);
}

double win_probability(const GameSpec& spec, double theta0, double theta1) {
  spec.validate();
  require_finite(theta0);
  require_finite(theta1);
  const auto state = max_entangled(spec.dim);
  double total = 0.0;
  for (int s = 0; s < 2; ++s) {
    const auto alice = alice_basis(spec.dim, s);
    for (int t = 0; t < 2; ++t) {
      const auto p = joint_distribution(state, alice, bob_basis(spec.dim, t, theta0, theta1));
      total += winning_mass(spec, p, s, t);
    }
  }
  return 0.25 * total;
}

double chsh_closed_form(double theta0, double theta1) noexcept {
  const double c0 = std::cos(theta0);
  const double c1 = std::cos(theta1);
  return 0.25 * (c0 * c0 + c1 * c1 + 0.5 * (1.0 + std::sin(2.0 * theta0)) +
                 0.5 * (1.0 - std::sin(2.0 * theta1)));
}

}  // namespace dimdist
