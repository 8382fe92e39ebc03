#pragma once

#include <variant>

#include "dimdist/linalg.hpp"
#include "dimdist/truth_table.hpp"

namespace dimdist {

/// One generalized CHSH game: questions (x, y) uniform on {0,1}^2, answers
/// (a, b) in {0..dim-1}^2, win iff f(x, y) == g(a, b).
struct GameSpec {
  Dimension dim = Dimension::Two;
  TruthTable2 f;
  std::variant<TruthTable2, TruthTable3> g;

  /// Qubit game scored by a 2-input table. `g` may be constant (restrictions).
  static GameSpec game1(TruthTable2 f, TruthTable2 g);
  /// Qutrit game scored by a 3-input table.
  static GameSpec game2(TruthTable2 f, TruthTable3 g);

  /// g(u, v) for answers in range.
  int score(int u, int v) const noexcept;

  /// Throws InputError if f is constant, if the table kind does not match
  /// `dim`, or if a qutrit scoring table is constant.
  void validate() const;

  GameSpec complement() const;
};

/// Probability mass of the winning answer cells for question (s, t).
double winning_mass(const GameSpec& spec, const JointDistribution& p, int s, int t) noexcept;

/// Pr(win | x = s, y = t) with Bob's bases at (theta0, theta1).
double conditional_win(const GameSpec& spec, double theta0, double theta1, int s, int t);

/// Pr(win) = 1/4 sum_{s,t} Pr(win | s, t).
double win_probability(const GameSpec& spec, double theta0, double theta1);

/// Analytic value of the standard CHSH game (f = AND, g = XOR) on qubits:
///   1/4 [cos^2 t0 + cos^2 t1 + (1 + sin 2 t0)/2 + (1 - sin 2 t1)/2].
double chsh_closed_form(double theta0, double theta1) noexcept;

}  // namespace dimdist
