#pragma once

#include <cstdint>
#include <numbers>
#include <vector>

#include "dimdist/game.hpp"

namespace dimdist {

/// Monte Carlo run of the dimension test. With the defaults, qubit pairs are
/// measured with the CHSH apparatus and scored with XOR, qutrit pairs with the
/// Fourier/qutrit apparatus and scored with embedded XOR; both use f = AND.
struct ProtocolConfig {
  Dimension true_dim = Dimension::Two;
  std::int64_t rounds = 100000;
  double theta0 = std::numbers::pi / 8.0;
  double theta1 = 15.0 * std::numbers::pi / 8.0;
  TruthTable2 f = tables::kAnd;
  TruthTable2 g_d2 = tables::kXor;
  TruthTable3 g_d3 = tables::kEmbeddedXor;
  std::uint64_t seed = 0;
  bool keep_log = false;

  /// Throws InputError for rounds < 1, non-finite angles or invalid tables.
  void validate() const;
  GameSpec game(Dimension dim) const;
};

struct RoundRecord {
  int x;
  int y;
  int a;
  int b;
  int won;
};

struct ProtocolResult {
  double S = 0.0;
  std::int64_t wins = 0;
  std::int64_t rounds = 0;
  double expected_d2 = 0.0;
  double expected_d3 = 0.0;
  int decided_dim = 2;
  std::vector<RoundRecord> log;  // filled when keep_log is set

  double expected_S(Dimension dim) const noexcept { return dim == Dimension::Two ? expected_d2 : expected_d3; }
};

/// Samples n rounds sequentially from std::mt19937_64(seed). Per round, one
/// 64-bit draw w gives x = w & 1 and y = (w >> 1) & 1; a second draw gives
/// u = (w' >> 11) * 2^-53, and (a, b) is the first row-major cell whose
/// cumulative Born probability exceeds u.
ProtocolResult run_protocol(const ProtocolConfig& cfg);

/// Nearest expected statistic wins; distances within 1e-12 count as a tie and return 2.
/// Throws DegenerateConfigError when the expectations are closer than 1e-6.
int decide_dimension(double S, double expected_d2, double expected_d3);

/// Smallest n with 2 exp(-n gap^2 / 2) <= error_prob (Hoeffding, threshold
/// at the midpoint). Throws InputError unless 0 < gap <= 1 and 0 < error_prob < 1.
std::int64_t required_rounds(double gap, double error_prob);

}  // namespace dimdist
