#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace dimdist {

/// How probabilities are reduced to a fixed number of decimals before grouping.
enum class RoundingMode {
  /// Drop digits past the last kept decimal (0.6768 -> 0.67). Default.
  Truncate,
  /// Conventional rounding, halves away from zero (0.6768 -> 0.68).
  HalfAwayFromZero,
};

struct Precision {
  int decimals = 2;
  RoundingMode mode = RoundingMode::Truncate;
};

/// Throws InputError unless 0 <= decimals <= 12.
Precision make_precision(int decimals, RoundingMode mode = RoundingMode::Truncate);

/// A rounded probability held as an integer count of 10^-decimals units.
struct ClassKey {
  std::int64_t units = 0;
  int decimals = 2;

  double value() const noexcept;
  /// Fixed-point text with exactly `decimals` digits, e.g. "0.85".
  std::string str() const;

  friend bool operator==(const ClassKey&, const ClassKey&) = default;
  friend auto operator<=>(const ClassKey&, const ClassKey&) = default;
};

/// Values within 1e-9 of the next unit boundary are snapped up, so accumulated
/// floating error never pushes an exact 0.5 down to 0.49.
ClassKey round_key(double value, Precision precision);

double round_value(double value, Precision precision);

const char* to_string(RoundingMode mode) noexcept;
/// Accepts "truncate" or "half-away". Throws InputError otherwise.
RoundingMode parse_rounding_mode(const std::string& text);

}  // namespace dimdist
