#include "dimdist/rounding.hpp"

#include <cmath>
#include <cstdio>

#include "dimdist/error.hpp"

namespace dimdist {
namespace {

constexpr double kBoundaryGuard = 1e-9;

double pow10(int k) {
  double p = 1.0;
  for (int i = 0; i < k; ++i) p *= 10.0;
  return p;
}

}  // namespace

Precision make_precision(int decimals, RoundingMode mode) {
  if (decimals < 0 || decimals > 12) {
    throw InputError("precision must be between 0 and 12 decimals, got " + std::to_string(decimals));
  }
  return Precision{decimals, mode};
}

double ClassKey::value() const noexcept { return static_cast<double>(units) / pow10(decimals); }

std::string ClassKey::str() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value());
  return buf;
}

ClassKey round_key(double value, Precision precision) {
  const double scaled = std::fabs(value) * pow10(precision.decimals);
  double units = 0.0;
  switch (precision.mode) {
    case RoundingMode::Truncate:
      units = std::floor(scaled + kBoundaryGuard);
      break;
    case RoundingMode::HalfAwayFromZero:
      units = std::floor(scaled + 0.5 + kBoundaryGuard);
      break;
  }
  const auto signed_units = static_cast<std::int64_t>(units);
  return ClassKey{value < 0 ? -signed_units : signed_units, precision.decimals};
}

double round_value(double value, Precision precision) { return round_key(value, precision).value(); }

const char* to_string(RoundingMode mode) noexcept {
  return mode == RoundingMode::Truncate ? "truncate" : "half-away";
}

RoundingMode parse_rounding_mode(const std::string& text) {
  if (text == "truncate") return RoundingMode::Truncate;
  if (text == "half-away") return RoundingMode::HalfAwayFromZero;
  throw InputError("unknown rounding mode '" + text + "' (expected truncate or half-away)");
}

}  // namespace dimdist
