#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dimdist {

/// Boolean function f : {0,1}^2 -> {0,1}, stored as [f(0,0), f(0,1), f(1,0), f(1,1)].
class TruthTable2 {
 public:
  static constexpr int kSize = 4;

  constexpr TruthTable2() = default;
  /// `code` is the 4-bit integer whose MSB is f(0,0). Throws InputError if >= 16.
  static TruthTable2 from_code(unsigned code);
  /// Throws InputError unless `bits` has 4 entries, each 0 or 1.
  static TruthTable2 from_bits(const std::vector<int>& bits);

  constexpr unsigned code() const noexcept { return code_; }
  /// Throws InputError for x or y outside {0,1}.
  int eval(int x, int y) const;
  int at(int index) const noexcept { return (code_ >> (kSize - 1 - index)) & 1u; }
  std::array<int, kSize> bits() const noexcept;
  int ones() const noexcept;
  bool is_constant() const noexcept { return code_ == 0 || code_ == 15; }
  TruthTable2 complement() const noexcept { return TruthTable2(code_ ^ 15u); }

  friend constexpr bool operator==(TruthTable2, TruthTable2) = default;
  friend constexpr auto operator<=>(TruthTable2, TruthTable2) = default;

 private:
  constexpr explicit TruthTable2(unsigned code) : code_(code) {}
  unsigned code_ = 0;
};

/// Boolean function g : {0,1,2}^2 -> {0,1}, stored as g(a,b) at index 3a + b.
class TruthTable3 {
 public:
  static constexpr int kSize = 9;

  constexpr TruthTable3() = default;
  /// `code` is the 9-bit integer whose MSB is g(0,0). Throws InputError if >= 512.
  static TruthTable3 from_code(unsigned code);
  static TruthTable3 from_bits(const std::vector<int>& bits);

  constexpr unsigned code() const noexcept { return code_; }
  /// Throws InputError for a or b outside {0,1,2}.
  int eval(int a, int b) const;
  int at(int index) const noexcept { return (code_ >> (kSize - 1 - index)) & 1u; }
  std::array<int, kSize> bits() const noexcept;
  int ones() const noexcept;
  bool is_constant() const noexcept { return code_ == 0 || code_ == 511; }
  TruthTable3 complement() const noexcept { return TruthTable3(code_ ^ 511u); }

  friend constexpr bool operator==(TruthTable3, TruthTable3) = default;
  friend constexpr auto operator<=>(TruthTable3, TruthTable3) = default;

 private:
  constexpr explicit TruthTable3(unsigned code) : code_(code) {}
  unsigned code_ = 0;
};

/// The 14 non-constant tables in ascending code order.
std::vector<TruthTable2> enumerate_f2();
/// The 510 non-constant tables in ascending code order.
std::vector<TruthTable3> enumerate_g3();

/// [g(0,0), g(0,1), g(1,0), g(1,1)]. May be constant.
TruthTable2 restrict_g3(TruthTable3 g);

int eval2(TruthTable2 f, int x, int y);
int eval3(TruthTable3 g, int a, int b);
int ones_count(TruthTable2 t);

namespace tables {
inline const TruthTable2 kAnd = TruthTable2::from_code(0b0001);
inline const TruthTable2 kOr = TruthTable2::from_code(0b0111);
inline const TruthTable2 kXor = TruthTable2::from_code(0b0110);
inline const TruthTable2 kXnor = TruthTable2::from_code(0b1001);
inline const TruthTable2 kFirst = TruthTable2::from_code(0b0011);       // (x, y) -> x
inline const TruthTable2 kSecond = TruthTable2::from_code(0b0101);      // (x, y) -> y
inline const TruthTable2 kNotFirst = TruthTable2::from_code(0b1100);
inline const TruthTable2 kNotSecond = TruthTable2::from_code(0b1010);
/// 0 iff a == b on {0,1,2}^2.
inline const TruthTable3 kEmbeddedXor = TruthTable3::from_code(0b011101110);
}  // namespace tables

/// "[0,1,1,0]" style rendering, no spaces.
std::string to_string(TruthTable2 t);
std::string to_string(TruthTable3 t);

/// Parses "[0,1,1,0]" (whitespace tolerated). Throws InputError naming the token.
TruthTable2 parse_table2(std::string_view text);
TruthTable3 parse_table3(std::string_view text);

}  // namespace dimdist
