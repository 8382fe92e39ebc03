#include "dimdist/truth_table.hpp"

#include <bit>
#include <cctype>
#include <string>

#include "dimdist/error.hpp"

namespace dimdist {
namespace {

unsigned code_from_bits(const std::vector<int>& bits, std::size_t expected) {
  if (bits.size() != expected) {
    throw InputError("truth table needs " + std::to_string(expected) + " entries, got " +
                     std::to_string(bits.size()));
  }
  unsigned code = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) throw InputError("truth table entry must be 0 or 1, got " + std::to_string(b));
    code = (code << 1) | static_cast<unsigned>(b);
  }
  return code;
}

std::vector<int> parse_bits(std::string_view text) {
  const std::string original(text);
  auto fail = [&](const std::string& why) -> std::vector<int> {
    throw InputError("invalid truth table '" + original + "': " + why);
  };
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i >= text.size() || text[i] != '[') return fail("expected '['");
  ++i;
  std::vector<int> bits;
  skip_ws();
  if (i < text.size() && text[i] == ']') return fail("empty table");
  while (true) {
    skip_ws();
    if (i >= text.size()) return fail("unterminated");
    if (text[i] != '0' && text[i] != '1') return fail(std::string("unexpected '") + text[i] + "'");
    bits.push_back(text[i] - '0');
    ++i;
    skip_ws();
    if (i >= text.size()) return fail("unterminated");
    if (text[i] == ']') {
      ++i;
      break;
    }
    if (text[i] != ',') return fail(std::string("unexpected '") + text[i] + "'");
    ++i;
  }
  skip_ws();
  if (i != text.size()) return fail("trailing characters");
  return bits;
}

template <class Table>
std::string render(const Table& t) {
  std::string out = "[";
  for (int i = 0; i < Table::kSize; ++i) {
    if (i) out += ',';
    out += static_cast<char>('0' + t.at(i));
  }
  out += ']';
  return out;
}

}  // namespace

TruthTable2 TruthTable2::from_code(unsigned code) {
  if (code >= 16u) throw InputError("2-input truth table code out of range: " + std::to_string(code));
  return TruthTable2(code);
}

TruthTable2 TruthTable2::from_bits(const std::vector<int>& bits) {
  return TruthTable2(code_from_bits(bits, kSize));
}

int TruthTable2::eval(int x, int y) const {
  if (x < 0 || x > 1 || y < 0 || y > 1) {
    throw InputError("eval2 input out of domain: (" + std::to_string(x) + "," + std::to_string(y) + ")");
  }
  return at(2 * x + y);
}

std::array<int, TruthTable2::kSize> TruthTable2::bits() const noexcept {
  std::array<int, kSize> out{};
  for (int i = 0; i < kSize; ++i) out[i] = at(i);
  return out;
}

int TruthTable2::ones() const noexcept { return std::popcount(code_); }

TruthTable3 TruthTable3::from_code(unsigned code) {
  if (code >= 512u) throw InputError("3-input truth table code out of range: " + std::to_string(code));
  return TruthTable3(code);
}

TruthTable3 TruthTable3::from_bits(const std::vector<int>& bits) {
  return TruthTable3(code_from_bits(bits, kSize));
}

int TruthTable3::eval(int a, int b) const {
  if (a < 0 || a > 2 || b < 0 || b > 2) {
    throw InputError("eval3 input out of domain: (" + std::to_string(a) + "," + std::to_string(b) + ")");
  }
  return at(3 * a + b);
}

std::array<int, TruthTable3::kSize> TruthTable3::bits() const noexcept {
  std::array<int, kSize> out{};
  for (int i = 0; i < kSize; ++i) out[i] = at(i);
  return out;
}

int TruthTable3::ones() const noexcept { return std::popcount(code_); }

std::vector<TruthTable2> enumerate_f2() {
  std::vector<TruthTable2> out;
  out.reserve(14);
  for (unsigned c = 1; c < 15; ++c) out.push_back(TruthTable2::from_code(c));
  return out;
}

std::vector<TruthTable3> enumerate_g3() {
  std::vector<TruthTable3> out;
  out.reserve(510);
  for (unsigned c = 1; c < 511; ++c) out.push_back(TruthTable3::from_code(c));
  return out;
}

TruthTable2 restrict_g3(TruthTable3 g) {
  return TruthTable2::from_bits({g.eval(0, 0), g.eval(0, 1), g.eval(1, 0), g.eval(1, 1)});
}

int eval2(TruthTable2 f, int x, int y) { return f.eval(x, y); }
int eval3(TruthTable3 g, int a, int b) { return g.eval(a, b); }
int ones_count(TruthTable2 t) { return t.ones(); }

std::string to_string(TruthTable2 t) { return render(t); }
std::string to_string(TruthTable3 t) { return render(t); }

TruthTable2 parse_table2(std::string_view text) {
  const auto bits = parse_bits(text);
  if (bits.size() != TruthTable2::kSize) {
    throw InputError("invalid truth table '" + std::string(text) + "': expected 4 entries");
  }
  return TruthTable2::from_bits(bits);
}

TruthTable3 parse_table3(std::string_view text) {
  const auto bits = parse_bits(text);
  if (bits.size() != TruthTable3::kSize) {
    throw InputError("invalid truth table '" + std::string(text) + "': expected 9 entries");
  }
  return TruthTable3::from_bits(bits);
}

}  // namespace dimdist
