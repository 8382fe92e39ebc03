#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"

#include "dimdist/error.hpp"
#include "dimdist/game.hpp"

using namespace dimdist;

namespace {

constexpr double kPi = std::numbers::pi;
double grid(int i) { return i * kPi / 32.0; }

// Frozen values from tests/oracle/born_rule_oracle.py (numpy, dense Kronecker products).
constexpr double kChshAtOrigin = 0.75;
constexpr double kEmbXorMax = 0.7623669503665591;  // at (34, 2)
constexpr double kEmbXorAt_4_60 = 0.7017540362837131;
constexpr double kEmbXorAt_33_1 = 0.761383235716627;
constexpr double kEmbXorAt_33_2 = 0.7610052279967467;
constexpr double kEmbXorAt_34_1 = 0.7613176118162119;

}  // namespace

TEST_CASE("closed form matches the Born rule on the grid") {
  const auto spec = GameSpec::game1(tables::kAnd, tables::kXor);
  for (int i0 = 0; i0 < 64; ++i0) {
    for (int i1 = 0; i1 < 64; ++i1) {
      CHECK(std::fabs(win_probability(spec, grid(i0), grid(i1)) - chsh_closed_form(grid(i0), grid(i1))) < 1e-12);
    }
  }
}

TEST_CASE("closed form matches the Born rule at random angles") {
  const auto spec = GameSpec::game1(tables::kAnd, tables::kXor);
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> angle(-2 * kPi, 2 * kPi);
  for (int i = 0; i < 1000; ++i) {
    const double t0 = angle(rng), t1 = angle(rng);
    CHECK(std::fabs(win_probability(spec, t0, t1) - chsh_closed_form(t0, t1)) < 1e-12);
  }
}

TEST_CASE("CHSH optimum value") {
  const auto spec = GameSpec::game1(tables::kAnd, tables::kXor);
  CHECK(win_probability(spec, kPi / 8, 15 * kPi / 8) == doctest::Approx((2 + std::sqrt(2.0)) / 4).epsilon(1e-14));
  CHECK(win_probability(spec, 0, 0) == doctest::Approx(kChshAtOrigin).epsilon(1e-14));
}

TEST_CASE("oracle values for AND / embedded XOR on qutrits") {
  const auto spec = GameSpec::game2(tables::kAnd, tables::kEmbeddedXor);
  CHECK(std::fabs(win_probability(spec, grid(34), grid(2)) - kEmbXorMax) < 1e-12);
  CHECK(std::fabs(win_probability(spec, grid(4), grid(60)) - kEmbXorAt_4_60) < 1e-12);
  CHECK(std::fabs(win_probability(spec, grid(33), grid(1)) - kEmbXorAt_33_1) < 1e-12);
  CHECK(std::fabs(win_probability(spec, grid(33), grid(2)) - kEmbXorAt_33_2) < 1e-12);
  CHECK(std::fabs(win_probability(spec, grid(34), grid(1)) - kEmbXorAt_34_1) < 1e-12);
}

TEST_CASE("oracle values for distinguisher pairs") {
  const auto f = parse_table2("[0,0,0,1]");
  const auto g3 = parse_table3("[1,0,0,1,1,0,0,0,0]");
  CHECK(std::fabs(win_probability(GameSpec::game2(f, g3), grid(46), grid(50)) - 0.7679858650193536) < 1e-12);
  CHECK(std::fabs(win_probability(GameSpec::game1(f, restrict_g3(g3)), grid(46), grid(50)) - 0.4426495125182744) <
        1e-12);

  const auto f2 = parse_table2("[0,1,0,0]");
  const auto h3 = parse_table3("[0,1,0,1,0,0,0,0,1]");
  CHECK(std::fabs(win_probability(GameSpec::game2(f2, h3), grid(33), grid(19)) - 0.8628319378035947) < 1e-12);
  CHECK(std::fabs(win_probability(GameSpec::game1(f2, restrict_g3(h3)), grid(33), grid(19)) - 0.6814718727127876) <
        1e-12);
}

TEST_CASE("complement symmetry on random pairs") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> angle(0, 2 * kPi);
  const auto f2 = enumerate_f2();
  const auto g3 = enumerate_g3();
  for (int i = 0; i < 500; ++i) {
    const auto f = f2[rng() % f2.size()];
    const double t0 = angle(rng), t1 = angle(rng);
    const auto s2 = GameSpec::game1(f, f2[rng() % f2.size()]);
    const auto s3 = GameSpec::game2(f, g3[rng() % g3.size()]);
    CHECK(std::fabs(win_probability(s2, t0, t1) - win_probability(s2.complement(), t0, t1)) < 1e-12);
    CHECK(std::fabs(win_probability(s3, t0, t1) - win_probability(s3.complement(), t0, t1)) < 1e-12);
  }
}

TEST_CASE("projection scoring is blind to the strategy") {
  for (auto g : {tables::kFirst, tables::kSecond, tables::kNotFirst, tables::kNotSecond}) {
    for (auto f : enumerate_f2()) {
      const auto spec = GameSpec::game1(f, g);
      for (int i0 = 0; i0 < 64; i0 += 3) {
        for (int i1 = 0; i1 < 64; i1 += 5) CHECK(std::fabs(win_probability(spec, grid(i0), grid(i1)) - 0.5) < 1e-12);
      }
    }
  }
}

TEST_CASE("angles are 2 pi periodic") {
  const auto s2 = GameSpec::game1(tables::kOr, tables::kXnor);
  const auto s3 = GameSpec::game2(tables::kAnd, tables::kEmbeddedXor);
  for (double t0 : {0.1, 1.3, 4.0}) {
    for (double t1 : {0.7, 2.9}) {
      CHECK(std::fabs(win_probability(s2, t0, t1) - win_probability(s2, t0 + 2 * kPi, t1 - 2 * kPi)) < 1e-12);
      CHECK(std::fabs(win_probability(s3, t0, t1) - win_probability(s3, t0 - 2 * kPi, t1 + 2 * kPi)) < 1e-12);
    }
  }
}

TEST_CASE("conditional wins average to the total") {
  const auto spec = GameSpec::game2(tables::kOr, parse_table3("[0,1,0,1,0,0,0,0,1]"));
  double sum = 0.0;
  for (int s = 0; s < 2; ++s) {
    for (int t = 0; t < 2; ++t) {
      const double c = conditional_win(spec, 0.4, 1.1, s, t);
      CHECK(c >= 0.0);
      CHECK(c <= 1.0 + 1e-15);
      sum += c;
    }
  }
  CHECK(std::fabs(sum / 4 - win_probability(spec, 0.4, 1.1)) < 1e-15);
}

TEST_CASE("invalid games are rejected") {
  CHECK_THROWS_AS(GameSpec::game1(TruthTable2::from_code(0), tables::kXor).validate(), InputError);
  CHECK_THROWS_AS(GameSpec::game2(tables::kAnd, TruthTable3::from_code(511)).validate(), InputError);
  GameSpec mismatched{Dimension::Three, tables::kAnd, tables::kXor};
  CHECK_THROWS_AS(mismatched.validate(), InputError);
  CHECK_NOTHROW(GameSpec::game1(tables::kAnd, TruthTable2::from_code(0)).validate());
  CHECK_THROWS_AS(win_probability(GameSpec::game1(tables::kAnd, tables::kXor), NAN, 0.0), InputError);
  CHECK_THROWS_AS(conditional_win(GameSpec::game1(tables::kAnd, tables::kXor), 0.0, 0.0, 2, 0), InputError);
}
