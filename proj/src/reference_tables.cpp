#include "dimdist/reference_tables.hpp"

namespace dimdist::published {
namespace {

TruthTable2 t2(const char* s) { return parse_table2(s); }
TruthTable3 t3(const char* s) { return parse_table3(s); }

bool is_parity(TruthTable2 g) { return g == tables::kXor || g == tables::kXnor; }

bool is_projection(TruthTable2 g) {
  return g == tables::kFirst || g == tables::kSecond || g == tables::kNotFirst || g == tables::kNotSecond;
}

}  // namespace

const std::vector<Table1Row>& table1() {
  static const std::vector<Table1Row> rows{
      {"any non-constant f", "XOR, XNOR", 0.85, 28, [](TruthTable2, TruthTable2 g) { return is_parity(g); }},
      {"f contains one 0", "g contains one 0", 0.80, 32,
       [](TruthTable2 f, TruthTable2 g) { return f.ones() == 3 && g.ones() == 3; }},
      {"f contains one 1", "g contains one 1", 0.80, 32,
       [](TruthTable2 f, TruthTable2 g) { return f.ones() == 1 && g.ones() == 1; }},
      {"f contains two 0", "g contains exactly one 1 or one 0", 0.67, 48,
       [](TruthTable2 f, TruthTable2 g) { return f.ones() == 2 && (g.ones() == 1 || g.ones() == 3); }},
      {"f contains one 1", "g contains one 0", 0.55, 16,
       [](TruthTable2 f, TruthTable2 g) { return f.ones() == 1 && g.ones() == 3; }},
      {"f contains one 0", "g contains one 1", 0.55, 6,
       [](TruthTable2 f, TruthTable2 g) { return f.ones() == 3 && g.ones() == 1; }},
      {"any non-constant f", "a, b, not a, not b", 0.5, 56,
       [](TruthTable2, TruthTable2 g) { return is_projection(g); }},
  };
  return rows;
}

const std::vector<Table2Row>& table2() {
  static const std::vector<Table2Row> rows{
      {t2("[0,1,0,0]"), t3("[0,1,0,1,0,0,0,0,1]"), AngleGridPoint{33, 19}},
      {t2("[0,1,0,0]"), t3("[1,0,0,0,0,1,0,1,0]"), AngleGridPoint{29, 29}},
      {t2("[0,1,1,1]"), t3("[0,1,1,1,1,0,1,0,1]"), AngleGridPoint{29, 15}},
      {t2("[0,1,1,1]"), t3("[1,0,1,0,1,1,1,1,0]"), AngleGridPoint{19, 33}},
      {t2("[1,0,0,0]"), t3("[0,1,0,1,0,0,0,0,1]"), AngleGridPoint{19, 33}},
      {t2("[1,0,0,0]"), t3("[1,0,0,0,0,1,0,1,0]"), AngleGridPoint{29, 15}},
      {t2("[1,0,1,1]"), t3("[0,1,1,1,1,0,1,0,1]"), AngleGridPoint{15, 29}},
      {t2("[1,0,1,1]"), t3("[1,0,1,0,1,1,1,1,0]"), AngleGridPoint{33, 19}},
  };
  return rows;
}

const std::vector<DistinguisherRow>& table3() {
  static const std::vector<DistinguisherRow> rows{
      {t2("[0,0,0,1]"), t2("[0,1,1,0]"), t3("[0,1,0,1,0,0,0,1,1]"), 0.85, 0.53, 0.32},
      {t2("[0,0,0,1]"), t2("[0,1,1,0]"), t3("[0,1,0,1,0,0,1,1,1]"), 0.85, 0.51, 0.34},
      {t2("[0,0,0,1]"), t2("[1,0,0,1]"), t3("[1,0,1,0,1,1,1,1,1]"), 0.85, 0.45, 0.4},
      {t2("[0,0,1,0]"), t2("[1,0,0,1]"), t3("[1,0,0,0,1,1,1,0,1]"), 0.85, 0.41, 0.44},
      {t2("[0,0,1,1]"), t2("[0,1,1,0]"), t3("[0,1,0,1,0,0,0,0,1]"), 0.85, 0.39, 0.46},
      {t2("[0,1,0,0]"), t2("[0,1,1,0]"), t3("[0,1,1,1,0,1,1,1,1]"), 0.85, 0.42, 0.43},
      {t2("[0,1,0,1]"), t2("[0,1,1,0]"), t3("[0,1,1,1,0,1,0,1,0]"), 0.85, 0.46, 0.39},
      {t2("[0,1,1,1]"), t2("[0,1,1,0]"), t3("[0,1,0,1,0,1,0,1,0]"), 0.85, 0.45, 0.4},
      {t2("[1,0,0,1]"), t2("[1,0,0,1]"), t3("[1,0,1,0,1,0,1,0,1]"), 0.85, 0.53, 0.32},
      {t2("[1,0,1,0]"), t2("[1,0,0,1]"), t3("[1,0,0,0,1,0,1,0,1]"), 0.85, 0.46, 0.39},
      {t2("[1,0,1,1]"), t2("[0,1,1,0]"), t3("[0,1,0,1,0,1,0,0,0]"), 0.85, 0.44, 0.41},
      {t2("[1,1,0,0]"), t2("[1,0,0,1]"), t3("[1,0,1,0,1,1,1,1,0]"), 0.85, 0.39, 0.46},
      {t2("[1,1,1,0]"), t2("[0,1,1,0]"), t3("[0,1,1,1,0,0,0,0,0]"), 0.85, 0.41, 0.44},
  };
  return rows;
}

const std::vector<DistinguisherRow>& table4() {
  static const std::vector<DistinguisherRow> rows{
      {t2("[0,1,0,0]"), t2("[0,1,1,0]"), t3("[0,1,0,1,0,0,0,0,1]"), 0.46, 0.86, 0.4},
      {t2("[0,1,0,0]"), t2("[1,0,0,0]"), t3("[1,0,0,0,0,1,0,1,0]"), 0.64, 0.86, 0.22},
      {t2("[0,1,1,1]"), t2("[0,1,1,1]"), t3("[0,1,1,1,1,0,1,0,1]"), 0.63, 0.86, 0.23},
      {t2("[0,1,1,1]"), t2("[1,0,0,1]"), t3("[1,0,1,0,1,1,1,1,0]"), 0.48, 0.86, 0.38},
      {t2("[1,0,0,0]"), t2("[0,1,1,0]"), t3("[0,1,0,1,0,0,0,0,1]"), 0.48, 0.86, 0.38},
      {t2("[1,0,0,0]"), t2("[1,0,0,0]"), t3("[1,0,0,0,0,1,0,1,0]"), 0.63, 0.86, 0.23},
      {t2("[1,0,1,1]"), t2("[0,1,1,1]"), t3("[0,1,1,1,1,0,1,0,1]"), 0.64, 0.86, 0.22},
      {t2("[1,0,1,1]"), t2("[1,0,0,1]"), t3("[1,0,1,0,1,1,1,1,0]"), 0.46, 0.86, 0.4},
  };
  return rows;
}

const std::vector<DistinguisherRow>& table5() {
  static const std::vector<DistinguisherRow> rows{
      {t2("[0,0,0,1]"), t2("[1,0,1,1]"), t3("[1,0,0,1,1,0,0,0,0]"), 0.29, 0.76, 0.47},
      {t2("[0,0,0,1]"), t2("[1,0,1,1]"), t3("[1,0,0,1,1,0,0,0,1]"), 0.29, 0.77, 0.48},
      {t2("[0,0,0,1]"), t2("[1,0,1,1]"), t3("[1,0,0,1,1,0,0,1,0]"), 0.29, 0.77, 0.48},
      {t2("[0,0,0,1]"), t2("[1,0,1,1]"), t3("[1,0,0,1,1,0,0,1,1]"), 0.29, 0.77, 0.48},
      {t2("[0,0,0,1]"), t2("[1,0,1,1]"), t3("[1,0,1,1,1,0,0,0,0]"), 0.29, 0.76, 0.47},
      {t2("[0,0,0,1]"), t2("[1,0,1,1]"), t3("[1,0,1,1,1,0,0,0,1]"), 0.29, 0.75, 0.46},
      {t2("[0,0,0,1]"), t2("[1,0,1,1]"), t3("[1,0,1,1,1,0,0,1,0]"), 0.29, 0.77, 0.48},
      {t2("[0,0,0,1]"), t2("[1,0,1,1]"), t3("[1,0,1,1,1,0,0,1,1]"), 0.29, 0.76, 0.47},
      {t2("[0,0,1,0]"), t2("[1,0,1,1]"), t3("[1,0,0,1,1,0,0,0,0]"), 0.21, 0.76, 0.55},
      {t2("[0,0,1,0]"), t2("[1,0,1,1]"), t3("[1,0,0,1,1,0,0,0,1]"), 0.21, 0.77, 0.56},
      {t2("[0,0,1,0]"), t2("[1,0,1,1]"), t3("[1,0,0,1,1,0,0,1,0]"), 0.21, 0.77, 0.56},
      {t2("[0,0,1,0]"), t2("[1,0,1,1]"), t3("[1,0,0,1,1,0,0,1,1]"), 0.21, 0.77, 0.56},
      {t2("[0,0,1,0]"), t2("[1,0,1,1]"), t3("[1,0,1,1,1,0,0,1,1]"), 0.21, 0.76, 0.55},
      {t2("[0,0,1,1]"), t2("[1,0,1,1]"), t3("[1,0,0,1,1,0,0,1,1]"), 0.36, 0.81, 0.45},
      {t2("[0,0,1,1]"), t2("[1,0,1,1]"), t3("[1,0,1,1,1,0,0,1,1]"), 0.36, 0.84, 0.48},
      {t2("[1,1,0,0]"), t2("[0,1,0,0]"), t3("[0,1,0,0,0,1,1,0,0]"), 0.36, 0.84, 0.48},
      {t2("[1,1,0,0]"), t2("[0,1,0,0]"), t3("[0,1,1,0,0,1,1,0,0]"), 0.36, 0.81, 0.45},
      {t2("[1,1,0,1]"), t2("[0,1,0,0]"), t3("[0,1,0,0,0,1,1,0,0]"), 0.21, 0.76, 0.55},
      {t2("[1,1,0,1]"), t2("[0,1,0,0]"), t3("[0,1,0,0,0,1,1,0,1]"), 0.21, 0.77, 0.56},
      {t2("[1,1,0,1]"), t2("[0,1,0,0]"), t3("[0,1,0,0,0,1,1,1,0]"), 0.21, 0.75, 0.54},
      {t2("[1,1,0,1]"), t2("[0,1,0,0]"), t3("[0,1,0,0,0,1,1,1,1]"), 0.21, 0.76, 0.55},
      {t2("[1,1,0,1]"), t2("[0,1,0,0]"), t3("[0,1,1,0,0,1,1,0,0]"), 0.21, 0.77, 0.56},
      {t2("[1,1,0,1]"), t2("[0,1,0,0]"), t3("[0,1,1,0,0,1,1,0,1]"), 0.21, 0.77, 0.56},
      {t2("[1,1,0,1]"), t2("[0,1,0,0]"), t3("[0,1,1,0,0,1,1,1,0]"), 0.21, 0.77, 0.56},
      {t2("[1,1,0,1]"), t2("[0,1,0,0]"), t3("[0,1,1,0,0,1,1,1,1]"), 0.21, 0.76, 0.55},
      {t2("[1,1,1,0]"), t2("[0,1,0,0]"), t3("[0,1,0,0,0,1,1,0,0]"), 0.29, 0.76, 0.47},
      {t2("[1,1,1,0]"), t2("[0,1,0,0]"), t3("[0,1,0,0,0,1,1,0,1]"), 0.29, 0.77, 0.48},
      {t2("[1,1,1,0]"), t2("[0,1,0,0]"), t3("[0,1,0,0,0,1,1,1,0]"), 0.29, 0.75, 0.46},
      {t2("[1,1,1,0]"), t2("[0,1,0,0]"), t3("[0,1,0,0,0,1,1,1,1]"), 0.29, 0.76, 0.47},
      {t2("[1,1,1,0]"), t2("[0,1,0,0]"), t3("[0,1,1,0,0,1,1,0,0]"), 0.29, 0.77, 0.48},
      {t2("[1,1,1,0]"), t2("[0,1,0,0]"), t3("[0,1,1,0,0,1,1,0,1]"), 0.29, 0.77, 0.48},
      {t2("[1,1,1,0]"), t2("[0,1,0,0]"), t3("[0,1,1,0,0,1,1,1,0]"), 0.29, 0.77, 0.48},
      {t2("[1,1,1,0]"), t2("[0,1,0,0]"), t3("[0,1,1,0,0,1,1,1,1]"), 0.29, 0.76, 0.47},
  };
  return rows;
}

const std::vector<AngleGridPoint>& chsh_top_class() {
  // (pi/8, 7pi/8), (pi/8, 15pi/8), (9pi/8, 7pi/8), (9pi/8, 15pi/8)
  static const std::vector<AngleGridPoint> points{{4, 28}, {4, 60}, {36, 28}, {36, 60}};
  return points;
}

const std::vector<AngleGridPoint>& embedded_xor_top_class() {
  static const std::vector<AngleGridPoint> points{{33, 1}, {33, 2}, {34, 1}, {34, 2}};
  return points;
}

}  // namespace dimdist::published
