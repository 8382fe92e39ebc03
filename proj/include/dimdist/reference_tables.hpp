#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dimdist/sweep.hpp"
#include "dimdist/truth_table.hpp"

namespace dimdist::published {

/// One printed Game-1 summary row: a predicate over (f, g), the printed
/// probability and the printed pair count.
struct Table1Row {
  std::string lhs;
  std::string rhs;
  double probability;
  int count;
  std::function<bool(TruthTable2 f, TruthTable2 g)> matches;
};

struct Table2Row {
  TruthTable2 f;
  TruthTable3 g3;
  AngleGridPoint point;
};

/// Printed distinguisher row (tables for D1, D2, D3).
struct DistinguisherRow {
  TruthTable2 f;
  TruthTable2 g2p;
  TruthTable3 g3;
  double p_d2;
  double p_d3;
  double gap;
};

const std::vector<Table1Row>& table1();
const std::vector<Table2Row>& table2();
const std::vector<DistinguisherRow>& table3();
const std::vector<DistinguisherRow>& table4();
const std::vector<DistinguisherRow>& table5();

/// Listed top classes of Bob points: AND/XOR (qubits) and AND/EmbXOR (qutrits).
const std::vector<AngleGridPoint>& chsh_top_class();
const std::vector<AngleGridPoint>& embedded_xor_top_class();

inline constexpr double kChshMax = 0.85355;
inline constexpr int kChshBasisClasses1dp = 8;
inline constexpr int kEmbeddedXorBasisClasses1dp = 7;
inline constexpr double kEmbeddedXorValue = 0.76;
inline constexpr int kEmbeddedXorI0 = 34;  // 17 pi / 16
inline constexpr int kEmbeddedXorI1 = 2;   // pi / 16
inline constexpr double kGame2Max = 0.86;
inline constexpr int kGame2MaxPairs = 8;
inline constexpr double kD3Threshold = 0.44;

}  // namespace dimdist::published
