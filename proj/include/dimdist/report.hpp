#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "dimdist/catalog.hpp"
#include "dimdist/reference_tables.hpp"
#include "dimdist/simulator.hpp"

namespace dimdist::report {

using json = nlohmann::ordered_json;

/// Shortest text that reads back to the same double ("%.17g").
std::string format_double(double v);

/// "15pi/8", "pi/16", "0"; index is a multiple of pi/32.
std::string format_grid_angle(int index);
/// Accepts "15pi/8", "-pi/4", "pi", "3*pi/16", "0", or a plain decimal in radians.
/// Throws InputError naming the token.
double parse_angle(std::string_view text);

json to_json(TruthTable2 t);
json to_json(TruthTable3 t);
json to_json(AngleGridPoint p);
json to_json(const GameSpec& spec);
json to_json(const SweepResult& r);
json to_json(const DistinguisherRecord& r);
json to_json(const ProtocolConfig& cfg);
json to_json(const ProtocolResult& r);

// ---- surfaces

/// 64 lines of 64 comma-separated values, row i0, column i1.
std::string surface_csv(const WinProbSurface& s);
json surface_json(const WinProbSurface& s, const SweepResult& max);

// ---- catalog exports

std::string table1_csv(const std::vector<Table1Group>& groups);
std::string game2_max_csv(const std::vector<SweepResult>& rows, Precision precision);
/// Columns f, g2p, g3, p_d2, p_d3, gap (presentation precision), then the point.
std::string distinguisher_csv(const std::vector<DistinguisherRecord>& records, Precision precision);
std::string classes_csv(const std::vector<BasisClass>& classes);
std::string classes_csv(const std::vector<PairClass>& classes);
std::string classes_csv(const std::vector<TupleClass>& classes, Dimension dim);

json classes_json(const std::vector<BasisClass>& classes);
json classes_json(const std::vector<PairClass>& classes);
json classes_json(const std::vector<TupleClass>& classes, Dimension dim);

// ---- concordance against the printed tables

struct Table1Check {
  const published::Table1Row* printed = nullptr;
  int matching_pairs = 0;                   // pairs satisfying the row predicate
  std::map<ClassKey, int, std::greater<>> by_key;  // their computed rounded maxima
  bool values_ok = false;                   // every matching pair sits at the printed value
  bool count_ok = false;                    // matching_pairs == printed count
};

struct Table2Check {
  const published::Table2Row* printed = nullptr;
  bool in_computed_set = false;
  double value_at_point = 0.0;
  double pair_max = 0.0;
  bool attains = false;  // rounded value at the printed point equals the rounded pair max
};

/// Printed distinguisher row against its recomputation. The maximised game's
/// value must be within tolerance of the printed one, and the other game's
/// printed value must match its value at some tie point of the maximiser.
struct DistinguisherCheck {
  const published::DistinguisherRow* printed = nullptr;
  DistinguisherRecord computed;
  bool restriction_ok = false;  // printed g2p == restrict_g3(g3)
  bool maximised_ok = false;
  bool other_ok = false;
  bool in_catalog = false;  // the catalog build emits this (f, g3)

  bool ok() const noexcept { return restriction_ok && maximised_ok && other_ok && in_catalog; }
};

inline constexpr double kRowTolerance = 0.01;

std::vector<Table1Check> check_table1(const Catalog& cat);
std::vector<Table2Check> check_table2(const Catalog& cat);
/// `table` is 3, 4 or 5; `records` the matching catalog build.
std::vector<DistinguisherCheck> check_distinguishers(const Catalog& cat, int table,
                                                     const std::vector<DistinguisherRecord>& records,
                                                     double tol = kRowTolerance);

json to_json(const Table1Check& c);
json to_json(const Table2Check& c);
json to_json(const DistinguisherCheck& c, Precision precision);

// ---- files

struct RunManifest {
  std::string command;
  json parameters = json::object();
  std::string version = DIMDIST_VERSION;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> outputs;
  double duration_seconds = 0.0;

  json to_json() const;
};

/// Creates parent directories. Throws IoError with the path on failure.
void write_text(const std::filesystem::path& path, std::string_view content);
void write_json(const std::filesystem::path& path, const json& j);

}  // namespace dimdist::report
