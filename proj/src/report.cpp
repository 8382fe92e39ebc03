#include "dimdist/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <numeric>
#include <sstream>

#include "dimdist/error.hpp"

namespace dimdist::report {
namespace {

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_number(std::string_view s, double& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::string spec_g_string(const GameSpec& spec) {
  return std::visit([](auto g) { return to_string(g); }, spec.g);
}

std::string point_columns(AngleGridPoint p) { return format_grid_angle(p.i0) + "," + format_grid_angle(p.i1); }

json tie_set_json(const std::vector<AngleGridPoint>& points) {
  json arr = json::array();
  for (const auto& p : points) arr.push_back(to_json(p));
  return arr;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_grid_angle(int index) {
  if (index == 0) return "0";
  const int g = std::gcd(index, 32);
  const int num = index / g;
  const int den = 32 / g;
  std::string s = num == 1 ? "pi" : std::to_string(num) + "pi";
  if (den != 1) s += "/" + std::to_string(den);
  return s;
}

double parse_angle(std::string_view text) {
  const std::string_view s = trim(text);
  const auto bad = [&]() { return InputError("cannot parse angle '" + std::string(text) + "'"); };
  double value = 0.0;
  const auto pi_pos = s.find("pi");
  if (pi_pos == std::string_view::npos) {
    if (!parse_number(s, value)) throw bad();
  } else {
    std::string_view coef = trim(s.substr(0, pi_pos));
    if (!coef.empty() && coef.back() == '*') coef = trim(coef.substr(0, coef.size() - 1));
    double num = 1.0;
    if (coef == "-") {
      num = -1.0;
    } else if (!coef.empty() && coef != "+" && !parse_number(coef, num)) {
      throw bad();
    }
    std::string_view rest = trim(s.substr(pi_pos + 2));
    double den = 1.0;
    if (!rest.empty()) {
      if (rest.front() != '/' || !parse_number(trim(rest.substr(1)), den) || den == 0.0) throw bad();
    }
    value = num * std::numbers::pi / den;
  }
  if (!std::isfinite(value)) throw bad();
  return value;
}

json to_json(TruthTable2 t) { return to_string(t); }
json to_json(TruthTable3 t) { return to_string(t); }

json to_json(AngleGridPoint p) {
  return {{"i0", p.i0}, {"i1", p.i1}, {"theta0", format_grid_angle(p.i0)}, {"theta1", format_grid_angle(p.i1)}};
}

json to_json(const GameSpec& spec) {
  return {{"dim", to_int(spec.dim)}, {"f", to_json(spec.f)}, {"g", spec_g_string(spec)}};
}

json to_json(const SweepResult& r) {
  json j = to_json(r.spec);
  j["max"] = r.max_value;
  j["canonical_argmax"] = to_json(r.canonical_argmax);
  j["argmax"] = tie_set_json(r.argmax);
  return j;
}

json to_json(const DistinguisherRecord& r) {
  json ties = json::array();
  for (std::size_t i = 0; i < r.tie_points.size(); ++i) {
    json t = to_json(r.tie_points[i]);
    t["other_value"] = r.other_values[i];
    ties.push_back(std::move(t));
  }
  return {{"class", to_string(r.tag)},
          {"f", to_json(r.f)},
          {"g2p", to_json(r.g2p)},
          {"g3", to_json(r.g3)},
          {"eval_point", to_json(r.eval_point)},
          {"p_d2", r.p_d2},
          {"p_d3", r.p_d3},
          {"gap", r.gap},
          {"maximised_dim", to_int(r.maximised)},
          {"other_min", r.other_min()},
          {"other_max", r.other_max()},
          {"tie_set", std::move(ties)}};
}

json to_json(const ProtocolConfig& cfg) {
  return {{"true_dim", to_int(cfg.true_dim)}, {"rounds", cfg.rounds},  {"theta0", cfg.theta0},
          {"theta1", cfg.theta1},             {"f", to_json(cfg.f)},   {"g_d2", to_json(cfg.g_d2)},
          {"g_d3", to_json(cfg.g_d3)},        {"seed", cfg.seed}};
}

json to_json(const ProtocolResult& r) {
  return {{"S", r.S},
          {"wins", r.wins},
          {"n", r.rounds},
          {"expected_S", {{"2", r.expected_d2}, {"3", r.expected_d3}}},
          {"decided_dim", r.decided_dim}};
}

std::string surface_csv(const WinProbSurface& s) {
  std::string out;
  out.reserve(kGridPoints * 24);
  for (int i0 = 0; i0 < kGridSize; ++i0) {
    for (int i1 = 0; i1 < kGridSize; ++i1) {
      if (i1) out += ',';
      out += format_double(s.at(i0, i1));
    }
    out += '\n';
  }
  return out;
}

json surface_json(const WinProbSurface& s, const SweepResult& max) {
  json rows = json::array();
  for (int i0 = 0; i0 < kGridSize; ++i0) {
    json row = json::array();
    for (int i1 = 0; i1 < kGridSize; ++i1) row.push_back(s.at(i0, i1));
    rows.push_back(std::move(row));
  }
  json j = to_json(s.spec);
  j["grid"] = {{"size", kGridSize}, {"step", "pi/32"}, {"layout", "rows theta0, columns theta1"}};
  j["max"] = max.max_value;
  j["canonical_argmax"] = to_json(max.canonical_argmax);
  j["argmax"] = tie_set_json(max.argmax);
  j["values"] = std::move(rows);
  return j;
}

std::string table1_csv(const std::vector<Table1Group>& groups) {
  std::string out = "probability,f,g,max,theta0,theta1\n";
  for (const auto& grp : groups) {
    for (const auto& r : grp.pairs) {
      out += grp.key.str() + "," + quoted(to_string(r.spec.f)) + "," + quoted(spec_g_string(r.spec)) + "," +
             format_double(r.max_value) + "," + point_columns(r.canonical_argmax) + "\n";
    }
  }
  return out;
}

std::string game2_max_csv(const std::vector<SweepResult>& rows, Precision precision) {
  std::string out = "f,g3,probability,theta0,theta1,max\n";
  for (const auto& r : rows) {
    out += quoted(to_string(r.spec.f)) + "," + quoted(spec_g_string(r.spec)) + "," +
           round_key(r.max_value, precision).str() + "," + point_columns(r.canonical_argmax) + "," +
           format_double(r.max_value) + "\n";
  }
  return out;
}

std::string distinguisher_csv(const std::vector<DistinguisherRecord>& records, Precision precision) {
  std::string out = "f,g2p,g3,p_d2,p_d3,gap,theta0,theta1\n";
  for (const auto& r : records) {
    out += quoted(to_string(r.f)) + "," + quoted(to_string(r.g2p)) + "," + quoted(to_string(r.g3)) + "," +
           round_key(r.p_d2, precision).str() + "," + round_key(r.p_d3, precision).str() + "," +
           round_key(r.gap, precision).str() + "," + point_columns(r.eval_point) + "\n";
  }
  return out;
}

std::string classes_csv(const std::vector<BasisClass>& classes) {
  std::string out = "probability,theta0,theta1\n";
  for (const auto& c : classes) {
    for (const auto& p : c.members) out += c.key.str() + "," + point_columns(p) + "\n";
  }
  return out;
}

std::string classes_csv(const std::vector<PairClass>& classes) {
  std::string out = "probability,f,g\n";
  for (const auto& c : classes) {
    for (const auto& spec : c.members) {
      out += c.key.str() + "," + quoted(to_string(spec.f)) + "," + quoted(spec_g_string(spec)) + "\n";
    }
  }
  return out;
}

std::string classes_csv(const std::vector<TupleClass>& classes, Dimension dim) {
  const auto pairs = enumerate_pairs(dim);
  std::string out = "probability,f,g,theta0,theta1\n";
  for (const auto& c : classes) {
    for (const auto& m : c.members) {
      const auto& spec = pairs.at(m.pair_index);
      out += c.key.str() + "," + quoted(to_string(spec.f)) + "," + quoted(spec_g_string(spec)) + "," +
             point_columns(m.point) + "\n";
    }
  }
  return out;
}

json classes_json(const std::vector<BasisClass>& classes) {
  json arr = json::array();
  for (const auto& c : classes) {
    arr.push_back({{"probability", c.key.str()}, {"size", c.members.size()}, {"members", tie_set_json(c.members)}});
  }
  return arr;
}

json classes_json(const std::vector<PairClass>& classes) {
  json arr = json::array();
  for (const auto& c : classes) {
    json members = json::array();
    for (const auto& spec : c.members) members.push_back({{"f", to_json(spec.f)}, {"g", spec_g_string(spec)}});
    arr.push_back({{"probability", c.key.str()}, {"size", c.members.size()}, {"members", std::move(members)}});
  }
  return arr;
}

json classes_json(const std::vector<TupleClass>& classes, Dimension dim) {
  const auto pairs = enumerate_pairs(dim);
  json arr = json::array();
  for (const auto& c : classes) {
    json members = json::array();
    for (const auto& m : c.members) {
      const auto& spec = pairs.at(m.pair_index);
      members.push_back({{"f", to_json(spec.f)}, {"g", spec_g_string(spec)}, {"point", to_json(m.point)}});
    }
    arr.push_back({{"probability", c.key.str()}, {"size", c.members.size()}, {"members", std::move(members)}});
  }
  return arr;
}

std::vector<Table1Check> check_table1(const Catalog& cat) {
  const auto& results = cat.sweep(Dimension::Two);
  std::vector<Table1Check> out;
  for (const auto& row : published::table1()) {
    Table1Check c;
    c.printed = &row;
    const ClassKey want = round_key(row.probability, cat.precision());
    c.values_ok = true;
    for (const auto& r : results) {
      if (!row.matches(r.spec.f, std::get<TruthTable2>(r.spec.g))) continue;
      ++c.matching_pairs;
      const ClassKey k = round_key(r.max_value, cat.precision());
      ++c.by_key[k];
      if (k != want) c.values_ok = false;
    }
    c.values_ok = c.values_ok && c.matching_pairs > 0;
    c.count_ok = c.matching_pairs == row.count;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Table2Check> check_table2(const Catalog& cat) {
  const auto top = cat.build_game2_max();
  const auto& k3 = cat.kernel(Dimension::Three);
  std::vector<Table2Check> out;
  for (const auto& row : published::table2()) {
    Table2Check c;
    c.printed = &row;
    c.in_computed_set = std::any_of(top.begin(), top.end(), [&](const SweepResult& r) {
      return r.spec.f == row.f && std::get<TruthTable3>(r.spec.g) == row.g3;
    });
    const auto spec = GameSpec::game2(row.f, row.g3);
    c.value_at_point = k3.win_probability(spec, row.point);
    c.pair_max = cat.game2(row.f, row.g3).max_value;
    c.attains = round_key(c.value_at_point, cat.precision()) == round_key(c.pair_max, cat.precision());
    out.push_back(c);
  }
  return out;
}

std::vector<DistinguisherCheck> check_distinguishers(const Catalog& cat, int table,
                                                     const std::vector<DistinguisherRecord>& records,
                                                     double tol) {
  const std::vector<published::DistinguisherRow>* rows = nullptr;
  DistinguisherClass tag{};
  switch (table) {
    case 3:
      rows = &published::table3();
      tag = DistinguisherClass::D1;
      break;
    case 4:
      rows = &published::table4();
      tag = DistinguisherClass::D2;
      break;
    case 5:
      rows = &published::table5();
      tag = DistinguisherClass::D3;
      break;
    default:
      throw InputError("no distinguisher table " + std::to_string(table));
  }
  constexpr double kSlack = 1e-9;  // printed values are exact decimals
  std::vector<DistinguisherCheck> out;
  for (const auto& row : *rows) {
    Dimension maximised = Dimension::Two;
    if (tag == DistinguisherClass::D2) maximised = Dimension::Three;
    if (tag == DistinguisherClass::D3) maximised = cat.d3_winner(row.f, row.g3);
    DistinguisherCheck c;
    c.printed = &row;
    c.computed = cat.record_for(row.f, row.g3, maximised, tag);
    c.restriction_ok = restrict_g3(row.g3) == row.g2p;
    const bool two = maximised == Dimension::Two;
    const double best = two ? c.computed.p_d2 : c.computed.p_d3;
    const double printed_best = two ? row.p_d2 : row.p_d3;
    const double printed_other = two ? row.p_d3 : row.p_d2;
    c.maximised_ok = std::fabs(best - printed_best) <= tol + kSlack;
    c.other_ok = std::any_of(c.computed.other_values.begin(), c.computed.other_values.end(),
                             [&](double v) { return std::fabs(v - printed_other) <= tol + kSlack; });
    c.in_catalog = std::any_of(records.begin(), records.end(),
                               [&](const DistinguisherRecord& r) { return r.f == row.f && r.g3 == row.g3; });
    out.push_back(std::move(c));
  }
  return out;
}

json to_json(const Table1Check& c) {
  json by_key = json::object();
  for (const auto& [k, n] : c.by_key) by_key[k.str()] = n;
  return {{"lhs", c.printed->lhs},
          {"rhs", c.printed->rhs},
          {"printed_probability", c.printed->probability},
          {"printed_count", c.printed->count},
          {"computed_count", c.matching_pairs},
          {"computed_probabilities", std::move(by_key)},
          {"values_match", c.values_ok},
          {"count_matches", c.count_ok}};
}

json to_json(const Table2Check& c) {
  return {{"f", to_json(c.printed->f)},
          {"g3", to_json(c.printed->g3)},
          {"printed_point", to_json(c.printed->point)},
          {"in_computed_set", c.in_computed_set},
          {"value_at_printed_point", c.value_at_point},
          {"pair_max", c.pair_max},
          {"printed_point_attains_max", c.attains}};
}

json to_json(const DistinguisherCheck& c, Precision precision) {
  const auto& p = *c.printed;
  return {{"f", to_json(p.f)},
          {"g2p", to_json(p.g2p)},
          {"g3", to_json(p.g3)},
          {"printed", {{"p_d2", p.p_d2}, {"p_d3", p.p_d3}, {"gap", p.gap}}},
          {"computed",
           {{"p_d2", round_key(c.computed.p_d2, precision).str()},
            {"p_d3", round_key(c.computed.p_d3, precision).str()},
            {"gap", round_key(c.computed.gap, precision).str()}}},
          {"record", to_json(c.computed)},
          {"restriction_matches", c.restriction_ok},
          {"maximised_value_matches", c.maximised_ok},
          {"other_value_matches_some_tie_point", c.other_ok},
          {"emitted_by_catalog", c.in_catalog},
          {"status", c.ok() ? "match" : "discrepancy"}};
}

json RunManifest::to_json() const {
  json j = {{"command", command}, {"parameters", parameters}, {"version", version}};
  if (seed) j["seed"] = *seed;
  j["outputs"] = outputs;
  j["duration_seconds"] = duration_seconds;
  return j;
}

void write_text(const std::filesystem::path& path, std::string_view content) {
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw IoError(path.string(), "cannot create directory: " + ec.message());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.close();
  if (!out) throw IoError(path.string(), "write failed");
}

void write_json(const std::filesystem::path& path, const json& j) { write_text(path, j.dump(2) + "\n"); }

}  // namespace dimdist::report
