// Acceptance suite: one PASS/FAIL line per criterion, sub-check details below
// each line, and a machine-readable acceptance_report.json in the working dir.
//
//   acceptance [--allow-red 4,5,6] [--report path]
//
// Exit status is 0 only when every criterion passes, or when the failing set
// is exactly the --allow-red set (a criterion on that list that starts
// passing is also reported, so the list cannot go stale silently).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dimdist/catalog.hpp"
#include "dimdist/error.hpp"
#include "dimdist/reference_tables.hpp"
#include "dimdist/report.hpp"
#include "dimdist/simulator.hpp"

using namespace dimdist;
using report::json;

namespace {

class Criterion {
 public:
  Criterion(int id, std::string title) : id_(id), title_(std::move(title)) {}

  /// Records one sub-check; returns `ok` for chaining.
  bool check(bool ok, const std::string& what) {
    checks_.push_back({ok, what});
    return ok;
  }
  void note(const std::string& text) { notes_.push_back(text); }
  void seconds(double s) { seconds_ = s; }

  bool passed() const {
    for (const auto& c : checks_) {
      if (!c.ok) return false;
    }
    return !checks_.empty();
  }
  int id() const { return id_; }

  void print() const {
    std::printf("[%s] criterion %d: %s (%.2f s)\n", passed() ? "PASS" : "FAIL", id_, title_.c_str(), seconds_);
    for (const auto& c : checks_) std::printf("    %s %s\n", c.ok ? "ok  " : "FAIL", c.what.c_str());
    for (const auto& n : notes_) std::printf("    note %s\n", n.c_str());
  }

  json to_json() const {
    json checks = json::array();
    for (const auto& c : checks_) checks.push_back({{"ok", c.ok}, {"check", c.what}});
    return {{"criterion", id_}, {"title", title_},   {"passed", passed()},
            {"seconds", seconds_}, {"checks", checks}, {"notes", notes_}};
  }

  json extra = json::object();

 private:
  struct Sub {
    bool ok;
    std::string what;
  };
  int id_;
  std::string title_;
  std::vector<Sub> checks_;
  std::vector<std::string> notes_;
  double seconds_ = 0.0;
};

template <class F>
double timed(F&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string point_str(AngleGridPoint p) {
  return "(" + report::format_grid_angle(p.i0) + ", " + report::format_grid_angle(p.i1) + ")";
}

std::string results_bytes(const std::vector<SweepResult>& rs) {
  json arr = json::array();
  for (const auto& r : rs) arr.push_back(report::to_json(r));
  return arr.dump();
}

// ---------------------------------------------------------------------------

Criterion criterion1() {
  Criterion c(1, "CHSH optimum on the grid and closed-form agreement");
  const double secs = timed([&] {
    const GridKernel k(Dimension::Two);
    const auto spec = GameSpec::game1(tables::kAnd, tables::kXor);
    const auto s = k.surface(spec);
    const auto r = find_max(s);
    const double want = (2 + std::numbers::sqrt2) / 4;
    c.check(std::fabs(r.max_value - want) < 1e-6, "grid max " + fmt("%.10f", r.max_value) + " = (2+sqrt2)/4 within 1e-6");
    const auto p = AngleGridPoint::make(4, 60);
    c.check(std::find(r.argmax.begin(), r.argmax.end(), p) != r.argmax.end(), "(pi/8, 15pi/8) is in the argmax set");
    double worst = 0.0;
    for (int flat = 0; flat < kGridPoints; ++flat) {
      const auto q = AngleGridPoint::from_flat(flat);
      worst = std::max(worst, std::fabs(s.values[flat] - chsh_closed_form(q.theta0(), q.theta1())));
    }
    c.check(worst <= 1e-12, "closed form vs Born rule on 4096 points: max diff " + fmt("%.2e", worst));
  });
  c.check(secs < 1.0, "runtime " + fmt("%.3f", secs) + " s < 1 s");
  c.seconds(secs);
  return c;
}

Criterion criterion2(const Catalog& cat) {
  Criterion c(2, "Game-1 maxima groups");
  const double secs = timed([&] {
    const auto groups = cat.build_table1();
    std::set<std::string> keys;
    for (const auto& g : groups) keys.insert(g.key.str());
    c.check(keys == std::set<std::string>{"0.85", "0.80", "0.67", "0.55", "0.50"},
            "distinct 2-decimal maxima are {0.85, 0.80, 0.67, 0.55, 0.50}");

    int parity_at_top = 0;
    for (const auto& r : cat.sweep(Dimension::Two)) {
      const auto g = std::get<TruthTable2>(r.spec.g);
      if ((g == tables::kXor || g == tables::kXnor) && round_key(r.max_value, cat.precision()).str() == "0.85") {
        ++parity_at_top;
      }
    }
    c.check(parity_at_top == 28, "all 28 XOR/XNOR pairs at 0.85 (" + std::to_string(parity_at_top) + ")");

    // Independent brute force (tests/oracle/born_rule_oracle.py, truncating to 2 decimals).
    const std::vector<std::pair<std::string, std::size_t>> oracle{
        {"0.85", 28}, {"0.80", 32}, {"0.67", 48}, {"0.55", 32}, {"0.50", 56}};
    bool counts_ok = groups.size() == oracle.size();
    std::string got;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      got += groups[i].key.str() + ":" + std::to_string(groups[i].pairs.size()) + " ";
      counts_ok = counts_ok && i < oracle.size() && groups[i].key.str() == oracle[i].first &&
                  groups[i].pairs.size() == oracle[i].second;
    }
    c.check(counts_ok, "group counts equal the oracle: " + got);

    json conc = json::array();
    int printed_total = 0;
    for (const auto& row : report::check_table1(cat)) {
      printed_total += row.printed->count;
      conc.push_back(report::to_json(row));
      if (!row.count_ok || !row.values_ok) {
        c.note("printed row '" + row.printed->lhs + " / " + row.printed->rhs + "' count " +
               std::to_string(row.printed->count) + " vs brute force " + std::to_string(row.matching_pairs));
      }
    }
    c.note("printed counts sum to " + std::to_string(printed_total) + " over 196 pairs");
    c.extra["printed_table_concordance"] = std::move(conc);
  });
  c.check(secs < 10.0, "runtime " + fmt("%.3f", secs) + " s < 10 s");
  c.seconds(secs);
  return c;
}

Criterion criterion3(const Catalog& cat) {
  Criterion c(3, "Game-2 AND / embedded XOR maximum");
  const double secs = timed([&] {
    const auto spec = GameSpec::game2(tables::kAnd, tables::kEmbeddedXor);
    const auto s = cat.kernel(Dimension::Three).surface(spec);
    const auto r = find_max(s);
    const auto key = round_key(r.max_value, cat.precision());
    c.check(key.str() == "0.76", "max " + fmt("%.10f", r.max_value) + " reads " + key.str());
    const auto p = AngleGridPoint::make(published::kEmbeddedXorI0, published::kEmbeddedXorI1);
    c.check(round_key(s.at(p), cat.precision()) == key,
            "value at (17pi/16, pi/16) is " + fmt("%.10f", s.at(p)) + ", same presentation value");
  });
  c.seconds(secs);
  return c;
}

Criterion criterion4(const Catalog& cat) {
  Criterion c(4, "Game-2 maximal pairs");
  double sweep_secs = 0.0;
  const double secs = timed([&] {
    sweep_secs = timed([] { (void)sweep_all(Dimension::Three, kDefaultTieTolerance, 1); });
    const auto top = cat.build_game2_max();
    c.check(top.size() == 8, std::to_string(top.size()) + " pairs at " + cat.global_max_key(Dimension::Three).str());
    json conc = json::array();
    bool set_ok = true;
    for (const auto& row : report::check_table2(cat)) {
      set_ok = set_ok && row.in_computed_set;
      conc.push_back(report::to_json(row));
      c.check(row.attains, to_string(row.printed->f) + " " + to_string(row.printed->g3) + " at " +
                               point_str(row.printed->point) + ": " + fmt("%.4f", row.value_at_point) + " vs pair max " +
                               fmt("%.4f", row.pair_max));
    }
    c.check(set_ok && top.size() == published::table2().size(), "pair set equals the printed set");
    c.extra["printed_table_concordance"] = std::move(conc);
  });
  c.check(sweep_secs < 60.0, "single-threaded 7140-pair sweep " + fmt("%.2f", sweep_secs) + " s < 60 s");
  c.seconds(secs);
  return c;
}

Criterion criterion5(const Catalog& cat) {
  Criterion c(5, "Equivalence classes of Bob's bases");
  const double secs = timed([&] {
    const Catalog one(Precision{1, cat.precision().mode});
    const auto chsh = GameSpec::game1(tables::kAnd, tables::kXor);
    const auto emb = GameSpec::game2(tables::kAnd, tables::kEmbeddedXor);

    const auto c1 = one.basis_classes(chsh);
    c.check(c1.size() == published::kChshBasisClasses1dp,
            "(2, AND, XOR): " + std::to_string(c1.size()) + " classes at 1 decimal");
    const auto c2 = cat.basis_classes(chsh);
    const auto& top = c2.front().members;
    const auto& listed = published::chsh_top_class();
    bool listed_inside = true;
    for (const auto& p : listed) listed_inside = listed_inside && std::find(top.begin(), top.end(), p) != top.end();
    c.check(listed_inside, "the 4 listed points lie in the " + c2.front().key.str() + " class");
    c.check(top.size() == 4, "the " + c2.front().key.str() + " class has 4 members (has " + std::to_string(top.size()) + ")");
    const auto exact = find_max(cat.kernel(Dimension::Two).surface(chsh));
    c.note("the exact-maximum tie set is " + std::to_string(exact.argmax.size()) + " points and equals the listed four: " +
           (exact.argmax == listed ? "yes" : "no"));

    const auto e1 = one.basis_classes(emb);
    c.check(e1.size() == published::kEmbeddedXorBasisClasses1dp,
            "(3, AND, EmbXOR): " + std::to_string(e1.size()) + " classes at 1 decimal");
    const auto e2 = cat.basis_classes(emb);
    c.check(e2.front().key.str() == "0.76" && e2.front().members == published::embedded_xor_top_class(),
            "(3, AND, EmbXOR): 0.76 class is exactly the listed 4 points");
  });
  c.seconds(secs);
  return c;
}

Criterion criterion6(const Catalog& cat) {
  Criterion c(6, "Distinguisher catalogs against the printed tables");
  const double secs = timed([&] {
    const auto d1 = cat.build_d1();
    const auto d2 = cat.build_d2();
    const auto d3 = cat.build_d3(published::kD3Threshold);
    c.check(d2.size() == 8, "D2 has " + std::to_string(d2.size()) + " records");
    bool gaps_ok = true;
    for (const auto& r : d3) gaps_ok = gaps_ok && r.gap > published::kD3Threshold;
    c.check(gaps_ok, "all " + std::to_string(d3.size()) + " D3 records have gap > 0.44");

    json disc = json::array();
    const std::vector<std::pair<int, const std::vector<DistinguisherRecord>*>> tables{{3, &d1}, {4, &d2}, {5, &d3}};
    for (const auto& [n, recs] : tables) {
      const auto checks = report::check_distinguishers(cat, n, *recs);
      std::size_t ok = 0, max_ok = 0, other_ok = 0, emitted = 0;
      for (const auto& ch : checks) {
        ok += ch.ok();
        max_ok += ch.maximised_ok;
        other_ok += ch.other_ok;
        emitted += ch.in_catalog;
        if (!ch.ok()) {
          json j = report::to_json(ch, cat.precision());
          j["table"] = n;
          disc.push_back(std::move(j));
        }
      }
      c.check(ok == checks.size(), "table " + std::to_string(n) + ": " + std::to_string(ok) + "/" +
                                       std::to_string(checks.size()) + " rows reproduced (optimised game " +
                                       std::to_string(max_ok) + ", other game " + std::to_string(other_ok) +
                                       ", emitted by catalog " + std::to_string(emitted) + ")");
    }
    c.extra["discrepancies"] = std::move(disc);
  });
  c.seconds(secs);
  return c;
}

Criterion criterion7() {
  Criterion c(7, "Protocol simulation");
  double slowest = 0.0;
  const double secs = timed([&] {
    for (auto d : {Dimension::Two, Dimension::Three}) {
      ProtocolConfig cfg;
      cfg.true_dim = d;
      cfg.rounds = 100000;
      cfg.seed = 20240601;
      ProtocolResult r;
      slowest = std::max(slowest, timed([&] { r = run_protocol(cfg); }));
      const double e = r.expected_S(d);
      c.check(std::fabs(r.S - e) <= 0.005, "d=" + std::to_string(to_int(d)) + ": S " + fmt("%.5f", r.S) +
                                               " vs E[S] " + fmt("%.5f", e) + " (n = 1e5)");
    }
    ProtocolConfig probe;
    probe.rounds = 1;
    const auto pr = run_protocol(probe);
    const auto n = required_rounds(std::fabs(pr.expected_d2 - pr.expected_d3), 0.01);
    for (auto d : {Dimension::Two, Dimension::Three}) {
      int correct = 0;
      for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        ProtocolConfig cfg;
        cfg.true_dim = d;
        cfg.rounds = n;
        cfg.seed = seed;
        correct += run_protocol(cfg).decided_dim == to_int(d);
      }
      c.check(correct >= 198, "d=" + std::to_string(to_int(d)) + ": " + std::to_string(correct) +
                                  "/200 correct decisions at n = " + std::to_string(n));
    }
  });
  c.check(slowest < 5.0, "slowest 1e5-round run " + fmt("%.3f", slowest) + " s < 5 s");
  c.seconds(secs);
  return c;
}

Criterion criterion8() {
  Criterion c(8, "Property suites");
  const double secs = timed([&] {
    double ortho = 0.0, norm = 0.0;
    for (auto d : {Dimension::Two, Dimension::Three}) {
      const auto psi = max_entangled(d);
      std::array<OrthonormalBasis, 2> alice{alice_basis(d, 0), alice_basis(d, 1)};
      for (const auto& a : alice) ortho = std::max(ortho, a.orthonormality_defect());
      for (int i0 = 0; i0 < kGridSize; ++i0) {
        for (int i1 = 0; i1 < kGridSize; ++i1) {
          for (int y = 0; y < 2; ++y) {
            const auto b = bob_basis(d, y, grid_angle(i0), grid_angle(i1));
            ortho = std::max(ortho, b.orthonormality_defect());
            for (const auto& a : alice) norm = std::max(norm, std::fabs(joint_distribution(psi, a, b).total() - 1.0));
          }
        }
      }
    }
    c.check(ortho <= 1e-12, "orthonormality, all constructors x all grid points: " + fmt("%.2e", ortho));
    c.check(norm <= 1e-12, "joint distributions sum to 1: " + fmt("%.2e", norm));

    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
    const auto f2 = enumerate_f2();
    const auto g3 = enumerate_g3();
    double comp = 0.0;
    for (int i = 0; i < 500; ++i) {
      const auto f = f2[rng() % f2.size()];
      const GameSpec spec = (i % 2) ? GameSpec::game2(f, g3[rng() % g3.size()]) : GameSpec::game1(f, f2[rng() % f2.size()]);
      const double t0 = angle(rng), t1 = angle(rng);
      comp = std::max(comp, std::fabs(win_probability(spec, t0, t1) - win_probability(spec.complement(), t0, t1)));
    }
    c.check(comp <= 1e-12, "complement symmetry on 500 random pairs: " + fmt("%.2e", comp));

    const GridKernel k2(Dimension::Two);
    double proj = 0.0;
    for (auto g : {tables::kFirst, tables::kSecond, tables::kNotFirst, tables::kNotSecond}) {
      for (auto f : f2) {
        for (double v : k2.surface(GameSpec::game1(f, g)).values) proj = std::max(proj, std::fabs(v - 0.5));
      }
    }
    c.check(proj <= 1e-12, "projection rows constant at 0.5 on the full grid: " + fmt("%.2e", proj));

    for (auto d : {Dimension::Two, Dimension::Three}) {
      const auto base = results_bytes(sweep_all(d, kDefaultTieTolerance, 1));
      bool same = true;
      for (int t : {2, 4}) same = same && results_bytes(sweep_all(d, kDefaultTieTolerance, t)) == base;
      c.check(same, "sweep_all d=" + std::to_string(to_int(d)) + " byte-identical for 1, 2, 4 threads");
    }
  });
  c.seconds(secs);
  return c;
}

std::set<int> parse_ids(const std::string& text) {
  std::set<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.insert(std::stoi(item));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> allow_red;
  std::string report_path = "acceptance_report.json";
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--allow-red") && i + 1 < argc) {
      allow_red = parse_ids(argv[++i]);
    } else if (!std::strcmp(argv[i], "--report") && i + 1 < argc) {
      report_path = argv[++i];
    } else {
      std::fprintf(stderr, "usage: acceptance [--allow-red 4,5,6] [--report path]\n");
      return 2;
    }
  }

  const Catalog cat;
  std::vector<std::function<Criterion()>> runs{
      criterion1,
      [&] { return criterion2(cat); },
      [&] { return criterion3(cat); },
      [&] { return criterion4(cat); },
      [&] { return criterion5(cat); },
      [&] { return criterion6(cat); },
      criterion7,
      criterion8,
  };

  std::vector<Criterion> results;
  for (auto& run : runs) {
    results.push_back(run());
    results.back().print();
    std::fflush(stdout);
  }

  std::set<int> failed;
  json out = json::array();
  for (const auto& r : results) {
    if (!r.passed()) failed.insert(r.id());
    json j = r.to_json();
    j.update(r.extra);
    out.push_back(std::move(j));
  }
  try {
    report::write_json(report_path, {{"criteria", out}});
  } catch (const IoError& e) {
    std::fprintf(stderr, "%s\n", e.what());
  }

  std::printf("\n%zu/%zu criteria pass", results.size() - failed.size(), results.size());
  if (!failed.empty()) {
    std::printf("; failing:");
    for (int id : failed) std::printf(" %d", id);
  }
  std::printf("\n");
  if (failed == allow_red) {
    if (!failed.empty()) std::printf("failing set matches --allow-red; see README for the analysis of each\n");
    return 0;
  }
  std::printf("failing set differs from --allow-red\n");
  return 1;
}
