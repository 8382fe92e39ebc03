// dimdist: command-line front end for sweeps, tables, classes, catalogs and
// protocol simulation. Every command writes its files under --out together
// with a <name>.manifest.json describing how to regenerate them.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>

#include "CLI11.hpp"

#include "dimdist/catalog.hpp"
#include "dimdist/error.hpp"
#include "dimdist/report.hpp"
#include "dimdist/simulator.hpp"

namespace fs = std::filesystem;
using namespace dimdist;
using report::json;

namespace {

enum Exit { kOk = 0, kInternal = 1, kUsage = 2, kInput = 3, kIo = 4, kDegenerate = 5 };

struct Globals {
  int precision = 2;
  std::string rounding = "truncate";
  std::string out = "out";
  std::uint64_t seed = 0;
  int threads = 0;
  double threshold = 0.44;

  Precision make() const { return make_precision(precision, parse_rounding_mode(rounding)); }
};

/// Collects outputs and writes the manifest when the command finishes.
class Run {
 public:
  Run(const Globals& g, std::string command) : dir_(g.out), start_(std::chrono::steady_clock::now()) {
    manifest_.command = std::move(command);
    manifest_.parameters = {{"precision", g.precision},
                            {"rounding", g.rounding},
                            {"threads", g.threads},
                            {"threshold", g.threshold}};
  }

  json& params() { return manifest_.parameters; }
  void seed(std::uint64_t s) { manifest_.seed = s; }

  void text(const std::string& name, const std::string& content) {
    report::write_text(dir_ / name, content);
    manifest_.outputs.push_back((dir_ / name).string());
  }
  void json_file(const std::string& name, const json& j) {
    report::write_json(dir_ / name, j);
    manifest_.outputs.push_back((dir_ / name).string());
  }

  void finish(const std::string& stem) {
    manifest_.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    report::write_json(dir_ / (stem + ".manifest.json"), manifest_.to_json());
  }

 private:
  fs::path dir_;
  std::chrono::steady_clock::time_point start_;
  report::RunManifest manifest_;
};

AngleGridPoint grid_point(double theta0, double theta1) {
  const auto index = [](double theta) {
    const double step = std::numbers::pi / 32.0;
    const double k = std::round(theta / step);
    if (std::fabs(theta - k * step) > 1e-9) {
      throw InputError("angle " + report::format_double(theta) + " is not a multiple of pi/32");
    }
    return static_cast<int>(((static_cast<long long>(k) % kGridSize) + kGridSize) % kGridSize);
  };
  return AngleGridPoint::make(index(theta0), index(theta1));
}

GameSpec make_spec(int dim, const std::string& f, const std::string& g) {
  const Dimension d = make_dimension(dim);
  GameSpec spec = d == Dimension::Two ? GameSpec::game1(parse_table2(f), parse_table2(g))
                                      : GameSpec::game2(parse_table2(f), parse_table3(g));
  spec.validate();
  return spec;
}

std::string code_tag(const GameSpec& spec) {
  const unsigned g = std::visit([](auto t) { return t.code(); }, spec.g);
  return "d" + std::to_string(to_int(spec.dim)) + "_f" + std::to_string(spec.f.code()) + "_g" + std::to_string(g);
}

// ---- commands

int cmd_chsh(const Globals& gl) {
  Run run(gl, "chsh");
  const GridKernel k(Dimension::Two, gl.threads);
  const auto spec = GameSpec::game1(tables::kAnd, tables::kXor);
  const auto surface = k.surface(spec);
  const auto best = find_max(surface);
  double worst_gap = 0.0;
  for (int flat = 0; flat < kGridPoints; ++flat) {
    const auto p = AngleGridPoint::from_flat(flat);
    worst_gap = std::max(worst_gap, std::fabs(surface.values[flat] - chsh_closed_form(p.theta0(), p.theta1())));
  }
  const double closed = (2.0 + std::numbers::sqrt2) / 4.0;
  json j = report::to_json(best);
  j["closed_form_max"] = closed;
  j["max_abs_difference_closed_form_vs_born"] = worst_gap;
  run.json_file("chsh.json", j);
  run.finish("chsh");

  std::printf("closed-form max  %.9f\n", closed);
  std::printf("grid max         %.9f\n", best.max_value);
  std::printf("max |closed-form - Born rule| over grid: %.3g\n", worst_gap);
  std::printf("argmax (%zu):", best.argmax.size());
  for (const auto& p : best.argmax) {
    std::printf(" (%s, %s)", report::format_grid_angle(p.i0).c_str(), report::format_grid_angle(p.i1).c_str());
  }
  std::printf("\n");
  return kOk;
}

int cmd_table(const Globals& gl, int n) {
  const std::string stem = "table" + std::to_string(n);
  Run run(gl, "table " + std::to_string(n));
  const Catalog cat(gl.make(), gl.threads);
  const Precision prec = cat.precision();
  json j = {{"table", n}, {"precision", prec.decimals}, {"rounding", to_string(prec.mode)}};
  std::size_t rows = 0;
  std::size_t discrepancies = 0;

  if (n == 1) {
    const auto groups = cat.build_table1();
    json gj = json::array();
    for (const auto& g : groups) gj.push_back({{"probability", g.key.str()}, {"count", g.pairs.size()}});
    json conc = json::array();
    int printed_total = 0;
    for (const auto& c : report::check_table1(cat)) {
      printed_total += c.printed->count;
      if (!c.values_ok || !c.count_ok) ++discrepancies;
      conc.push_back(report::to_json(c));
    }
    j["groups"] = std::move(gj);
    j["pairs_total"] = cat.sweep(Dimension::Two).size();
    j["printed_count_total"] = printed_total;
    j["concordance"] = std::move(conc);
    rows = groups.size();
    run.text(stem + ".csv", report::table1_csv(groups));
    for (const auto& g : groups) std::printf("%s  %3zu pairs\n", g.key.str().c_str(), g.pairs.size());
  } else if (n == 2) {
    const auto top = cat.build_game2_max();
    json tj = json::array();
    for (const auto& r : top) tj.push_back(report::to_json(r));
    json conc = json::array();
    for (const auto& c : report::check_table2(cat)) {
      if (!c.in_computed_set || !c.attains) ++discrepancies;
      conc.push_back(report::to_json(c));
    }
    j["global_max_key"] = cat.global_max_key(Dimension::Three).str();
    j["rows"] = std::move(tj);
    j["concordance"] = std::move(conc);
    rows = top.size();
    run.text(stem + ".csv", report::game2_max_csv(top, prec));
  } else {
    std::vector<DistinguisherRecord> recs;
    if (n == 3) recs = cat.build_d1();
    if (n == 4) recs = cat.build_d2();
    if (n == 5) {
      recs = cat.build_d3(gl.threshold);
      j["threshold"] = gl.threshold;
    }
    json rj = json::array();
    for (const auto& r : recs) rj.push_back(report::to_json(r));
    json conc = json::array();
    for (const auto& c : report::check_distinguishers(cat, n, recs)) {
      if (!c.ok()) ++discrepancies;
      conc.push_back(report::to_json(c, prec));
    }
    j["rows"] = std::move(rj);
    j["concordance"] = std::move(conc);
    rows = recs.size();
    run.text(stem + ".csv", report::distinguisher_csv(recs, prec));
  }
  j["discrepancy_count"] = discrepancies;
  run.json_file(stem + ".json", j);
  run.finish(stem);
  std::printf("table %d: %zu rows, %zu discrepancies against printed values (see %s.json)\n", n, rows,
              discrepancies, stem.c_str());
  return kOk;
}

int cmd_surface(const Globals& gl, int dim, const std::string& f, const std::string& g) {
  Run run(gl, "surface");
  const auto spec = make_spec(dim, f, g);
  run.params()["dim"] = dim;
  run.params()["f"] = to_string(spec.f);
  run.params()["g"] = g;
  const GridKernel k(spec.dim, gl.threads);
  const auto surface = k.surface(spec);
  const auto best = find_max(surface);
  const std::string stem = "surface_" + code_tag(spec);
  run.text(stem + ".csv", report::surface_csv(surface));
  run.json_file(stem + ".json", report::surface_json(surface, best));
  run.finish(stem);
  std::printf("max %.12f at %zu point(s); wrote %s.csv\n", best.max_value, best.argmax.size(), stem.c_str());
  return kOk;
}

struct ClassArgs {
  int dim = 2;
  std::string f = "[0,0,0,1]";
  std::string g;
  std::string theta0 = "pi/8";
  std::string theta1 = "15pi/8";
  std::string scope = "maximal";
};

int cmd_classes(const Globals& gl, int kind, const ClassArgs& a) {
  const std::string stem =
      "classes" + std::to_string(kind) + "_d" + std::to_string(a.dim) + "_p" + std::to_string(gl.precision);
  Run run(gl, "classes " + std::to_string(kind));
  run.params()["dim"] = a.dim;
  const Catalog cat(gl.make(), gl.threads);
  const Dimension dim = make_dimension(a.dim);
  json j = {{"kind", kind}, {"dim", a.dim}, {"precision", cat.precision().decimals},
            {"rounding", to_string(cat.precision().mode)}};
  std::size_t n_classes = 0;
  std::string csv;
  if (kind == 1) {
    std::string g = a.g;
    if (g.empty()) g = dim == Dimension::Two ? to_string(tables::kXor) : to_string(tables::kEmbeddedXor);
    const auto spec = make_spec(a.dim, a.f, g);
    run.params()["f"] = a.f;
    run.params()["g"] = g;
    const auto classes = cat.basis_classes(spec);
    j["spec"] = report::to_json(spec);
    j["classes"] = report::classes_json(classes);
    csv = report::classes_csv(classes);
    n_classes = classes.size();
  } else if (kind == 2) {
    const auto point = grid_point(report::parse_angle(a.theta0), report::parse_angle(a.theta1));
    run.params()["point"] = report::to_json(point);
    const auto classes = cat.pair_classes(dim, point);
    j["point"] = report::to_json(point);
    j["classes"] = report::classes_json(classes);
    csv = report::classes_csv(classes);
    n_classes = classes.size();
  } else {
    run.params()["scope"] = a.scope;
    j["scope"] = a.scope;
    if (a.scope == "maximal") {
      const auto classes = cat.maximal_tuple_classes(dim);
      j["classes"] = report::classes_json(classes, dim);
      csv = report::classes_csv(classes, dim);
      n_classes = classes.size();
    } else if (a.scope == "all") {
      // Member lists over every (pair, point) tuple are too large to be useful; sizes only.
      json sizes = json::array();
      const auto counts = cat.tuple_class_sizes(dim);
      csv = "probability,size\n";
      for (const auto& [key, size] : counts) {
        sizes.push_back({{"probability", key.str()}, {"size", size}});
        csv += key.str() + "," + std::to_string(size) + "\n";
      }
      j["classes"] = std::move(sizes);
      n_classes = counts.size();
    } else {
      throw InputError("unknown scope '" + a.scope + "' (expected maximal or all)");
    }
  }
  j["class_count"] = n_classes;
  run.text(stem + ".csv", csv);
  run.json_file(stem + ".json", j);
  run.finish(stem);
  std::printf("%zu classes; wrote %s.csv\n", n_classes, stem.c_str());
  if (kind != 3 || a.scope == "maximal") {
    for (const auto& c : j["classes"]) {
      std::printf("  %s  %zu\n", c["probability"].get<std::string>().c_str(), c["size"].get<std::size_t>());
    }
  }
  return kOk;
}

int cmd_distinguishers(const Globals& gl, const std::string& which) {
  Run run(gl, "distinguishers " + which);
  const Catalog cat(gl.make(), gl.threads);
  std::vector<DistinguisherRecord> recs;
  if (which == "d1") {
    recs = cat.build_d1();
  } else if (which == "d2") {
    recs = cat.build_d2();
  } else if (which == "d3") {
    recs = cat.build_d3(gl.threshold);
  } else {
    throw InputError("unknown catalog '" + which + "' (expected d1, d2 or d3)");
  }
  json rj = json::array();
  for (const auto& r : recs) rj.push_back(report::to_json(r));
  json j = {{"catalog", which}, {"precision", cat.precision().decimals}, {"count", recs.size()},
            {"records", std::move(rj)}};
  if (which == "d3") j["threshold"] = gl.threshold;
  run.text(which + ".csv", report::distinguisher_csv(recs, cat.precision()));
  run.json_file(which + ".json", j);
  run.finish(which);
  std::printf("%s: %zu records; wrote %s.csv\n", which.c_str(), recs.size(), which.c_str());
  return kOk;
}

struct SimArgs {
  int dim = 2;
  std::int64_t rounds = 100000;
  std::string theta0 = "pi/8";
  std::string theta1 = "15pi/8";
  std::string f = "[0,0,0,1]";
  std::string g2 = "[0,1,1,0]";
  std::string g3 = "[0,1,1,1,0,1,1,1,0]";
  bool log = false;
  double error_prob = 0.01;
};

int cmd_simulate(const Globals& gl, const SimArgs& a) {
  Run run(gl, "simulate");
  ProtocolConfig cfg;
  cfg.true_dim = make_dimension(a.dim);
  cfg.rounds = a.rounds;
  cfg.theta0 = report::parse_angle(a.theta0);
  cfg.theta1 = report::parse_angle(a.theta1);
  cfg.f = parse_table2(a.f);
  cfg.g_d2 = parse_table2(a.g2);
  cfg.g_d3 = parse_table3(a.g3);
  cfg.seed = gl.seed;
  cfg.keep_log = a.log;
  cfg.validate();
  run.seed(gl.seed);
  run.params()["config"] = report::to_json(cfg);

  const auto res = run_protocol(cfg);
  json j = {{"config", report::to_json(cfg)}, {"result", report::to_json(res)}};
  const double gap = std::fabs(res.expected_d2 - res.expected_d3);
  if (gap > 0.0) j["required_rounds"] = {{"error_prob", a.error_prob}, {"n", required_rounds(gap, a.error_prob)}};
  run.json_file("simulate.json", j);
  if (a.log) {
    std::string csv = "i,x,y,a,b,Y\n";
    for (std::size_t i = 0; i < res.log.size(); ++i) {
      const auto& r = res.log[i];
      csv += std::to_string(i) + "," + std::to_string(r.x) + "," + std::to_string(r.y) + "," + std::to_string(r.a) +
             "," + std::to_string(r.b) + "," + std::to_string(r.won) + "\n";
    }
    run.text("simulate_log.csv", csv);
  }
  run.finish("simulate");
  std::printf("S = %.6f over %lld rounds (expected %.6f for d=2, %.6f for d=3)\n", res.S,
              static_cast<long long>(res.rounds), res.expected_d2, res.expected_d3);
  std::printf("decided d = %d\n", res.decided_dim);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum winning probabilities of generalized CHSH games in dimensions 2 and 3"};
  app.set_version_flag("--version", std::string(DIMDIST_VERSION));
  app.require_subcommand(1);
  app.fallthrough();

  Globals gl;
  app.add_option("--precision", gl.precision, "Decimal places used for grouping and presentation")
      ->check(CLI::Range(0, 12));
  app.add_option("--rounding", gl.rounding, "truncate or half-away")
      ->check(CLI::IsMember({"truncate", "half-away"}));
  app.add_option("--out", gl.out, "Output directory");
  app.add_option("--seed", gl.seed, "RNG seed for simulate");
  app.add_option("--threads", gl.threads, "OpenMP threads (0 = default)");
  app.add_option("--threshold", gl.threshold, "Gap threshold for the D3 catalog");

  std::function<int()> action;

  auto* chsh = app.add_subcommand("chsh", "Closed-form vs grid CHSH optimum");
  chsh->callback([&] { action = [&] { return cmd_chsh(gl); }; });

  int table_n = 1;
  auto* table = app.add_subcommand("table", "Reproduce a results table with a concordance report");
  table->add_option("n", table_n, "Table number 1-5")->required()->check(CLI::Range(1, 5));
  table->callback([&] { action = [&] { return cmd_table(gl, table_n); }; });

  int surf_dim = 2;
  std::string surf_f, surf_g;
  auto* surface = app.add_subcommand("surface", "64x64 winning-probability surface for one pair");
  surface->add_option("--dim", surf_dim, "2 or 3");
  surface->add_option("--f", surf_f, "Question table, e.g. [0,0,0,1]")->required();
  surface->add_option("--g", surf_g, "Answer table, 4 or 9 entries")->required();
  surface->callback([&] { action = [&] { return cmd_surface(gl, surf_dim, surf_f, surf_g); }; });

  int class_kind = 1;
  ClassArgs ca;
  auto* classes = app.add_subcommand("classes", "Equivalence classes: 1 bases, 2 function pairs, 3 tuples");
  classes->add_option("kind", class_kind, "1, 2 or 3")->required()->check(CLI::Range(1, 3));
  classes->add_option("--dim", ca.dim, "2 or 3");
  classes->add_option("--f", ca.f, "Question table (kind 1)");
  classes->add_option("--g", ca.g, "Answer table (kind 1; default XOR / embedded XOR)");
  classes->add_option("--theta0", ca.theta0, "Bob angle (kind 2), multiple of pi/32");
  classes->add_option("--theta1", ca.theta1, "Bob angle (kind 2), multiple of pi/32");
  classes->add_option("--scope", ca.scope, "Kind 3: maximal or all");
  classes->callback([&] { action = [&] { return cmd_classes(gl, class_kind, ca); }; });

  std::string which;
  auto* dist = app.add_subcommand("distinguishers", "Dimension-distinguisher catalogs");
  dist->add_option("catalog", which, "d1, d2 or d3")->required()->check(CLI::IsMember({"d1", "d2", "d3"}));
  dist->callback([&] { action = [&] { return cmd_distinguishers(gl, which); }; });

  SimArgs sa;
  auto* sim = app.add_subcommand("simulate", "Monte Carlo run of the dimension test");
  sim->add_option("--dim", sa.dim, "True dimension, 2 or 3");
  sim->add_option("--rounds,-n", sa.rounds, "Number of rounds");
  sim->add_option("--theta0", sa.theta0, "Bob angle, e.g. pi/8");
  sim->add_option("--theta1", sa.theta1, "Bob angle, e.g. 15pi/8");
  sim->add_option("--f", sa.f, "Question table");
  sim->add_option("--g2", sa.g2, "Qubit scoring table");
  sim->add_option("--g3", sa.g3, "Qutrit scoring table");
  sim->add_option("--error-prob", sa.error_prob, "Target error for the reported round count");
  sim->add_flag("--log", sa.log, "Write the per-round log as CSV");
  sim->callback([&] { action = [&] { return cmd_simulate(gl, sa); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return action();
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kIo;
  } catch (const DegenerateConfigError& e) {
    std::cerr << "degenerate configuration: " << e.what() << "\n";
    return kDegenerate;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
}
