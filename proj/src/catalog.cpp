#include "dimdist/catalog.hpp"

#include <algorithm>
#include <cmath>

#include "dimdist/error.hpp"

namespace dimdist {
namespace {

constexpr std::uint32_t kNumF = 14;
constexpr std::uint32_t kNumG3 = 510;

void sort_by_gap(std::vector<DistinguisherRecord>& records) {
  std::stable_sort(records.begin(), records.end(),
                   [](const DistinguisherRecord& a, const DistinguisherRecord& b) { return a.gap > b.gap; });
}

}  // namespace

double DistinguisherRecord::other_min() const {
  return *std::min_element(other_values.begin(), other_values.end());
}

double DistinguisherRecord::other_max() const {
  return *std::max_element(other_values.begin(), other_values.end());
}

const char* to_string(DistinguisherClass c) noexcept {
  switch (c) {
    case DistinguisherClass::D1:
      return "D1";
    case DistinguisherClass::D2:
      return "D2";
    case DistinguisherClass::D3:
      return "D3";
  }
  return "?";
}

Catalog::Catalog(Precision precision, int threads)
    : precision_(make_precision(precision.decimals, precision.mode)),
      threads_(threads),
      k2_(Dimension::Two, threads),
      k3_(Dimension::Three, threads) {}

const std::vector<SweepResult>& Catalog::sweep(Dimension dim) const {
  auto& slot = dim == Dimension::Two ? sweep2_ : sweep3_;
  if (!slot) slot = kernel(dim).sweep_all(kDefaultTieTolerance, threads_);
  return *slot;
}

std::uint32_t Catalog::pair_index(TruthTable2 f, TruthTable2 g) noexcept {
  return (f.code() - 1) * kNumF + (g.code() - 1);
}

std::uint32_t Catalog::pair_index(TruthTable2 f, TruthTable3 g) noexcept {
  return (f.code() - 1) * kNumG3 + (g.code() - 1);
}

const SweepResult& Catalog::game1(TruthTable2 f, TruthTable2 g) const {
  if (f.is_constant()) throw InputError("question function " + to_string(f) + " is constant");
  if (!g.is_constant()) return sweep(Dimension::Two)[pair_index(f, g)];
  if (!constant_g1_) {
    std::vector<SweepResult> results;
    for (auto ff : enumerate_f2()) {
      for (unsigned code : {0u, 15u}) {
        results.push_back(find_max(k2_.surface(GameSpec::game1(ff, TruthTable2::from_code(code)))));
      }
    }
    constant_g1_ = std::move(results);
  }
  return (*constant_g1_)[(f.code() - 1) * 2 + (g.code() == 15u ? 1 : 0)];
}

const SweepResult& Catalog::game2(TruthTable2 f, TruthTable3 g) const {
  if (f.is_constant() || g.is_constant()) {
    throw InputError("no qutrit sweep for constant table in (" + to_string(f) + ", " + to_string(g) + ")");
  }
  return sweep(Dimension::Three)[pair_index(f, g)];
}

ClassKey Catalog::global_max_key(Dimension dim) const {
  const auto& results = sweep(dim);
  double best = 0.0;
  for (const auto& r : results) best = std::max(best, r.max_value);
  return round_key(best, precision_);
}

bool Catalog::in_top_stratum(const SweepResult& r, Dimension dim) const {
  return round_key(r.max_value, precision_) == global_max_key(dim);
}

std::vector<Table1Group> Catalog::build_table1() const {
  std::vector<std::pair<ClassKey, SweepResult>> items;
  for (const auto& r : sweep(Dimension::Two)) items.emplace_back(round_key(r.max_value, precision_), r);
  std::vector<Table1Group> out;
  for (auto& cls : group_by_key(items)) out.push_back({cls.key, std::move(cls.members)});
  return out;
}

std::vector<SweepResult> Catalog::build_game2_max() const {
  std::vector<SweepResult> out;
  for (const auto& r : sweep(Dimension::Three)) {
    if (in_top_stratum(r, Dimension::Three)) out.push_back(r);
  }
  return out;
}

std::vector<BasisClass> Catalog::basis_classes(const GameSpec& spec) const {
  const auto surface = kernel(spec.dim).surface(spec);
  std::vector<std::pair<ClassKey, AngleGridPoint>> items;
  items.reserve(kGridPoints);
  for (int flat = 0; flat < kGridPoints; ++flat) {
    items.emplace_back(round_key(surface.values[flat], precision_), AngleGridPoint::from_flat(flat));
  }
  return group_by_key(items);
}

std::vector<PairClass> Catalog::pair_classes(Dimension dim, AngleGridPoint point) const {
  const auto& k = kernel(dim);
  std::vector<std::pair<ClassKey, GameSpec>> items;
  for (const auto& spec : enumerate_pairs(dim)) {
    items.emplace_back(round_key(k.win_probability(spec, point), precision_), spec);
  }
  return group_by_key(items);
}

std::vector<TupleClass> Catalog::tuple_classes(Dimension dim, std::span<const std::uint32_t> pair_indices) const {
  const auto pairs = enumerate_pairs(dim);
  std::vector<std::uint32_t> chosen(pair_indices.begin(), pair_indices.end());
  if (chosen.empty()) {
    chosen.resize(pairs.size());
    for (std::uint32_t i = 0; i < chosen.size(); ++i) chosen[i] = i;
  }
  const auto& k = kernel(dim);
  std::vector<std::pair<ClassKey, TupleMember>> items;
  items.reserve(chosen.size() * kGridPoints);
  for (auto idx : chosen) {
    if (idx >= pairs.size()) throw InputError("pair index out of range: " + std::to_string(idx));
    const auto surface = k.surface(pairs[idx]);
    for (int flat = 0; flat < kGridPoints; ++flat) {
      items.emplace_back(round_key(surface.values[flat], precision_),
                         TupleMember{idx, AngleGridPoint::from_flat(flat)});
    }
  }
  return group_by_key(items);
}

std::vector<TupleClass> Catalog::maximal_tuple_classes(Dimension dim) const {
  std::vector<SweepResult> top;
  if (dim == Dimension::Three) {
    top = build_game2_max();
  } else {
    top = build_table1().front().pairs;
  }
  const auto& k = kernel(dim);
  std::vector<std::pair<ClassKey, TupleMember>> items;
  for (const auto& r : top) {
    const auto idx = dim == Dimension::Two ? pair_index(r.spec.f, std::get<TruthTable2>(r.spec.g))
                                           : pair_index(r.spec.f, std::get<TruthTable3>(r.spec.g));
    for (const auto& p : r.argmax) {
      items.emplace_back(round_key(k.win_probability(r.spec, p), precision_), TupleMember{idx, p});
    }
  }
  return group_by_key(items);
}

std::vector<std::pair<ClassKey, std::size_t>> Catalog::tuple_class_sizes(Dimension dim) const {
  std::map<ClassKey, std::size_t, std::greater<>> counts;
  const auto& k = kernel(dim);
  for (const auto& spec : enumerate_pairs(dim)) {
    const auto surface = k.surface(spec);
    for (double v : surface.values) ++counts[round_key(v, precision_)];
  }
  return {counts.begin(), counts.end()};
}

DistinguisherRecord Catalog::record_for(TruthTable2 f, TruthTable3 g3, Dimension maximised,
                                         DistinguisherClass tag) const {
  DistinguisherRecord rec;
  rec.f = f;
  rec.g3 = g3;
  rec.g2p = restrict_g3(g3);
  rec.tag = tag;
  rec.maximised = maximised;
  const auto spec2 = GameSpec::game1(f, rec.g2p);
  const auto spec3 = GameSpec::game2(f, g3);
  const SweepResult& best = maximised == Dimension::Two ? game1(f, rec.g2p) : game2(f, g3);
  const GameSpec& other = maximised == Dimension::Two ? spec3 : spec2;
  const GridKernel& other_kernel = kernel(other.dim);

  rec.eval_point = best.canonical_argmax;
  rec.tie_points = best.argmax;
  const double other_value = other_kernel.win_probability(other, rec.eval_point);
  if (maximised == Dimension::Two) {
    rec.p_d2 = best.max_value;
    rec.p_d3 = other_value;
  } else {
    rec.p_d3 = best.max_value;
    rec.p_d2 = other_value;
  }
  rec.gap = std::fabs(rec.p_d2 - rec.p_d3);
  rec.other_values.reserve(rec.tie_points.size());
  for (const auto& p : rec.tie_points) rec.other_values.push_back(other_kernel.win_probability(other, p));
  return rec;
}

Dimension Catalog::d3_winner(TruthTable2 f, TruthTable3 g3) const {
  return game2(f, g3).max_value >= game1(f, restrict_g3(g3)).max_value ? Dimension::Three : Dimension::Two;
}

std::vector<DistinguisherRecord> Catalog::build_d1() const {
  std::vector<DistinguisherRecord> out;
  for (auto f : enumerate_f2()) {
    for (auto g3 : enumerate_g3()) {
      const auto g2p = restrict_g3(g3);
      if (g2p.is_constant()) continue;
      const auto& r1 = game1(f, g2p);
      if (!in_top_stratum(r1, Dimension::Two)) continue;
      if (!(r1.max_value > game2(f, g3).max_value)) continue;
      out.push_back(record_for(f, g3, Dimension::Two, DistinguisherClass::D1));
    }
  }
  sort_by_gap(out);
  return out;
}

std::vector<DistinguisherRecord> Catalog::build_d2() const {
  std::vector<DistinguisherRecord> out;
  for (const auto& r3 : build_game2_max()) {
    const auto g3 = std::get<TruthTable3>(r3.spec.g);
    if (!(r3.max_value > game1(r3.spec.f, restrict_g3(g3)).max_value)) continue;
    out.push_back(record_for(r3.spec.f, g3, Dimension::Three, DistinguisherClass::D2));
  }
  return out;
}

std::vector<DistinguisherRecord> Catalog::build_d3(double threshold) const {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw InputError("D3 threshold must lie in [0, 1], got " + std::to_string(threshold));
  }
  std::vector<DistinguisherRecord> out;
  for (auto f : enumerate_f2()) {
    for (auto g3 : enumerate_g3()) {
      const auto& r3 = game2(f, g3);
      if (in_top_stratum(r3, Dimension::Three)) continue;
      const auto& r1 = game1(f, restrict_g3(g3));
      if (in_top_stratum(r1, Dimension::Two)) continue;
      auto rec = record_for(f, g3, d3_winner(f, g3), DistinguisherClass::D3);
      if (rec.gap > threshold) out.push_back(std::move(rec));
    }
  }
  sort_by_gap(out);
  return out;
}

}  // namespace dimdist
