#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "dimdist/rounding.hpp"
#include "dimdist/sweep.hpp"

namespace dimdist {

/// Group of members sharing one rounded winning probability.
template <class Member>
struct EquivalenceClass {
  ClassKey key;
  std::vector<Member> members;
};

/// (function pair, Bob point), with the pair given by its enumerate_pairs index.
struct TupleMember {
  std::uint32_t pair_index = 0;
  AngleGridPoint point;

  friend bool operator==(const TupleMember&, const TupleMember&) = default;
};

using BasisClass = EquivalenceClass<AngleGridPoint>;
using PairClass = EquivalenceClass<GameSpec>;
using TupleClass = EquivalenceClass<TupleMember>;

enum class DistinguisherClass { D1, D2, D3 };
const char* to_string(DistinguisherClass c) noexcept;

/// One candidate dimension distinguisher: the qubit game (f, g2p) against the
/// qutrit game (f, g3), both evaluated at `eval_point`.
struct DistinguisherRecord {
  TruthTable2 f;
  TruthTable3 g3;
  TruthTable2 g2p;  // restrict_g3(g3)
  AngleGridPoint eval_point;
  double p_d2 = 0.0;
  double p_d3 = 0.0;
  double gap = 0.0;  // |p_d2 - p_d3|
  DistinguisherClass tag = DistinguisherClass::D1;

  /// The game whose optimum supplied eval_point, its whole exact-argmax tie
  /// set, and the other game's value at each tie point.
  Dimension maximised = Dimension::Two;
  std::vector<AngleGridPoint> tie_points;
  std::vector<double> other_values;

  double other_min() const;
  double other_max() const;
};

/// Rows of the Game-1 summary: pairs grouped by rounded maximum.
struct Table1Group {
  ClassKey key;
  std::vector<SweepResult> pairs;
};

/// Owns both grid kernels and caches the full sweeps. Not thread-safe for
/// concurrent first use; all methods are otherwise read-only.
class Catalog {
 public:
  explicit Catalog(Precision precision = {}, int threads = 0);

  Precision precision() const noexcept { return precision_; }
  const GridKernel& kernel(Dimension dim) const noexcept { return dim == Dimension::Two ? k2_ : k3_; }

  /// sweep_all for the dimension, computed on first use.
  const std::vector<SweepResult>& sweep(Dimension dim) const;

  /// Game-1 optimum for (f, g) including constant g (restrictions of g3).
  const SweepResult& game1(TruthTable2 f, TruthTable2 g) const;
  const SweepResult& game2(TruthTable2 f, TruthTable3 g) const;

  /// Rounded global maxima of each game.
  ClassKey global_max_key(Dimension dim) const;

  /// All 196 qubit pairs grouped by rounded maximum, keys descending.
  std::vector<Table1Group> build_table1() const;
  /// Qutrit pairs whose rounded maximum equals the rounded global maximum.
  std::vector<SweepResult> build_game2_max() const;

  /// Kind 1: grid points of one game grouped by rounded probability.
  std::vector<BasisClass> basis_classes(const GameSpec& spec) const;
  /// Kind 2: every function pair of a game at one fixed point.
  std::vector<PairClass> pair_classes(Dimension dim, AngleGridPoint point) const;
  /// Kind 3: (pair, point) tuples. With `pair_indices` empty all pairs are
  /// used; otherwise only the listed enumerate_pairs indices.
  std::vector<TupleClass> tuple_classes(Dimension dim, std::span<const std::uint32_t> pair_indices = {}) const;
  /// Kind 3 restricted to the maximal stratum: pairs of build_game2_max()
  /// (or the Game-1 top group) at their exact-argmax points.
  std::vector<TupleClass> maximal_tuple_classes(Dimension dim) const;
  /// Class sizes of the full kind-3 partition without materialising members.
  std::vector<std::pair<ClassKey, std::size_t>> tuple_class_sizes(Dimension dim) const;

  std::vector<DistinguisherRecord> build_d1() const;
  std::vector<DistinguisherRecord> build_d2() const;
  /// Throws InputError unless 0 <= threshold <= 1.
  std::vector<DistinguisherRecord> build_d3(double threshold = 0.44) const;

  /// Record for (f, g3) evaluated at the optimum of `maximised`.
  DistinguisherRecord record_for(TruthTable2 f, TruthTable3 g3, Dimension maximised,
                                 DistinguisherClass tag) const;
  /// The game D3 maximises for (f, g3): qutrits unless the qubit optimum is strictly larger.
  Dimension d3_winner(TruthTable2 f, TruthTable3 g3) const;

  /// enumerate_pairs index of (f, g).
  static std::uint32_t pair_index(TruthTable2 f, TruthTable2 g) noexcept;
  static std::uint32_t pair_index(TruthTable2 f, TruthTable3 g) noexcept;

 private:
  bool in_top_stratum(const SweepResult& r, Dimension dim) const;

  Precision precision_;
  int threads_;
  GridKernel k2_;
  GridKernel k3_;
  mutable std::optional<std::vector<SweepResult>> sweep2_;
  mutable std::optional<std::vector<SweepResult>> sweep3_;
  mutable std::optional<std::vector<SweepResult>> constant_g1_;  // f x {0000, 1111}
};

/// Groups values keyed by round_key, keys descending, members in input order.
template <class Member>
std::vector<EquivalenceClass<Member>> group_by_key(const std::vector<std::pair<ClassKey, Member>>& items) {
  std::map<ClassKey, std::vector<Member>, std::greater<>> groups;
  for (const auto& [key, member] : items) groups[key].push_back(member);
  std::vector<EquivalenceClass<Member>> out;
  out.reserve(groups.size());
  for (auto& [key, members] : groups) out.push_back({key, std::move(members)});
  return out;
}

}  // namespace dimdist
