#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace rankagg {

/// A ranking assigns ordinal positions to the objects v_0..v_{n-1} of a fixed
/// universe. Position values are arbitrary positive integers; only pairwise
/// comparisons between them carry meaning. An object may be left unranked
/// (stored as 0), in which case no preference involving it is implied --
/// neither relative to ranked objects nor to other unranked ones.
class Ranking {
 public:
  static constexpr int kUnranked = 0;

  Ranking() = default;

  /// All objects unranked.
  explicit Ranking(int universe_size);

  /// Positions with 0 meaning unranked. Throws std::invalid_argument on
  /// negative entries.
  explicit Ranking(std::vector<int> positions);

  /// Positions with std::nullopt meaning unranked. Throws
  /// std::invalid_argument on non-positive entries.
  explicit Ranking(const std::vector<std::optional<int>>& positions);

  int universe_size() const { return static_cast<int>(positions_.size()); }
  int position(int object) const { return positions_[object]; }
  bool is_ranked(int object) const { return positions_[object] != kUnranked; }
  const std::vector<int>& positions() const { return positions_; }

  std::vector<int> ranked_objects() const;
  int num_ranked() const;
  bool is_complete() const;
  bool is_strict() const;  // no two ranked objects share a position

  /// Pairwise preference entry of the {-1,0,+1} ranking-matrix encoding:
  /// +1 if position(i) <= position(j), -1 if >, 0 on the diagonal or when
  /// either object is unranked.
  int pair_entry(int i, int j) const {
    if (i == j) return 0;
    const int pi = positions_[i], pj = positions_[j];
    if (pi == kUnranked || pj == kUnranked) return 0;
    return pi <= pj ? 1 : -1;
  }

  bool operator==(const Ranking&) const = default;
  auto operator<=>(const Ranking&) const = default;

  /// Comma-separated positions, "NA" for unranked: "1,2,NA,4".
  std::string to_string() const;

 private:
  std::vector<int> positions_;
};

struct ValidationReport {
  bool ok = false;
  bool strict = false;
  bool complete = false;
  std::string error;
};

/// Confirms the Ranking invariants and classifies the ranking as
/// strict/non-strict and complete/incomplete.
ValidationReport validate(const Ranking& r);

/// Boundary-level check for raw rows where an explicit 0 is distinguishable
/// from "unranked" (a constructed Ranking cannot hold one).
ValidationReport validate_row(const std::vector<std::optional<int>>& row);

/// Dense {-1,0,+1} pairwise-preference matrix of a ranking.
class RankingMatrix {
 public:
  RankingMatrix() = default;
  explicit RankingMatrix(int n) : n_(n), entries_(n * n, 0) {}

  int size() const { return n_; }
  int at(int i, int j) const { return entries_[i * n_ + j]; }
  void set(int i, int j, int v) { entries_[i * n_ + j] = static_cast<int8_t>(v); }

  bool operator==(const RankingMatrix&) const = default;

 private:
  int n_ = 0;
  std::vector<int8_t> entries_;
};

RankingMatrix ranking_matrix(const Ranking& r);

/// Restricts r to the given objects: positions outside the set become
/// unranked, positions inside keep their numeric values (relative order
/// unchanged). Throws when an index is out of range.
Ranking project(const Ranking& r, const std::vector<int>& objects);

/// Objects ranked by both a and b, ascending. Throws on universe mismatch.
std::vector<int> common_ranked(const Ranking& a, const Ranking& b);

/// Preference equivalence classes of the ranked objects, best class first;
/// may cover a subset of the universe.
struct ObjectOrdering {
  int universe_size = 0;
  std::vector<std::vector<int>> classes;

  bool operator==(const ObjectOrdering&) const = default;
};

/// Sorts the ranked objects of r into equivalence classes from best to worst
/// (members listed by ascending object index).
ObjectOrdering psi(const Ranking& r);

/// Labels every object with the 1-based index of its class; uncovered objects
/// stay unranked.
Ranking psi_inverse(const ObjectOrdering& o);

/// Dense canonical form: positions renumbered 1..#classes, unranked objects
/// preserved. Equivalent rankings (same pairwise relations) map to the same
/// canonical value.
Ranking canonical(const Ranking& r);

/// Inverts all pairwise preferences among ranked objects; unranked objects
/// stay unranked. Result is canonical.
Ranking reverse(const Ranking& r);

/// True iff, on the objects ranked by all three, every pairwise judgment of b
/// agrees with a, or with c, or ties a pair on which a and c strictly oppose
/// each other.
bool is_between(const Ranking& a, const Ranking& b, const Ranking& c);

/// Visits every complete non-strict ranking on n objects exactly once, in
/// lexicographic order of the position sequence, canonically labeled
/// (positions are 1..#classes). Throws when n exceeds the cap.
void for_each_weak_order(int n, const std::function<void(const Ranking&)>& fn,
                         int cap = 8);

std::vector<Ranking> enumerate_weak_orders(int n, int cap = 8);

}  // namespace rankagg
