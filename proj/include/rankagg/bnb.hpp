#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rankagg/aggregate.hpp"
#include "rankagg/instance.hpp"

namespace rankagg {

struct BnbOptions {
  /// Complete ranking used to seed the incumbent; the default-start heuristic
  /// is used when absent. The returned optimality set does not depend on it.
  std::optional<Ranking> start_solution;
  std::optional<std::uint64_t> node_limit;
  std::optional<double> time_limit_seconds;
  /// Penalty slack treated as a tie. Only consulted on the floating-point
  /// fallback path; the exact integer path compares penalties exactly.
  double tie_tolerance = 1e-9;
};

struct OptimalitySet {
  std::vector<Ranking> rankings;  // canonical, sorted by position sequence
  double objective = 0.0;         // cumulative correlation under the measure
  std::uint64_t nodes_explored = 0;
  bool proven_complete = true;
  int skipped_judges = 0;
};

/// Exact branch and bound over the complete non-strict rankings. Builds the
/// CR (tau_x) or SCR (tau_x_hat) matrix, then inserts objects one at a time
/// into a growing weak order, branching on preferred/tied/dispreferred
/// placements and pruning by accumulated deviation penalty against the
/// incumbent minimum. Returns every complete ranking attaining the optimal
/// cumulative correlation; proven_complete is false iff a node or time limit
/// fired first.
OptimalitySet solve(const Instance& inst, Measure measure,
                    const BnbOptions& opts = {});

/// Deterministic starting heuristic: objects ordered by non-increasing row
/// sums of the aggregate matrix, equal sums tied.
Ranking default_start(const AggregateMatrix& m);
Ranking default_start(const Instance& inst, Measure measure);

}  // namespace rankagg
