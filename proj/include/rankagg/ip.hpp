#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rankagg/aggregate.hpp"
#include "rankagg/instance.hpp"

namespace rankagg {

/// Integer program whose feasible points are exactly the ranking-matrices of
/// complete non-strict rankings: r_ij in {-1,+1} off the diagonal (via the
/// binary link r_ij = 2 y_ij - 1), no mutually negative pair, and no
/// three-cycle of pairwise preferences. Objective: maximize the inner product
/// of [r_ij] with the CR or SCR coefficient matrix.
struct IpModel {
  int n = 0;
  Measure measure = Measure::tau_x_hat;
  AggregateMatrix coefficients;

  int num_rank_vars() const { return n * (n - 1); }
  int num_aux_vars() const { return n * (n - 1); }
  int num_transitivity_rows() const { return n * (n - 1) * (n - 2); }
  int num_pair_rows() const { return n * (n - 1) / 2; }
  int num_parity_rows() const { return n * (n - 1); }
};

IpModel build_model(const Instance& inst, Measure measure);

/// Writes the model in LP text format (objective, constraint rows, bounds,
/// integer/binary declarations), maximization sense, variables named r_i_j
/// and y_i_j with 1-based indices.
void export_model(const IpModel& m, std::ostream& os);
void export_model(const IpModel& m, const std::string& path);

struct EnumeratedSolution {
  double objective = 0.0;  // cumulative correlation under the measure
  std::vector<Ranking> rankings;
};

/// Validation solve by exhaustive enumeration of the complete non-strict
/// rankings (n capped); returns the full argmax set, canonical and sorted.
EnumeratedSolution brute_force_solve(const IpModel& m, int cap = 8);

/// Recovers the ranking encoded by a feasible [r_ij] matrix: objects sorted
/// by non-increasing row sums, equal sums grouped as ties.
Ranking ranking_from_matrix(const RankingMatrix& m);

}  // namespace rankagg
