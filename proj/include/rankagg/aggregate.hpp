#pragma once

#include <cstdint>
#include <vector>

#include "rankagg/instance.hpp"
#include "rankagg/ranking.hpp"

namespace rankagg {

enum class Measure { tau_x, tau_x_hat };

const char* measure_name(Measure m);
Measure measure_from_name(const std::string& name);

enum class MatrixKind { combined, scaled_combined };

/// Accumulated pairwise-preference matrix over all judges: the combined
/// ranking-matrix (CR, elementwise sum of the judges' {-1,0,+1} matrices) or
/// its scaled form (SCR, each judge divided by n_k(n_k - 1) where n_k is the
/// judge's ranked-object count).
///
/// Entries are stored as exact integers over a common denominator whenever
/// that fits 64 bits (always, at the universe sizes the solvers handle); a
/// floating-point fallback covers the rest. value = num[i][j] / scale.
struct AggregateMatrix {
  MatrixKind kind = MatrixKind::combined;
  int n = 0;
  bool exact = true;
  std::vector<std::int64_t> num;  // row-major, used when exact
  std::int64_t scale = 1;
  std::vector<double> fnum;       // row-major, used when !exact
  int skipped_judges = 0;         // judges ranking fewer than 2 objects
  int effective_judges = 0;

  double value(int i, int j) const {
    return exact ? static_cast<double>(num[i * n + j]) / static_cast<double>(scale)
                 : fnum[i * n + j];
  }
  std::int64_t scaled(int i, int j) const { return num[i * n + j]; }
};

/// CR matrix (Measure::tau_x objective coefficients).
AggregateMatrix combined_matrix(const Instance& inst);

/// SCR matrix (Measure::tau_x_hat objective coefficients). Judges with fewer
/// than two ranked objects contribute a zero matrix and are counted in
/// skipped_judges.
AggregateMatrix scaled_combined_matrix(const Instance& inst);

AggregateMatrix aggregate_matrix(const Instance& inst, Measure measure);

/// Matrix inner product of m with the ranking-matrix of the complete ranking
/// r. For an SCR this equals the sum of tau_x_hat correlations between r and
/// the (non-skipped) judges; for a CR, dividing by n(n-1) gives the sum of
/// tau_x correlations. Throws when r is incomplete.
double cumulative_objective(const AggregateMatrix& m, const Ranking& r);

/// Sum of |entries|: an upper bound on cumulative_objective over all complete
/// rankings.
double upper_bound(const AggregateMatrix& m);

/// cumulative_objective rescaled to the sum of per-judge correlations under
/// the measure the matrix was built for.
double correlation_sum(const AggregateMatrix& m, const Ranking& r);

}  // namespace rankagg
