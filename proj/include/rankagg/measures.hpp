#pragma once

#include <cstdint>

#include "rankagg/ranking.hpp"

namespace rankagg {

struct MeasureConfig {
  /// Divisor fixing the minimum positive distance unit of the Kemeny-Snell
  /// distance; 4 makes a tie-versus-strict disagreement count 1/2.
  double gamma = 4.0;
};

/// Sum over ordered object pairs of a_ij * b_ij, with entries from the
/// {-1,0,+1} pairwise encoding. Pairs involving an object unranked by either
/// side contribute zero.
std::int64_t matrix_inner_product(const Ranking& a, const Ranking& b);

/// |V_a intersect V_b|.
int num_common_ranked(const Ranking& a, const Ranking& b);

/// Kemeny-Snell distance between complete rankings:
/// (1/gamma) * sum_ij |sign(a_i - a_j) - sign(b_i - b_j)|.
/// Throws on incomplete input.
double d_ks(const Ranking& a, const Ranking& b, const MeasureConfig& cfg = {});

/// Projected Kemeny-Snell distance: d_ks of both rankings restricted to the
/// commonly ranked objects; 0 when fewer than two objects are common.
double d_pks(const Ranking& a, const Ranking& b, const MeasureConfig& cfg = {});

/// Normalized projected Kemeny-Snell distance: d_pks divided by
/// n_common(n_common-1)/2, or 0 when fewer than two objects are common.
double d_npks(const Ranking& a, const Ranking& b, const MeasureConfig& cfg = {});

/// Tau-extended correlation: matrix inner product over n(n-1).
/// Requires n >= 2.
double tau_x(const Ranking& a, const Ranking& b);

/// Scaled tau-extended correlation: matrix inner product over
/// n_common(n_common-1). Returns 1 when fewer than two objects are common
/// (the convention that keeps d_npks = 1/2 - tau_x_hat/2 an identity).
double tau_x_hat(const Ranking& a, const Ranking& b);

/// Classic Kendall tau over strict complete rankings: concordant minus
/// discordant pairs over n(n-1)/2. Throws on ties or unranked objects.
double kendall_tau(const Ranking& a, const Ranking& b);

/// Linear transformations between tau_x_hat and d_npks: d = 1/2 - t/2.
double npks_from_tau_hat(double t);
double tau_hat_from_npks(double d);

}  // namespace rankagg
