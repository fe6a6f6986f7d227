#include "rankagg/measures.hpp"

#include <cstdlib>
#include <stdexcept>

namespace rankagg {

namespace {

int sign(int x) { return (x > 0) - (x < 0); }

void check_same_universe(const Ranking& a, const Ranking& b) {
  if (a.universe_size() != b.universe_size()) {
    throw std::invalid_argument("rankings compare over different universes");
  }
}

}  // namespace

std::int64_t matrix_inner_product(const Ranking& a, const Ranking& b) {
  check_same_universe(a, b);
  const int n = a.universe_size();
  std::int64_t sum = 0;
  for (int i = 0; i < n; ++i) {
    if (!a.is_ranked(i) || !b.is_ranked(i)) continue;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      sum += static_cast<std::int64_t>(a.pair_entry(i, j)) * b.pair_entry(i, j);
    }
  }
  return sum;
}

int num_common_ranked(const Ranking& a, const Ranking& b) {
  check_same_universe(a, b);
  int c = 0;
  for (int i = 0; i < a.universe_size(); ++i) {
    c += (a.is_ranked(i) && b.is_ranked(i));
  }
  return c;
}

double d_ks(const Ranking& a, const Ranking& b, const MeasureConfig& cfg) {
  check_same_universe(a, b);
  if (!a.is_complete() || !b.is_complete()) {
    throw std::invalid_argument("d_ks requires complete rankings");
  }
  if (cfg.gamma <= 0) throw std::invalid_argument("gamma must be positive");
  const int n = a.universe_size();
  std::int64_t raw = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      raw += std::abs(sign(a.position(i) - a.position(j)) -
                      sign(b.position(i) - b.position(j)));
    }
  }
  return static_cast<double>(raw) / cfg.gamma;
}

namespace {

// d_ks over the commonly ranked objects, as an integer count of
// |sign - sign| terms (the 1/gamma factor is applied by the callers).
std::int64_t raw_projected_disagreement(const Ranking& a, const Ranking& b,
                                        int* n_common) {
  const std::vector<int> common = common_ranked(a, b);
  *n_common = static_cast<int>(common.size());
  std::int64_t raw = 0;
  for (int i : common) {
    for (int j : common) {
      raw += std::abs(sign(a.position(i) - a.position(j)) -
                      sign(b.position(i) - b.position(j)));
    }
  }
  return raw;
}

}  // namespace

double d_pks(const Ranking& a, const Ranking& b, const MeasureConfig& cfg) {
  if (cfg.gamma <= 0) throw std::invalid_argument("gamma must be positive");
  int n_common = 0;
  const std::int64_t raw = raw_projected_disagreement(a, b, &n_common);
  if (n_common < 2) return 0.0;
  return static_cast<double>(raw) / cfg.gamma;
}

double d_npks(const Ranking& a, const Ranking& b, const MeasureConfig& cfg) {
  if (cfg.gamma <= 0) throw std::invalid_argument("gamma must be positive");
  int n_common = 0;
  const std::int64_t raw = raw_projected_disagreement(a, b, &n_common);
  if (n_common < 2) return 0.0;
  const double max_distance =
      static_cast<double>(n_common) * (n_common - 1) / 2.0;
  return static_cast<double>(raw) / cfg.gamma / max_distance;
}

double tau_x(const Ranking& a, const Ranking& b) {
  const int n = a.universe_size();
  if (n < 2) throw std::invalid_argument("tau_x requires at least two objects");
  const std::int64_t inner = matrix_inner_product(a, b);
  return static_cast<double>(inner) /
         (static_cast<double>(n) * (n - 1));
}

double tau_x_hat(const Ranking& a, const Ranking& b) {
  const int n_common = num_common_ranked(a, b);
  if (n_common < 2) return 1.0;
  const std::int64_t inner = matrix_inner_product(a, b);
  return static_cast<double>(inner) /
         (static_cast<double>(n_common) * (n_common - 1));
}

double kendall_tau(const Ranking& a, const Ranking& b) {
  check_same_universe(a, b);
  if (!a.is_complete() || !b.is_complete()) {
    throw std::invalid_argument("kendall_tau requires complete rankings");
  }
  if (!a.is_strict() || !b.is_strict()) {
    throw std::invalid_argument("kendall_tau requires strict rankings");
  }
  const int n = a.universe_size();
  if (n < 2) throw std::invalid_argument("kendall_tau requires at least two objects");
  std::int64_t concordant = 0, discordant = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int sa = sign(a.position(i) - a.position(j));
      const int sb = sign(b.position(i) - b.position(j));
      if (sa == sb) {
        ++concordant;
      } else {
        ++discordant;
      }
    }
  }
  return static_cast<double>(concordant - discordant) /
         (static_cast<double>(n) * (n - 1) / 2.0);
}

double npks_from_tau_hat(double t) {
  if (t < -1.0 || t > 1.0) {
    throw std::out_of_range("correlation outside [-1, 1]");
  }
  return 0.5 - 0.5 * t;
}

double tau_hat_from_npks(double d) {
  if (d < 0.0 || d > 1.0) {
    throw std::out_of_range("normalized distance outside [0, 1]");
  }
  return 1.0 - 2.0 * d;
}

}  // namespace rankagg
