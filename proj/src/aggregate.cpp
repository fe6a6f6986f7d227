#include "rankagg/aggregate.hpp"

#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace rankagg {

const char* measure_name(Measure m) {
  return m == Measure::tau_x ? "tau_x" : "tau_x_hat";
}

Measure measure_from_name(const std::string& name) {
  if (name == "tau_x") return Measure::tau_x;
  if (name == "tau_x_hat") return Measure::tau_x_hat;
  throw std::invalid_argument("unknown measure: " + name);
}

void check_instance(const Instance& inst) {
  if (inst.universe_size < 0) throw std::invalid_argument("negative universe size");
  for (const Ranking& judge : inst.judges) {
    if (judge.universe_size() != inst.universe_size) {
      throw std::invalid_argument("judge universe size differs from the instance");
    }
  }
}

namespace {

void accumulate_judge(AggregateMatrix& m, const Ranking& judge,
                      std::int64_t weight_num) {
  const int n = m.n;
  for (int i = 0; i < n; ++i) {
    if (!judge.is_ranked(i)) continue;
    for (int j = 0; j < n; ++j) {
      if (i == j || !judge.is_ranked(j)) continue;
      m.num[i * n + j] += weight_num * judge.pair_entry(i, j);
    }
  }
}

}  // namespace

AggregateMatrix combined_matrix(const Instance& inst) {
  check_instance(inst);
  AggregateMatrix m;
  m.kind = MatrixKind::combined;
  m.n = inst.universe_size;
  m.num.assign(static_cast<size_t>(m.n) * m.n, 0);
  m.scale = 1;
  for (const Ranking& judge : inst.judges) {
    if (judge.num_ranked() < 2) {
      ++m.skipped_judges;  // all-zero matrix either way
      continue;
    }
    ++m.effective_judges;
    accumulate_judge(m, judge, 1);
  }
  return m;
}

AggregateMatrix scaled_combined_matrix(const Instance& inst) {
  check_instance(inst);
  AggregateMatrix m;
  m.kind = MatrixKind::scaled_combined;
  m.n = inst.universe_size;
  m.num.assign(static_cast<size_t>(m.n) * m.n, 0);

  // Common denominator: lcm of n_k(n_k - 1) over the judges, so single
  // entries stay exact integers. Falls back to floating point if the lcm or
  // the accumulated magnitudes would not fit comfortably in 64 bits.
  std::int64_t lcm = 1;
  bool exact = true;
  for (const Ranking& judge : inst.judges) {
    const std::int64_t nk = judge.num_ranked();
    if (nk < 2) continue;
    const std::int64_t denom = nk * (nk - 1);
    lcm = std::lcm(lcm, denom);
    if (lcm > (std::int64_t{1} << 40)) {
      exact = false;
      break;
    }
  }
  const std::int64_t safety =
      std::numeric_limits<std::int64_t>::max() / 4 /
      std::max<std::int64_t>(1, static_cast<std::int64_t>(inst.judges.size()));
  if (exact && lcm > safety) exact = false;

  m.exact = exact;
  m.scale = exact ? lcm : 1;
  if (!exact) m.fnum.assign(static_cast<size_t>(m.n) * m.n, 0.0);

  for (const Ranking& judge : inst.judges) {
    const std::int64_t nk = judge.num_ranked();
    if (nk < 2) {
      ++m.skipped_judges;
      continue;
    }
    ++m.effective_judges;
    const std::int64_t denom = nk * (nk - 1);
    if (exact) {
      accumulate_judge(m, judge, lcm / denom);
    } else {
      const double w = 1.0 / static_cast<double>(denom);
      for (int i = 0; i < m.n; ++i) {
        if (!judge.is_ranked(i)) continue;
        for (int j = 0; j < m.n; ++j) {
          if (i == j || !judge.is_ranked(j)) continue;
          m.fnum[i * m.n + j] += w * judge.pair_entry(i, j);
        }
      }
    }
  }
  return m;
}

AggregateMatrix aggregate_matrix(const Instance& inst, Measure measure) {
  return measure == Measure::tau_x ? combined_matrix(inst)
                                   : scaled_combined_matrix(inst);
}

double cumulative_objective(const AggregateMatrix& m, const Ranking& r) {
  if (r.universe_size() != m.n) {
    throw std::invalid_argument("ranking universe size differs from the matrix");
  }
  if (!r.is_complete()) {
    throw std::invalid_argument("cumulative objective requires a complete ranking");
  }
  if (m.exact) {
    std::int64_t sum = 0;
    for (int i = 0; i < m.n; ++i) {
      for (int j = 0; j < m.n; ++j) {
        if (i != j) sum += m.num[i * m.n + j] * r.pair_entry(i, j);
      }
    }
    return static_cast<double>(sum) / static_cast<double>(m.scale);
  }
  double sum = 0.0;
  for (int i = 0; i < m.n; ++i) {
    for (int j = 0; j < m.n; ++j) {
      if (i != j) sum += m.fnum[i * m.n + j] * r.pair_entry(i, j);
    }
  }
  return sum;
}

double upper_bound(const AggregateMatrix& m) {
  if (m.exact) {
    std::int64_t sum = 0;
    for (std::int64_t v : m.num) sum += std::abs(v);
    return static_cast<double>(sum) / static_cast<double>(m.scale);
  }
  double sum = 0.0;
  for (double v : m.fnum) sum += std::abs(v);
  return sum;
}

double correlation_sum(const AggregateMatrix& m, const Ranking& r) {
  const double objective = cumulative_objective(m, r);
  if (m.kind == MatrixKind::combined) {
    return objective / (static_cast<double>(m.n) * (m.n - 1));
  }
  return objective;
}

}  // namespace rankagg
