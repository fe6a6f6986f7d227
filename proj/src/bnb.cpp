#include "rankagg/bnb.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace rankagg {

namespace {

using Clock = std::chrono::steady_clock;

template <typename Value>
struct Search {
  int n;
  const BnbOptions& opts;
  Value eps;                       // tie slack (0 on the exact path)
  std::vector<Value> pen_pref;     // [u*n+v]: u strictly before v
  std::vector<Value> pen_tie;      // [u*n+v]: u tied with v (symmetric)
  std::vector<int> insertion_order;

  std::vector<std::vector<int>> classes;
  Value incumbent;
  std::vector<std::pair<Value, Ranking>> saved;
  std::uint64_t nodes = 0;
  bool aborted = false;
  Clock::time_point deadline;
  bool has_deadline = false;

  Search(int n_, const BnbOptions& o) : n(n_), opts(o) {}

  bool limits_hit() {
    if (opts.node_limit && nodes >= *opts.node_limit) return true;
    if (has_deadline && (nodes & 1023u) == 0 && Clock::now() >= deadline) {
      return true;
    }
    return false;
  }

  void record(Value penalty) {
    if (penalty < incumbent) {
      incumbent = penalty;
      std::erase_if(saved, [&](const auto& e) { return e.first > incumbent + eps; });
    }
    saved.emplace_back(penalty, psi_inverse(ObjectOrdering{
                                    n, classes}));
  }

  void descend(int depth, Value penalty) {
    if (aborted) return;
    if (depth == n) {
      record(penalty);
      return;
    }
    const int u = insertion_order[depth];
    const int m = static_cast<int>(classes.size());

    // Per-class penalty sums for the three ordinal relationships of u
    // against every already-placed object.
    std::vector<Value> sum_pref(m, Value{}), sum_tie(m, Value{}), sum_disp(m, Value{});
    Value all_pref{};
    for (int t = 0; t < m; ++t) {
      for (int v : classes[t]) {
        sum_pref[t] += pen_pref[u * n + v];
        sum_tie[t] += pen_tie[u * n + v];
        sum_disp[t] += pen_pref[v * n + u];
      }
      all_pref += sum_pref[t];
    }

    // Slots are visited most-preferred first: new class before class t, then
    // inside class t, for t = 0..m-1, then after the last class.
    Value before = all_pref;
    for (int t = 0; t <= m; ++t) {
      if (aborted) return;
      ++nodes;
      if (limits_hit()) {
        aborted = true;
        return;
      }
      const Value p_new = penalty + before;
      if (!(p_new > incumbent + eps)) {
        classes.insert(classes.begin() + t, {u});
        descend(depth + 1, p_new);
        classes.erase(classes.begin() + t);
      }
      if (t == m) break;

      ++nodes;
      if (limits_hit()) {
        aborted = true;
        return;
      }
      const Value p_tie = penalty + before - sum_pref[t] + sum_tie[t];
      if (!(p_tie > incumbent + eps)) {
        auto it = std::lower_bound(classes[t].begin(), classes[t].end(), u);
        it = classes[t].insert(it, u);
        descend(depth + 1, p_tie);
        classes[t].erase(std::find(classes[t].begin(), classes[t].end(), u));
      }
      before += sum_disp[t] - sum_pref[t];
    }
  }
};

template <typename Value>
Value matrix_entry(const AggregateMatrix& m, int i, int j);

template <>
std::int64_t matrix_entry<std::int64_t>(const AggregateMatrix& m, int i, int j) {
  return m.scaled(i, j);
}

template <>
double matrix_entry<double>(const AggregateMatrix& m, int i, int j) {
  return m.value(i, j);
}

template <typename Value>
OptimalitySet run_search(const AggregateMatrix& matrix, const Ranking& start,
                         const BnbOptions& opts, Value eps) {
  const int n = matrix.n;
  Search<Value> search(n, opts);
  search.eps = eps;
  search.pen_pref.assign(static_cast<size_t>(n) * n, Value{});
  search.pen_tie.assign(static_cast<size_t>(n) * n, Value{});

  Value ub{};
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      const Value muv = matrix_entry<Value>(matrix, u, v);
      const Value mvu = matrix_entry<Value>(matrix, v, u);
      const Value pair_ub = std::abs(muv) + std::abs(mvu);
      search.pen_pref[u * n + v] = pair_ub - (muv - mvu);
      search.pen_tie[u * n + v] = pair_ub - (muv + mvu);
      if (u < v) ub += pair_ub;
    }
  }

  // Objects are taken in start-solution order: classes best to worst,
  // members by ascending index.
  const ObjectOrdering start_order = psi(start);
  for (const auto& cls : start_order.classes) {
    for (int v : cls) search.insertion_order.push_back(v);
  }

  // Initial incumbent: the start solution's own deviation penalty.
  Value start_obj{};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) {
        start_obj += matrix_entry<Value>(matrix, i, j) *
                     static_cast<Value>(start.pair_entry(i, j));
      }
    }
  }
  search.incumbent = ub - start_obj;
  search.saved.emplace_back(search.incumbent, canonical(start));

  if (opts.time_limit_seconds) {
    search.has_deadline = true;
    search.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                         std::chrono::duration<double>(
                                             *opts.time_limit_seconds));
  }

  search.descend(0, Value{});

  OptimalitySet out;
  out.nodes_explored = search.nodes;
  out.proven_complete = !search.aborted;
  out.skipped_judges = matrix.skipped_judges;

  Value best = search.incumbent;
  for (const auto& [penalty, ranking] : search.saved) best = std::min(best, penalty);
  std::vector<Ranking> winners;
  for (const auto& [penalty, ranking] : search.saved) {
    if (!(penalty > best + eps)) winners.push_back(ranking);
  }
  std::sort(winners.begin(), winners.end());
  winners.erase(std::unique(winners.begin(), winners.end()), winners.end());
  out.rankings = std::move(winners);

  const double objective_value =
      matrix.exact ? (static_cast<double>(ub - best) / static_cast<double>(matrix.scale))
                   : static_cast<double>(ub - best);
  out.objective = matrix.kind == MatrixKind::combined
                      ? objective_value / (static_cast<double>(n) * (n - 1))
                      : objective_value;
  return out;
}

}  // namespace

Ranking default_start(const AggregateMatrix& m) {
  const int n = m.n;
  if (m.exact) {
    std::vector<std::int64_t> row_sum(n, 0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) row_sum[i] += m.scaled(i, j);
    }
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return row_sum[a] > row_sum[b]; });
    std::vector<int> positions(n, 0);
    int rank = 0;
    for (int k = 0; k < n; ++k) {
      if (k == 0 || row_sum[order[k]] != row_sum[order[k - 1]]) ++rank;
      positions[order[k]] = rank;
    }
    return Ranking(std::move(positions));
  }
  std::vector<double> row_sum(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) row_sum[i] += m.value(i, j);
  }
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return row_sum[a] > row_sum[b]; });
  std::vector<int> positions(n, 0);
  int rank = 0;
  for (int k = 0; k < n; ++k) {
    if (k == 0 || row_sum[order[k]] != row_sum[order[k - 1]]) ++rank;
    positions[order[k]] = rank;
  }
  return Ranking(std::move(positions));
}

Ranking default_start(const Instance& inst, Measure measure) {
  return default_start(aggregate_matrix(inst, measure));
}

OptimalitySet solve(const Instance& inst, Measure measure,
                    const BnbOptions& opts) {
  check_instance(inst);
  if (inst.universe_size < 2) {
    throw std::invalid_argument("aggregation requires at least two objects");
  }
  const AggregateMatrix matrix = aggregate_matrix(inst, measure);
  if (matrix.effective_judges == 0) {
    throw std::invalid_argument(
        "empty effective instance: no judge ranks two or more objects");
  }
  if (opts.node_limit && *opts.node_limit == 0) {
    throw std::invalid_argument("node limit must be positive");
  }
  if (opts.time_limit_seconds && *opts.time_limit_seconds <= 0) {
    throw std::invalid_argument("time limit must be positive");
  }

  Ranking start = opts.start_solution ? *opts.start_solution : default_start(matrix);
  if (start.universe_size() != inst.universe_size || !start.is_complete()) {
    throw std::invalid_argument("start solution must be a complete ranking");
  }

  if (matrix.exact) {
    return run_search<std::int64_t>(matrix, start, opts, 0);
  }
  return run_search<double>(matrix, start, opts, opts.tie_tolerance);
}

}  // namespace rankagg
