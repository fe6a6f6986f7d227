#include "rankagg/ip.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace rankagg {

IpModel build_model(const Instance& inst, Measure measure) {
  check_instance(inst);
  if (inst.universe_size < 2) {
    throw std::invalid_argument("model requires at least two objects");
  }
  IpModel m;
  m.n = inst.universe_size;
  m.measure = measure;
  m.coefficients = aggregate_matrix(inst, measure);
  return m;
}

namespace {

std::string coef_to_string(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

}  // namespace

void export_model(const IpModel& m, std::ostream& os) {
  const int n = m.n;
  os << "\\ NIRA consensus-ranking model, measure " << measure_name(m.measure)
     << ", n=" << n << "\n";
  os << "Maximize\n obj:";
  bool any = false;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double c = m.coefficients.value(i, j);
      if (c == 0.0) continue;
      os << (c >= 0 ? (any ? " + " : " ") : " - ") << coef_to_string(std::abs(c))
         << " r_" << i + 1 << "_" << j + 1;
      any = true;
    }
  }
  if (!any) os << " 0 r_1_2";
  os << "\nSubject To\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        os << " trans_" << i + 1 << "_" << j + 1 << "_" << k + 1 << ": r_"
           << i + 1 << "_" << j + 1 << " - r_" << k + 1 << "_" << j + 1
           << " - r_" << i + 1 << "_" << k + 1 << " >= -1\n";
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      os << " pair_" << i + 1 << "_" << j + 1 << ": r_" << i + 1 << "_" << j + 1
         << " + r_" << j + 1 << "_" << i + 1 << " >= 0\n";
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      os << " parity_" << i + 1 << "_" << j + 1 << ": r_" << i + 1 << "_"
         << j + 1 << " - 2 y_" << i + 1 << "_" << j + 1 << " = -1\n";
    }
  }
  os << "Bounds\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) os << " -1 <= r_" << i + 1 << "_" << j + 1 << " <= 1\n";
    }
  }
  os << "General\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) os << " r_" << i + 1 << "_" << j + 1 << "\n";
    }
  }
  os << "Binary\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) os << " y_" << i + 1 << "_" << j + 1 << "\n";
    }
  }
  os << "End\n";
}

void export_model(const IpModel& m, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  export_model(m, os);
  if (!os) throw std::runtime_error("write failed: " + path);
}

EnumeratedSolution brute_force_solve(const IpModel& m, int cap) {
  const AggregateMatrix& coef = m.coefficients;
  EnumeratedSolution out;
  bool first = true;
  // Exact comparison on the integer path; doubles fall back to a strict
  // comparison, which suffices for the sizes enumeration can reach.
  std::int64_t best_num = 0;
  double best_val = 0.0;
  std::vector<Ranking> winners;
  for_each_weak_order(
      m.n,
      [&](const Ranking& r) {
        if (coef.exact) {
          std::int64_t inner = 0;
          for (int i = 0; i < m.n; ++i) {
            for (int j = 0; j < m.n; ++j) {
              if (i != j) inner += coef.scaled(i, j) * r.pair_entry(i, j);
            }
          }
          if (first || inner > best_num) {
            best_num = inner;
            winners.clear();
            first = false;
          }
          if (inner == best_num) winners.push_back(r);
        } else {
          double inner = 0;
          for (int i = 0; i < m.n; ++i) {
            for (int j = 0; j < m.n; ++j) {
              if (i != j) inner += coef.value(i, j) * r.pair_entry(i, j);
            }
          }
          if (first || inner > best_val) {
            best_val = inner;
            winners.clear();
            first = false;
          }
          if (inner == best_val) winners.push_back(r);
        }
      },
      cap);
  std::sort(winners.begin(), winners.end());
  out.rankings = std::move(winners);
  const double objective =
      coef.exact ? static_cast<double>(best_num) / static_cast<double>(coef.scale)
                 : best_val;
  out.objective = coef.kind == MatrixKind::combined
                      ? objective / (static_cast<double>(m.n) * (m.n - 1))
                      : objective;
  return out;
}

Ranking ranking_from_matrix(const RankingMatrix& m) {
  const int n = m.size();
  std::vector<int> row_sum(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) row_sum[i] += m.at(i, j);
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

}  // namespace rankagg
