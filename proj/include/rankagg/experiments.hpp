#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "json.hpp"
#include "rankagg/aggregate.hpp"
#include "rankagg/sampling.hpp"

namespace rankagg {

/// Seed derivation used by the experiment grids: every (cell, replication)
/// pair owns an independent stream regardless of grid iteration order.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

struct DecisivenessConfig {
  int n = 8;
  int K = 25;
  GeneratorKind generator = GeneratorKind::rime2;
  std::vector<double> phi_grid = {0.05, 0.2, 0.35, 0.5, 0.65, 0.8, 0.95};
  int seeds = 10;  // replications per grid cell
  std::uint64_t base_seed = 1;
  SizeDist sizes{2, 6};
  std::uint64_t node_limit = 5'000'000;
  std::optional<Ranking> reference;  // identity permutation when absent
};

struct DecisivenessRow {
  double phi = 0.0;
  Measure measure = Measure::tau_x;
  double avg_num_optima = 0.0;
  double sd_num_optima = 0.0;
  int instances_solved = 0;
  int instances_timed_out = 0;
};

struct DecisivenessReport {
  DecisivenessConfig config;
  std::vector<DecisivenessRow> rows;
};

/// For each dispersion value and replication seed: generate an instance and
/// solve it exactly under both measures, recording the alternative-optima
/// counts. Instances that hit the node limit are counted separately and
/// excluded from the averages.
DecisivenessReport run_decisiveness(const DecisivenessConfig& config);

struct FairnessConfig {
  int n = 8;
  int K = 20;
  GeneratorKind generator = GeneratorKind::rime2;
  double phi = 0.05;
  std::vector<double> alphas = {0.05, 0.1, 0.15, 0.2};
  MinorityKind minority_kind = MinorityKind::contrarians;
  double minority_phi = 0.9;  // used for spammers; contrarians reuse phi
  SizeDist majority_sizes{2, 4};
  std::vector<SizeDist> minority_sizes_grid = {{2, 4}, {5, 7}};
  int seeds = 10;
  std::uint64_t base_seed = 1;
  std::uint64_t node_limit = 5'000'000;
  std::optional<Ranking> reference;
};

struct FairnessRow {
  double alpha = 0.0;
  MinorityKind minority_kind = MinorityKind::contrarians;
  SizeDist minority_sizes;
  Measure measure = Measure::tau_x;
  double avg_sgs = 0.0;  // solution-to-ground-truth similarity
  double sd_sgs = 0.0;
  int instances_solved = 0;
  int instances_timed_out = 0;
};

struct FairnessReport {
  FairnessConfig config;
  std::vector<FairnessRow> rows;
};

/// For each (alpha, minority size distribution) cell: generate instances with
/// an adversarial minority, solve under both measures, and record the average
/// tau_x_hat correlation between the optimal rankings and the majority ground
/// truth. Within-instance averaging over alternative optima happens before
/// the cross-seed mean and standard deviation.
FairnessReport run_fairness(const FairnessConfig& config);

DecisivenessConfig decisiveness_config_from_json(const nlohmann::json& j);
FairnessConfig fairness_config_from_json(const nlohmann::json& j);
nlohmann::ordered_json to_json(const DecisivenessConfig& config);
nlohmann::ordered_json to_json(const FairnessConfig& config);
nlohmann::ordered_json to_json(const DecisivenessReport& report);
nlohmann::ordered_json to_json(const FairnessReport& report);

void write_csv(const DecisivenessReport& report, std::ostream& os);
void write_csv(const FairnessReport& report, std::ostream& os);

}  // namespace rankagg
