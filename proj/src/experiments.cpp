#include "rankagg/experiments.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "rankagg/bnb.hpp"
#include "rankagg/measures.hpp"

namespace rankagg {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t state = base ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

struct RunningStats {
  std::vector<double> values;

  void add(double v) { values.push_back(v); }
  int count() const { return static_cast<int>(values.size()); }
  double mean() const {
    if (values.empty()) return 0.0;
    double s = 0.0;
    for (double v : values) s += v;
    return s / static_cast<double>(values.size());
  }
  double sd() const {
    if (values.size() < 2) return 0.0;
    const double m = mean();
    double s = 0.0;
    for (double v : values) s += (v - m) * (v - m);
    return std::sqrt(s / static_cast<double>(values.size() - 1));
  }
};

std::uint64_t phi_stream(double phi) { return std::bit_cast<std::uint64_t>(phi); }

}  // namespace

DecisivenessReport run_decisiveness(const DecisivenessConfig& config) {
  if (config.seeds < 1) throw std::invalid_argument("need at least one replication");
  DecisivenessReport report;
  report.config = config;
  const Ranking reference =
      config.reference ? *config.reference : identity_ranking(config.n);

  for (double phi : config.phi_grid) {
    RunningStats stats[2];
    int timed_out[2] = {0, 0};
    for (int rep = 0; rep < config.seeds; ++rep) {
      ScenarioSpec spec;
      spec.n = config.n;
      spec.K = config.K;
      spec.generator = config.generator;
      spec.phi = phi;
      spec.reference = reference;
      spec.sizes = config.sizes;
      spec.seed = derive_seed(derive_seed(config.base_seed, phi_stream(phi)),
                              static_cast<std::uint64_t>(rep));
      const Instance inst = generate_instance(spec);

      for (Measure measure : {Measure::tau_x, Measure::tau_x_hat}) {
        BnbOptions opts;
        opts.node_limit = config.node_limit;
        const OptimalitySet result = solve(inst, measure, opts);
        const int idx = measure == Measure::tau_x ? 0 : 1;
        if (result.proven_complete) {
          stats[idx].add(static_cast<double>(result.rankings.size()));
        } else {
          ++timed_out[idx];
        }
      }
    }
    for (Measure measure : {Measure::tau_x, Measure::tau_x_hat}) {
      const int idx = measure == Measure::tau_x ? 0 : 1;
      DecisivenessRow row;
      row.phi = phi;
      row.measure = measure;
      row.avg_num_optima = stats[idx].mean();
      row.sd_num_optima = stats[idx].sd();
      row.instances_solved = stats[idx].count();
      row.instances_timed_out = timed_out[idx];
      report.rows.push_back(row);
    }
  }
  return report;
}

FairnessReport run_fairness(const FairnessConfig& config) {
  if (config.seeds < 1) throw std::invalid_argument("need at least one replication");
  FairnessReport report;
  report.config = config;
  const Ranking reference =
      config.reference ? *config.reference : identity_ranking(config.n);

  for (double alpha : config.alphas) {
    for (const SizeDist& minority_sizes : config.minority_sizes_grid) {
      RunningStats stats[2];
      int timed_out[2] = {0, 0};
      for (int rep = 0; rep < config.seeds; ++rep) {
        ScenarioSpec spec;
        spec.n = config.n;
        spec.K = config.K;
        spec.generator = config.generator;
        spec.phi = config.phi;
        spec.reference = reference;
        spec.sizes = config.majority_sizes;
        MinoritySpec ms;
        ms.alpha = alpha;
        ms.kind = config.minority_kind;
        ms.phi = config.minority_kind == MinorityKind::spammers ? config.minority_phi
                                                                : config.phi;
        ms.sizes = minority_sizes;
        spec.minority = ms;
        const std::uint64_t cell =
            derive_seed(phi_stream(alpha),
                        (static_cast<std::uint64_t>(minority_sizes.lo) << 32) |
                            static_cast<std::uint64_t>(minority_sizes.hi));
        spec.seed = derive_seed(derive_seed(config.base_seed, cell),
                                static_cast<std::uint64_t>(rep));
        const Instance inst = generate_instance(spec);

        for (Measure measure : {Measure::tau_x, Measure::tau_x_hat}) {
          BnbOptions opts;
          opts.node_limit = config.node_limit;
          const OptimalitySet result = solve(inst, measure, opts);
          const int idx = measure == Measure::tau_x ? 0 : 1;
          if (!result.proven_complete) {
            ++timed_out[idx];
            continue;
          }
          // Mean over the alternative optima; the solutions and the ground
          // truth are complete, so tau_x_hat and tau_x coincide here.
          double sum = 0.0;
          for (const Ranking& opt : result.rankings) {
            const double sgs = tau_x_hat(opt, reference);
            if (std::abs(sgs - tau_x(opt, reference)) > 1e-12) {
              throw std::logic_error("tau_x and tau_x_hat diverge on complete rankings");
            }
            sum += sgs;
          }
          stats[idx].add(sum / static_cast<double>(result.rankings.size()));
        }
      }
      for (Measure measure : {Measure::tau_x, Measure::tau_x_hat}) {
        const int idx = measure == Measure::tau_x ? 0 : 1;
        FairnessRow row;
        row.alpha = alpha;
        row.minority_kind = config.minority_kind;
        row.minority_sizes = minority_sizes;
        row.measure = measure;
        row.avg_sgs = stats[idx].mean();
        row.sd_sgs = stats[idx].sd();
        row.instances_solved = stats[idx].count();
        row.instances_timed_out = timed_out[idx];
        report.rows.push_back(row);
      }
    }
  }
  return report;
}

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::optional<Ranking> reference_from_json(const nlohmann::json& j) {
  if (!j.contains("reference") || j.at("reference").is_null()) return std::nullopt;
  std::vector<std::optional<int>> row;
  for (const auto& cell : j.at("reference")) {
    if (cell.is_null()) {
      row.push_back(std::nullopt);
    } else {
      row.push_back(cell.get<int>());
    }
  }
  return Ranking(row);
}

SizeDist size_dist(const nlohmann::json& j) {
  return SizeDist{j.at(0).get<int>(), j.at(1).get<int>()};
}

}  // namespace

DecisivenessConfig decisiveness_config_from_json(const nlohmann::json& j) {
  DecisivenessConfig c;
  c.n = j.value("n", c.n);
  c.K = j.value("K", c.K);
  if (j.contains("generator")) {
    c.generator = generator_from_name(j.at("generator").get<std::string>());
  }
  if (j.contains("phi_grid")) c.phi_grid = j.at("phi_grid").get<std::vector<double>>();
  c.seeds = j.value("seeds", c.seeds);
  c.base_seed = j.value("base_seed", c.base_seed);
  if (j.contains("subset_sizes")) c.sizes = size_dist(j.at("subset_sizes"));
  c.node_limit = j.value("node_limit", c.node_limit);
  c.reference = reference_from_json(j);
  return c;
}

FairnessConfig fairness_config_from_json(const nlohmann::json& j) {
  FairnessConfig c;
  c.n = j.value("n", c.n);
  c.K = j.value("K", c.K);
  if (j.contains("generator")) {
    c.generator = generator_from_name(j.at("generator").get<std::string>());
  }
  c.phi = j.value("phi", c.phi);
  if (j.contains("alphas")) c.alphas = j.at("alphas").get<std::vector<double>>();
  if (j.contains("minority_kind")) {
    c.minority_kind = minority_from_name(j.at("minority_kind").get<std::string>());
  }
  c.minority_phi = j.value("minority_phi", c.minority_phi);
  if (j.contains("majority_sizes")) c.majority_sizes = size_dist(j.at("majority_sizes"));
  if (j.contains("minority_sizes_grid")) {
    c.minority_sizes_grid.clear();
    for (const auto& entry : j.at("minority_sizes_grid")) {
      c.minority_sizes_grid.push_back(size_dist(entry));
    }
  }
  c.seeds = j.value("seeds", c.seeds);
  c.base_seed = j.value("base_seed", c.base_seed);
  c.node_limit = j.value("node_limit", c.node_limit);
  c.reference = reference_from_json(j);
  return c;
}

nlohmann::ordered_json to_json(const DecisivenessConfig& config) {
  nlohmann::ordered_json j;
  j["experiment"] = "decisiveness";
  j["n"] = config.n;
  j["K"] = config.K;
  j["generator"] = generator_name(config.generator);
  j["phi_grid"] = config.phi_grid;
  j["seeds"] = config.seeds;
  j["base_seed"] = config.base_seed;
  j["subset_sizes"] = {config.sizes.lo, config.sizes.hi};
  j["node_limit"] = config.node_limit;
  if (config.reference) {
    j["reference"] = config.reference->positions();
  } else {
    j["reference"] = nullptr;
  }
  return j;
}

nlohmann::ordered_json to_json(const FairnessConfig& config) {
  nlohmann::ordered_json j;
  j["experiment"] = "fairness";
  j["n"] = config.n;
  j["K"] = config.K;
  j["generator"] = generator_name(config.generator);
  j["phi"] = config.phi;
  j["alphas"] = config.alphas;
  j["minority_kind"] = minority_name(config.minority_kind);
  j["minority_phi"] = config.minority_phi;
  j["majority_sizes"] = {config.majority_sizes.lo, config.majority_sizes.hi};
  nlohmann::ordered_json grid = nlohmann::ordered_json::array();
  for (const SizeDist& s : config.minority_sizes_grid) grid.push_back({s.lo, s.hi});
  j["minority_sizes_grid"] = grid;
  j["seeds"] = config.seeds;
  j["base_seed"] = config.base_seed;
  j["node_limit"] = config.node_limit;
  if (config.reference) {
    j["reference"] = config.reference->positions();
  } else {
    j["reference"] = nullptr;
  }
  return j;
}

nlohmann::ordered_json to_json(const DecisivenessReport& report) {
  nlohmann::ordered_json j;
  j["config"] = to_json(report.config);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const DecisivenessRow& r : report.rows) {
    nlohmann::ordered_json row;
    row["phi"] = r.phi;
    row["measure"] = measure_name(r.measure);
    row["avg_num_optima"] = r.avg_num_optima;
    row["sd_num_optima"] = r.sd_num_optima;
    row["instances_solved"] = r.instances_solved;
    row["instances_timed_out"] = r.instances_timed_out;
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

nlohmann::ordered_json to_json(const FairnessReport& report) {
  nlohmann::ordered_json j;
  j["config"] = to_json(report.config);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const FairnessRow& r : report.rows) {
    nlohmann::ordered_json row;
    row["alpha"] = r.alpha;
    row["minority_kind"] = minority_name(r.minority_kind);
    row["minority_size_lo"] = r.minority_sizes.lo;
    row["minority_size_hi"] = r.minority_sizes.hi;
    row["measure"] = measure_name(r.measure);
    row["avg_sgs"] = r.avg_sgs;
    row["sd_sgs"] = r.sd_sgs;
    row["instances_solved"] = r.instances_solved;
    row["instances_timed_out"] = r.instances_timed_out;
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

void write_csv(const DecisivenessReport& report, std::ostream& os) {
  os << "phi,measure,avg_num_optima,sd_num_optima,instances_solved,instances_timed_out\n";
  for (const DecisivenessRow& r : report.rows) {
    os << fmt(r.phi) << ',' << measure_name(r.measure) << ','
       << fmt(r.avg_num_optima) << ',' << fmt(r.sd_num_optima) << ','
       << r.instances_solved << ',' << r.instances_timed_out << '\n';
  }
}

void write_csv(const FairnessReport& report, std::ostream& os) {
  os << "alpha,minority_kind,minority_size_lo,minority_size_hi,measure,"
        "avg_sgs,sd_sgs,instances_solved,instances_timed_out\n";
  for (const FairnessRow& r : report.rows) {
    os << fmt(r.alpha) << ',' << minority_name(r.minority_kind) << ','
       << r.minority_sizes.lo << ',' << r.minority_sizes.hi << ','
       << measure_name(r.measure) << ',' << fmt(r.avg_sgs) << ','
       << fmt(r.sd_sgs) << ',' << r.instances_solved << ','
       << r.instances_timed_out << '\n';
  }
}

}  // namespace rankagg
