#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rankagg/instance.hpp"
#include "rankagg/ranking.hpp"

namespace rankagg {

/// Deterministic, splittable pseudo-random generator (splitmix64 core). All
/// sampling in the library draws through this type, so seeded runs reproduce
/// bit-exactly across platforms. split(stream) derives an independent stream
/// from the construction seed without disturbing the parent's sequence.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), state_(seed) {}

  std::uint64_t next();
  double uniform01();                  // [0, 1), 53-bit resolution
  int uniform_int(int lo, int hi);     // inclusive bounds, unbiased
  Rng split(std::uint64_t stream) const;

  /// Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
      std::swap(v[i], v[static_cast<size_t>(uniform_int(0, i))]);
    }
  }

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

struct MallowsParams {
  Ranking reference;  // strict complete ground truth
  double phi = 0.5;   // dispersion in (0, 1]
};

void check_params(const MallowsParams& params);

/// Normalization constant Z = prod_{i=1..n} (1 + phi + ... + phi^{i-1}).
double mallows_normalizer(int n, double phi);

/// phi^{d(r, reference)} / Z over strict complete rankings, where d is the
/// pairwise-disagreement (Kendall) count. Throws on non-strict or incomplete
/// input.
double mallows_pmf(const MallowsParams& params, const Ranking& r);

/// Repeated insertion: the i-th reference object lands at rank j <= i with
/// probability phi^{i-j} / (1 + phi + ... + phi^{i-1}). Induces the Mallows
/// distribution around the reference.
Ranking rim_sample(const MallowsParams& params, Rng& rng);

/// RIM over the reference projected onto the subset, expanded back to the
/// full universe with the remaining objects unranked. Reference gaps between
/// subset objects carry no weight.
Ranking rime1_sample(const MallowsParams& params, const std::vector<int>& subset,
                     Rng& rng);

/// RIM over the full reference, then objects outside the subset are dropped
/// and the survivors renumbered by relative order. Reference gaps sharpen the
/// surviving pairwise marginals.
Ranking rime2_sample(const MallowsParams& params, const std::vector<int>& subset,
                     Rng& rng);

enum class GeneratorKind { rim, rime1, rime2 };
enum class MinorityKind { spammers, contrarians };

const char* generator_name(GeneratorKind g);
GeneratorKind generator_from_name(const std::string& name);
const char* minority_name(MinorityKind k);
MinorityKind minority_from_name(const std::string& name);

/// Inclusive uniform range for ranked-subset cardinalities.
struct SizeDist {
  int lo = 2;
  int hi = 2;
};

struct MinoritySpec {
  double alpha = 0.0;  // proportion in (0, 0.5)
  MinorityKind kind = MinorityKind::contrarians;
  double phi = 0.9;
  /// Explicit minority ground truth; contrarians default to the reverse of
  /// the majority reference, spammers to the majority reference itself.
  std::optional<Ranking> reference;
  SizeDist sizes;
};

struct ScenarioSpec {
  int n = 0;
  int K = 0;
  GeneratorKind generator = GeneratorKind::rime2;
  double phi = 0.5;
  std::optional<Ranking> reference;  // identity permutation when absent
  SizeDist sizes;
  std::optional<MinoritySpec> minority;
  std::uint64_t seed = 0;
};

void check_spec(const ScenarioSpec& spec);

/// Identity permutation (1, 2, ..., n).
Ranking identity_ranking(int n);

/// Draws K judges: subset cardinality from the size distribution, subset
/// uniformly among those of that cardinality, ranking from the configured
/// generator. The first floor((1-alpha)K) judges use the majority parameters,
/// the remaining ceil(alpha K) the minority parameters. Judge k draws from the
/// stream split(seed, k), so the instance is reproducible judge by judge.
/// The full parameterization is recorded in the instance metadata.
Instance generate_instance(const ScenarioSpec& spec);

ScenarioSpec scenario_from_json(const nlohmann::json& j);
nlohmann::ordered_json scenario_to_json(const ScenarioSpec& spec);

}  // namespace rankagg
