#include "rankagg/sampling.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rankagg {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t Rng::next() { return splitmix64(state_); }

double Rng::uniform01() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

int Rng::uniform_int(int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("empty integer range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - lo + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + static_cast<int>(x % span);
}

Rng Rng::split(std::uint64_t stream) const {
  std::uint64_t s = seed_ ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
  return Rng(splitmix64(s));
}

void check_params(const MallowsParams& params) {
  if (!(params.phi > 0.0 && params.phi <= 1.0)) {
    throw std::invalid_argument("phi must lie in (0, 1]");
  }
  if (!params.reference.is_complete() || !params.reference.is_strict()) {
    throw std::invalid_argument("reference must be a strict complete ranking");
  }
}

double mallows_normalizer(int n, double phi) {
  double z = 1.0;
  double geometric = 1.0;  // 1 + phi + ... + phi^{i-1}
  double power = 1.0;
  for (int i = 2; i <= n; ++i) {
    power *= phi;
    geometric += power;
    z *= geometric;
  }
  return z;
}

namespace {

// Pairwise-disagreement count between strict complete rankings.
int kendall_distance(const Ranking& a, const Ranking& b) {
  const int n = a.universe_size();
  int d = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool sa = a.position(i) < a.position(j);
      const bool sb = b.position(i) < b.position(j);
      d += (sa != sb);
    }
  }
  return d;
}

// Objects of the reference from best to worst.
std::vector<int> reference_order(const Ranking& reference) {
  std::vector<int> order;
  for (const auto& cls : psi(reference).classes) {
    for (int v : cls) order.push_back(v);
  }
  return order;
}

// Core repeated-insertion loop over an ordered object list.
std::vector<int> rim_insert(const std::vector<int>& order, double phi, Rng& rng) {
  std::vector<int> placed;
  placed.reserve(order.size());
  for (size_t i = 0; i < order.size(); ++i) {
    // Insertion weights phi^{i-j} for rank j = 1..i+1; accumulate from the
    // rightmost slot (weight 1) backwards.
    double total = 0.0;
    double w = 1.0;
    std::vector<double> weights(i + 1);
    for (size_t j = i + 1; j-- > 0;) {
      weights[j] = w;
      total += w;
      w *= phi;
    }
    const double u = rng.uniform01() * total;
    double cum = 0.0;
    size_t slot = i;
    for (size_t j = 0; j <= i; ++j) {
      cum += weights[j];
      if (u < cum) {
        slot = j;
        break;
      }
    }
    placed.insert(placed.begin() + static_cast<std::ptrdiff_t>(slot), order[i]);
  }
  return placed;
}

Ranking ranking_from_order(int n, const std::vector<int>& placed) {
  std::vector<int> positions(static_cast<size_t>(n), Ranking::kUnranked);
  for (size_t rank = 0; rank < placed.size(); ++rank) {
    positions[placed[rank]] = static_cast<int>(rank) + 1;
  }
  return Ranking(std::move(positions));
}

void check_subset(const std::vector<int>& subset, int n) {
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int v : subset) {
    if (v < 0 || v >= n) throw std::invalid_argument("subset object outside the universe");
    if (seen[v]) throw std::invalid_argument("duplicate object in subset");
    seen[v] = true;
  }
}

}  // namespace

double mallows_pmf(const MallowsParams& params, const Ranking& r) {
  check_params(params);
  if (!r.is_complete() || !r.is_strict()) {
    throw std::invalid_argument("mallows_pmf requires a strict complete ranking");
  }
  if (r.universe_size() != params.reference.universe_size()) {
    throw std::invalid_argument("ranking universe size differs from the reference");
  }
  const int d = kendall_distance(r, params.reference);
  return std::pow(params.phi, d) /
         mallows_normalizer(r.universe_size(), params.phi);
}

Ranking rim_sample(const MallowsParams& params, Rng& rng) {
  check_params(params);
  const std::vector<int> order = reference_order(params.reference);
  return ranking_from_order(params.reference.universe_size(),
                            rim_insert(order, params.phi, rng));
}

Ranking rime1_sample(const MallowsParams& params, const std::vector<int>& subset,
                     Rng& rng) {
  check_params(params);
  const int n = params.reference.universe_size();
  check_subset(subset, n);
  if (subset.empty()) throw std::invalid_argument("subset must not be empty");
  // Projected reference ordering: subset objects in reference order.
  std::vector<int> order;
  for (int v : reference_order(params.reference)) {
    if (std::find(subset.begin(), subset.end(), v) != subset.end()) {
      order.push_back(v);
    }
  }
  return ranking_from_order(n, rim_insert(order, params.phi, rng));
}

Ranking rime2_sample(const MallowsParams& params, const std::vector<int>& subset,
                     Rng& rng) {
  check_params(params);
  const int n = params.reference.universe_size();
  check_subset(subset, n);
  const std::vector<int> placed =
      rim_insert(reference_order(params.reference), params.phi, rng);
  std::vector<int> surviving;
  for (int v : placed) {
    if (std::find(subset.begin(), subset.end(), v) != subset.end()) {
      surviving.push_back(v);
    }
  }
  return ranking_from_order(n, surviving);
}

const char* generator_name(GeneratorKind g) {
  switch (g) {
    case GeneratorKind::rim: return "rim";
    case GeneratorKind::rime1: return "rime1";
    default: return "rime2";
  }
}

GeneratorKind generator_from_name(const std::string& name) {
  std::string k = name;
  std::transform(k.begin(), k.end(), k.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  if (k == "rim") return GeneratorKind::rim;
  if (k == "rime1") return GeneratorKind::rime1;
  if (k == "rime2") return GeneratorKind::rime2;
  throw std::invalid_argument("unknown generator: " + name);
}

const char* minority_name(MinorityKind k) {
  return k == MinorityKind::spammers ? "spammers" : "contrarians";
}

MinorityKind minority_from_name(const std::string& name) {
  if (name == "spammers") return MinorityKind::spammers;
  if (name == "contrarians") return MinorityKind::contrarians;
  throw std::invalid_argument("unknown minority kind: " + name);
}

Ranking identity_ranking(int n) {
  std::vector<int> positions(static_cast<size_t>(n));
  std::iota(positions.begin(), positions.end(), 1);
  return Ranking(std::move(positions));
}

namespace {

void check_sizes(const SizeDist& sizes, int n) {
  if (sizes.lo < 2 || sizes.lo > sizes.hi || sizes.hi > n) {
    throw std::invalid_argument("size distribution must satisfy 2 <= lo <= hi <= n");
  }
}

}  // namespace

void check_spec(const ScenarioSpec& spec) {
  if (spec.n < 2) throw std::invalid_argument("scenario needs at least two objects");
  if (spec.K < 1) throw std::invalid_argument("scenario needs at least one judge");
  if (!(spec.phi > 0.0 && spec.phi <= 1.0)) {
    throw std::invalid_argument("phi must lie in (0, 1]");
  }
  check_sizes(spec.sizes, spec.n);
  if (spec.reference) {
    if (spec.reference->universe_size() != spec.n ||
        !spec.reference->is_complete() || !spec.reference->is_strict()) {
      throw std::invalid_argument("reference must be a strict complete ranking over n objects");
    }
  }
  if (spec.minority) {
    const MinoritySpec& m = *spec.minority;
    if (!(m.alpha > 0.0 && m.alpha < 0.5)) {
      throw std::invalid_argument("minority proportion must lie in (0, 0.5)");
    }
    if (!(m.phi > 0.0 && m.phi <= 1.0)) {
      throw std::invalid_argument("minority phi must lie in (0, 1]");
    }
    check_sizes(m.sizes, spec.n);
    if (m.reference && (m.reference->universe_size() != spec.n ||
                        !m.reference->is_complete() || !m.reference->is_strict())) {
      throw std::invalid_argument("minority reference must be a strict complete ranking");
    }
  }
}

Instance generate_instance(const ScenarioSpec& spec) {
  check_spec(spec);
  const Ranking majority_ref =
      spec.reference ? *spec.reference : identity_ranking(spec.n);
  MallowsParams majority{majority_ref, spec.phi};

  MallowsParams minority_params = majority;
  int majority_count = spec.K;
  SizeDist minority_sizes = spec.sizes;
  if (spec.minority) {
    const MinoritySpec& ms = *spec.minority;
    majority_count = static_cast<int>(std::floor((1.0 - ms.alpha) * spec.K));
    minority_sizes = ms.sizes;
    Ranking minority_ref = ms.reference
                               ? *ms.reference
                               : (ms.kind == MinorityKind::contrarians
                                      ? reverse(majority_ref)
                                      : majority_ref);
    minority_params = MallowsParams{minority_ref, ms.phi};
  }

  Instance inst;
  inst.universe_size = spec.n;
  inst.judges.reserve(static_cast<size_t>(spec.K));
  Rng base(spec.seed);
  for (int k = 0; k < spec.K; ++k) {
    Rng rng = base.split(static_cast<std::uint64_t>(k));
    const bool is_majority = k < majority_count;
    const MallowsParams& params = is_majority ? majority : minority_params;
    const SizeDist& sizes = is_majority ? spec.sizes : minority_sizes;

    const int cardinality = rng.uniform_int(sizes.lo, sizes.hi);
    std::vector<int> pool(static_cast<size_t>(spec.n));
    std::iota(pool.begin(), pool.end(), 0);
    rng.shuffle(pool);
    std::vector<int> subset(pool.begin(), pool.begin() + cardinality);
    std::sort(subset.begin(), subset.end());

    switch (spec.generator) {
      case GeneratorKind::rim:
        inst.judges.push_back(rim_sample(params, rng));
        break;
      case GeneratorKind::rime1:
        inst.judges.push_back(rime1_sample(params, subset, rng));
        break;
      case GeneratorKind::rime2:
        inst.judges.push_back(rime2_sample(params, subset, rng));
        break;
    }
  }

  inst.metadata = scenario_to_json(spec);
  inst.metadata["majority_count"] = majority_count;
  inst.metadata["minority_count"] = spec.K - majority_count;
  if (spec.minority) {
    inst.metadata["minority_reference"] = minority_params.reference.to_string();
  }
  return inst;
}

namespace {

SizeDist size_dist_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("size_dist must be a [lo, hi] pair");
  }
  return SizeDist{j[0].get<int>(), j[1].get<int>()};
}

Ranking ranking_from_json_array(const nlohmann::json& j) {
  std::vector<std::optional<int>> row;
  for (const auto& cell : j) {
    if (cell.is_null()) {
      row.push_back(std::nullopt);
    } else {
      row.push_back(cell.get<int>());
    }
  }
  return Ranking(row);
}

}  // namespace

ScenarioSpec scenario_from_json(const nlohmann::json& j) {
  ScenarioSpec spec;
  spec.n = j.at("n").get<int>();
  spec.K = j.at("K").get<int>();
  spec.generator = generator_from_name(j.value("generator", "rime2"));
  if (j.contains("majority")) {
    const auto& maj = j.at("majority");
    spec.phi = maj.at("phi").get<double>();
    spec.sizes = size_dist_from_json(maj.at("size_dist"));
    if (maj.contains("reference")) {
      spec.reference = ranking_from_json_array(maj.at("reference"));
    }
  } else {
    spec.phi = j.at("phi").get<double>();
    spec.sizes = size_dist_from_json(j.at("size_dist"));
    if (j.contains("reference")) {
      spec.reference = ranking_from_json_array(j.at("reference"));
    }
  }
  if (j.contains("minority") && !j.at("minority").is_null()) {
    const auto& mj = j.at("minority");
    MinoritySpec ms;
    ms.alpha = mj.at("alpha").get<double>();
    ms.kind = minority_from_name(mj.value("kind", "contrarians"));
    ms.phi = mj.at("phi").get<double>();
    ms.sizes = size_dist_from_json(mj.at("size_dist"));
    if (mj.contains("reference")) {
      ms.reference = ranking_from_json_array(mj.at("reference"));
    }
    spec.minority = ms;
  }
  spec.seed = j.value("seed", 0ULL);
  return spec;
}

nlohmann::ordered_json scenario_to_json(const ScenarioSpec& spec) {
  nlohmann::ordered_json j;
  j["n"] = spec.n;
  j["K"] = spec.K;
  j["generator"] = generator_name(spec.generator);
  nlohmann::ordered_json maj;
  maj["phi"] = spec.phi;
  maj["size_dist"] = {spec.sizes.lo, spec.sizes.hi};
  const Ranking ref = spec.reference ? *spec.reference : identity_ranking(spec.n);
  maj["reference"] = ref.positions();
  j["majority"] = maj;
  if (spec.minority) {
    nlohmann::ordered_json mj;
    mj["alpha"] = spec.minority->alpha;
    mj["kind"] = minority_name(spec.minority->kind);
    mj["phi"] = spec.minority->phi;
    mj["size_dist"] = {spec.minority->sizes.lo, spec.minority->sizes.hi};
    if (spec.minority->reference) {
      mj["reference"] = spec.minority->reference->positions();
    }
    j["minority"] = mj;
  } else {
    j["minority"] = nullptr;
  }
  j["seed"] = spec.seed;
  return j;
}

}  // namespace rankagg
