#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "rankagg/ranking.hpp"

namespace rankagg {

/// A set of K input rankings over a common object universe, plus free-form
/// provenance metadata (generator, seed, parameters). Duplicate judges are
/// kept verbatim; the aggregation objective sums over all of them.
struct Instance {
  int universe_size = 0;
  std::vector<Ranking> judges;
  nlohmann::ordered_json metadata = nlohmann::ordered_json::object();

  int num_judges() const { return static_cast<int>(judges.size()); }
};

/// Throws std::invalid_argument unless every judge shares the universe size.
void check_instance(const Instance& inst);

}  // namespace rankagg
