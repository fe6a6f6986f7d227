#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rankagg/instance.hpp"
#include "rankagg/ranking.hpp"

namespace rankagg {

/// Rankings file, CSV dialect: one row per judge, n columns, optional header
/// row "v1,...,vn". An empty cell or the literal "NA" marks an unranked
/// object. Ragged rows and non-positive positions are rejected.
std::vector<Ranking> read_rankings_csv(std::istream& is);
std::vector<Ranking> read_rankings_csv_file(const std::string& path);
void write_rankings_csv(std::ostream& os, const std::vector<Ranking>& rankings,
                        bool header = false);

/// JSON alternative: an array of arrays with null for unranked objects, or an
/// object {"universe_size": n, "judges": [...], "metadata": {...}}.
Instance read_instance_json(std::istream& is);
Instance read_instance_json_file(const std::string& path);
void write_instance_json(std::ostream& os, const Instance& inst);

/// Reads a rankings file as an Instance, dispatching on the .json extension
/// (anything else is parsed as CSV).
Instance read_instance_file(const std::string& path);
void write_instance_file(const std::string& path, const Instance& inst);

/// Inline row syntax used by CLI flags: "1,2,NA,4".
Ranking parse_ranking_text(const std::string& text);

}  // namespace rankagg
