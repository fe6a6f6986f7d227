#include "rankagg/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace rankagg {

namespace {

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

bool looks_like_header(const std::vector<std::string>& cells) {
  if (cells.empty()) return false;
  for (const std::string& c : cells) {
    if (c.size() < 2 || (c[0] != 'v' && c[0] != 'V')) return false;
    for (size_t i = 1; i < c.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(c[i]))) return false;
    }
  }
  return true;
}

std::optional<int> parse_cell(const std::string& cell, int row, int col) {
  if (cell.empty() || cell == "NA") return std::nullopt;
  size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(cell, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("row " + std::to_string(row) + ", column " +
                                std::to_string(col) + ": not a position: '" +
                                cell + "'");
  }
  if (pos != cell.size()) {
    throw std::invalid_argument("row " + std::to_string(row) + ", column " +
                                std::to_string(col) + ": not a position: '" +
                                cell + "'");
  }
  if (value <= 0) {
    throw std::invalid_argument("row " + std::to_string(row) + ", column " +
                                std::to_string(col) +
                                ": non-positive position " + cell);
  }
  return value;
}

}  // namespace

std::vector<Ranking> read_rankings_csv(std::istream& is) {
  std::vector<Ranking> out;
  std::string line;
  int columns = -1;
  int row = 0;
  bool first = true;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    ++row;
    if (trim(line).empty()) continue;
    std::vector<std::string> cells = split_csv_line(line);
    if (first && looks_like_header(cells)) {
      columns = static_cast<int>(cells.size());
      first = false;
      continue;
    }
    first = false;
    if (columns == -1) {
      columns = static_cast<int>(cells.size());
    } else if (static_cast<int>(cells.size()) != columns) {
      throw std::invalid_argument("row " + std::to_string(row) + ": expected " +
                                  std::to_string(columns) + " columns, found " +
                                  std::to_string(cells.size()));
    }
    std::vector<std::optional<int>> positions;
    positions.reserve(cells.size());
    for (size_t c = 0; c < cells.size(); ++c) {
      positions.push_back(parse_cell(cells[c], row, static_cast<int>(c) + 1));
    }
    out.emplace_back(positions);
  }
  return out;
}

std::vector<Ranking> read_rankings_csv_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open: " + path);
  return read_rankings_csv(is);
}

void write_rankings_csv(std::ostream& os, const std::vector<Ranking>& rankings,
                        bool header) {
  if (header && !rankings.empty()) {
    for (int i = 0; i < rankings.front().universe_size(); ++i) {
      os << (i > 0 ? "," : "") << "v" << i + 1;
    }
    os << '\n';
  }
  for (const Ranking& r : rankings) os << r.to_string() << '\n';
}

namespace {

Ranking ranking_from_json_row(const nlohmann::json& row) {
  std::vector<std::optional<int>> positions;
  for (const auto& cell : row) {
    if (cell.is_null()) {
      positions.push_back(std::nullopt);
    } else if (cell.is_number_integer()) {
      positions.push_back(cell.get<int>());
    } else {
      throw std::invalid_argument("ranking entries must be integers or null");
    }
  }
  return Ranking(positions);
}

}  // namespace

Instance read_instance_json(std::istream& is) {
  nlohmann::json j;
  is >> j;
  Instance inst;
  const nlohmann::json* judges = nullptr;
  if (j.is_array()) {
    judges = &j;
  } else if (j.is_object()) {
    judges = &j.at("judges");
    if (j.contains("metadata")) {
      inst.metadata = j.at("metadata").get<nlohmann::ordered_json>();
    }
  } else {
    throw std::invalid_argument("instance JSON must be an array or object");
  }
  for (const auto& row : *judges) {
    inst.judges.push_back(ranking_from_json_row(row));
  }
  if (j.is_object() && j.contains("universe_size")) {
    inst.universe_size = j.at("universe_size").get<int>();
  } else if (!inst.judges.empty()) {
    inst.universe_size = inst.judges.front().universe_size();
  }
  for (const Ranking& r : inst.judges) {
    if (r.universe_size() != inst.universe_size) {
      throw std::invalid_argument("ragged judge rows in instance JSON");
    }
  }
  return inst;
}

Instance read_instance_json_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open: " + path);
  return read_instance_json(is);
}

void write_instance_json(std::ostream& os, const Instance& inst) {
  nlohmann::ordered_json j;
  j["universe_size"] = inst.universe_size;
  nlohmann::ordered_json judges = nlohmann::ordered_json::array();
  for (const Ranking& r : inst.judges) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int i = 0; i < r.universe_size(); ++i) {
      if (r.is_ranked(i)) {
        row.push_back(r.position(i));
      } else {
        row.push_back(nullptr);
      }
    }
    judges.push_back(row);
  }
  j["judges"] = judges;
  j["metadata"] = inst.metadata;
  os << j.dump(2) << '\n';
}

namespace {

bool has_json_extension(const std::string& path) {
  if (path.size() < 5) return false;
  std::string ext = path.substr(path.size() - 5);
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return ext == ".json";
}

}  // namespace

Instance read_instance_file(const std::string& path) {
  if (has_json_extension(path)) return read_instance_json_file(path);
  Instance inst;
  inst.judges = read_rankings_csv_file(path);
  if (inst.judges.empty()) throw std::invalid_argument("no rankings in " + path);
  inst.universe_size = inst.judges.front().universe_size();
  for (const Ranking& r : inst.judges) {
    if (r.universe_size() != inst.universe_size) {
      throw std::invalid_argument("ragged rows in " + path);
    }
  }
  return inst;
}

void write_instance_file(const std::string& path, const Instance& inst) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  if (has_json_extension(path)) {
    write_instance_json(os, inst);
  } else {
    write_rankings_csv(os, inst.judges);
  }
  if (!os) throw std::runtime_error("write failed: " + path);
}

Ranking parse_ranking_text(const std::string& text) {
  std::vector<std::string> cells = split_csv_line(text);
  std::vector<std::optional<int>> positions;
  positions.reserve(cells.size());
  for (size_t c = 0; c < cells.size(); ++c) {
    positions.push_back(parse_cell(cells[c], 1, static_cast<int>(c) + 1));
  }
  return Ranking(positions);
}

}  // namespace rankagg
