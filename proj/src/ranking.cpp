#include "rankagg/ranking.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace rankagg {

Ranking::Ranking(int universe_size)
    : positions_(static_cast<size_t>(universe_size), kUnranked) {
  if (universe_size < 0) throw std::invalid_argument("negative universe size");
}

Ranking::Ranking(std::vector<int> positions) : positions_(std::move(positions)) {
  for (int p : positions_) {
    if (p < 0) throw std::invalid_argument("negative position value");
  }
}

Ranking::Ranking(const std::vector<std::optional<int>>& positions) {
  positions_.reserve(positions.size());
  for (const auto& p : positions) {
    if (p.has_value() && *p <= 0) {
      throw std::invalid_argument("non-positive position value");
    }
    positions_.push_back(p.value_or(kUnranked));
  }
}

std::vector<int> Ranking::ranked_objects() const {
  std::vector<int> out;
  for (int i = 0; i < universe_size(); ++i) {
    if (is_ranked(i)) out.push_back(i);
  }
  return out;
}

int Ranking::num_ranked() const {
  int c = 0;
  for (int p : positions_) c += (p != kUnranked);
  return c;
}

bool Ranking::is_complete() const { return num_ranked() == universe_size(); }

bool Ranking::is_strict() const {
  std::vector<int> ranked;
  for (int p : positions_) {
    if (p != kUnranked) ranked.push_back(p);
  }
  std::sort(ranked.begin(), ranked.end());
  return std::adjacent_find(ranked.begin(), ranked.end()) == ranked.end();
}

std::string Ranking::to_string() const {
  std::string out;
  for (int i = 0; i < universe_size(); ++i) {
    if (i > 0) out += ',';
    out += is_ranked(i) ? std::to_string(positions_[i]) : "NA";
  }
  return out;
}

ValidationReport validate(const Ranking& r) {
  ValidationReport rep;
  for (int p : r.positions()) {
    if (p < 0) {
      rep.error = "negative position value";
      return rep;
    }
  }
  rep.ok = true;
  rep.strict = r.is_strict();
  rep.complete = r.is_complete();
  return rep;
}

ValidationReport validate_row(const std::vector<std::optional<int>>& row) {
  ValidationReport rep;
  for (const auto& p : row) {
    if (p.has_value() && *p <= 0) {
      rep.error = "non-positive position value";
      return rep;
    }
  }
  std::vector<int> positions;
  positions.reserve(row.size());
  for (const auto& p : row) positions.push_back(p.value_or(Ranking::kUnranked));
  return validate(Ranking(std::move(positions)));
}

RankingMatrix ranking_matrix(const Ranking& r) {
  const int n = r.universe_size();
  RankingMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) m.set(i, j, r.pair_entry(i, j));
    }
  }
  return m;
}

Ranking project(const Ranking& r, const std::vector<int>& objects) {
  std::vector<bool> keep(static_cast<size_t>(r.universe_size()), false);
  for (int v : objects) {
    if (v < 0 || v >= r.universe_size()) {
      throw std::invalid_argument("projection object outside the universe");
    }
    keep[v] = true;
  }
  std::vector<int> positions(r.positions());
  for (int i = 0; i < r.universe_size(); ++i) {
    if (!keep[i]) positions[i] = Ranking::kUnranked;
  }
  return Ranking(std::move(positions));
}

std::vector<int> common_ranked(const Ranking& a, const Ranking& b) {
  if (a.universe_size() != b.universe_size()) {
    throw std::invalid_argument("rankings compare over different universes");
  }
  std::vector<int> out;
  for (int i = 0; i < a.universe_size(); ++i) {
    if (a.is_ranked(i) && b.is_ranked(i)) out.push_back(i);
  }
  return out;
}

ObjectOrdering psi(const Ranking& r) {
  // std::map keeps classes ordered by position; members arrive by ascending
  // object index.
  std::map<int, std::vector<int>> by_position;
  for (int i = 0; i < r.universe_size(); ++i) {
    if (r.is_ranked(i)) by_position[r.position(i)].push_back(i);
  }
  ObjectOrdering out;
  out.universe_size = r.universe_size();
  out.classes.reserve(by_position.size());
  for (auto& [pos, members] : by_position) out.classes.push_back(std::move(members));
  return out;
}

Ranking psi_inverse(const ObjectOrdering& o) {
  std::vector<int> positions(static_cast<size_t>(o.universe_size), Ranking::kUnranked);
  for (size_t c = 0; c < o.classes.size(); ++c) {
    for (int v : o.classes[c]) {
      if (v < 0 || v >= o.universe_size) {
        throw std::invalid_argument("object-ordering member outside the universe");
      }
      if (positions[v] != Ranking::kUnranked) {
        throw std::invalid_argument("object-ordering classes are not disjoint");
      }
      positions[v] = static_cast<int>(c) + 1;
    }
  }
  return Ranking(std::move(positions));
}

Ranking canonical(const Ranking& r) { return psi_inverse(psi(r)); }

Ranking reverse(const Ranking& r) {
  int lo = 0, hi = 0;
  bool any = false;
  for (int i = 0; i < r.universe_size(); ++i) {
    if (!r.is_ranked(i)) continue;
    const int p = r.position(i);
    if (!any) {
      lo = hi = p;
      any = true;
    } else {
      lo = std::min(lo, p);
      hi = std::max(hi, p);
    }
  }
  std::vector<int> positions(r.positions());
  for (int i = 0; i < r.universe_size(); ++i) {
    if (r.is_ranked(i)) positions[i] = lo + hi - r.position(i);
  }
  return canonical(Ranking(std::move(positions)));
}

bool is_between(const Ranking& a, const Ranking& b, const Ranking& c) {
  if (a.universe_size() != b.universe_size() ||
      a.universe_size() != c.universe_size()) {
    throw std::invalid_argument("rankings compare over different universes");
  }
  std::vector<int> common;
  for (int i = 0; i < a.universe_size(); ++i) {
    if (a.is_ranked(i) && b.is_ranked(i) && c.is_ranked(i)) common.push_back(i);
  }
  // Entrywise: b_ij (a_ij + c_ij) == a_ij c_ij + 1 exactly characterizes the
  // admissible values of b_ij given a_ij and c_ij.
  for (size_t s = 0; s < common.size(); ++s) {
    for (size_t t = 0; t < common.size(); ++t) {
      if (s == t) continue;
      const int i = common[s], j = common[t];
      const int aij = a.pair_entry(i, j);
      const int bij = b.pair_entry(i, j);
      const int cij = c.pair_entry(i, j);
      if (bij * (aij + cij) != aij * cij + 1) return false;
    }
  }
  return true;
}

namespace {

void weak_order_rec(int n, std::vector<int>& positions, int index,
                    std::uint64_t used, int max_used,
                    const std::function<void(const Ranking&)>& fn) {
  if (index == n) {
    fn(Ranking(positions));
    return;
  }
  const int remaining = n - index - 1;
  for (int v = 1; v <= n; ++v) {
    // Values must end up dense (1..m, no gaps); every value in 1..max that is
    // still unused needs one of the remaining slots.
    const std::uint64_t new_used = used | (std::uint64_t{1} << v);
    const int new_max = std::max(max_used, v);
    const int missing = new_max - std::popcount(new_used);
    if (missing > remaining) continue;
    positions[index] = v;
    weak_order_rec(n, positions, index + 1, new_used, new_max, fn);
  }
  positions[index] = 0;
}

}  // namespace

void for_each_weak_order(int n, const std::function<void(const Ranking&)>& fn,
                         int cap) {
  if (n < 0 || n > cap) {
    throw std::invalid_argument("weak-order enumeration size exceeds the cap");
  }
  if (n == 0) return;
  std::vector<int> positions(static_cast<size_t>(n), 0);
  weak_order_rec(n, positions, 0, 0, 0, fn);
}

std::vector<Ranking> enumerate_weak_orders(int n, int cap) {
  std::vector<Ranking> out;
  for_each_weak_order(n, [&out](const Ranking& r) { out.push_back(r); }, cap);
  return out;
}

}  // namespace rankagg
