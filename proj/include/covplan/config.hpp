#pragma once

#include <algorithm>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "covplan/graph.hpp"

namespace covplan {

/// Canonical placement of n UAVs: positions sorted ascending. Two placements
/// that are equal as multisets compare equal, so UAV identities are never
/// tracked. The base may repeat; other regions may not.
struct Configuration {
  std::vector<RegionIndex> positions;

  std::size_t size() const { return positions.size(); }

  bool operator==(const Configuration&) const = default;
  auto operator<=>(const Configuration&) const = default;
};

inline Configuration all_base_configuration(const TopologicGraph& g, std::size_t n) {
  Configuration c;
  c.positions.assign(n, g.base);
  return c;
}

inline bool is_all_base(const TopologicGraph& g, const Configuration& c) {
  return std::all_of(c.positions.begin(), c.positions.end(),
                     [&](RegionIndex r) { return r == g.base; });
}

enum class ConfigError { duplicate_non_base, disconnected_from_base };

struct ConfigurationError : std::runtime_error {
  ConfigError kind;
  ConfigurationError(ConfigError k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

/// True iff occupied ∪ {B} induces a connected subgraph of (V, comms).
/// One traversal from B over occupied relays.
inline bool is_connected_to_base(const TopologicGraph& g, const Bitset& occupied) {
  std::size_t pending = occupied.count();
  if (occupied.test(g.base)) --pending;  // B is the traversal root
  if (pending == 0) return true;

  Bitset reached(g.region_count());
  std::vector<RegionIndex> stack{g.base};
  reached.set(g.base);
  while (!stack.empty() && pending > 0) {
    RegionIndex v = stack.back();
    stack.pop_back();
    for (auto w : g.comms[v]) {
      if (!occupied.test(w) || reached.test(w)) continue;
      reached.set(w);
      --pending;
      stack.push_back(w);
    }
  }
  return pending == 0;
}

inline bool is_connected_to_base(const TopologicGraph& g, std::span<const RegionIndex> occupied) {
  Bitset occ(g.region_count());
  for (auto r : occupied) occ.set(r);
  return is_connected_to_base(g, occ);
}

namespace detail {

/// Checks the two Def.-2 clauses on a sorted position vector.
inline std::optional<ConfigError> configuration_violation(const TopologicGraph& g,
                                                          const std::vector<RegionIndex>& sorted) {
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1] && sorted[i] != g.base) return ConfigError::duplicate_non_base;
  if (!is_connected_to_base(g, std::span<const RegionIndex>(sorted)))
    return ConfigError::disconnected_from_base;
  return std::nullopt;
}

}  // namespace detail

/// Canonicalizes raw positions and enforces distinctness-except-base and
/// base-connectivity. Any permutation of raw_positions yields the same
/// canonical form.
inline Configuration make_configuration(const TopologicGraph& g,
                                        std::vector<RegionIndex> raw_positions) {
  for (auto r : raw_positions)
    if (r >= g.region_count()) throw std::out_of_range("region index out of range");
  std::sort(raw_positions.begin(), raw_positions.end());
  if (auto err = detail::configuration_violation(g, raw_positions)) {
    if (*err == ConfigError::duplicate_non_base)
      throw ConfigurationError(ConfigError::duplicate_non_base,
                               "two UAVs share a non-base region");
    throw ConfigurationError(ConfigError::disconnected_from_base,
                             "occupied regions are not connected to the base");
  }
  Configuration c;
  c.positions = std::move(raw_positions);
  return c;
}

inline bool is_valid_configuration(const TopologicGraph& g, const Configuration& c) {
  for (auto r : c.positions)
    if (r >= g.region_count()) return false;
  if (!std::is_sorted(c.positions.begin(), c.positions.end())) return false;
  return !detail::configuration_violation(g, c.positions).has_value();
}

namespace detail {

// Kuhn's augmenting-path matching on the UAV assignment graph: left side is
// the multiset of c positions, right side the multiset of c2 positions, with
// an edge where the move relation permits the transition.
class StepMatcher {
 public:
  StepMatcher(const TopologicGraph& g, const Configuration& c, const Configuration& c2)
      : n_(c.size()), adj_(n_), match_right_(n_, -1) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (g.has_move(c.positions[i], c2.positions[j])) adj_[i].push_back(j);
  }

  bool perfect() {
    std::size_t matched = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      seen_.assign(n_, false);
      if (augment(i))
        ++matched;
      else
        return false;
    }
    return matched == n_;
  }

 private:
  bool augment(std::size_t i) {
    for (auto j : adj_[i]) {
      if (seen_[j]) continue;
      seen_[j] = true;
      if (match_right_[j] < 0 || augment(static_cast<std::size_t>(match_right_[j]))) {
        match_right_[j] = static_cast<int>(i);
        return true;
      }
    }
    return false;
  }

  std::size_t n_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<int> match_right_;
  std::vector<char> seen_;
};

}  // namespace detail

/// Synchronous step relation on canonical configurations: a step exists iff
/// some assignment between the two multisets moves every UAV along a move
/// edge. Decided by bipartite perfect matching.
inline bool is_step(const TopologicGraph& g, const Configuration& c, const Configuration& c2) {
  if (c.size() != c2.size()) return false;
  if (c.size() == 0) return true;
  detail::StepMatcher m(g, c, c2);
  return m.perfect();
}

namespace detail {

struct SuccessorEnumerator {
  const TopologicGraph& g;
  const Configuration& from;
  std::set<Configuration> out;
  std::vector<RegionIndex> choice;
  Bitset taken;  // non-base regions already chosen

  SuccessorEnumerator(const TopologicGraph& g_, const Configuration& c)
      : g(g_), from(c), taken(g_.region_count()) {
    choice.resize(c.size());
  }

  void run() { recurse(0, 0); }

  // Positions are sorted, so equal sources form runs; forcing the chosen
  // successor index to be non-decreasing within a run skips permutations of
  // interchangeable UAVs.
  void recurse(std::size_t i, std::size_t min_choice_idx) {
    if (i == from.size()) {
      std::vector<RegionIndex> sorted = choice;
      std::sort(sorted.begin(), sorted.end());
      if (!configuration_violation(g, sorted)) {
        Configuration c2;
        c2.positions = std::move(sorted);
        out.insert(std::move(c2));
      }
      return;
    }
    const auto& succ = g.moves[from.positions[i]];
    const bool same_as_prev = i > 0 && from.positions[i] == from.positions[i - 1];
    for (std::size_t k = same_as_prev ? min_choice_idx : 0; k < succ.size(); ++k) {
      RegionIndex to = succ[k];
      const bool non_base = to != g.base;
      if (non_base) {
        if (taken.test(to)) continue;  // distinctness-except-base pruning
        taken.set(to);
      }
      choice[i] = to;
      recurse(i + 1, k);
      if (non_base) taken.reset(to);
    }
  }
};

}  // namespace detail

/// Exactly the valid configurations one synchronous step away, in canonical
/// (ascending) order with no duplicates.
inline std::vector<Configuration> successors(const TopologicGraph& g, const Configuration& c) {
  detail::SuccessorEnumerator e(g, c);
  e.run();
  return {e.out.begin(), e.out.end()};
}

/// Search state for coverage problems: a configuration plus the set of
/// regions visited so far. set(config) ⊆ visited and B ∈ visited.
struct CoverageState {
  Configuration config;
  Bitset visited;

  bool operator==(const CoverageState&) const = default;
};

inline std::size_t hash_value(const Configuration& c) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (auto r : c.positions) {
    h ^= r;
    h *= 0x100000001b3ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace covplan
