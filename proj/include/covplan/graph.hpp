#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "covplan/bitset.hpp"

namespace covplan {

using RegionIndex = std::uint32_t;

/// A topologic graph: a finite set of regions with a distinguished base,
/// a directed move relation and a symmetric communication relation.
///
/// Representation invariants (checked by validate_graph):
///  - regions are densely indexed 0..|V|-1 with unique labels,
///  - the base has a move self-loop,
///  - adjacency lists are sorted and duplicate-free,
///  - comms is stored symmetrically and contains no self-pairs.
struct TopologicGraph {
  std::vector<std::string> labels;
  RegionIndex base = 0;
  std::vector<std::vector<RegionIndex>> moves;  // moves[v] = sorted successors of v
  std::vector<std::vector<RegionIndex>> comms;  // comms[v] = sorted comm neighbors
  std::string name;

  std::size_t region_count() const { return labels.size(); }

  bool has_move(RegionIndex from, RegionIndex to) const {
    const auto& a = moves[from];
    return std::binary_search(a.begin(), a.end(), to);
  }

  bool has_comm(RegionIndex a, RegionIndex b) const {
    const auto& v = comms[a];
    return std::binary_search(v.begin(), v.end(), b);
  }

  std::optional<RegionIndex> index_of(std::string_view label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == label) return static_cast<RegionIndex>(i);
    return std::nullopt;
  }

  bool operator==(const TopologicGraph&) const = default;
};

/// Incremental construction helper. Normalizes adjacency (sorted, deduped)
/// and keeps comms symmetric. Does not add the base self-loop implicitly.
class GraphBuilder {
 public:
  RegionIndex add_region(std::string label) {
    labels_.push_back(std::move(label));
    moves_.emplace_back();
    comms_.emplace_back();
    return static_cast<RegionIndex>(labels_.size() - 1);
  }

  void add_move(RegionIndex from, RegionIndex to) { moves_[from].push_back(to); }

  void add_comm(RegionIndex a, RegionIndex b) {
    if (a == b) throw std::logic_error("self communication pair");
    comms_[a].push_back(b);
    comms_[b].push_back(a);
  }

  std::size_t region_count() const { return labels_.size(); }

  bool has_label(std::string_view label) const {
    for (const auto& l : labels_)
      if (l == label) return true;
    return false;
  }

  TopologicGraph build(RegionIndex base, std::string name = "") {
    TopologicGraph g;
    g.labels = std::move(labels_);
    g.base = base;
    g.moves = std::move(moves_);
    g.comms = std::move(comms_);
    g.name = std::move(name);
    for (auto& a : g.moves) {
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    for (auto& a : g.comms) {
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return g;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<RegionIndex>> moves_;
  std::vector<std::vector<RegionIndex>> comms_;
};

/// Reports every violated structural clause; an empty result means the graph
/// is valid and every solver accepts it. Total: never throws.
inline std::vector<std::string> validate_graph(const TopologicGraph& g) {
  std::vector<std::string> violations;
  const std::size_t n = g.labels.size();
  if (n == 0) {
    violations.push_back("empty region set");
    return violations;
  }
  if (g.base >= n) {
    violations.push_back("base index out of range");
    return violations;
  }
  if (g.moves.size() != n || g.comms.size() != n) {
    violations.push_back("adjacency size does not match region count");
    return violations;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (g.labels[i].empty()) violations.push_back("empty label for region " + std::to_string(i));
    for (std::size_t j = i + 1; j < n; ++j)
      if (g.labels[i] == g.labels[j])
        violations.push_back("duplicate region label \"" + g.labels[i] + "\"");
  }
  for (std::size_t v = 0; v < n; ++v) {
    for (auto w : g.moves[v])
      if (w >= n) violations.push_back("dangling region index in moves[" + std::to_string(v) + "]");
    for (auto w : g.comms[v]) {
      if (w >= n) {
        violations.push_back("dangling region index in comms[" + std::to_string(v) + "]");
        continue;
      }
      if (w == v) violations.push_back("self communication pair at region " + std::to_string(v));
    }
    if (!std::is_sorted(g.moves[v].begin(), g.moves[v].end()) ||
        std::adjacent_find(g.moves[v].begin(), g.moves[v].end()) != g.moves[v].end())
      violations.push_back("adjacency not normalized in moves[" + std::to_string(v) + "]");
    if (!std::is_sorted(g.comms[v].begin(), g.comms[v].end()) ||
        std::adjacent_find(g.comms[v].begin(), g.comms[v].end()) != g.comms[v].end())
      violations.push_back("adjacency not normalized in comms[" + std::to_string(v) + "]");
  }
  // Symmetric storage of the communication relation.
  for (std::size_t v = 0; v < n; ++v)
    for (auto w : g.comms[v])
      if (w < n && !g.has_comm(w, static_cast<RegionIndex>(v)))
        violations.push_back("asymmetric comm storage between " + std::to_string(v) + " and " +
                             std::to_string(w));
  if (!g.has_move(g.base, g.base)) violations.push_back("base not move-reflexive");
  return violations;
}

/// True iff every move edge (v,v') with v != v' has a matching comm edge.
inline bool is_neighbor_communicable(const TopologicGraph& g) {
  for (std::size_t v = 0; v < g.region_count(); ++v)
    for (auto w : g.moves[v])
      if (w != v && !g.has_comm(static_cast<RegionIndex>(v), w)) return false;
  return true;
}

/// Adds a comm edge for every non-self move edge. Idempotent; the comm set
/// only grows.
inline TopologicGraph neighbor_communicable_closure(TopologicGraph g) {
  for (std::size_t v = 0; v < g.region_count(); ++v) {
    for (auto w : g.moves[v]) {
      if (w == v) continue;
      g.comms[v].push_back(w);
      g.comms[w].push_back(static_cast<RegionIndex>(v));
    }
  }
  for (auto& a : g.comms) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return g;
}

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline RegionIndex require_region(const TopologicGraph& g, const std::string& label,
                                  const std::string& where, std::size_t pos) {
  auto idx = g.index_of(label);
  if (!idx)
    throw ParseError("unknown region \"" + label + "\" in " + where + "[" + std::to_string(pos) +
                     "]");
  return *idx;
}

inline void check_pair_shape(const nlohmann::json& e, const std::string& where, std::size_t pos) {
  if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
    throw ParseError(where + "[" + std::to_string(pos) +
                     "] must be a 2-element array of region names");
}

}  // namespace detail

/// Parses the instance JSON format. Unknown keys, duplicate labels, unknown
/// edge endpoints, self comm pairs and a missing base are all rejected with
/// the offending key or position named in the message.
inline TopologicGraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("instance must be a JSON object");
  for (auto& [key, value] : j.items()) {
    (void)value;
    if (key != "regions" && key != "base" && key != "moves" && key != "comms" && key != "name")
      throw ParseError("unknown key \"" + key + "\"");
  }
  if (!j.contains("regions")) throw ParseError("missing \"regions\" key");
  if (!j.contains("base")) throw ParseError("missing \"base\" key");
  if (!j.contains("moves")) throw ParseError("missing \"moves\" key");
  if (!j.contains("comms")) throw ParseError("missing \"comms\" key");

  TopologicGraph g;
  const auto& regions = j["regions"];
  if (!regions.is_array() || regions.empty())
    throw ParseError("\"regions\" must be a non-empty array of strings");
  for (std::size_t i = 0; i < regions.size(); ++i) {
    if (!regions[i].is_string())
      throw ParseError("regions[" + std::to_string(i) + "] is not a string");
    std::string label = regions[i].get<std::string>();
    if (g.index_of(label)) throw ParseError("duplicate region label \"" + label + "\"");
    g.labels.push_back(std::move(label));
  }
  g.moves.resize(g.labels.size());
  g.comms.resize(g.labels.size());

  if (!j["base"].is_string()) throw ParseError("\"base\" must be a string");
  {
    auto idx = g.index_of(j["base"].get<std::string>());
    if (!idx)
      throw ParseError("base \"" + j["base"].get<std::string>() + "\" does not name a region");
    g.base = *idx;
  }

  const auto& moves = j["moves"];
  if (!moves.is_array()) throw ParseError("\"moves\" must be an array");
  for (std::size_t i = 0; i < moves.size(); ++i) {
    detail::check_pair_shape(moves[i], "moves", i);
    auto a = detail::require_region(g, moves[i][0].get<std::string>(), "moves", i);
    auto b = detail::require_region(g, moves[i][1].get<std::string>(), "moves", i);
    g.moves[a].push_back(b);
  }

  const auto& comms = j["comms"];
  if (!comms.is_array()) throw ParseError("\"comms\" must be an array");
  for (std::size_t i = 0; i < comms.size(); ++i) {
    detail::check_pair_shape(comms[i], "comms", i);
    auto a = detail::require_region(g, comms[i][0].get<std::string>(), "comms", i);
    auto b = detail::require_region(g, comms[i][1].get<std::string>(), "comms", i);
    if (a == b)
      throw ParseError("self communication pair at comms[" + std::to_string(i) + "]");
    g.comms[a].push_back(b);
    g.comms[b].push_back(a);
  }

  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("\"name\" must be a string");
    g.name = j["name"].get<std::string>();
  }

  for (auto& a : g.moves) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  for (auto& a : g.comms) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return g;
}

inline TopologicGraph parse_graph(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return graph_from_json(j);
}

inline nlohmann::ordered_json graph_to_json(const TopologicGraph& g) {
  nlohmann::ordered_json j;
  if (!g.name.empty()) j["name"] = g.name;
  j["regions"] = g.labels;
  j["base"] = g.labels[g.base];
  auto moves = nlohmann::ordered_json::array();
  for (std::size_t v = 0; v < g.region_count(); ++v)
    for (auto w : g.moves[v]) moves.push_back({g.labels[v], g.labels[w]});
  j["moves"] = std::move(moves);
  auto comms = nlohmann::ordered_json::array();
  for (std::size_t v = 0; v < g.region_count(); ++v)
    for (auto w : g.comms[v])
      if (v < w) comms.push_back({g.labels[v], g.labels[w]});
  j["comms"] = std::move(comms);
  return j;
}

/// Deterministic: identical graphs serialize to identical bytes, and
/// parse(serialize(g)) is structurally equal to g.
inline std::string serialize_graph(const TopologicGraph& g) {
  return graph_to_json(g).dump(2) + "\n";
}

}  // namespace covplan
