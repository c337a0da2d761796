#pragma once

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "covplan/config.hpp"
#include "covplan/graph.hpp"
#include "covplan/search.hpp"

namespace covplan {

struct InvalidPlanError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Goal selector shared by the exporters.
struct ExportGoal {
  enum class Kind { cover, reach };
  Kind kind = Kind::cover;
  Configuration target;  // for reach

  static ExportGoal cover() { return {}; }
  static ExportGoal reach(Configuration t) { return {Kind::reach, std::move(t)}; }
};

struct PddlOutput {
  std::string domain_text;
  std::string problem_text;
};

namespace detail {

// PDDL names: lowercase alphanumerics and hyphens, uniquified on collision.
inline std::vector<std::string> pddl_names(const TopologicGraph& g) {
  std::vector<std::string> names;
  for (const auto& label : g.labels) {
    std::string s;
    for (char ch : label) {
      if (std::isalnum(static_cast<unsigned char>(ch)))
        s += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      else
        s += '-';
    }
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) s = "reg-" + s;
    std::string candidate = s;
    int suffix = 2;
    auto taken = [&](const std::string& c) {
      for (const auto& t : names)
        if (t == c) return true;
      return false;
    };
    while (taken(candidate)) candidate = s + "-" + std::to_string(suffix++);
    names.push_back(candidate);
  }
  return names;
}

}  // namespace detail

/// Typed STRIPS encoding with derived predicates. A synchronous joint move is
/// recovered from interleaved single-UAV moves: each UAV moves once per
/// round, and close-round re-arms everyone after checking, on the settled
/// positions, distinctness-except-base and the recursive reaches-base guard
/// over comm-adj and occupancy. Planners must support PDDL 2.2 derived
/// predicates and ADL preconditions.
inline PddlOutput to_pddl(const TopologicGraph& g, std::size_t n, const ExportGoal& goal) {
  auto names = detail::pddl_names(g);
  std::ostringstream d;
  d << ";; Connected cooperative coverage, synchronous steps as move rounds.\n"
       ";; Requires derived predicates (PDDL 2.2) and ADL preconditions.\n"
       "(define (domain connected-coverage)\n"
       "  (:requirements :adl :typing :derived-predicates)\n"
       "  (:types uav region)\n"
       "  (:predicates\n"
       "    (at ?u - uav ?r - region)\n"
       "    (visited ?r - region)\n"
       "    (move-adj ?from - region ?to - region)\n"
       "    (comm-adj ?a - region ?b - region)\n"
       "    (base ?r - region)\n"
       "    (moved ?u - uav)\n"
       "    (relay ?r - region)\n"
       "    (reaches-base ?r - region))\n"
       "  (:derived (relay ?r - region)\n"
       "    (or (base ?r) (exists (?u - uav) (at ?u ?r))))\n"
       "  (:derived (reaches-base ?r - region)\n"
       "    (or (base ?r)\n"
       "        (exists (?r2 - region)\n"
       "          (and (comm-adj ?r ?r2) (relay ?r2) (reaches-base ?r2)))))\n"
       "  (:action move\n"
       "    :parameters (?u - uav ?from - region ?to - region)\n"
       "    :precondition (and (not (moved ?u)) (at ?u ?from) (move-adj ?from ?to))\n"
       "    :effect (and (moved ?u) (not (at ?u ?from)) (at ?u ?to) (visited ?to)))\n"
       "  (:action close-round\n"
       "    :parameters ()\n"
       "    :precondition (and\n"
       "      (forall (?u - uav) (moved ?u))\n"
       "      (forall (?u - uav) (exists (?r - region) (and (at ?u ?r) (reaches-base ?r))))\n"
       "      (forall (?r - region)\n"
       "        (or (base ?r)\n"
       "            (not (exists (?u1 - uav) (exists (?u2 - uav)\n"
       "              (and (not (= ?u1 ?u2)) (at ?u1 ?r) (at ?u2 ?r))))))))\n"
       "    :effect (forall (?u - uav) (not (moved ?u)))))\n";

  std::ostringstream p;
  p << ";; Problem instance for the connected-coverage domain.\n"
       "(define (problem "
    << (g.name.empty() ? std::string("instance") : g.name) << ")\n"
    << "  (:domain connected-coverage)\n"
    << "  (:objects\n    ";
  for (std::size_t u = 1; u <= n; ++u) p << "u" << u << " ";
  p << "- uav\n    ";
  for (const auto& r : names) p << r << " ";
  p << "- region)\n"
    << "  (:init\n";
  p << "    (base " << names[g.base] << ")\n";
  for (std::size_t u = 1; u <= n; ++u) p << "    (at u" << u << " " << names[g.base] << ")\n";
  p << "    (visited " << names[g.base] << ")\n";
  for (std::size_t v = 0; v < g.region_count(); ++v)
    for (auto w : g.moves[v]) p << "    (move-adj " << names[v] << " " << names[w] << ")\n";
  for (std::size_t v = 0; v < g.region_count(); ++v)
    for (auto w : g.comms[v]) p << "    (comm-adj " << names[v] << " " << names[w] << ")\n";
  p << "  )\n"
    << "  (:goal (and\n";
  if (goal.kind == ExportGoal::Kind::cover) {
    for (const auto& r : names) p << "    (visited " << r << ")\n";
    for (std::size_t u = 1; u <= n; ++u) p << "    (at u" << u << " " << names[g.base] << ")\n";
  } else {
    if (goal.target.size() != n)
      throw std::invalid_argument("target size does not match UAV count");
    // Each non-base target region gets exactly one UAV (distinctness gives
    // at-most-one); every UAV must sit on some target region.
    for (auto r : goal.target.positions)
      if (r != g.base) p << "    (exists (?u - uav) (at ?u " << names[r] << "))\n";
    bool base_in_target = false;
    for (auto r : goal.target.positions) base_in_target |= (r == g.base);
    p << "    (forall (?u - uav) (or";
    std::vector<RegionIndex> uniq = goal.target.positions;
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (auto r : uniq)
      if (r != g.base || base_in_target) p << " (at ?u " << names[r] << ")";
    p << "))\n";
  }
  for (std::size_t u = 1; u <= n; ++u) p << "    (not (moved u" << u << "))\n";
  p << "  ))\n)\n";

  return {d.str(), p.str()};
}

/// NuSMV model: one state variable per UAV over region indices, the move
/// adjacency as the transition relation (all UAVs move in one transition),
/// an INVAR for distinctness-except-base plus base-connectivity unrolled
/// over |V| relay layers, and an LTLSPEC asserting the negation of the goal
/// so that a counterexample trace is a plan.
inline std::string to_smv(const TopologicGraph& g, std::size_t n, const ExportGoal& goal) {
  const std::size_t nv = g.region_count();
  std::ostringstream s;
  s << "-- Connected cooperative coverage model.\n";
  s << "-- Regions:";
  for (std::size_t v = 0; v < nv; ++v) s << " " << v << "=" << g.labels[v];
  s << "\nMODULE main\nVAR\n";
  for (std::size_t u = 1; u <= n; ++u)
    s << "  u" << u << " : 0.." << (nv - 1) << ";\n";
  if (goal.kind == ExportGoal::Kind::cover)
    for (std::size_t v = 0; v < nv; ++v) s << "  visited" << v << " : boolean;\n";

  s << "DEFINE\n";
  for (std::size_t v = 0; v < nv; ++v) {
    s << "  occ" << v << " := ";
    for (std::size_t u = 1; u <= n; ++u) s << (u > 1 ? " | " : "") << "u" << u << " = " << v;
    s << ";\n";
  }
  // reach_l_v: region v connects to the base within l relay hops.
  for (std::size_t v = 0; v < nv; ++v)
    s << "  reach0_" << v << " := " << (v == g.base ? "TRUE" : "FALSE") << ";\n";
  for (std::size_t l = 1; l <= nv; ++l)
    for (std::size_t v = 0; v < nv; ++v) {
      s << "  reach" << l << "_" << v << " := reach" << (l - 1) << "_" << v;
      for (auto w : g.comms[v]) {
        s << " | (";
        if (w == g.base)
          s << "reach" << (l - 1) << "_" << w << ")";
        else
          s << "occ" << w << " & reach" << (l - 1) << "_" << w << ")";
      }
      s << ";\n";
    }
  s << "  connected := ";
  for (std::size_t u = 1; u <= n; ++u) {
    if (u > 1) s << " & ";
    s << "(";
    for (std::size_t v = 0; v < nv; ++v)
      s << (v > 0 ? " | " : "") << "(u" << u << " = " << v << " & reach" << nv << "_" << v << ")";
    s << ")";
  }
  s << ";\n  distinct := ";
  bool first = true;
  if (n < 2) s << "TRUE";
  for (std::size_t u = 1; u <= n; ++u)
    for (std::size_t u2 = u + 1; u2 <= n; ++u2) {
      if (!first) s << " & ";
      first = false;
      s << "(u" << u << " != u" << u2 << " | u" << u << " = " << g.base << ")";
    }
  s << ";\n";
  if (goal.kind == ExportGoal::Kind::cover) {
    s << "  all_visited := ";
    for (std::size_t v = 0; v < nv; ++v) s << (v > 0 ? " & " : "") << "visited" << v;
    s << ";\n  all_base := ";
    for (std::size_t u = 1; u <= n; ++u)
      s << (u > 1 ? " & " : "") << "u" << u << " = " << g.base;
    s << ";\n";
  } else {
    s << "  goal_config := ";
    // The target is a sorted multiset; assert one UAV per non-base entry and
    // the remaining UAVs at base. UAV identities are symmetric, so checking
    // membership plus per-region occupancy counts is exact for counts <= 1.
    if (goal.target.size() != n)
      throw std::invalid_argument("target size does not match UAV count");
    bool base_in_target = false;
    for (auto r : goal.target.positions) base_in_target |= (r == g.base);
    std::vector<RegionIndex> uniq = goal.target.positions;
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    first = true;
    for (auto r : uniq) {
      if (r == g.base) continue;
      if (!first) s << " & ";
      first = false;
      s << "occ" << r;
    }
    for (std::size_t u = 1; u <= n; ++u) {
      if (!first) s << " & ";
      first = false;
      s << "(";
      bool inner_first = true;
      for (auto r : uniq) {
        if (r == g.base && !base_in_target) continue;
        if (!inner_first) s << " | ";
        inner_first = false;
        s << "u" << u << " = " << r;
      }
      s << ")";
    }
    if (first) s << "TRUE";
    s << ";\n";
  }

  s << "INIT\n  ";
  for (std::size_t u = 1; u <= n; ++u) s << (u > 1 ? " & " : "") << "u" << u << " = " << g.base;
  if (goal.kind == ExportGoal::Kind::cover) {
    for (std::size_t v = 0; v < nv; ++v)
      s << " & visited" << v << " = " << (v == g.base ? "TRUE" : "FALSE");
  }
  s << "\nINVAR\n  distinct & connected\nTRANS\n";
  for (std::size_t u = 1; u <= n; ++u) {
    s << (u > 1 ? "  & (" : "  (");
    bool f2 = true;
    for (std::size_t v = 0; v < nv; ++v)
      for (auto w : g.moves[v]) {
        if (!f2) s << " | ";
        f2 = false;
        s << "(u" << u << " = " << v << " & next(u" << u << ") = " << w << ")";
      }
    if (f2) s << "FALSE";
    s << ")\n";
  }
  if (goal.kind == ExportGoal::Kind::cover)
    for (std::size_t v = 0; v < nv; ++v)
      s << "  & next(visited" << v << ") = (visited" << v << " | next(occ" << v << "))\n";
  s << "LTLSPEC\n  !(F (";
  if (goal.kind == ExportGoal::Kind::cover)
    s << "all_visited & all_base";
  else
    s << "goal_config";
  s << "))\n";
  return s.str();
}

/// Graphviz rendering. Without a plan: one static digraph. With a plan: one
/// digraph per configuration, occupied regions doubled, visited regions
/// check-marked, and the comm edges active inside the occupied set
/// highlighted. The plan must be a valid execution.
inline std::string to_dot(const TopologicGraph& g, const std::optional<Plan>& plan = std::nullopt) {
  if (plan) {
    auto res = validate_plan(g, *plan, PlanGoal::execution());
    if (!res.ok)
      throw InvalidPlanError("invalid plan at frame " + std::to_string(res.frame) + ": " +
                             res.message);
  }
  std::ostringstream s;
  auto emit_graph = [&](const std::string& name, const Bitset* occupied, const Bitset* visited) {
    s << "digraph " << name << " {\n";
    s << "  rankdir=LR;\n  node [shape=circle];\n";
    for (std::size_t v = 0; v < g.region_count(); ++v) {
      s << "  n" << v << " [label=\"" << g.labels[v];
      if (visited && visited->test(v)) s << " ✓";
      s << "\"";
      if (v == g.base) s << ", shape=box";
      if (occupied && occupied->test(v)) s << ", peripheries=2, style=filled, fillcolor=lightgray";
      s << "];\n";
    }
    for (std::size_t v = 0; v < g.region_count(); ++v)
      for (auto w : g.moves[v]) s << "  n" << v << " -> n" << w << ";\n";
    for (std::size_t v = 0; v < g.region_count(); ++v)
      for (auto w : g.comms[v]) {
        if (v >= w) continue;
        bool active = occupied && (occupied->test(v) || v == g.base) &&
                      (occupied->test(w) || w == g.base);
        s << "  n" << v << " -> n" << w << " [dir=none, style=dashed";
        if (active) s << ", color=orange, penwidth=2";
        s << "];\n";
      }
    s << "}\n";
  };

  if (!plan) {
    emit_graph("instance", nullptr, nullptr);
    return s.str();
  }
  Bitset visited(g.region_count());
  visited.set(g.base);
  for (std::size_t t = 0; t < plan->steps.size(); ++t) {
    Bitset occupied(g.region_count());
    for (auto r : plan->steps[t].positions) {
      occupied.set(r);
      visited.set(r);
    }
    emit_graph("frame" + std::to_string(t), &occupied, &visited);
  }
  return s.str();
}

}  // namespace covplan
