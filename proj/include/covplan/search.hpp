#pragma once

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "covplan/config.hpp"
#include "covplan/graph.hpp"

namespace covplan {

/// A validated execution: consecutive entries satisfy the step relation.
/// steps.size() == ℓ+1 for an ℓ-step execution.
struct Plan {
  std::vector<Configuration> steps;

  std::size_t length() const { return steps.empty() ? 0 : steps.size() - 1; }
  bool operator==(const Plan&) const = default;
};

enum class Verdict { solvable, unsolvable, timeout };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::solvable: return "solvable";
    case Verdict::unsolvable: return "unsolvable";
    case Verdict::timeout: return "timeout";
  }
  return "?";
}

struct SearchStats {
  std::uint64_t expanded = 0;
  std::uint64_t frontier_peak = 0;
  double millis = 0.0;
};

struct SolveOutcome {
  Verdict verdict = Verdict::unsolvable;
  std::optional<Plan> plan;
  SearchStats stats;
};

/// Cooperative wall-clock / state-count limits. Exhaustion yields the
/// distinct Timeout verdict, never Unsolvable.
struct Budget {
  std::optional<double> wall_seconds;
  std::optional<std::uint64_t> max_states;
};

struct CoverageOptions {
  bool return_to_base = true;  // false relaxes the goal to visiting only
};

namespace detail {

class DeadlineClock {
 public:
  explicit DeadlineClock(const Budget& b)
      : start_(std::chrono::steady_clock::now()), wall_(b.wall_seconds) {}

  bool expired() const {
    if (!wall_) return false;
    return elapsed_seconds() > *wall_;
  }

  double elapsed_seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  double elapsed_millis() const { return elapsed_seconds() * 1000.0; }

 private:
  std::chrono::steady_clock::time_point start_;
  std::optional<double> wall_;
};

struct ConfigHash {
  std::size_t operator()(const Configuration& c) const { return hash_value(c); }
};

struct CoverKeyHash {
  std::size_t operator()(const CoverageState& s) const {
    return hash_value(s.config) * 0x9e3779b97f4a7c15ull + s.visited.hash();
  }
};

}  // namespace detail

/// Shortest plan from (B,...,B) to the target configuration, by BFS over
/// canonical configurations. Without a bound the finite configuration space
/// is exhausted, so Unsolvable is a proof of absence; with a bound it means
/// no plan of length <= bound exists.
inline SolveOutcome solve_reachability(const TopologicGraph& g, std::size_t n,
                                       const Configuration& target,
                                       std::optional<unsigned> bound = std::nullopt,
                                       const Budget& budget = {}) {
  if (target.size() != n) throw std::invalid_argument("target size does not match UAV count");
  detail::DeadlineClock clock(budget);
  SolveOutcome out;

  std::vector<Configuration> states{all_base_configuration(g, n)};
  std::vector<std::int64_t> parent{-1};
  std::vector<unsigned> depth{0};
  std::unordered_map<Configuration, std::uint32_t, detail::ConfigHash> seen;
  seen.emplace(states[0], 0);

  auto finish = [&](Verdict v, std::optional<std::size_t> goal_idx) {
    out.verdict = v;
    if (goal_idx) {
      Plan p;
      for (std::int64_t i = static_cast<std::int64_t>(*goal_idx); i >= 0; i = parent[i])
        p.steps.push_back(states[i]);
      std::reverse(p.steps.begin(), p.steps.end());
      out.plan = std::move(p);
    }
    out.stats.millis = clock.elapsed_millis();
    return out;
  };

  if (states[0] == target) return finish(Verdict::solvable, 0);

  for (std::size_t cursor = 0; cursor < states.size(); ++cursor) {
    if ((out.stats.expanded & 0x3ff) == 0 && clock.expired())
      return finish(Verdict::timeout, std::nullopt);
    if (budget.max_states && states.size() > *budget.max_states)
      return finish(Verdict::timeout, std::nullopt);
    if (bound && depth[cursor] >= *bound) continue;
    ++out.stats.expanded;
    for (auto& c2 : successors(g, states[cursor])) {
      if (seen.contains(c2)) continue;
      std::uint32_t idx = static_cast<std::uint32_t>(states.size());
      seen.emplace(c2, idx);
      states.push_back(c2);
      parent.push_back(static_cast<std::int64_t>(cursor));
      depth.push_back(depth[cursor] + 1);
      if (c2 == target) return finish(Verdict::solvable, idx);
    }
    out.stats.frontier_peak = std::max(out.stats.frontier_peak,
                                       static_cast<std::uint64_t>(states.size() - cursor - 1));
  }
  return finish(Verdict::unsolvable, std::nullopt);
}

/// Shortest covering execution by BFS over (configuration, visited) pairs.
/// The goal is all UAVs back at base with every region visited.
inline SolveOutcome solve_coverage(const TopologicGraph& g, std::size_t n,
                                   std::optional<unsigned> bound = std::nullopt,
                                   const Budget& budget = {},
                                   const CoverageOptions& opts = {}) {
  if (n == 0) throw std::invalid_argument("coverage needs at least one UAV");
  detail::DeadlineClock clock(budget);
  SolveOutcome out;

  CoverageState start;
  start.config = all_base_configuration(g, n);
  start.visited = Bitset(g.region_count());
  start.visited.set(g.base);

  auto is_goal = [&](const CoverageState& s) {
    if (!s.visited.all()) return false;
    return !opts.return_to_base || is_all_base(g, s.config);
  };

  std::vector<CoverageState> states{start};
  std::vector<std::int64_t> parent{-1};
  std::vector<unsigned> depth{0};
  std::unordered_map<CoverageState, std::uint32_t, detail::CoverKeyHash> seen;
  seen.emplace(start, 0);
  // Successor sets depend only on the configuration, which recurs across many
  // visited sets; memoize them.
  std::unordered_map<Configuration, std::vector<Configuration>, detail::ConfigHash> succ_cache;

  auto finish = [&](Verdict v, std::optional<std::size_t> goal_idx) {
    out.verdict = v;
    if (goal_idx) {
      Plan p;
      for (std::int64_t i = static_cast<std::int64_t>(*goal_idx); i >= 0; i = parent[i])
        p.steps.push_back(states[i].config);
      std::reverse(p.steps.begin(), p.steps.end());
      out.plan = std::move(p);
    }
    out.stats.millis = clock.elapsed_millis();
    return out;
  };

  if (is_goal(start)) return finish(Verdict::solvable, 0);

  for (std::size_t cursor = 0; cursor < states.size(); ++cursor) {
    if ((out.stats.expanded & 0xff) == 0 && clock.expired())
      return finish(Verdict::timeout, std::nullopt);
    if (budget.max_states && states.size() > *budget.max_states)
      return finish(Verdict::timeout, std::nullopt);
    if (bound && depth[cursor] >= *bound) continue;
    ++out.stats.expanded;
    const Configuration from = states[cursor].config;
    auto it = succ_cache.find(from);
    if (it == succ_cache.end()) it = succ_cache.emplace(from, successors(g, from)).first;
    for (const auto& c2 : it->second) {
      CoverageState next;
      next.config = c2;
      next.visited = states[cursor].visited;
      for (auto r : c2.positions) next.visited.set(r);
      if (seen.contains(next)) continue;
      std::uint32_t idx = static_cast<std::uint32_t>(states.size());
      seen.emplace(next, idx);
      states.push_back(next);
      parent.push_back(static_cast<std::int64_t>(cursor));
      depth.push_back(depth[cursor] + 1);
      if (is_goal(states[idx])) return finish(Verdict::solvable, idx);
    }
    out.stats.frontier_peak = std::max(out.stats.frontier_peak,
                                       static_cast<std::uint64_t>(states.size() - cursor - 1));
  }
  return finish(Verdict::unsolvable, std::nullopt);
}

/// Bounded variants: identical semantics with a depth cutoff; a returned plan
/// has length <= limit.
inline SolveOutcome solve_breachability(const TopologicGraph& g, std::size_t n,
                                        const Configuration& target, unsigned limit,
                                        const Budget& budget = {}) {
  return solve_reachability(g, n, target, limit, budget);
}

inline SolveOutcome solve_bcoverage(const TopologicGraph& g, std::size_t n, unsigned limit,
                                    const Budget& budget = {}, const CoverageOptions& opts = {}) {
  return solve_coverage(g, n, limit, budget, opts);
}

/// Goal selector for plan validation.
struct PlanGoal {
  enum class Kind { execution, reach, cover };
  Kind kind = Kind::execution;
  Configuration target;          // for reach
  bool return_to_base = true;    // for cover

  static PlanGoal execution() { return {}; }
  static PlanGoal reach(Configuration t) { return {Kind::reach, std::move(t), true}; }
  static PlanGoal cover(bool rtb = true) { return {Kind::cover, {}, rtb}; }
};

struct ValidationResult {
  bool ok = true;
  std::size_t frame = 0;  // first offending frame (or step ending at it)
  std::string message;

  explicit operator bool() const { return ok; }
};

/// Checks every execution clause stepwise and reports the first violation:
/// per-frame validity (distinctness, base-connectivity), step validity, the
/// goal conditions, and the length bound when given.
inline ValidationResult validate_plan(const TopologicGraph& g, const Plan& plan,
                                      const PlanGoal& goal,
                                      std::optional<unsigned> bound = std::nullopt) {
  auto fail = [](std::size_t frame, std::string msg) {
    return ValidationResult{false, frame, std::move(msg)};
  };
  if (plan.steps.empty()) return fail(0, "plan has no configurations");
  const std::size_t n = plan.steps[0].size();
  for (std::size_t t = 0; t < plan.steps.size(); ++t) {
    const auto& c = plan.steps[t];
    if (c.size() != n) return fail(t, "UAV count changes mid-plan");
    if (!std::is_sorted(c.positions.begin(), c.positions.end()))
      return fail(t, "configuration not in canonical order");
    for (auto r : c.positions)
      if (r >= g.region_count()) return fail(t, "region index out of range");
    if (auto err = detail::configuration_violation(g, c.positions)) {
      if (*err == ConfigError::duplicate_non_base)
        return fail(t, "two UAVs share a non-base region");
      return fail(t, "configuration disconnected from base");
    }
  }
  for (std::size_t t = 0; t + 1 < plan.steps.size(); ++t)
    if (!is_step(g, plan.steps[t], plan.steps[t + 1]))
      return fail(t + 1, "no valid joint move between consecutive configurations");
  if (bound && plan.length() > *bound)
    return fail(plan.steps.size() - 1, "plan exceeds the step bound");

  switch (goal.kind) {
    case PlanGoal::Kind::execution:
      break;
    case PlanGoal::Kind::reach:
      if (!is_all_base(g, plan.steps.front())) return fail(0, "plan does not start at base");
      if (!(plan.steps.back() == goal.target))
        return fail(plan.steps.size() - 1, "plan does not end at the target configuration");
      break;
    case PlanGoal::Kind::cover: {
      if (!is_all_base(g, plan.steps.front())) return fail(0, "plan does not start at base");
      if (goal.return_to_base && !is_all_base(g, plan.steps.back()))
        return fail(plan.steps.size() - 1, "plan does not end at base");
      Bitset visited(g.region_count());
      visited.set(g.base);
      for (const auto& c : plan.steps)
        for (auto r : c.positions) visited.set(r);
      if (!visited.all()) {
        for (std::size_t r = 0; r < g.region_count(); ++r)
          if (!visited.test(r))
            return fail(plan.steps.size() - 1, "region \"" + g.labels[r] + "\" never visited");
      }
      break;
    }
  }
  return {};
}

struct MinUavsResult {
  std::optional<unsigned> count;
  bool timed_out = false;
};

/// Smallest n <= n_max for which coverage is solvable, by linear scan from 1.
/// A timeout on any probe propagates.
inline MinUavsResult min_uavs_for_coverage(const TopologicGraph& g, unsigned n_max,
                                           const Budget& budget = {}) {
  for (unsigned n = 1; n <= n_max; ++n) {
    auto out = solve_coverage(g, n, std::nullopt, budget);
    if (out.verdict == Verdict::timeout) return {std::nullopt, true};
    if (out.verdict == Verdict::solvable) return {n, false};
  }
  return {std::nullopt, false};
}

// --- plan JSON -------------------------------------------------------------

inline nlohmann::ordered_json configuration_to_json(const TopologicGraph& g,
                                                    const Configuration& c) {
  auto arr = nlohmann::ordered_json::array();
  for (auto r : c.positions) arr.push_back(g.labels[r]);
  return arr;
}

inline Configuration configuration_from_json(const TopologicGraph& g, const nlohmann::json& j,
                                             const std::string& where) {
  if (!j.is_array()) throw ParseError(where + " must be an array of region labels");
  std::vector<RegionIndex> raw;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string())
      throw ParseError(where + "[" + std::to_string(i) + "] is not a string");
    raw.push_back(detail::require_region(g, j[i].get<std::string>(), where, i));
  }
  std::sort(raw.begin(), raw.end());
  Configuration c;
  c.positions = std::move(raw);
  return c;
}

inline nlohmann::ordered_json plan_to_json(const TopologicGraph& g, const Plan& plan) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : plan.steps) arr.push_back(configuration_to_json(g, c));
  return arr;
}

inline Plan plan_from_json(const TopologicGraph& g, const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("plan must be an array of configurations");
  Plan p;
  for (std::size_t t = 0; t < j.size(); ++t)
    p.steps.push_back(configuration_from_json(g, j[t], "plan[" + std::to_string(t) + "]"));
  return p;
}

}  // namespace covplan
