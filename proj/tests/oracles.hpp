// Test-only reference implementations. These decide the same questions as
// the library by plain enumeration over labeled tuples, so they share no
// code path with the matching-based step relation or the BFS solvers.
#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "covplan/config.hpp"
#include "covplan/graph.hpp"
#include "covplan/search.hpp"
#include "covplan/tiling.hpp"

namespace covplan::testing {

// Labeled-tuple validity: distinctness-except-base plus base-connectivity.
inline bool naive_valid_tuple(const TopologicGraph& g, const std::vector<RegionIndex>& t) {
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (t[i] == t[j] && t[i] != g.base) return false;
  return is_connected_to_base(g, std::span<const RegionIndex>(t));
}

// Step by explicit permutation search: some ordering of c2 moves every UAV
// of c1 along a move edge.
inline bool naive_is_step(const TopologicGraph& g, const Configuration& c1,
                          const Configuration& c2) {
  if (c1.size() != c2.size()) return false;
  std::vector<RegionIndex> perm = c2.positions;
  std::sort(perm.begin(), perm.end());
  do {
    bool ok = true;
    for (std::size_t i = 0; i < perm.size() && ok; ++i)
      ok = g.has_move(c1.positions[i], perm[i]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// All canonical successors by enumerating every labeled target tuple.
inline std::vector<Configuration> naive_successors(const TopologicGraph& g,
                                                   const Configuration& c) {
  std::set<Configuration> out;
  const std::size_t n = c.size();
  std::vector<RegionIndex> tuple(n);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      if (!naive_valid_tuple(g, tuple)) return;
      std::vector<RegionIndex> sorted = tuple;
      std::sort(sorted.begin(), sorted.end());
      out.insert(Configuration{std::move(sorted)});
      return;
    }
    for (auto to : g.moves[c.positions[i]]) {
      tuple[i] = to;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return {out.begin(), out.end()};
}

// Exhaustive depth-iterated enumeration of executions from all-base; returns
// the minimum number of steps to reach the target, or -1 up to max_depth.
inline int naive_reach_depth(const TopologicGraph& g, std::size_t n, const Configuration& target,
                             int max_depth) {
  std::set<Configuration> layer{all_base_configuration(g, n)};
  if (layer.contains(target)) return 0;
  std::set<Configuration> seen = layer;
  for (int depth = 1; depth <= max_depth; ++depth) {
    std::set<Configuration> next;
    for (const auto& c : layer)
      for (const auto& c2 : naive_successors(g, c))
        if (!seen.contains(c2)) {
          if (c2 == target) return depth;
          seen.insert(c2);
          next.insert(c2);
        }
    if (next.empty()) return -1;
    layer = std::move(next);
  }
  return -1;
}

// Minimal covering-execution length by breadth-first enumeration over
// (tuple-derived configuration, visited) pairs, all through the naive step
// rules.
inline int naive_cover_depth(const TopologicGraph& g, std::size_t n, int max_depth) {
  struct State {
    Configuration c;
    std::vector<bool> visited;
    bool operator<(const State& o) const {
      if (c != o.c) return c < o.c;
      return visited < o.visited;
    }
  };
  State start{all_base_configuration(g, n), std::vector<bool>(g.region_count(), false)};
  start.visited[g.base] = true;
  auto is_goal = [&](const State& s) {
    if (!std::all_of(s.visited.begin(), s.visited.end(), [](bool b) { return b; })) return false;
    return is_all_base(g, s.c);
  };
  if (is_goal(start)) return 0;
  std::set<State> seen{start};
  std::set<State> layer{start};
  for (int depth = 1; depth <= max_depth; ++depth) {
    std::set<State> next;
    for (const auto& s : layer)
      for (const auto& c2 : naive_successors(g, s.c)) {
        State t{c2, s.visited};
        for (auto r : c2.positions) t.visited[r] = true;
        if (seen.contains(t)) continue;
        if (is_goal(t)) return depth;
        seen.insert(t);
        next.insert(t);
      }
    if (next.empty()) return -1;
    layer = std::move(next);
  }
  return -1;
}

// Square tilings by full enumeration of T^(k*k); for tiny k and |T| only.
inline bool naive_square_tileable(const SquareInstance& inst) {
  const std::size_t cells = inst.k * inst.k;
  std::vector<TileIndex> grid(cells, 0);
  auto rec = [&](auto&& self, std::size_t idx) -> bool {
    if (idx == cells) {
      TilingSolution sol;
      sol.k = inst.k;
      sol.m = inst.k;
      sol.cells = grid;
      return !check_square_tiling(inst, sol).has_value();
    }
    for (TileIndex t = 0; t < inst.tiles.size(); ++t) {
      grid[idx] = t;
      if (self(self, idx + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

// Corridor tilings by depth-bounded backtracking over every lambda with
// m <= max_height, pruning a placement as soon as it violates a constraint.
// The final grid is still re-verified by the independent checker.
inline bool naive_corridor_tileable(const CorridorInstance& inst, std::size_t max_height) {
  for (std::size_t m = 1; m <= max_height; ++m) {
    std::vector<TileIndex> grid(m * inst.k, 0);
    auto fits = [&](std::size_t idx, TileIndex t) {
      const std::size_t r = idx / inst.k + 1, c = idx % inst.k + 1;
      const TileType& tt = inst.tiles[t];
      if (r == 1 && t != inst.bottom_row[c - 1]) return false;
      if (r == m && t != inst.top_row[c - 1]) return false;
      if (c == 1 && tt.left != kWhite) return false;
      if (c == inst.k && tt.right != kWhite) return false;
      if (c > 1 && inst.tiles[grid[idx - 1]].right != tt.left) return false;
      if (r > 1 && inst.tiles[grid[idx - inst.k]].up != tt.down) return false;
      return true;
    };
    auto rec = [&](auto&& self, std::size_t idx) -> bool {
      if (idx == grid.size()) {
        TilingSolution sol;
        sol.k = inst.k;
        sol.m = m;
        sol.cells = grid;
        return !check_corridor_tiling(inst, sol).has_value();
      }
      for (TileIndex t = 0; t < inst.tiles.size(); ++t) {
        if (!fits(idx, t)) continue;
        grid[idx] = t;
        if (self(self, idx + 1)) return true;
      }
      return false;
    };
    if (rec(rec, 0)) return true;
  }
  return false;
}

}  // namespace covplan::testing
