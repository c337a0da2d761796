#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "covplan/config.hpp"
#include "covplan/graph.hpp"
#include "covplan/search.hpp"
#include "covplan/tiling.hpp"

namespace covplan {

enum class ProblemKind { reachability, breachability, coverage, bcoverage };

inline const char* to_string(ProblemKind k) {
  switch (k) {
    case ProblemKind::reachability: return "reachability";
    case ProblemKind::breachability: return "breachability";
    case ProblemKind::coverage: return "coverage";
    case ProblemKind::bcoverage: return "bcoverage";
  }
  return "?";
}

inline std::optional<ProblemKind> problem_kind_from_string(std::string_view s) {
  if (s == "reachability") return ProblemKind::reachability;
  if (s == "breachability") return ProblemKind::breachability;
  if (s == "coverage") return ProblemKind::coverage;
  if (s == "bcoverage") return ProblemKind::bcoverage;
  return std::nullopt;
}

/// A constructed decision-problem instance. node_key tags every region with
/// its role in the construction (total and injective), which keeps the
/// gadgets debuggable and the serialization stable.
struct ReductionOutput {
  TopologicGraph graph;
  unsigned n = 0;
  std::optional<Configuration> target;
  std::optional<unsigned> bound;
  std::vector<std::string> node_key;
  ProblemKind kind = ProblemKind::reachability;
};

struct ReductionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bidirectional witness mapping between tilings of the source instance and
/// plans on the gadget graph. forward(tiling) yields a plan that reaches the
/// gadget target; backward(plan) recovers a tiling from a reaching plan.
struct ReductionCertificate {
  std::function<Plan(const TilingSolution&)> forward;
  std::function<TilingSolution(const Plan&)> backward;
};

struct CorridorReduction {
  ReductionOutput out;
  ReductionCertificate cert;
};

namespace detail {

// Tile t may appear in copy i of the corridor gadget only if boundary-side
// colors are white where the copy touches the corridor edge. With k = 1 a
// single copy gets both filters.
inline bool tile_in_copy(const TileType& t, std::size_t copy, std::size_t k) {
  if (copy == 1 && t.left != kWhite) return false;
  if (copy == k && t.right != kWhite) return false;
  return true;
}

}  // namespace detail

/// Corridor tiling -> Reachability gadget. One node per (tile type, copy);
/// vertical color matches become moves inside a copy, horizontal matches
/// become comm edges between adjacent copies, and the base communicates with
/// the first copy. Deployment edges go from the base to the bottom-row tile
/// of each copy; the target is the top row. The move relation is exactly the
/// construction's unions, so the base has no self-loop and every UAV is in
/// flight from the first step on.
inline CorridorReduction corridor_to_reachability(const CorridorInstance& inst, bool nc = false) {
  {
    auto v = validate_corridor_instance(inst);
    if (!v.empty()) throw ReductionError("invalid corridor instance: " + v.front());
  }
  const std::size_t k = inst.k;
  const std::size_t nt = inst.tiles.size();

  ReductionOutput out;
  out.kind = ProblemKind::reachability;
  out.n = static_cast<unsigned>(k);

  GraphBuilder b;
  RegionIndex base = b.add_region("B");
  out.node_key.push_back("base");

  std::vector<RegionIndex> mid(k + 1, 0);  // 1-based, nc only
  if (nc) {
    for (std::size_t i = 1; i <= k; ++i) {
      mid[i] = b.add_region("m" + std::to_string(i));
      out.node_key.push_back("mid:" + std::to_string(i));
    }
  }

  // node[i][t] = region of tile t in copy i, when present.
  std::vector<std::vector<std::optional<RegionIndex>>> node(
      k + 1, std::vector<std::optional<RegionIndex>>(nt));
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t t = 0; t < nt; ++t) {
      if (!detail::tile_in_copy(inst.tiles[t], i, k)) continue;
      node[i][t] = b.add_region("t" + std::to_string(t) + "c" + std::to_string(i));
      out.node_key.push_back("tile:" + std::to_string(t) + ":" + std::to_string(i));
    }
  }

  for (std::size_t i = 1; i <= k; ++i) {
    TileIndex bot = inst.bottom_row[i - 1];
    TileIndex top = inst.top_row[i - 1];
    if (!node[i][bot])
      throw ReductionError("bottom tile " + std::to_string(bot) + " absent from copy " +
                           std::to_string(i));
    if (!node[i][top])
      throw ReductionError("top tile " + std::to_string(top) + " absent from copy " +
                           std::to_string(i));
    if (nc) {
      b.add_move(base, mid[i]);
      b.add_move(mid[i], *node[i][bot]);
    } else {
      b.add_move(base, *node[i][bot]);
    }
  }

  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t t = 0; t < nt; ++t) {
      if (!node[i][t]) continue;
      for (std::size_t t2 = 0; t2 < nt; ++t2)
        if (node[i][t2] && inst.tiles[t].up == inst.tiles[t2].down)
          b.add_move(*node[i][t], *node[i][t2]);
    }

  for (std::size_t t = 0; t < nt; ++t)
    if (node[1][t]) b.add_comm(base, *node[1][t]);
  for (std::size_t i = 1; i + 1 <= k; ++i)
    for (std::size_t t = 0; t < nt; ++t) {
      if (!node[i][t]) continue;
      for (std::size_t t2 = 0; t2 < nt; ++t2)
        if (node[i + 1][t2] && inst.tiles[t].right == inst.tiles[t2].left)
          b.add_comm(*node[i][t], *node[i + 1][t2]);
    }

  out.graph = b.build(base, inst.name.empty() ? "corridor-gadget" : inst.name + "-gadget");
  if (nc) out.graph = neighbor_communicable_closure(std::move(out.graph));

  {
    std::vector<RegionIndex> tgt;
    for (std::size_t i = 1; i <= k; ++i) tgt.push_back(*node[i][inst.top_row[i - 1]]);
    std::sort(tgt.begin(), tgt.end());
    out.target = Configuration{std::move(tgt)};
  }

  // Certificate closures capture what they need by value.
  const TopologicGraph graph = out.graph;
  std::vector<RegionIndex> mids;
  if (nc)
    for (std::size_t i = 1; i <= k; ++i) mids.push_back(mid[i]);
  std::sort(mids.begin(), mids.end());

  // region -> (copy, tile) for tile nodes
  std::vector<std::optional<std::pair<std::size_t, TileIndex>>> role(graph.region_count());
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t t = 0; t < nt; ++t)
      if (node[i][t]) role[*node[i][t]] = {i, static_cast<TileIndex>(t)};

  auto node_of = [node, k](std::size_t copy, TileIndex t) { return *node[copy][t]; };

  ReductionCertificate cert;
  cert.forward = [graph, node_of, mids, k, nc](const TilingSolution& sol) {
    Plan p;
    p.steps.push_back(all_base_configuration(graph, k));
    if (nc) p.steps.push_back(Configuration{mids});
    for (std::size_t r = 1; r <= sol.m; ++r) {
      std::vector<RegionIndex> pos;
      for (std::size_t c = 1; c <= k; ++c) pos.push_back(node_of(c, sol.at(r, c)));
      std::sort(pos.begin(), pos.end());
      p.steps.push_back(Configuration{std::move(pos)});
    }
    return p;
  };
  cert.backward = [role, k](const Plan& plan) {
    TilingSolution sol;
    sol.k = k;
    for (const auto& c : plan.steps) {
      std::vector<std::optional<TileIndex>> row(k + 1);
      bool all_tiles = true;
      for (auto r : c.positions) {
        if (r >= role.size() || !role[r]) {
          all_tiles = false;
          break;
        }
        auto [copy, tile] = *role[r];
        if (row[copy]) throw ReductionError("two UAVs in one copy in a tile frame");
        row[copy] = tile;
      }
      if (!all_tiles) {
        if (sol.m > 0) throw ReductionError("non-tile frame after deployment");
        continue;  // still in the deployment prefix
      }
      for (std::size_t i = 1; i <= k; ++i) {
        if (!row[i]) throw ReductionError("copy " + std::to_string(i) + " unoccupied in a frame");
        sol.cells.push_back(*row[i]);
      }
      ++sol.m;
    }
    if (sol.m == 0) throw ReductionError("plan never reaches a tile row");
    return sol;
  };

  return {std::move(out), std::move(cert)};
}

inline CorridorReduction corridor_to_reachability_nc(const CorridorInstance& inst) {
  return corridor_to_reachability(inst, true);
}

/// Square tiling -> bReachability gadget of bound k+2 (k+3 with the
/// intermediate nodes of the neighbor-communicable variant). k tile copies
/// sit inside a ring of boundary nodes: row 0 is entered from the base, the
/// left lane carries the base anchor at every height, lanes check the left
/// and right boundary colors, and entering/leaving a tile column checks the
/// bottom/top colors. n = k+2 and the target is the whole top ring row,
/// which is exactly k+2 (resp. k+3) moves from the base along every column.
inline ReductionOutput square_to_breachability(const SquareInstance& inst, bool nc = false) {
  {
    auto v = validate_square_instance(inst);
    if (!v.empty()) throw ReductionError("invalid square instance: " + v.front());
  }
  const std::size_t k = inst.k;
  const std::size_t nt = inst.tiles.size();

  ReductionOutput out;
  out.kind = ProblemKind::breachability;
  out.n = static_cast<unsigned>(k + 2);
  out.bound = static_cast<unsigned>(nc ? k + 3 : k + 2);

  GraphBuilder b;
  RegionIndex base = b.add_region("B");
  out.node_key.push_back("base");

  std::vector<RegionIndex> mid(k + 2, 0);  // nc only, indexed by column j
  if (nc) {
    for (std::size_t j = 0; j <= k + 1; ++j) {
      mid[j] = b.add_region("m" + std::to_string(j));
      out.node_key.push_back("mid:" + std::to_string(j));
    }
  }

  // Ring nodes (i,j): the full bottom row (i = 0) and top row (i = k+1) plus
  // the two lanes (j = 0 and j = k+1).
  auto in_ring = [k](std::size_t i, std::size_t j) {
    return i == 0 || i == k + 1 || j == 0 || j == k + 1;
  };
  std::vector<std::vector<std::optional<RegionIndex>>> ring(
      k + 2, std::vector<std::optional<RegionIndex>>(k + 2));
  for (std::size_t i = 0; i <= k + 1; ++i)
    for (std::size_t j = 0; j <= k + 1; ++j) {
      if (!in_ring(i, j)) continue;
      ring[i][j] = b.add_region("g" + std::to_string(i) + "_" + std::to_string(j));
      out.node_key.push_back("lane:" + std::to_string(i) + ":" + std::to_string(j));
    }

  // tile[c][t]: tile t in copy c (all tiles, no side filters here).
  std::vector<std::vector<RegionIndex>> tile(k + 1, std::vector<RegionIndex>(nt));
  for (std::size_t c = 1; c <= k; ++c)
    for (std::size_t t = 0; t < nt; ++t) {
      tile[c][t] = b.add_region("t" + std::to_string(t) + "c" + std::to_string(c));
      out.node_key.push_back("tile:" + std::to_string(t) + ":" + std::to_string(c));
    }

  b.add_move(base, base);
  for (std::size_t j = 0; j <= k + 1; ++j) {
    if (nc) {
      b.add_move(base, mid[j]);
      b.add_move(mid[j], *ring[0][j]);
    } else {
      b.add_move(base, *ring[0][j]);
    }
  }
  for (std::size_t c = 1; c <= k; ++c) {
    for (std::size_t t = 0; t < nt; ++t) {
      if (inst.tiles[t].down == inst.bottom[c - 1]) b.add_move(*ring[0][c], tile[c][t]);
      if (inst.tiles[t].up == inst.top[c - 1]) b.add_move(tile[c][t], *ring[k + 1][c]);
      for (std::size_t t2 = 0; t2 < nt; ++t2)
        if (inst.tiles[t].up == inst.tiles[t2].down) b.add_move(tile[c][t], tile[c][t2]);
    }
  }
  for (std::size_t i = 0; i <= k; ++i) {
    b.add_move(*ring[i][0], *ring[i + 1][0]);
    b.add_move(*ring[i][k + 1], *ring[i + 1][k + 1]);
  }

  for (std::size_t i = 0; i <= k + 1; ++i) b.add_comm(base, *ring[i][0]);
  for (std::size_t c = 1; c + 1 <= k; ++c)
    for (std::size_t t = 0; t < nt; ++t)
      for (std::size_t t2 = 0; t2 < nt; ++t2)
        if (inst.tiles[t].right == inst.tiles[t2].left) b.add_comm(tile[c][t], tile[c + 1][t2]);
  for (std::size_t j = 0; j <= k; ++j) {
    b.add_comm(*ring[0][j], *ring[0][j + 1]);
    b.add_comm(*ring[k + 1][j], *ring[k + 1][j + 1]);
  }
  for (std::size_t r = 1; r <= k; ++r)
    for (std::size_t t = 0; t < nt; ++t) {
      if (inst.tiles[t].left == inst.left[r - 1]) b.add_comm(*ring[r][0], tile[1][t]);
      if (inst.tiles[t].right == inst.right[r - 1]) b.add_comm(*ring[r][k + 1], tile[k][t]);
    }

  out.graph = b.build(base, inst.name.empty() ? "square-gadget" : inst.name + "-gadget");
  if (nc) out.graph = neighbor_communicable_closure(std::move(out.graph));

  std::vector<RegionIndex> tgt;
  for (std::size_t j = 0; j <= k + 1; ++j) tgt.push_back(*ring[k + 1][j]);
  std::sort(tgt.begin(), tgt.end());
  out.target = Configuration{std::move(tgt)};
  return out;
}

inline ReductionOutput square_to_breachability_nc(const SquareInstance& inst) {
  return square_to_breachability(inst, true);
}

namespace detail {

inline std::string unique_label(const TopologicGraph& g, const GraphBuilder& b,
                                std::string candidate) {
  while (g.index_of(candidate) || b.has_label(candidate)) candidate += "'";
  return candidate;
}

}  // namespace detail

/// Reachability -> Coverage: extend G with an s-row and a v-row. Reaching the
/// target is the only way to file the UAVs through the s-row (whose k-th node
/// is communication-critical) onto the v-row, after which the v_k sentinel
/// communicates with everything while the v_1 UAV sweeps the still-unvisited
/// regions and everyone else parks at the base.
inline ReductionOutput reachability_to_coverage(const TopologicGraph& g,
                                                const Configuration& target) {
  if (!is_valid_configuration(g, target))
    throw ReductionError("target is not a valid configuration of the input graph");
  const std::size_t n = target.size();
  if (n == 0) throw ReductionError("target must place at least one UAV");

  ReductionOutput out;
  out.kind = ProblemKind::coverage;
  out.n = static_cast<unsigned>(n);

  GraphBuilder b;
  for (std::size_t v = 0; v < g.region_count(); ++v) {
    b.add_region(g.labels[v]);
    out.node_key.push_back("orig:" + g.labels[v]);
  }
  for (std::size_t v = 0; v < g.region_count(); ++v) {
    for (auto w : g.moves[v]) b.add_move(static_cast<RegionIndex>(v), w);
    for (auto w : g.comms[v])
      if (v < w) b.add_comm(static_cast<RegionIndex>(v), w);
  }

  std::vector<RegionIndex> s(n), v(n);
  for (std::size_t i = 0; i < n; ++i) {
    s[i] = b.add_region(detail::unique_label(g, b, "s" + std::to_string(i + 1)));
    out.node_key.push_back("s:" + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = b.add_region(detail::unique_label(g, b, "v" + std::to_string(i + 1)));
    out.node_key.push_back("v:" + std::to_string(i + 1));
  }

  for (std::size_t i = 0; i < n; ++i) {
    b.add_move(target.positions[i], s[i]);
    b.add_move(s[i], v[i]);
    b.add_move(v[i], g.base);
  }
  b.add_move(v[n - 1], v[n - 1]);
  for (std::size_t x = 0; x < g.region_count(); ++x) {
    b.add_move(v[0], static_cast<RegionIndex>(x));
    b.add_move(static_cast<RegionIndex>(x), v[0]);
  }

  for (std::size_t i = 0; i + 1 < n; ++i) b.add_comm(s[i], s[i + 1]);
  b.add_comm(s[0], g.base);
  const std::size_t total = g.region_count() + 2 * n;
  for (std::size_t x = 0; x < total; ++x)
    if (static_cast<RegionIndex>(x) != v[n - 1]) b.add_comm(v[n - 1], static_cast<RegionIndex>(x));

  out.graph = b.build(g.base, g.name.empty() ? "coverage-gadget" : g.name + "-coverage");
  return out;
}

/// The neighbor-communicable Coverage construction: instead of a single s-row
/// the UAVs climb two stacked (k+1)-row grids whose top rows play the s-row
/// and v-row roles, so the climb from the target to the v-row is a unique
/// 2k+2-step lock-step march. Every row of the lower grid anchors its first
/// column to the base, every row of the upper grid its k-th column. The v_1
/// round trips into G run over two fresh 2k+2-long paths. The final graph is
/// closed under move->comm, so it is neighbor-communicable by construction.
inline ReductionOutput reachability_to_coverage_nc(const TopologicGraph& g,
                                                   const Configuration& target) {
  if (!is_valid_configuration(g, target))
    throw ReductionError("target is not a valid configuration of the input graph");
  const std::size_t n = target.size();
  if (n == 0) throw ReductionError("target must place at least one UAV");

  ReductionOutput out;
  out.kind = ProblemKind::coverage;
  out.n = static_cast<unsigned>(n);

  GraphBuilder b;
  for (std::size_t x = 0; x < g.region_count(); ++x) {
    b.add_region(g.labels[x]);
    out.node_key.push_back("orig:" + g.labels[x]);
  }
  for (std::size_t x = 0; x < g.region_count(); ++x) {
    for (auto w : g.moves[x]) b.add_move(static_cast<RegionIndex>(x), w);
    for (auto w : g.comms[x])
      if (x < w) b.add_comm(static_cast<RegionIndex>(x), w);
  }

  auto add_grid = [&](int which) {
    std::vector<std::vector<RegionIndex>> grid(n + 2, std::vector<RegionIndex>(n + 1));
    for (std::size_t r = 1; r <= n + 1; ++r)
      for (std::size_t j = 1; j <= n; ++j) {
        std::string lbl = "q" + std::to_string(which) + "_" + std::to_string(r) + "_" +
                          std::to_string(j);
        grid[r][j] = b.add_region(detail::unique_label(g, b, lbl));
        out.node_key.push_back("grid:" + std::to_string(which) + ":" + std::to_string(r) + ":" +
                               std::to_string(j));
      }
    return grid;
  };
  auto grid1 = add_grid(1);
  auto grid2 = add_grid(2);

  const std::size_t path_len = 2 * n + 1;
  std::vector<RegionIndex> down(path_len), up(path_len);
  for (std::size_t i = 0; i < path_len; ++i) {
    down[i] = b.add_region(detail::unique_label(g, b, "w" + std::to_string(i + 1)));
    out.node_key.push_back("down:" + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < path_len; ++i) {
    up[i] = b.add_region(detail::unique_label(g, b, "x" + std::to_string(i + 1)));
    out.node_key.push_back("up:" + std::to_string(i + 1));
  }

  // Climb moves: target -> grid1 column bottoms, column-wise up, grid1 top ->
  // grid2 bottom, up again; grid2's top row is the v-row.
  for (std::size_t j = 1; j <= n; ++j) {
    b.add_move(target.positions[j - 1], grid1[1][j]);
    for (std::size_t r = 1; r <= n; ++r) {
      b.add_move(grid1[r][j], grid1[r + 1][j]);
      b.add_move(grid2[r][j], grid2[r + 1][j]);
    }
    b.add_move(grid1[n + 1][j], grid2[1][j]);
  }
  std::vector<RegionIndex> vrow(n + 1);
  for (std::size_t j = 1; j <= n; ++j) vrow[j] = grid2[n + 1][j];

  for (std::size_t j = 1; j <= n; ++j) b.add_move(vrow[j], g.base);
  b.add_move(vrow[n], vrow[n]);

  b.add_move(vrow[1], down[0]);
  for (std::size_t i = 0; i + 1 < path_len; ++i) {
    b.add_move(down[i], down[i + 1]);
    b.add_move(up[i], up[i + 1]);
  }
  for (std::size_t x = 0; x < g.region_count(); ++x) {
    b.add_move(down[path_len - 1], static_cast<RegionIndex>(x));
    b.add_move(static_cast<RegionIndex>(x), up[0]);
  }
  b.add_move(up[path_len - 1], vrow[1]);

  // Row comm chains plus the per-row base anchors.
  for (std::size_t r = 1; r <= n + 1; ++r) {
    for (std::size_t j = 1; j + 1 <= n; ++j) {
      b.add_comm(grid1[r][j], grid1[r][j + 1]);
      b.add_comm(grid2[r][j], grid2[r][j + 1]);
    }
    b.add_comm(grid1[r][1], g.base);
    b.add_comm(grid2[r][n], g.base);
  }

  const std::size_t total = b.region_count();
  for (std::size_t x = 0; x < total; ++x)
    if (static_cast<RegionIndex>(x) != vrow[n]) b.add_comm(vrow[n], static_cast<RegionIndex>(x));

  out.graph = b.build(g.base, g.name.empty() ? "coverage-gadget-nc" : g.name + "-coverage-nc");
  out.graph = neighbor_communicable_closure(std::move(out.graph));
  return out;
}

/// bReachability -> bCoverage on a square gadget: apply the coverage
/// construction and budget the bound as (steps to reach the target) + (two
/// steps through the s- and v-rows) + (the v_1 sweep upper bound 2|V|+1).
inline ReductionOutput breachability_to_bcoverage(const ReductionOutput& red) {
  if (!red.target || !red.bound)
    throw ReductionError("input must be a bounded reachability instance");
  ReductionOutput out = reachability_to_coverage(red.graph, *red.target);
  out.kind = ProblemKind::bcoverage;
  out.bound = *red.bound + 2 + (2 * static_cast<unsigned>(red.graph.region_count()) + 1);
  return out;
}

/// Neighbor-communicable variant; the climb costs 2(k+2) and each sweep round
/// trip 2(k+2) per region, with k+2 the UAV count of the input instance.
inline ReductionOutput breachability_to_bcoverage_nc(const ReductionOutput& red) {
  if (!red.target || !red.bound)
    throw ReductionError("input must be a bounded reachability instance");
  ReductionOutput out = reachability_to_coverage_nc(red.graph, *red.target);
  out.kind = ProblemKind::bcoverage;
  out.bound = *red.bound + 2 * red.n +
              2 * red.n * static_cast<unsigned>(red.graph.region_count()) + 1;
  return out;
}

// --- envelope JSON -----------------------------------------------------------

inline nlohmann::ordered_json reduction_to_json(const ReductionOutput& red) {
  nlohmann::ordered_json j;
  j["graph"] = graph_to_json(red.graph);
  bool any_tag = false;
  for (const auto& t : red.node_key) any_tag |= !t.empty();
  if (any_tag) {
    nlohmann::ordered_json keys;
    for (std::size_t v = 0; v < red.graph.region_count(); ++v)
      keys[red.graph.labels[v]] = red.node_key[v];
    j["node_key"] = std::move(keys);
  }
  nlohmann::ordered_json problem;
  problem["kind"] = to_string(red.kind);
  problem["n"] = red.n;
  if (red.target) problem["target"] = configuration_to_json(red.graph, *red.target);
  if (red.bound) problem["bound"] = *red.bound;
  j["problem"] = std::move(problem);
  return j;
}

inline std::string serialize_reduction(const ReductionOutput& red) {
  return reduction_to_json(red).dump(2) + "\n";
}

inline ReductionOutput reduction_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("graph") || !j.contains("problem"))
    throw ParseError("expected an instance envelope with \"graph\" and \"problem\"");
  ReductionOutput red;
  red.graph = graph_from_json(j["graph"]);
  const auto& p = j["problem"];
  auto kind = problem_kind_from_string(p.at("kind").get<std::string>());
  if (!kind) throw ParseError("unknown problem kind");
  red.kind = *kind;
  red.n = p.at("n").get<unsigned>();
  if (p.contains("target"))
    red.target = configuration_from_json(red.graph, p["target"], "target");
  if (p.contains("bound")) red.bound = p["bound"].get<unsigned>();
  red.node_key.assign(red.graph.region_count(), "");
  if (j.contains("node_key"))
    for (std::size_t v = 0; v < red.graph.region_count(); ++v) {
      auto it = j["node_key"].find(red.graph.labels[v]);
      if (it != j["node_key"].end()) red.node_key[v] = it->get<std::string>();
    }
  return red;
}

}  // namespace covplan
