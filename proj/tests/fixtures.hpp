// Shared fixtures: the mission-example execution transcribed frame by frame,
// the two worked tiling instances, and seeded random instance generators.
#pragma once

#include <vector>

#include "covplan/config.hpp"
#include "covplan/generate.hpp"
#include "covplan/search.hpp"
#include "covplan/tiling.hpp"

namespace covplan::testing {

// The covering execution shown in the 11-region mission example, one
// configuration per frame.
inline Plan figure1_plan() {
  const std::vector<std::vector<RegionIndex>> frames = {
      {0, 0, 0}, {0, 0, 4}, {0, 4, 5}, {4, 5, 6}, {4, 6, 10}, {3, 7, 9},
      {4, 6, 8}, {4, 5, 6}, {2, 4, 5}, {1, 3, 4}, {0, 0, 0},
  };
  Plan p;
  for (const auto& f : frames) p.steps.push_back(Configuration{f});
  return p;
}

// Colors used by the worked tiling examples.
inline constexpr Color W = 0, R = 1, Y = 2, G = 3;

// Worked 4x4 square instance with 8 tile types; all four boundary sequences
// (R, Y, R, G). Tileable.
inline SquareInstance worked_square_instance() {
  SquareInstance inst;
  inst.name = "square-4x4";
  inst.tiles = {
      TileType{R, R, R, R},  // 0
      TileType{R, R, Y, R},  // 1
      TileType{R, R, R, Y},  // 2
      TileType{G, R, Y, R},  // 3
      TileType{R, R, R, G},  // 4
      TileType{R, G, G, R},  // 5
      TileType{Y, Y, R, R},  // 6
      TileType{Y, R, R, R},  // 7
  };
  inst.k = 4;
  inst.top = {R, Y, R, G};
  inst.bottom = {R, Y, R, G};
  inst.left = {R, Y, R, G};
  inst.right = {R, Y, R, G};
  return inst;
}

// Corridor instance with k = 3 and 8 tile types; tileable at height 5.
inline CorridorInstance worked_corridor_instance() {
  CorridorInstance inst;
  inst.name = "corridor-3";
  inst.tiles = {
      TileType{R, R, R, R},  // 0
      TileType{R, R, W, R},  // 1
      TileType{R, R, R, Y},  // 2
      TileType{G, R, W, R},  // 3
      TileType{R, R, W, G},  // 4
      TileType{R, G, G, R},  // 5
      TileType{W, Y, R, R},  // 6
      TileType{W, R, R, R},  // 7
  };
  inst.k = 3;
  inst.bottom_row = {7, 2, 4};
  inst.top_row = {6, 5, 3};
  return inst;
}

// Random corridor instance whose fixed rows always reference tiles present
// in the gadget copies (white left side for column 1, white right side for
// column k).
inline CorridorInstance random_corridor_instance(std::size_t k, std::size_t num_tiles,
                                                 std::uint64_t seed, Color max_color = 2) {
  SplitMix64 rng(seed);
  CorridorInstance inst;
  inst.k = k;
  auto color = [&] { return static_cast<Color>(rng.below(max_color + 1)); };
  for (std::size_t i = 0; i < num_tiles; ++i) {
    TileType t;
    do {
      t = TileType{color(), color(), color(), color()};
      if (i == 0) t.left = kWhite;                   // guarantees a copy-1 candidate
      if (i + 1 == num_tiles) t.right = kWhite;      // guarantees a copy-k candidate
      if (k == 1 && i == 0) t.right = kWhite;
      if (k == 1 && i + 1 == num_tiles) t.left = kWhite;
    } while (std::find(inst.tiles.begin(), inst.tiles.end(), t) != inst.tiles.end());
    inst.tiles.push_back(t);
  }
  auto pick = [&](bool need_white_left, bool need_white_right) -> TileIndex {
    std::vector<TileIndex> pool;
    for (TileIndex t = 0; t < inst.tiles.size(); ++t) {
      if (need_white_left && inst.tiles[t].left != kWhite) continue;
      if (need_white_right && inst.tiles[t].right != kWhite) continue;
      pool.push_back(t);
    }
    return pool[rng.below(pool.size())];
  };
  for (std::size_t c = 1; c <= k; ++c) {
    inst.bottom_row.push_back(pick(c == 1, c == k));
    inst.top_row.push_back(pick(c == 1, c == k));
  }
  return inst;
}

// Corridor instance that is tileable by construction: the tiles are read off
// a randomly edge-colored m x k grid with white side edges, and the fixed
// rows are its first and last rows. Rejection keeps |T| small; falls back to
// a plain random instance if the cap cannot be met.
inline CorridorInstance tileable_corridor_instance(std::size_t k, std::uint64_t seed,
                                                   std::size_t max_tiles = 4) {
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::size_t m = 2 + rng.below(3);
    std::vector<std::vector<Color>> vert(m, std::vector<Color>(k + 1, kWhite));
    std::vector<std::vector<Color>> horiz(m + 1, std::vector<Color>(k));
    for (auto& row : horiz)
      for (auto& c : row) c = 1 + static_cast<Color>(rng.below(2));
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 1; c < k; ++c) vert[r][c] = static_cast<Color>(rng.below(2));
    CorridorInstance inst;
    inst.k = k;
    std::vector<TileIndex> idx(m * k);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < k; ++c) {
        TileType t{vert[r][c], horiz[r + 1][c], vert[r][c + 1], horiz[r][c]};
        auto it = std::find(inst.tiles.begin(), inst.tiles.end(), t);
        if (it == inst.tiles.end()) {
          inst.tiles.push_back(t);
          it = inst.tiles.end() - 1;
        }
        idx[r * k + c] = static_cast<TileIndex>(it - inst.tiles.begin());
      }
    if (inst.tiles.size() > max_tiles) continue;
    for (std::size_t c = 0; c < k; ++c) {
      inst.bottom_row.push_back(idx[c]);
      inst.top_row.push_back(idx[(m - 1) * k + c]);
    }
    return inst;
  }
  return random_corridor_instance(k, max_tiles, seed ^ 0xabcdefull);
}

// Random square instance; half the draws are made tileable by reading the
// instance off a randomly edge-colored grid.
inline SquareInstance random_square_instance(std::size_t k, std::size_t num_tiles,
                                             std::uint64_t seed, bool force_tileable,
                                             Color max_color = 2) {
  SplitMix64 rng(seed);
  SquareInstance inst;
  inst.k = k;
  auto color = [&] { return static_cast<Color>(rng.below(max_color + 1)); };
  if (force_tileable) {
    // Color every edge of a k x k grid, then collect the induced cell tiles.
    // Retries with a shrinking palette keep the tile count within num_tiles;
    // a single color always induces one tile, so this terminates.
    for (int attempt = 0;; ++attempt) {
      Color palette = attempt < 24 ? 1 + static_cast<Color>(rng.below(2)) : 0;
      auto edge = [&] { return static_cast<Color>(rng.below(palette + 1)); };
      std::vector<std::vector<Color>> horiz(k + 1, std::vector<Color>(k));  // below row r
      std::vector<std::vector<Color>> vert(k, std::vector<Color>(k + 1));   // left of col c
      for (auto& row : horiz)
        for (auto& c : row) c = edge();
      for (auto& row : vert)
        for (auto& c : row) c = edge();
      inst.tiles.clear();
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) {
          TileType t{vert[r][c], horiz[r + 1][c], vert[r][c + 1], horiz[r][c]};
          if (std::find(inst.tiles.begin(), inst.tiles.end(), t) == inst.tiles.end())
            inst.tiles.push_back(t);
        }
      if (inst.tiles.size() > num_tiles) continue;
      for (std::size_t c = 0; c < k; ++c) {
        inst.bottom.push_back(horiz[0][c]);
        inst.top.push_back(horiz[k][c]);
      }
      for (std::size_t r = 0; r < k; ++r) {
        inst.left.push_back(vert[r][0]);
        inst.right.push_back(vert[r][k]);
      }
      break;
    }
  } else {
    for (std::size_t i = 0; i < num_tiles; ++i) {
      TileType t;
      do {
        t = TileType{color(), color(), color(), color()};
      } while (std::find(inst.tiles.begin(), inst.tiles.end(), t) != inst.tiles.end());
      inst.tiles.push_back(t);
    }
    for (std::size_t i = 0; i < k; ++i) {
      inst.top.push_back(color());
      inst.bottom.push_back(color());
      inst.left.push_back(color());
      inst.right.push_back(color());
    }
  }
  return inst;
}

// Random reachability instance: a seeded random graph plus a random
// reachable-or-not valid target configuration.
struct ReachInstance {
  TopologicGraph graph;
  Configuration target;
};

inline std::optional<ReachInstance> random_reach_instance(std::size_t num_regions, std::size_t n,
                                                          bool nc, std::uint64_t seed) {
  SplitMix64 rng(seed);
  auto g = random_graph(num_regions, 0.4, 0.4, /*directed=*/!nc, nc, rng.next());
  // Sample a valid target configuration by rejection.
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<RegionIndex> raw;
    for (std::size_t i = 0; i < n; ++i)
      raw.push_back(static_cast<RegionIndex>(rng.below(num_regions)));
    try {
      auto target = make_configuration(g, raw);
      return ReachInstance{g, std::move(target)};
    } catch (const ConfigurationError&) {
    }
  }
  return std::nullopt;
}

}  // namespace covplan::testing
