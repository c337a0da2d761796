#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "covplan/graph.hpp"  // ParseError

namespace covplan {

using Color = std::uint32_t;
inline constexpr Color kWhite = 0;  // white is color 0 by convention

/// A tile type: the four side colors. Tiles cannot be rotated.
struct TileType {
  Color left = 0, up = 0, right = 0, down = 0;
  bool operator==(const TileType&) const = default;
};

using TileIndex = std::uint16_t;

/// Grid coordinates: lambda(row, column) with rows 1..m numbered bottom to
/// top and columns 1..k left to right. Horizontal matching (h) compares
/// right(r,c) with left(r,c+1); vertical matching (v) compares up(r,c) with
/// down(r+1,c). Boundary sequences are indexed 1..k: top/bottom left to
/// right, left/right bottom to top.
struct TilingSolution {
  std::size_t k = 0;
  std::size_t m = 0;
  std::vector<TileIndex> cells;  // row-major from the bottom row

  TileIndex at(std::size_t row, std::size_t col) const {  // 1-based
    return cells[(row - 1) * k + (col - 1)];
  }
};

/// Tile a k x k square matching four boundary color sequences.
struct SquareInstance {
  std::vector<TileType> tiles;
  std::size_t k = 0;
  std::vector<Color> top, bottom, left, right;  // length k each
  std::string name;
};

/// Tile a k x m corridor (m free) with fixed bottom and top tile rows and
/// all-white left and right edges.
struct CorridorInstance {
  std::vector<TileType> tiles;
  std::size_t k = 0;
  std::vector<TileIndex> top_row, bottom_row;  // length k each
  std::string name;
};

inline std::vector<std::string> validate_square_instance(const SquareInstance& inst) {
  std::vector<std::string> v;
  if (inst.k < 1) v.push_back("k must be at least 1");
  if (inst.tiles.empty()) v.push_back("tile set is empty");
  for (std::size_t i = 0; i < inst.tiles.size(); ++i)
    for (std::size_t j = i + 1; j < inst.tiles.size(); ++j)
      if (inst.tiles[i] == inst.tiles[j]) v.push_back("duplicate tile type");
  if (inst.top.size() != inst.k || inst.bottom.size() != inst.k || inst.left.size() != inst.k ||
      inst.right.size() != inst.k)
    v.push_back("boundary sequences must have length k");
  return v;
}

inline std::vector<std::string> validate_corridor_instance(const CorridorInstance& inst) {
  std::vector<std::string> v;
  if (inst.k < 1) v.push_back("k must be at least 1");
  if (inst.tiles.empty()) v.push_back("tile set is empty");
  for (std::size_t i = 0; i < inst.tiles.size(); ++i)
    for (std::size_t j = i + 1; j < inst.tiles.size(); ++j)
      if (inst.tiles[i] == inst.tiles[j]) v.push_back("duplicate tile type");
  if (inst.top_row.size() != inst.k || inst.bottom_row.size() != inst.k)
    v.push_back("row sequences must have length k");
  for (auto t : inst.top_row)
    if (t >= inst.tiles.size()) v.push_back("top row references unknown tile");
  for (auto t : inst.bottom_row)
    if (t >= inst.tiles.size()) v.push_back("bottom row references unknown tile");
  return v;
}

// --- independent constraint checkers ---------------------------------------
// These re-verify (h), (v) and the boundary conditions from scratch; the
// solvers never call them.

inline std::optional<std::string> check_square_tiling(const SquareInstance& inst,
                                                      const TilingSolution& sol) {
  const std::size_t k = inst.k;
  if (sol.k != k || sol.m != k || sol.cells.size() != k * k) return "solution shape mismatch";
  for (auto t : sol.cells)
    if (t >= inst.tiles.size()) return "cell references unknown tile";
  auto tile = [&](std::size_t r, std::size_t c) -> const TileType& {
    return inst.tiles[sol.at(r, c)];
  };
  for (std::size_t r = 1; r <= k; ++r)
    for (std::size_t c = 1; c + 1 <= k; ++c)
      if (tile(r, c).right != tile(r, c + 1).left)
        return "(h) violated at row " + std::to_string(r) + " column " + std::to_string(c);
  for (std::size_t r = 1; r + 1 <= k; ++r)
    for (std::size_t c = 1; c <= k; ++c)
      if (tile(r, c).up != tile(r + 1, c).down)
        return "(v) violated at row " + std::to_string(r) + " column " + std::to_string(c);
  for (std::size_t c = 1; c <= k; ++c) {
    if (tile(k, c).up != inst.top[c - 1]) return "top boundary violated at column " + std::to_string(c);
    if (tile(1, c).down != inst.bottom[c - 1])
      return "bottom boundary violated at column " + std::to_string(c);
  }
  for (std::size_t r = 1; r <= k; ++r) {
    if (tile(r, 1).left != inst.left[r - 1]) return "left boundary violated at row " + std::to_string(r);
    if (tile(r, k).right != inst.right[r - 1])
      return "right boundary violated at row " + std::to_string(r);
  }
  return std::nullopt;
}

inline std::optional<std::string> check_corridor_tiling(const CorridorInstance& inst,
                                                        const TilingSolution& sol) {
  const std::size_t k = inst.k;
  if (sol.k != k || sol.m < 1 || sol.cells.size() != sol.m * k) return "solution shape mismatch";
  for (auto t : sol.cells)
    if (t >= inst.tiles.size()) return "cell references unknown tile";
  auto tile = [&](std::size_t r, std::size_t c) -> const TileType& {
    return inst.tiles[sol.at(r, c)];
  };
  for (std::size_t r = 1; r <= sol.m; ++r) {
    for (std::size_t c = 1; c + 1 <= k; ++c)
      if (tile(r, c).right != tile(r, c + 1).left)
        return "(h) violated at row " + std::to_string(r) + " column " + std::to_string(c);
    // White outer edges hold on every row.
    if (tile(r, 1).left != kWhite) return "left edge not white at row " + std::to_string(r);
    if (tile(r, k).right != kWhite) return "right edge not white at row " + std::to_string(r);
  }
  for (std::size_t r = 1; r + 1 <= sol.m; ++r)
    for (std::size_t c = 1; c <= k; ++c)
      if (tile(r, c).up != tile(r + 1, c).down)
        return "(v) violated at row " + std::to_string(r) + " column " + std::to_string(c);
  for (std::size_t c = 1; c <= k; ++c) {
    if (sol.at(1, c) != inst.bottom_row[c - 1])
      return "bottom row mismatch at column " + std::to_string(c);
    if (sol.at(sol.m, c) != inst.top_row[c - 1])
      return "top row mismatch at column " + std::to_string(c);
  }
  return std::nullopt;
}

// --- solvers ----------------------------------------------------------------

namespace detail {

struct SquareBacktracker {
  const SquareInstance& inst;
  std::vector<TileIndex> cells;

  explicit SquareBacktracker(const SquareInstance& i) : inst(i), cells(i.k * i.k, 0) {}

  TileIndex& at(std::size_t r, std::size_t c) { return cells[(r - 1) * inst.k + (c - 1)]; }

  bool fits(std::size_t r, std::size_t c, const TileType& t) {
    if (c == 1) {
      if (t.left != inst.left[r - 1]) return false;
    } else if (inst.tiles[at(r, c - 1)].right != t.left) {
      return false;
    }
    if (r == 1) {
      if (t.down != inst.bottom[c - 1]) return false;
    } else if (inst.tiles[at(r - 1, c)].up != t.down) {
      return false;
    }
    if (c == inst.k && t.right != inst.right[r - 1]) return false;
    if (r == inst.k && t.up != inst.top[c - 1]) return false;
    return true;
  }

  // Column-major fill: all of column c before column c+1, bottom to top, so
  // the left and down neighbors of the next cell are always placed.
  bool place(std::size_t idx) {
    if (idx == inst.k * inst.k) return true;
    const std::size_t c = idx / inst.k + 1;
    const std::size_t r = idx % inst.k + 1;
    for (TileIndex t = 0; t < inst.tiles.size(); ++t) {
      if (!fits(r, c, inst.tiles[t])) continue;
      at(r, c) = t;
      if (place(idx + 1)) return true;
    }
    return false;
  }
};

}  // namespace detail

/// Exhaustive backtracking over the k x k grid; absence of a result proves
/// no tiling exists.
inline std::optional<TilingSolution> solve_square_tiling(const SquareInstance& inst) {
  detail::SquareBacktracker bt(inst);
  if (!bt.place(0)) return std::nullopt;
  TilingSolution sol;
  sol.k = inst.k;
  sol.m = inst.k;
  sol.cells = std::move(bt.cells);
  return sol;
}

/// All length-k tile rows satisfying (h) with white outermost left and right
/// colors, in lexicographic order of tile indices.
inline std::vector<std::vector<TileIndex>> enumerate_rows(const CorridorInstance& inst) {
  std::vector<std::vector<TileIndex>> rows;
  std::vector<TileIndex> row(inst.k);
  auto rec = [&](auto&& self, std::size_t c) -> void {
    if (c == inst.k) {
      rows.push_back(row);
      return;
    }
    for (TileIndex t = 0; t < inst.tiles.size(); ++t) {
      const TileType& tt = inst.tiles[t];
      if (c == 0) {
        if (tt.left != kWhite) continue;
      } else if (inst.tiles[row[c - 1]].right != tt.left) {
        continue;
      }
      if (c + 1 == inst.k && tt.right != kWhite) continue;
      row[c] = t;
      self(self, c + 1);
    }
  };
  rec(rec, 0);
  return rows;
}

/// Exact decision by BFS over the row graph: nodes are valid rows, edges are
/// (v)-compatible successions, start is the bottom row and the goal the top
/// row. The height m of a found tiling is minimal; termination is guaranteed
/// because there are finitely many rows.
inline std::optional<TilingSolution> solve_corridor_tiling(const CorridorInstance& inst) {
  auto rows = enumerate_rows(inst);
  auto find_row = [&](const std::vector<TileIndex>& r) -> std::optional<std::size_t> {
    auto it = std::find(rows.begin(), rows.end(), r);
    if (it == rows.end()) return std::nullopt;
    return static_cast<std::size_t>(it - rows.begin());
  };
  auto start = find_row(inst.bottom_row);
  auto goal = find_row(inst.top_row);
  if (!start || !goal) return std::nullopt;  // a fixed row violates (h) or white edges

  auto stacks = [&](std::size_t below, std::size_t above) {
    for (std::size_t c = 0; c < inst.k; ++c)
      if (inst.tiles[rows[below][c]].up != inst.tiles[rows[above][c]].down) return false;
    return true;
  };

  std::vector<std::int64_t> parent(rows.size(), -2);  // -2 = unseen
  std::vector<std::size_t> queue{*start};
  parent[*start] = -1;
  std::size_t cursor = 0;
  while (cursor < queue.size()) {
    std::size_t r = queue[cursor++];
    if (r == *goal) break;
    for (std::size_t r2 = 0; r2 < rows.size(); ++r2) {
      if (parent[r2] != -2 || !stacks(r, r2)) continue;
      parent[r2] = static_cast<std::int64_t>(r);
      queue.push_back(r2);
    }
  }
  if (parent[*goal] == -2) return std::nullopt;

  std::vector<std::size_t> chain;
  for (std::int64_t r = static_cast<std::int64_t>(*goal); r >= 0; r = parent[r])
    chain.push_back(static_cast<std::size_t>(r));
  std::reverse(chain.begin(), chain.end());

  TilingSolution sol;
  sol.k = inst.k;
  sol.m = chain.size();
  for (auto r : chain)
    for (auto t : rows[r]) sol.cells.push_back(t);
  return sol;
}

// --- JSON -------------------------------------------------------------------

namespace detail {

inline std::vector<TileType> tiles_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("\"tiles\" must be a non-empty array");
  std::vector<TileType> tiles;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& e = j[i];
    if (!e.is_array() || e.size() != 4)
      throw ParseError("tiles[" + std::to_string(i) + "] must be [left,up,right,down]");
    TileType t;
    t.left = e[0].get<Color>();
    t.up = e[1].get<Color>();
    t.right = e[2].get<Color>();
    t.down = e[3].get<Color>();
    tiles.push_back(t);
  }
  return tiles;
}

inline nlohmann::ordered_json tiles_to_json(const std::vector<TileType>& tiles) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& t : tiles) arr.push_back({t.left, t.up, t.right, t.down});
  return arr;
}

inline void expect_keys(const nlohmann::json& j, std::initializer_list<const char*> keys) {
  for (auto& [key, value] : j.items()) {
    (void)value;
    bool known = false;
    for (auto k : keys)
      if (key == k) known = true;
    if (!known) throw ParseError("unknown key \"" + key + "\"");
  }
}

}  // namespace detail

inline SquareInstance parse_square_instance(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("instance must be a JSON object");
  detail::expect_keys(j, {"tiles", "k", "top", "bottom", "left", "right", "name"});
  for (auto key : {"tiles", "k", "top", "bottom", "left", "right"})
    if (!j.contains(key)) throw ParseError(std::string("missing \"") + key + "\" key");
  SquareInstance inst;
  inst.tiles = detail::tiles_from_json(j["tiles"]);
  inst.k = j["k"].get<std::size_t>();
  inst.top = j["top"].get<std::vector<Color>>();
  inst.bottom = j["bottom"].get<std::vector<Color>>();
  inst.left = j["left"].get<std::vector<Color>>();
  inst.right = j["right"].get<std::vector<Color>>();
  if (j.contains("name")) inst.name = j["name"].get<std::string>();
  auto violations = validate_square_instance(inst);
  if (!violations.empty()) throw ParseError(violations.front());
  return inst;
}

inline CorridorInstance parse_corridor_instance(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("instance must be a JSON object");
  detail::expect_keys(j, {"tiles", "k", "top_row", "bottom_row", "name"});
  for (auto key : {"tiles", "k", "top_row", "bottom_row"})
    if (!j.contains(key)) throw ParseError(std::string("missing \"") + key + "\" key");
  CorridorInstance inst;
  inst.tiles = detail::tiles_from_json(j["tiles"]);
  inst.k = j["k"].get<std::size_t>();
  inst.top_row = j["top_row"].get<std::vector<TileIndex>>();
  inst.bottom_row = j["bottom_row"].get<std::vector<TileIndex>>();
  if (j.contains("name")) inst.name = j["name"].get<std::string>();
  auto violations = validate_corridor_instance(inst);
  if (!violations.empty()) throw ParseError(violations.front());
  return inst;
}

inline std::string serialize_square_instance(const SquareInstance& inst) {
  nlohmann::ordered_json j;
  if (!inst.name.empty()) j["name"] = inst.name;
  j["tiles"] = detail::tiles_to_json(inst.tiles);
  j["k"] = inst.k;
  j["top"] = inst.top;
  j["bottom"] = inst.bottom;
  j["left"] = inst.left;
  j["right"] = inst.right;
  return j.dump(2) + "\n";
}

inline std::string serialize_corridor_instance(const CorridorInstance& inst) {
  nlohmann::ordered_json j;
  if (!inst.name.empty()) j["name"] = inst.name;
  j["tiles"] = detail::tiles_to_json(inst.tiles);
  j["k"] = inst.k;
  j["top_row"] = inst.top_row;
  j["bottom_row"] = inst.bottom_row;
  return j.dump(2) + "\n";
}

inline nlohmann::ordered_json tiling_solution_to_json(const TilingSolution& sol) {
  nlohmann::ordered_json j;
  j["k"] = sol.k;
  j["m"] = sol.m;
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t r = 1; r <= sol.m; ++r) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t c = 1; c <= sol.k; ++c) row.push_back(sol.at(r, c));
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

}  // namespace covplan
