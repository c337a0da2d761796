#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "covplan/graph.hpp"

namespace covplan {

/// SplitMix64 (Steele, Lea, Flood 2014). Chosen because the sequence is
/// defined by the algorithm alone, so suites regenerate identically on every
/// platform. split(i) derives an independent stream per index.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  /// Bernoulli draw with probability p.
  bool chance(double p) {
    return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
  }

  SplitMix64 split(std::uint64_t index) const {
    SplitMix64 child(state_ ^ (0x9e3779b97f4a7c15ull * (index + 1)));
    child.next();
    return child;
  }

 private:
  std::uint64_t state_;
};

/// Random topologic graph: base is region 0 with a forced move self-loop;
/// every candidate move pair is included independently with edge_prob_move
/// (both directions at once when undirected), comm pairs likewise. With
/// nc = true the neighbor-communicable closure is applied last.
inline TopologicGraph random_graph(std::size_t num_regions, double edge_prob_move,
                                   double edge_prob_comm, bool directed, bool nc,
                                   std::uint64_t seed) {
  SplitMix64 rng(seed);
  GraphBuilder b;
  for (std::size_t i = 0; i < num_regions; ++i) b.add_region("r" + std::to_string(i));
  b.add_move(0, 0);
  if (directed) {
    for (std::size_t i = 0; i < num_regions; ++i)
      for (std::size_t j = 0; j < num_regions; ++j) {
        if (i == j) continue;
        if (rng.chance(edge_prob_move))
          b.add_move(static_cast<RegionIndex>(i), static_cast<RegionIndex>(j));
      }
  } else {
    for (std::size_t i = 0; i < num_regions; ++i)
      for (std::size_t j = i + 1; j < num_regions; ++j)
        if (rng.chance(edge_prob_move)) {
          b.add_move(static_cast<RegionIndex>(i), static_cast<RegionIndex>(j));
          b.add_move(static_cast<RegionIndex>(j), static_cast<RegionIndex>(i));
        }
  }
  for (std::size_t i = 0; i < num_regions; ++i)
    for (std::size_t j = i + 1; j < num_regions; ++j)
      if (rng.chance(edge_prob_comm))
        b.add_comm(static_cast<RegionIndex>(i), static_cast<RegionIndex>(j));
  auto g = b.build(0);
  if (nc) g = neighbor_communicable_closure(std::move(g));
  return g;
}

/// The 11-region mission example: symmetric moves with self-loops on every
/// node, base at region 0.
inline TopologicGraph figure1_graph() {
  const std::pair<int, int> move_pairs[] = {{0, 1}, {0, 3}, {0, 4}, {1, 2}, {1, 4}, {2, 4},
                                            {3, 4}, {4, 5}, {5, 6}, {6, 7}, {6, 8}, {6, 9},
                                            {6, 10}, {7, 10}, {8, 9}, {9, 10}};
  const std::pair<int, int> comm_pairs[] = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3},
                                            {1, 4}, {2, 4}, {2, 8}, {3, 4}, {3, 7}, {4, 5},
                                            {4, 6}, {5, 6}, {6, 7}, {6, 8}, {6, 9}, {6, 10},
                                            {7, 9}, {7, 10}, {8, 9}, {8, 10}, {9, 10}};
  GraphBuilder b;
  for (int i = 0; i < 11; ++i) b.add_region("r" + std::to_string(i));
  for (int i = 0; i < 11; ++i)
    b.add_move(static_cast<RegionIndex>(i), static_cast<RegionIndex>(i));
  for (auto [a, c] : move_pairs) {
    b.add_move(static_cast<RegionIndex>(a), static_cast<RegionIndex>(c));
    b.add_move(static_cast<RegionIndex>(c), static_cast<RegionIndex>(a));
  }
  for (auto [a, c] : comm_pairs) b.add_comm(static_cast<RegionIndex>(a), static_cast<RegionIndex>(c));
  return b.build(0, "figure1");
}

enum class GraphClass { nc_undirected, arbitrary };
enum class UavCount { full, half };  // n = |V| or n = ceil(|V|/2)

struct SuiteFamily {
  GraphClass graph_class = GraphClass::nc_undirected;
  UavCount uav_count = UavCount::full;
};

inline std::string to_string(const SuiteFamily& f) {
  std::string s = f.graph_class == GraphClass::nc_undirected ? "nc-undirected" : "arbitrary";
  s += f.uav_count == UavCount::full ? "-n-full" : "-n-half";
  return s;
}

struct SuiteEntry {
  TopologicGraph graph;
  unsigned n = 0;
  std::size_t size = 0;   // |V| bucket the entry belongs to
  std::uint64_t seed = 0; // per-instance derived seed
};

/// Regenerates one experiment family: `count` random instances per size,
/// either neighbor-communicable undirected graphs or arbitrary directed
/// ones, with n = |V| or n = ceil(|V|/2). Deterministic under seed.
inline std::vector<SuiteEntry> experiment_suite(const SuiteFamily& family,
                                                const std::vector<std::size_t>& sizes,
                                                std::size_t count_per_size, std::uint64_t seed,
                                                double edge_prob_move = 0.3,
                                                double edge_prob_comm = 0.3) {
  SplitMix64 root(seed);
  std::vector<SuiteEntry> entries;
  std::uint64_t index = 0;
  for (auto size : sizes) {
    for (std::size_t i = 0; i < count_per_size; ++i, ++index) {
      SuiteEntry e;
      e.size = size;
      e.seed = root.split(index).next();
      const bool nc = family.graph_class == GraphClass::nc_undirected;
      e.graph = random_graph(size, edge_prob_move, edge_prob_comm, /*directed=*/!nc, nc, e.seed);
      e.graph.name = to_string(family) + "-v" + std::to_string(size) + "-i" + std::to_string(i);
      e.n = family.uav_count == UavCount::full ? static_cast<unsigned>(size)
                                               : static_cast<unsigned>((size + 1) / 2);
      entries.push_back(std::move(e));
    }
  }
  return entries;
}

}  // namespace covplan
