#include <doctest.h>

#include "covplan/config.hpp"
#include "covplan/generate.hpp"
#include "oracles.hpp"

using namespace covplan;

TEST_CASE("make_configuration canonicalizes and validates") {
  auto g = figure1_graph();

  auto c = make_configuration(g, {0, 0, 0});
  CHECK(c.positions == std::vector<RegionIndex>{0, 0, 0});

  SUBCASE("any permutation yields the same canonical form") {
    auto a = make_configuration(g, {4, 0, 5});
    auto b = make_configuration(g, {5, 4, 0});
    CHECK(a == b);
  }

  SUBCASE("duplicate non-base") {
    CHECK_THROWS_AS(make_configuration(g, {4, 4}), ConfigurationError);
    try {
      make_configuration(g, {4, 4});
    } catch (const ConfigurationError& e) {
      CHECK(e.kind == ConfigError::duplicate_non_base);
    }
  }

  SUBCASE("disconnected from base") {
    try {
      make_configuration(g, {9});
      FAIL("expected ConfigurationError");
    } catch (const ConfigurationError& e) {
      CHECK(e.kind == ConfigError::disconnected_from_base);
    }
  }

  SUBCASE("base may repeat") {
    CHECK_NOTHROW(make_configuration(g, {0, 0, 4}));
  }
}

TEST_CASE("is_connected_to_base") {
  auto g = figure1_graph();
  CHECK(is_connected_to_base(g, std::span<const RegionIndex>{}));
  std::vector<RegionIndex> frame4 = {4, 5, 6};
  CHECK(is_connected_to_base(g, std::span<const RegionIndex>(frame4)));
  std::vector<RegionIndex> lone = {9};
  CHECK_FALSE(is_connected_to_base(g, std::span<const RegionIndex>(lone)));
}

TEST_CASE("is_step on the mission example") {
  auto g = figure1_graph();
  auto all_b = make_configuration(g, {0, 0, 0});
  CHECK(is_step(g, all_b, all_b));  // base self-loop
  CHECK(is_step(g, all_b, make_configuration(g, {0, 0, 4})));
  // (0,4,6) is a valid configuration but needs a move 0 -> 6, which the
  // fixture does not have.
  CHECK_FALSE(is_step(g, all_b, make_configuration(g, {0, 4, 6})));
}

TEST_CASE("two UAVs may swap positions across opposite move edges") {
  GraphBuilder b;
  b.add_region("B");
  b.add_region("v1");
  b.add_region("v2");
  b.add_move(0, 0);
  b.add_move(1, 2);
  b.add_move(2, 1);
  b.add_comm(0, 1);
  b.add_comm(0, 2);
  auto g = b.build(0);
  auto c = make_configuration(g, {1, 2});
  // Neither node has a self-loop, so the only joint move is the swap; the
  // canonical multiset is unchanged.
  CHECK(is_step(g, c, c));
  auto succ = successors(g, c);
  REQUIRE(succ.size() == 1);
  CHECK(succ[0] == c);
}

TEST_CASE("move relation asymmetry is honored") {
  GraphBuilder b;
  b.add_region("B");
  b.add_region("v");
  b.add_move(0, 0);
  b.add_move(0, 1);
  b.add_comm(0, 1);
  auto g = b.build(0);
  auto at_v = make_configuration(g, {1});
  auto at_b = make_configuration(g, {0});
  CHECK(is_step(g, at_b, at_v));
  CHECK_FALSE(is_step(g, at_v, at_b));  // no move v -> B
}

TEST_CASE("successors of the all-base configuration") {
  SUBCASE("singleton graph") {
    GraphBuilder b;
    b.add_region("B");
    b.add_move(0, 0);
    auto g = b.build(0);
    auto succ = successors(g, all_base_configuration(g, 2));
    REQUIRE(succ.size() == 1);
    CHECK(succ[0] == all_base_configuration(g, 2));
  }

  SUBCASE("figure 1, three UAVs") {
    auto g = figure1_graph();
    auto c = all_base_configuration(g, 3);
    auto succ = successors(g, c);
    auto contains = [&](const Configuration& x) {
      return std::find(succ.begin(), succ.end(), x) != succ.end();
    };
    CHECK(contains(make_configuration(g, {0, 0, 0})));
    CHECK(contains(make_configuration(g, {0, 0, 4})));
    for (const auto& s : succ)
      for (auto r : s.positions) CHECK(r != 9);  // node 0 has no move to 9
  }
}

TEST_CASE("matching-based step relation agrees with permutation search") {
  // Exhaustive over all configuration pairs for a family of seeded graphs.
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    std::size_t nv = 2 + seed % 4;  // 2..5 regions
    auto g = random_graph(nv, 0.45, 0.45, seed % 2 == 1, false, 977 + seed);
    for (std::size_t n = 1; n <= 3; ++n) {
      // enumerate all valid canonical configurations
      std::vector<Configuration> all;
      std::vector<RegionIndex> raw(n, 0);
      auto rec = [&](auto&& self, std::size_t i, RegionIndex min) -> void {
        if (i == n) {
          if (!detail::configuration_violation(g, raw)) all.push_back(Configuration{raw});
          return;
        }
        for (RegionIndex r = min; r < nv; ++r) {
          raw[i] = r;
          self(self, i + 1, r);
        }
      };
      rec(rec, 0, 0);
      for (const auto& a : all)
        for (const auto& b : all) {
          CAPTURE(seed);
          CAPTURE(n);
          CHECK(is_step(g, a, b) == covplan::testing::naive_is_step(g, a, b));
        }
    }
  }
}

TEST_CASE("successors agree with labeled-tuple enumeration") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    std::size_t nv = 2 + seed % 4;  // up to 5 regions
    std::size_t n = 1 + seed % 3;
    auto g = random_graph(nv, 0.4, 0.4, seed % 2 == 0, false, 1234 + seed);
    auto start = all_base_configuration(g, n);
    CAPTURE(seed);
    CHECK(successors(g, start) == covplan::testing::naive_successors(g, start));
    for (const auto& c : covplan::testing::naive_successors(g, start)) {
      CHECK(successors(g, c) == covplan::testing::naive_successors(g, c));
    }
  }
}

TEST_CASE("successors extensionally match is_step") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    std::size_t nv = 3 + seed % 3;
    auto g = random_graph(nv, 0.5, 0.5, false, true, 55 + seed);
    auto start = all_base_configuration(g, 2);
    auto succ = successors(g, start);
    for (const auto& c2 : succ) CHECK(is_step(g, start, c2));
  }
}
