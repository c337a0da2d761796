#include <doctest.h>

#include "covplan/generate.hpp"
#include "covplan/graph.hpp"

using namespace covplan;

namespace {

TopologicGraph minimal_graph() {
  GraphBuilder b;
  b.add_region("B");
  b.add_move(0, 0);
  return b.build(0);
}

}  // namespace

TEST_CASE("minimal graph is valid") {
  auto g = minimal_graph();
  CHECK(validate_graph(g).empty());
  CHECK(is_neighbor_communicable(g));
}

TEST_CASE("missing base self-loop is reported") {
  GraphBuilder b;
  b.add_region("B");
  auto g = b.build(0);
  auto v = validate_graph(g);
  REQUIRE(v.size() == 1);
  CHECK(v[0] == "base not move-reflexive");
}

TEST_CASE("dangling indices and asymmetric comms are reported") {
  auto g = minimal_graph();
  g.moves[0].push_back(5);
  auto v = validate_graph(g);
  CHECK(!v.empty());
  CHECK(v[0].find("dangling") != std::string::npos);

  auto g2 = minimal_graph();
  g2.labels.push_back("v");
  g2.moves.push_back({});
  g2.comms.push_back({});
  g2.comms[0].push_back(1);  // stored one-sided on purpose
  auto v2 = validate_graph(g2);
  REQUIRE(!v2.empty());
  CHECK(v2[0].find("asymmetric") != std::string::npos);
}

TEST_CASE("figure 1 fixture matches its published shape") {
  auto g = figure1_graph();
  CHECK(g.region_count() == 11);
  CHECK(validate_graph(g).empty());
  CHECK(is_neighbor_communicable(g));

  std::size_t move_edges = 0, self_loops = 0, comm_pairs = 0;
  for (std::size_t v = 0; v < g.region_count(); ++v) {
    for (auto w : g.moves[v]) {
      if (w == v)
        ++self_loops;
      else
        ++move_edges;
    }
    for (auto w : g.comms[v])
      if (v < w) ++comm_pairs;
  }
  CHECK(self_loops == 11);
  CHECK(move_edges == 2 * 16);  // 16 undirected pairs stored both ways
  CHECK(comm_pairs == 23);
}

TEST_CASE("neighbor-communicable detection and closure") {
  GraphBuilder b;
  b.add_region("B");
  b.add_region("v");
  b.add_move(0, 0);
  b.add_move(0, 1);
  auto g = b.build(0);
  CHECK_FALSE(is_neighbor_communicable(g));

  auto closed = neighbor_communicable_closure(g);
  CHECK(is_neighbor_communicable(closed));
  CHECK(closed.has_comm(0, 1));
  CHECK(closed.comms[0].size() == 1);  // forced pair only

  SUBCASE("idempotent and monotone") {
    auto twice = neighbor_communicable_closure(closed);
    CHECK(twice == closed);
    for (std::size_t v = 0; v < g.region_count(); ++v)
      for (auto w : g.comms[v]) CHECK(closed.has_comm(static_cast<RegionIndex>(v), w));
  }

  SUBCASE("already-closed graph is unchanged") {
    auto fig1 = figure1_graph();
    CHECK(neighbor_communicable_closure(fig1) == fig1);
  }
}

TEST_CASE("serialization round-trips the figure 1 fixture") {
  auto g = figure1_graph();
  auto text = serialize_graph(g);
  auto back = parse_graph(text);
  CHECK(back == g);
  CHECK(serialize_graph(back) == text);
}

TEST_CASE("serialization round-trips random graphs") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    auto g = random_graph(1 + seed % 9, 0.35, 0.3, seed % 2 == 0, seed % 3 == 0, seed);
    CAPTURE(seed);
    CHECK(parse_graph(serialize_graph(g)) == g);
  }
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS(parse_graph("{"), ParseError);

  SUBCASE("self communication pair") {
    CHECK_THROWS_WITH_AS(
        parse_graph(R"({"regions":["a"],"base":"a","moves":[["a","a"]],"comms":[["a","a"]]})"),
        doctest::Contains("self communication pair"), ParseError);
  }
  SUBCASE("missing base key") {
    CHECK_THROWS_WITH_AS(parse_graph(R"({"regions":["a"],"moves":[],"comms":[]})"),
                         doctest::Contains("base"), ParseError);
  }
  SUBCASE("unknown key is named") {
    CHECK_THROWS_WITH_AS(
        parse_graph(R"({"regions":["a"],"base":"a","moves":[],"comms":[],"extra":1})"),
        doctest::Contains("extra"), ParseError);
  }
  SUBCASE("duplicate labels") {
    CHECK_THROWS_WITH_AS(parse_graph(R"({"regions":["a","a"],"base":"a","moves":[],"comms":[]})"),
                         doctest::Contains("duplicate"), ParseError);
  }
  SUBCASE("edge to unknown region") {
    CHECK_THROWS_WITH_AS(
        parse_graph(R"({"regions":["a"],"base":"a","moves":[["a","z"]],"comms":[]})"),
        doctest::Contains("unknown region"), ParseError);
  }
}
