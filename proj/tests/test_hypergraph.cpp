#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "alphaspec/error.hpp"
#include "alphaspec/families.hpp"
#include "alphaspec/hypergraph.hpp"

using namespace alphaspec;

namespace {

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an alphaspec::Error");
  return Errc::BadParams;
}

}  // namespace

TEST_SUITE("hypergraph") {
  TEST_CASE("build validates its input") {
    auto single = Hypergraph::build(3, 3, {{0, 1, 2}});
    CHECK(single.num_edges() == 1);
    auto two = Hypergraph::build(5, 3, {{0, 1, 2}, {0, 3, 4}});
    CHECK(two.num_edges() == 2);
    CHECK(two.degree(0) == 2);

    CHECK(error_of([] { Hypergraph::build(3, 3, {{0, 1, 1}}); }) == Errc::EdgeArity);
    CHECK(error_of([] { Hypergraph::build(3, 3, {{0, 1}}); }) == Errc::EdgeArity);
    CHECK(error_of([] { Hypergraph::build(3, 3, {{0, 1, 3}}); }) == Errc::VertexRange);
    CHECK(error_of([] { Hypergraph::build(4, 3, {{0, 1, 2}, {2, 1, 0}}); }) == Errc::DuplicateEdge);
    CHECK(error_of([] { Hypergraph::build(3, 3, {}); }) == Errc::BadParams);
    CHECK(error_of([] { Hypergraph::build(2, 3, {{0, 1, 2}}); }) == Errc::BadParams);
  }

  TEST_CASE("edges are stored sorted and incidence is consistent") {
    auto h = Hypergraph::build(5, 3, {{4, 0, 3}, {2, 1, 0}});
    CHECK(h.edge_list() == std::vector<std::vector<int>>{{0, 1, 2}, {0, 3, 4}});
    for (VertexId v = 0; v < h.num_vertices(); ++v) {
      for (EdgeId e : h.incident(v)) {
        auto members = h.edge(e);
        CHECK(members[h.position_in_edge(v, e)] == v);
      }
    }
    CHECK(h.find_edge({4, 3, 0}) == 1);
    CHECK(h.find_edge({1, 3, 4}) == -1);
  }

  TEST_CASE("degrees") {
    auto single = Hypergraph::build(3, 3, {{0, 1, 2}});
    auto d = degrees(single);
    CHECK(d.per_vertex == std::vector<int>{1, 1, 1});

    auto s = star(13, 3).graph;
    auto sd = degrees(s).sorted.values;
    REQUIRE(sd.size() == 27);
    CHECK(sd[0] == 13);
    CHECK(std::count(sd.begin(), sd.end(), 1) == 26);

    auto t = degrees(t_supertree(1, 2, 9, 3).graph).sorted.values;
    CHECK(std::vector<int>(t.begin(), t.begin() + 4) == std::vector<int>{10, 3, 2, 1});
  }

  TEST_CASE("degree sum equals m k on random supertrees") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
      const int edges = 1 + static_cast<int>(rng() % 12);
      const int k = 3 + static_cast<int>(rng() % 3);
      TreeEdgeList tree;
      for (int v = 1; v <= edges; ++v) tree.emplace_back(static_cast<int>(rng() % v), v);
      auto h = power_of_tree(tree, k);
      auto d = degrees(h);
      CHECK(std::accumulate(d.per_vertex.begin(), d.per_vertex.end(), 0) == edges * k);
      CHECK(std::is_sorted(d.sorted.values.rbegin(), d.sorted.values.rend()));
      CHECK(is_supertree(h));
    }
  }

  TEST_CASE("connectivity and supertree test") {
    CHECK(is_connected(Hypergraph::build(3, 3, {{0, 1, 2}})));
    CHECK_FALSE(is_connected(Hypergraph::build(6, 3, {{0, 1, 2}, {3, 4, 5}})));
    CHECK(is_supertree(Hypergraph::build(3, 3, {{0, 1, 2}})));
    CHECK_FALSE(is_supertree(Hypergraph::build(4, 3, {{0, 1, 2}, {0, 1, 3}})));
    CHECK(is_supertree(star(13, 3).graph));
    CHECK(star(13, 3).graph.num_vertices() == 27);
    for (const auto& t : top_eight(9, 4)) {
      CHECK(is_connected(t.graph));
      CHECK(is_supertree(t.graph));
    }
  }

  TEST_CASE("text format") {
    auto h = read_text("3 3 1\n0 1 2\n");
    CHECK(h.num_edges() == 1);
    CHECK(write_text(star(2, 3).graph) == "5 3 2\n0 1 2\n0 3 4\n");
    CHECK(error_of([] { read_text("3 3 1\n0 1\n"); }) == Errc::ParseError);
    CHECK(error_of([] { read_text("3 3 2\n0 1 2\n"); }) == Errc::ParseError);
    CHECK(error_of([] { read_text("3 3 1\n0 1 2\n0 1 2\n"); }) == Errc::ParseError);
    CHECK(error_of([] { read_text("3 3 1\n0 1 x\n"); }) == Errc::ParseError);
    CHECK(error_of([] { read_text(""); }) == Errc::ParseError);

    auto commented = read_text("# a star\n5 3 2\n\n0 1 2\n# between edges\n0 3 4\n");
    CHECK(commented == star(2, 3).graph);

    for (const auto& t : top_eight(7, 3)) CHECK(read_text(write_text(t.graph)) == t.graph);
  }
}
