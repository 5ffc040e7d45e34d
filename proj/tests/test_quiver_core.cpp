#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"

#include "qsphere/quiver.hpp"

using namespace qsphere;

namespace {

DimVector dims_of(std::initializer_list<Int> xs) {
  DimVector d(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (Int x : xs) d[i++] = x;
  return d;
}

QuiverSetting linear_chain(const std::vector<Int>& dims) {
  std::vector<std::string> ids;
  std::vector<std::pair<std::string, std::string>> arrows;
  for (size_t i = 0; i < dims.size(); ++i) ids.push_back(std::to_string(i + 1));
  for (size_t i = 0; i + 1 < dims.size(); ++i) arrows.emplace_back(ids[i], ids[i + 1]);
  DimVector d(static_cast<Eigen::Index>(dims.size()));
  for (size_t i = 0; i < dims.size(); ++i) d[static_cast<Eigen::Index>(i)] = dims[i];
  return {Quiver(std::move(ids), arrows), std::move(d)};
}

}  // namespace

TEST_CASE("vertex lookup follows declaration order") {
  Quiver q({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}});
  CHECK(q.vertex_count() == 3);
  CHECK(q.index_of("x") == 0);
  CHECK(q.index_of("z") == 2);
  CHECK(q.vertex_id(1) == "y");
  CHECK(q.arrows()[0] == Arrow{0, 1});
  CHECK(q.arrows()[1] == Arrow{1, 2});
  CHECK_THROWS_AS(q.index_of("w"), std::invalid_argument);
}

TEST_CASE("duplicate vertex ids are rejected") {
  CHECK_THROWS_AS(Quiver({"a", "a"}, std::vector<std::pair<std::string, std::string>>{}),
                  std::invalid_argument);
}

TEST_CASE("arrows naming unknown vertices are rejected") {
  CHECK_THROWS_AS(Quiver({"a", "b"}, {{"a", "c"}}), std::invalid_argument);
}

TEST_CASE("loops and parallel arrows are representable and detected") {
  Quiver loop({"a"}, {{"a", "a"}});
  CHECK(loop.has_loop());
  CHECK_FALSE(loop.is_oriented_acyclic());

  Quiver kron({"1", "2"}, {{"1", "2"}, {"1", "2"}});
  CHECK_FALSE(kron.has_loop());
  CHECK(kron.is_oriented_acyclic());
  CHECK(kron.arrow_count() == 2);
}

TEST_CASE("oriented cycle detection") {
  Quiver cyc({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  CHECK_FALSE(cyc.is_oriented_acyclic());
  // Reversing one arrow breaks the cycle.
  CHECK(cyc.with_arrow_reversed(2).is_oriented_acyclic());
}

TEST_CASE("undirected adjacency keeps multiplicity") {
  Quiver kron({"1", "2"}, {{"1", "2"}, {"1", "2"}});
  const auto adj = kron.undirected_adjacency();
  CHECK(adj[0].size() == 2);
  CHECK(adj[1].size() == 2);
  CHECK(adj[0][0] == 1);
  CHECK(adj[1][1] == 0);
}

TEST_CASE("underlying analysis distinguishes trees from everything else") {
  SUBCASE("path is a simple tree") {
    const auto s = linear_chain({1, 1, 1});
    const auto a = underlying_analysis(s);
    CHECK(a.connected);
    CHECK(a.simple_tree);
    CHECK_FALSE(a.has_cycle_or_multiedge);
  }
  SUBCASE("orientation does not matter") {
    auto s = linear_chain({1, 1, 1});
    s.quiver = s.quiver.with_arrow_reversed(0);
    CHECK(underlying_analysis(s).simple_tree);
  }
  SUBCASE("double arrow is not simple") {
    QuiverSetting s{Quiver({"1", "2"}, {{"1", "2"}, {"1", "2"}}), dims_of({1, 1})};
    const auto a = underlying_analysis(s);
    CHECK(a.connected);
    CHECK_FALSE(a.simple_tree);
    CHECK(a.has_cycle_or_multiedge);
  }
  SUBCASE("undirected cycle is not a tree") {
    QuiverSetting s{Quiver({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}),
                    dims_of({1, 1, 1})};
    const auto a = underlying_analysis(s);
    CHECK(a.connected);
    CHECK_FALSE(a.simple_tree);
    CHECK(a.has_cycle_or_multiedge);
  }
  SUBCASE("loop counts as a cycle") {
    QuiverSetting s{Quiver({"a"}, {{"a", "a"}}), dims_of({1})};
    const auto a = underlying_analysis(s);
    CHECK(a.has_loop);
    CHECK(a.has_cycle_or_multiedge);
    CHECK_FALSE(a.simple_tree);
  }
  SUBCASE("two isolated vertices are disconnected") {
    QuiverSetting s{Quiver({"a", "b"}, std::vector<Arrow>{}), dims_of({1, 1})};
    const auto a = underlying_analysis(s);
    CHECK_FALSE(a.connected);
    CHECK_FALSE(a.simple_tree);
  }
}

TEST_CASE("support restriction drops zero-dimensional vertices") {
  auto s = linear_chain({2, 0, 3});
  const auto r = restrict_to_support(s);
  CHECK(r.quiver.vertex_count() == 2);
  CHECK(r.quiver.vertex_ids() == std::vector<std::string>{"1", "3"});
  CHECK(r.quiver.arrow_count() == 0);
  CHECK(r.dims[0] == 2);
  CHECK(r.dims[1] == 3);
}

TEST_CASE("connected components preserve ids and arrows") {
  Quiver q({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
  QuiverSetting s{q, dims_of({1, 2, 3, 4})};
  const auto comps = connected_components(s);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].quiver.vertex_ids() == std::vector<std::string>{"a", "b"});
  CHECK(comps[1].quiver.vertex_ids() == std::vector<std::string>{"c", "d"});
  CHECK(comps[0].dims[1] == 2);
  CHECK(comps[1].dims[0] == 3);
  CHECK(comps[0].quiver.arrow_count() == 1);
  CHECK(comps[1].quiver.arrow_count() == 1);
}

TEST_CASE("splitting a path at its thin middle vertex") {
  // 2 -- 1 -- 2: the middle vertex is thin and of degree two, so the path
  // falls apart into two edges, each keeping a copy of the cut vertex.
  const auto s = linear_chain({2, 1, 2});
  const auto dec = split_at_thin_cut_vertices(s);
  CHECK(dec.glue_vertices == std::vector<std::string>{"2"});
  REQUIRE(dec.pieces.size() == 2);
  CHECK(dec.pieces[0].quiver.vertex_ids() == std::vector<std::string>{"1", "2"});
  CHECK(dec.pieces[1].quiver.vertex_ids() == std::vector<std::string>{"2", "3"});
  CHECK(dec.pieces[0].dims[0] == 2);
  CHECK(dec.pieces[0].dims[1] == 1);
  CHECK(dec.pieces[1].dims[0] == 1);
  CHECK(dec.pieces[1].dims[1] == 2);
}

TEST_CASE("thin leaves do not split anything") {
  const auto s = linear_chain({1, 2, 1});
  const auto dec = split_at_thin_cut_vertices(s);
  CHECK(dec.glue_vertices.empty());
  REQUIRE(dec.pieces.size() == 1);
  CHECK(same_setting(dec.pieces[0], s));
}

TEST_CASE("a thick degree-two vertex does not split") {
  const auto s = linear_chain({2, 3, 2});
  const auto dec = split_at_thin_cut_vertices(s);
  CHECK(dec.glue_vertices.empty());
  REQUIRE(dec.pieces.size() == 1);
}

TEST_CASE("star with a thin centre splits into its edges") {
  Quiver q({"c", "l1", "l2", "l3"}, {{"l1", "c"}, {"l2", "c"}, {"l3", "c"}});
  QuiverSetting s{q, dims_of({1, 2, 2, 2})};
  const auto dec = split_at_thin_cut_vertices(s);
  CHECK(dec.glue_vertices == std::vector<std::string>{"c"});
  REQUIRE(dec.pieces.size() == 3);
  for (const auto& piece : dec.pieces) {
    CHECK(piece.quiver.vertex_count() == 2);
    CHECK(piece.quiver.arrow_count() == 1);
  }
}

TEST_CASE("single vertex splits into itself") {
  QuiverSetting s{Quiver({"a"}, std::vector<Arrow>{}), dims_of({3})};
  const auto dec = split_at_thin_cut_vertices(s);
  REQUIRE(dec.pieces.size() == 1);
  CHECK(dec.glue_vertices.empty());
  CHECK(same_setting(dec.pieces[0], s));
}

TEST_CASE("split refuses non-tree input") {
  QuiverSetting s{Quiver({"1", "2"}, {{"1", "2"}, {"1", "2"}}), dims_of({1, 1})};
  CHECK_THROWS_AS(split_at_thin_cut_vertices(s), std::invalid_argument);
}

TEST_CASE("pieces of a split cover all edges exactly once") {
  // Random thin/thick labelled paths and stars: every original arrow must
  // land in exactly one piece, and every piece vertex set must be connected.
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> dim_pick(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    std::vector<Int> dims(n);
    for (auto& d : dims) d = dim_pick(rng);
    const auto s = linear_chain(dims);
    const auto dec = split_at_thin_cut_vertices(s);

    size_t total_arrows = 0;
    for (const auto& piece : dec.pieces) total_arrows += piece.quiver.arrows().size();
    CHECK(total_arrows == s.quiver.arrows().size());

    for (const auto& piece : dec.pieces) {
      const auto a = underlying_analysis(piece);
      CHECK(a.connected);
      // Dimensions must be carried over unchanged.
      for (int i = 0; i < piece.quiver.vertex_count(); ++i) {
        const int orig = s.quiver.index_of(piece.quiver.vertex_id(i));
        CHECK(piece.dims[i] == s.dims[orig]);
      }
    }
  }
}
