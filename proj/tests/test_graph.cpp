// Copyright 2026 The iapath Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doctest.h"

#include <stdexcept>

#include "brute.hpp"
#include "iapath/generators.hpp"
#include "iapath/graph.hpp"

using namespace iapath;

namespace {

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

VertexSet all_of(int n) {
  std::vector<Vertex> v;
  for (int i = 0; i < n; ++i) v.push_back(i);
  return VertexSet(v);
}

}  // namespace

TEST_CASE("graph construction rejects bad input") {
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
  const Graph g(3, {{2, 0}, {1, 0}});
  CHECK(g.neighbors(0) == std::vector<Vertex>{1, 2});
  CHECK(g.has_edge(2, 0));
  CHECK_FALSE(g.has_edge(1, 2));
  CHECK(g.edge_count() == 2);
}

TEST_CASE("ball") {
  const auto k5 = complete_instance(5).graph;
  CHECK(ball(k5, {0}, 1) == all_of(5));
  CHECK(ball(path_graph(5), {0}, 2) == VertexSet{0, 1, 2});
  CHECK(ball(cycle(7), {2, 5}, 0) == VertexSet{2, 5});
  CHECK(ball(k5, {}, 3).empty());
}

TEST_CASE("dist") {
  const auto p = path_graph(4);
  CHECK(dist(p, {0}, {3}) == 3);
  CHECK(dist(p, {0}, {0}) == 0);
  CHECK(dist(Graph(2, {}), {0}, {1}) == kInfinity);
}

TEST_CASE("anti_complete") {
  CHECK(anti_complete(path_graph(5), {0}, {4}));
  CHECK_FALSE(anti_complete(path_graph(3), {0}, {1}));
  CHECK_FALSE(anti_complete(path_graph(3), {0}, {0}));
  CHECK(anti_complete(path_graph(3), {0}, {2}));
}

TEST_CASE("induced_subgraph") {
  const auto k4 = complete_instance(4).graph;
  const auto s = induced_subgraph(k4, {0, 1, 2});
  CHECK(s.graph == complete_instance(3).graph);
  CHECK(induced_subgraph(k4, {}).graph.vertex_count() == 0);
  const auto arc = induced_subgraph(cycle(5), {1, 2, 3});
  CHECK(arc.graph.edge_count() == 2);
  CHECK(arc.lift(Path{{0, 1, 2}}) == Path{{1, 2, 3}});
  CHECK(arc.restrict({0, 2, 4}) == VertexSet{1});
  CHECK(arc.from_parent[0] == -1);
}

TEST_CASE("components are ordered by smallest member") {
  const Graph g(6, {{4, 5}, {0, 3}, {1, 2}});
  const auto c = components(g);
  REQUIRE(c.size() == 3);
  CHECK(c[0] == VertexSet{0, 3});
  CHECK(c[1] == VertexSet{1, 2});
  CHECK(c[2] == VertexSet{4, 5});
}

TEST_CASE("is_induced_path") {
  const auto k3 = complete_instance(3).graph;
  CHECK_FALSE(is_induced_path(k3, Path{{0, 1, 2}}));
  CHECK(is_induced_path(k3, Path{{0, 1}}));
  const auto c = cycle(8);
  CHECK(is_induced_path(c, *shortest_path(c, 1, 5)));
  CHECK_FALSE(is_path(c, Path{{0, 2}}));
  CHECK_FALSE(is_path(c, Path{{0, 1, 0}}));
}

TEST_CASE("power_graph examples") {
  const auto c9 = cycle(9);
  CHECK(power_graph(c9, 1) == c9);
  const auto h = power_graph(c9, 3);
  const auto d = brute::distances(c9);
  for (int v = 0; v < 9; ++v) {
    int expected = 0;
    for (int u = 0; u < 9; ++u) expected += d[v][u] >= 1 && d[v][u] <= 3;
    CHECK(expected == 6);
    CHECK(h.degree(v) == expected);
  }
  CHECK(power_graph(path_graph(5), 4) == complete_instance(5).graph);
}

TEST_CASE("shortest_path is lexicographically smallest") {
  const auto c6 = cycle(6);
  CHECK(shortest_path(c6, 0, 3)->vertices == std::vector<Vertex>{0, 1, 2, 3});
  CHECK_FALSE(shortest_path(Graph(2, {}), 0, 1).has_value());
  CHECK(shortest_path(c6, 4, 4)->vertices == std::vector<Vertex>{4});
}

TEST_CASE("property: ball monotone and layered") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto inst = random_instance(12, 0.2, 0.4, seed);
    const auto& g = inst.graph;
    const auto& x = inst.terminals;
    VertexSet prev = x;
    CHECK(ball(g, x, 0) == x);
    for (int r = 1; r <= 5; ++r) {
      const auto b = ball(g, x, r);
      CHECK(is_subset(prev, b));
      CHECK(b == ball(g, prev, 1));
      prev = b;
    }
  }
}

TEST_CASE("property: anti_complete matches closed neighbourhood form") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = random_instance(10, 0.25, 0.0, seed).graph;
    const auto x = random_instance(10, 0.0, 0.3, seed + 100).terminals;
    const auto y = random_instance(10, 0.0, 0.3, seed + 200).terminals;
    const bool expected =
        set_intersection(x, y).empty() && set_intersection(ball(g, x, 1), y).empty();
    CHECK(anti_complete(g, x, y) == expected);
  }
}

TEST_CASE("property: induced subgraph edge count") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = random_instance(11, 0.35, 0.0, seed).graph;
    const auto s = random_instance(11, 0.0, 0.5, seed + 7).terminals;
    std::size_t inside = 0;
    for (auto [u, v] : g.edges()) inside += s.contains(u) && s.contains(v);
    CHECK(induced_subgraph(g, s).graph.edge_count() == inside);
  }
}

TEST_CASE("property: power graph contracts distances by d") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = random_instance(12, 0.18, 0.0, seed).graph;
    const auto dg = brute::distances(g);
    for (int d = 1; d <= 4; ++d) {
      const auto dh = brute::distances(power_graph(g, d));
      for (int u = 0; u < 12; ++u) {
        for (int v = 0; v < 12; ++v) {
          if (dg[u][v] < 0) {
            CHECK(dh[u][v] == -1);
          } else {
            CHECK(dh[u][v] == (dg[u][v] + d - 1) / d);
          }
        }
      }
    }
  }
}
