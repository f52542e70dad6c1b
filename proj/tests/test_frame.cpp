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

#include <algorithm>

#include "iapath/frame.hpp"
#include "iapath/generators.hpp"
#include "iapath/search.hpp"
#include "iapath/solver.hpp"
#include "corpus.hpp"

using namespace iapath;

namespace {

void add_run(std::vector<Edge>& e, Vertex from, Vertex first, int count) {
  Vertex prev = from;
  for (int i = 0; i < count; ++i) {
    e.emplace_back(prev, first + i);
    prev = first + i;
  }
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  add_run(e, 0, 1, n - 1);
  return Graph(n, e);
}

// Path 0..8 with a pendant 4-9-10-11-12-13; terminals 0, 8, 13.
struct Pendant {
  Graph g;
  VertexSet a{0, 8, 13};
};

Pendant pendant() {
  std::vector<Edge> e;
  add_run(e, 0, 1, 8);
  add_run(e, 4, 9, 5);
  return {Graph(14, e)};
}

// Path 0..16, pendants 5-17..28 and 11-29..40; terminals the four ends.
struct TwoPendants {
  Graph g;
  VertexSet a{0, 16, 28, 40};
};

TwoPendants two_pendants() {
  std::vector<Edge> e;
  add_run(e, 0, 1, 16);
  add_run(e, 5, 17, 12);
  add_run(e, 11, 29, 12);
  return {Graph(41, e)};
}

Frame grow(const Graph& g, const VertexSet& a, int ell, int* steps = nullptr) {
  auto fr = init_frame(g, a, ell);
  REQUIRE(fr);
  int count = 0;
  while (auto p = find_extension(g, a, *fr)) {
    fr = extend_frame(g, a, *fr, *p);
    ++count;
  }
  if (steps) *steps = count;
  return *fr;
}

int tree_degree(const Frame& fr, Vertex v) {
  int d = 0;
  for (auto [x, y] : fr.tree_edges) d += x == v || y == v;
  return d;
}

bool has_rule(const std::vector<Violation>& vs, const std::string& rule) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.rule == rule; });
}

void check_paths_of(const Graph& f, const std::vector<Path>& paths, const VertexSet& leaves,
                    int ell) {
  for (std::size_t i = 0; i < paths.size(); ++i) {
    CHECK(is_induced_path(f, paths[i]));
    CHECK(paths[i].length() >= ell);
    CHECK(leaves.contains(paths[i].front()));
    CHECK(leaves.contains(paths[i].back()));
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      CHECK(anti_complete(f, paths[i].vertex_set(), paths[j].vertex_set()));
    }
  }
}

}  // namespace

TEST_CASE("init_frame on a bare path") {
  const auto g = path_graph(7);
  const auto fr = init_frame(g, {0, 6}, 3);
  REQUIRE(fr);
  CHECK(fr->f_vertices.size() == 7);
  CHECK(fr->a_f == VertexSet{0, 6});
  CHECK(fr->hubs.empty());
  CHECK(fr->ell_hat == 3);
  CHECK(validate_frame(g, {0, 6}, *fr).empty());
  CHECK_FALSE(init_frame(Graph(3, {}), {0, 1}, 1));
}

TEST_CASE("init_frame on the 9-cycle") {
  const auto c9 = subdivided_complete_instance(2, 1);
  const auto fr = init_frame(c9.graph, c9.terminals, 1);
  REQUIRE(fr);
  CHECK(fr->f_vertices == VertexSet{0, 1, 3, 4});
  CHECK(fr->a_f == VertexSet{0, 1});
  CHECK(validate_frame(c9.graph, c9.terminals, *fr).empty());
}

TEST_CASE("validate_frame flags perturbations") {
  const auto inst = pendant();
  auto fr = grow(inst.g, inst.a, 3);
  REQUIRE(validate_frame(inst.g, inst.a, fr).empty());

  Frame cut = fr;
  const Vertex dropped = cut.y.members().back();
  cut.y = set_difference(cut.y, {dropped});
  const auto v5 = validate_frame(inst.g, inst.a, cut);
  REQUIRE(has_rule(v5, "A5"));
  CHECK(describe(v5).find(std::to_string(dropped)) != std::string::npos);

  Frame fat = fr;
  fat.tree_edges.emplace_back(0, 4);
  std::sort(fat.tree_edges.begin(), fat.tree_edges.end());
  CHECK(has_rule(validate_frame(inst.g, inst.a, fat), "A2"));
}

TEST_CASE("find_extension and extend_frame on one pendant") {
  const auto inst = pendant();
  const auto fr = init_frame(inst.g, inst.a, 3);
  REQUIRE(fr);
  CHECK(fr->f_vertices == VertexSet{0, 1, 2, 3, 4, 5, 6, 7, 8});
  const auto p = find_extension(inst.g, inst.a, *fr);
  REQUIRE(p);
  CHECK(p->vertices == std::vector<Vertex>{13, 12, 11, 10, 9, 4});
  CHECK(check_extension_path(inst.g, inst.a, *fr, *p).empty());
  const auto next = extend_frame(inst.g, inst.a, *fr, *p);
  CHECK(next.leaf_count() == 3);
  CHECK(next.hubs == VertexSet{4});
  CHECK(tree_degree(next, 4) == 3);
  CHECK(next.a_bar.empty());
  CHECK(validate_frame(inst.g, inst.a, next).empty());
  CHECK_FALSE(find_extension(inst.g, inst.a, next));

  const auto ht = frame_to_hub_tree(inst.g, next);
  CHECK(validate_hub_tree(ht).empty());
  const auto paths = extract_hub_tree_paths(ht);
  CHECK(paths.size() == 1);
  check_paths_of(ht.f, paths, ht.leaves, 3);
}

TEST_CASE("no extension when a_bar is empty") {
  const auto g = path_graph(7);
  const auto fr = init_frame(g, {0, 6}, 3);
  REQUIRE(fr);
  CHECK(fr->a_bar.empty());
  CHECK_FALSE(find_extension(g, {0, 6}, *fr));
}

TEST_CASE("no extension when every candidate meets y_tilde") {
  // pendant terminal 8 hangs off 1, which is inside Y
  std::vector<Edge> e;
  add_run(e, 0, 1, 7);
  e.emplace_back(1, 8);
  const Graph g(9, e);
  const VertexSet a{0, 7, 8};
  const auto fr = init_frame(g, a, 3);
  REQUIRE(fr);
  CHECK(fr->f_vertices == VertexSet{0, 1, 2, 3, 4, 5, 6, 7});
  CHECK(fr->y_tilde == VertexSet{8});
  CHECK_FALSE(find_extension(g, a, *fr));
}

TEST_CASE("two far pendants give two hubs") {
  const auto inst = two_pendants();
  int steps = 0;
  const auto fr = grow(inst.g, inst.a, 3, &steps);
  CHECK(steps == 2);
  CHECK(fr.leaf_count() == 4);
  CHECK(fr.hubs == VertexSet{5, 11});
  CHECK(min_hub_distance(inst.g, fr) >= 3);
  CHECK(validate_frame(inst.g, inst.a, fr).empty());

  const auto ht = frame_to_hub_tree(inst.g, fr);
  CHECK(validate_hub_tree(ht).empty());
  auto paths = extract_hub_tree_paths(ht);
  REQUIRE(paths.size() == 2);
  check_paths_of(ht.f, paths, ht.leaves, 3);
  std::vector<std::pair<Vertex, Vertex>> ends;
  for (const auto& p : paths) {
    ends.emplace_back(ht.to_host[p.front()], ht.to_host[p.back()]);
    if (ends.back().first > ends.back().second) std::swap(ends.back().first, ends.back().second);
  }
  std::sort(ends.begin(), ends.end());
  CHECK(ends == std::vector<std::pair<Vertex, Vertex>>{{0, 28}, {16, 40}});
}

TEST_CASE("leaf_paths examples") {
  const auto line = leaf_paths({{0, 1}, {1, 2}, {2, 3}}, {0, 3});
  REQUIRE(line.size() == 1);
  CHECK(line[0].vertices == std::vector<Vertex>{0, 1, 2, 3});

  const auto star = leaf_paths({{0, 1}, {0, 2}, {0, 3}}, {1, 2, 3});
  REQUIRE(star.size() == 1);
  CHECK(star[0].length() == 2);
  CHECK(star[0].vertices[1] == 0);

  // H shape: of the three pairings of the leaves only one is disjoint
  const std::vector<Edge> h{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}};
  const Graph tree(6, h);
  const Vertex leaves[] = {2, 3, 4, 5};
  std::vector<std::vector<Path>> disjoint;
  for (int partner = 1; partner < 4; ++partner) {
    std::vector<Vertex> rest;
    for (int i = 1; i < 4; ++i)
      if (i != partner) rest.push_back(leaves[i]);
    const Path p = *shortest_path(tree, leaves[0], leaves[partner]);
    const Path q = *shortest_path(tree, rest[0], rest[1]);
    if (set_intersection(p.vertex_set(), q.vertex_set()).empty()) disjoint.push_back({p, q});
  }
  REQUIRE(disjoint.size() == 1);
  auto got = leaf_paths(h, {2, 3, 4, 5});
  REQUIRE(got.size() == 2);
  CHECK(got[0].vertex_set() == disjoint[0][0].vertex_set());
  CHECK(got[1].vertex_set() == disjoint[0][1].vertex_set());
}

TEST_CASE("leaf_paths rejects bad trees") {
  CHECK_THROWS_AS(leaf_paths({{0, 1}, {1, 2}, {2, 0}}, {}), std::invalid_argument);
  CHECK_THROWS_AS(leaf_paths({{0, 1}, {0, 2}, {0, 3}, {0, 4}}, {1, 2, 3, 4}),
                  std::invalid_argument);
  CHECK_THROWS_AS(leaf_paths({{0, 1}, {1, 2}}, {0, 1}), std::invalid_argument);
}

TEST_CASE("extract_hub_tree_paths on a bare path") {
  HubTree ht{path_graph(4), {{0, 1}, {1, 2}, {2, 3}}, {0, 3}, {}, 3, {0, 1, 2, 3}};
  REQUIRE(validate_hub_tree(ht).empty());
  const auto paths = extract_hub_tree_paths(ht);
  REQUIRE(paths.size() == 1);
  CHECK(paths[0].vertices == std::vector<Vertex>{0, 1, 2, 3});
}

TEST_CASE("extract_hub_tree_paths reroutes across a chord") {
  // hub 0 with legs 0-1-2-3-4, 0-5-6-7-8, 0-9-10-11-12 and chord 5-9
  std::vector<Edge> tree;
  add_run(tree, 0, 1, 4);
  add_run(tree, 0, 5, 4);
  add_run(tree, 0, 9, 4);
  std::vector<Edge> f_edges = tree;
  f_edges.emplace_back(5, 9);
  std::vector<Vertex> ids(13);
  for (int i = 0; i < 13; ++i) ids[i] = i;
  std::sort(tree.begin(), tree.end());
  HubTree ht{Graph(13, f_edges), tree, {4, 8, 12}, {0}, 3, ids};
  REQUIRE(validate_hub_tree(ht).empty());
  const auto paths = extract_hub_tree_paths(ht);
  REQUIRE(paths.size() == 1);
  CHECK(paths[0].vertices == std::vector<Vertex>{8, 7, 6, 5, 9, 10, 11, 12});
  check_paths_of(ht.f, paths, ht.leaves, 3);
}

TEST_CASE("validate_hub_tree flags a far chord") {
  std::vector<Edge> tree;
  add_run(tree, 0, 1, 4);
  add_run(tree, 0, 5, 4);
  add_run(tree, 0, 9, 4);
  std::vector<Edge> f_edges = tree;
  f_edges.emplace_back(3, 7);
  std::vector<Vertex> ids(13);
  for (int i = 0; i < 13; ++i) ids[i] = i;
  std::sort(tree.begin(), tree.end());
  HubTree ht{Graph(13, f_edges), tree, {4, 8, 12}, {0}, 3, ids};
  CHECK(has_rule(validate_hub_tree(ht), "H7"));
}

TEST_CASE("property: frames stay valid and obey the size claims") {
  int frames_seen = 0;
  int extended = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const int ell = 1 + static_cast<int>(seed % 3);
    const auto inst =
        seed % 2 ? corpus::spider(seed)
                 : random_instance(14, 0.1 + 0.1 * (seed % 3), 0.6, seed);
    SolveOptions options;
    options.on_frame = [&](const Graph& g, const VertexSet& a, const Frame& fr,
                           const std::vector<Vertex>&) {
      ++frames_seen;
      CHECK(validate_frame(g, a, fr).empty());
      const int p = fr.leaf_count();
      extended += p > 2;
      CHECK(static_cast<int>(fr.hubs.size()) == p - 2);
      CHECK(static_cast<long long>(fr.y.size()) <= (4LL * fr.ell_hat + 14) * p);
      const auto ax = set_union(a, fr.hubs);
      CHECK(is_subset(fr.y_tilde,
                      set_intersection(ball(g, fr.y, 1), ball(g, ax, fr.ell_hat + 1))));
      if (const auto ext = find_extension(g, a, fr)) {
        CHECK(check_extension_path(g, a, fr, *ext).empty());
        CHECK(extend_frame(g, a, fr, *ext).leaf_count() == p + 1);
      } else {
        const auto paths = extract_hub_tree_paths(frame_to_hub_tree(g, fr));
        CHECK(static_cast<int>(paths.size()) == p / 2);
      }
    };
    solve(inst.graph, inst.terminals, {3, ell}, options);
  }
  CHECK(frames_seen > 50);
  CHECK(extended > 5);
}

TEST_CASE("property: leaf_paths on random subcubic trees") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 2 + static_cast<int>(seed % 60);
    const auto tree = random_subcubic_tree(n, seed);
    const auto paths = leaf_paths(tree.edges, tree.leaves);
    CHECK(paths.size() == tree.leaves.size() / 2);
    VertexSet used;
    const Graph t(n, tree.edges);
    for (const auto& p : paths) {
      CHECK(is_path(t, p));
      CHECK(tree.leaves.contains(p.front()));
      CHECK(tree.leaves.contains(p.back()));
      CHECK(set_intersection(used, p.vertex_set()).empty());
      used = set_union(used, p.vertex_set());
    }
  }
}
