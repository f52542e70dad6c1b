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

#ifndef IAPATH_GRAPH_HPP_
#define IAPATH_GRAPH_HPP_

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace iapath {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Distance value meaning "no connecting path".
inline constexpr int kInfinity = std::numeric_limits<int>::max();

// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);

  // Members are the indices i with mask[i] set.
  static VertexSet from_mask(const std::vector<bool>& mask);

  bool contains(Vertex v) const;
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  const std::vector<Vertex>& members() const { return members_; }

  // Membership vector of length n; every member must be < n.
  std::vector<bool> mask(int n) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

VertexSet set_union(const VertexSet& x, const VertexSet& y);
VertexSet set_intersection(const VertexSet& x, const VertexSet& y);
VertexSet set_difference(const VertexSet& x, const VertexSet& y);
bool is_subset(const VertexSet& x, const VertexSet& y);

// Ordered vertex sequence. Validity against a host graph is checked by
// is_path(); the type itself only carries the sequence.
struct Path {
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  VertexSet vertex_set() const { return VertexSet(vertices); }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

// Immutable simple undirected graph on vertices 0..n-1 with sorted adjacency.
class Graph {
 public:
  Graph() = default;
  // Throws std::invalid_argument on self-loops, duplicate edges, or ids
  // outside [0, n).
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const { return edge_count_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;
  bool has_vertex(Vertex v) const { return v >= 0 && v < vertex_count(); }

  // Edges (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

// Graph together with the id translation to the graph it was cut from.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;    // local id -> parent id
  std::vector<Vertex> from_parent;  // parent id -> local id, or -1

  Vertex lift(Vertex local) const { return to_parent[local]; }
  VertexSet lift(const VertexSet& local) const;
  Path lift(const Path& local) const;
  // Members of the parent-space set that survive in the subgraph.
  VertexSet restrict(const VertexSet& parent) const;
};

// Throws std::out_of_range if some member is not a vertex of g.
void require_over(const Graph& g, const VertexSet& x);

// Multi-source BFS distances from x; kInfinity where unreachable.
std::vector<int> bfs_distances(const Graph& g, const VertexSet& x);
std::vector<int> bfs_distances(const Graph& g, Vertex source);

VertexSet ball(const Graph& g, const VertexSet& x, int radius);
int dist(const Graph& g, const VertexSet& x, const VertexSet& y);
bool anti_complete(const Graph& g, const VertexSet& x, const VertexSet& y);

Subgraph induced_subgraph(const Graph& g, const VertexSet& s);
// g - s, i.e. the subgraph induced on the complement of s.
Subgraph delete_vertices(const Graph& g, const VertexSet& s);

// Connected components, each sorted, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

// Nonempty, pairwise distinct, consecutive vertices adjacent.
bool is_path(const Graph& g, const Path& p);
// Precondition: is_path(g, p).
bool is_induced_path(const Graph& g, const Path& p);

// Same vertices; uv is an edge iff 1 <= dist_g(u, v) <= d.
Graph power_graph(const Graph& g, int d);

// Lexicographically smallest shortest path from source to target.
std::optional<Path> shortest_path(const Graph& g, Vertex source, Vertex target);

}  // namespace iapath

#endif  // IAPATH_GRAPH_HPP_
