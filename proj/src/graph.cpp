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

#include "iapath/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <iterator>
#include <queue>
#include <stdexcept>
#include <string>

namespace iapath {

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::from_mask(const std::vector<bool>& mask) {
  VertexSet out;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) out.members_.push_back(static_cast<Vertex>(i));
  }
  return out;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::vector<bool> VertexSet::mask(int n) const {
  std::vector<bool> out(n, false);
  for (Vertex v : members_) out[v] = true;
  return out;
}

VertexSet set_union(const VertexSet& x, const VertexSet& y) {
  std::vector<Vertex> out;
  std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_intersection(const VertexSet& x, const VertexSet& y) {
  std::vector<Vertex> out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                        std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_difference(const VertexSet& x, const VertexSet& y) {
  std::vector<Vertex> out;
  std::set_difference(x.begin(), x.end(), y.begin(), y.end(),
                      std::back_inserter(out));
  return VertexSet(std::move(out));
}

bool is_subset(const VertexSet& x, const VertexSet& y) {
  return std::includes(y.begin(), y.end(), x.begin(), x.end());
}

Graph::Graph(int n, std::span<const Edge> edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  adjacency_.resize(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw std::invalid_argument("edge " + std::to_string(u) + " " +
                                  std::to_string(v) + " out of range");
    }
    if (u == v) {
      throw std::invalid_argument("self-loop at " + std::to_string(u));
    }
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& adj = adjacency_[v];
    std::sort(adj.begin(), adj.end());
    auto dup = std::adjacent_find(adj.begin(), adj.end());
    if (dup != adj.end()) {
      throw std::invalid_argument("duplicate edge " + std::to_string(v) + " " +
                                  std::to_string(*dup));
    }
  }
  edge_count_ = edges.size();
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexSet Subgraph::lift(const VertexSet& local) const {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(to_parent[v]);
  return VertexSet(std::move(out));
}

Path Subgraph::lift(const Path& local) const {
  Path out;
  out.vertices.reserve(local.vertices.size());
  for (Vertex v : local.vertices) out.vertices.push_back(to_parent[v]);
  return out;
}

VertexSet Subgraph::restrict(const VertexSet& parent) const {
  std::vector<Vertex> out;
  for (Vertex v : parent) {
    if (v >= 0 && v < static_cast<Vertex>(from_parent.size()) && from_parent[v] >= 0) {
      out.push_back(from_parent[v]);
    }
  }
  return VertexSet(std::move(out));
}

void require_over(const Graph& g, const VertexSet& x) {
  if (!x.empty() && (x.members().front() < 0 || x.members().back() >= g.vertex_count())) {
    throw std::out_of_range("vertex set is not over a graph with " +
                            std::to_string(g.vertex_count()) + " vertices");
  }
}

std::vector<int> bfs_distances(const Graph& g, const VertexSet& x) {
  require_over(g, x);
  std::vector<int> d(g.vertex_count(), kInfinity);
  std::queue<Vertex> queue;
  for (Vertex v : x) {
    d[v] = 0;
    queue.push(v);
  }
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop();
    for (Vertex w : g.neighbors(u)) {
      if (d[w] == kInfinity) {
        d[w] = d[u] + 1;
        queue.push(w);
      }
    }
  }
  return d;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  return bfs_distances(g, VertexSet{source});
}

VertexSet ball(const Graph& g, const VertexSet& x, int radius) {
  if (radius < 0) throw std::invalid_argument("negative radius");
  const auto d = bfs_distances(g, x);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (d[v] <= radius) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

int dist(const Graph& g, const VertexSet& x, const VertexSet& y) {
  require_over(g, y);
  const auto d = bfs_distances(g, x);
  int best = kInfinity;
  for (Vertex v : y) best = std::min(best, d[v]);
  return best;
}

bool anti_complete(const Graph& g, const VertexSet& x, const VertexSet& y) {
  require_over(g, x);
  require_over(g, y);
  for (Vertex u : x) {
    if (y.contains(u)) return false;
    for (Vertex w : g.neighbors(u)) {
      if (y.contains(w)) return false;
    }
  }
  return true;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  require_over(g, s);
  Subgraph out;
  out.from_parent.assign(g.vertex_count(), -1);
  for (Vertex v : s) {
    out.from_parent[v] = static_cast<Vertex>(out.to_parent.size());
    out.to_parent.push_back(v);
  }
  std::vector<Edge> edges;
  for (Vertex u : s) {
    for (Vertex w : g.neighbors(u)) {
      if (u < w && out.from_parent[w] >= 0) {
        edges.emplace_back(out.from_parent[u], out.from_parent[w]);
      }
    }
  }
  out.graph = Graph(static_cast<int>(s.size()), edges);
  return out;
}

Subgraph delete_vertices(const Graph& g, const VertexSet& s) {
  require_over(g, s);
  std::vector<bool> keep(g.vertex_count(), true);
  for (Vertex v : s) keep[v] = false;
  return induced_subgraph(g, VertexSet::from_mask(keep));
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<int> label(g.vertex_count(), -1);
  std::vector<std::vector<Vertex>> parts;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (label[s] >= 0) continue;
    const int id = static_cast<int>(parts.size());
    parts.emplace_back();
    std::vector<Vertex> stack{s};
    label[s] = id;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      parts[id].push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (label[w] < 0) {
          label[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  std::vector<VertexSet> out;
  out.reserve(parts.size());
  for (auto& part : parts) out.emplace_back(std::move(part));
  return out;
}

bool is_path(const Graph& g, const Path& p) {
  if (p.vertices.empty()) return false;
  std::vector<bool> seen(g.vertex_count(), false);
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    const Vertex v = p.vertices[i];
    if (!g.has_vertex(v) || seen[v]) return false;
    seen[v] = true;
    if (i > 0 && !g.has_edge(p.vertices[i - 1], v)) return false;
  }
  return true;
}

bool is_induced_path(const Graph& g, const Path& p) {
  std::vector<int> position(g.vertex_count(), -1);
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    position[p.vertices[i]] = static_cast<int>(i);
  }
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    for (Vertex w : g.neighbors(p.vertices[i])) {
      const int j = position[w];
      if (j >= 0 && std::abs(j - static_cast<int>(i)) > 1) return false;
    }
  }
  return true;
}

Graph power_graph(const Graph& g, int d) {
  if (d < 1) throw std::invalid_argument("power must be positive");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    const auto du = bfs_distances(g, u);
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      if (du[v] <= d) edges.emplace_back(u, v);
    }
  }
  return Graph(g.vertex_count(), edges);
}

std::optional<Path> shortest_path(const Graph& g, Vertex source, Vertex target) {
  const auto to_target = bfs_distances(g, target);
  if (to_target[source] == kInfinity) return std::nullopt;
  Path p{{source}};
  Vertex cur = source;
  while (cur != target) {
    // Sorted adjacency makes the first descending neighbour the smallest.
    for (Vertex w : g.neighbors(cur)) {
      if (to_target[w] == to_target[cur] - 1) {
        cur = w;
        break;
      }
    }
    p.vertices.push_back(cur);
  }
  return p;
}

}  // namespace iapath
