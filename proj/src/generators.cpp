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

#include "iapath/generators.hpp"

#include <random>
#include <stdexcept>

namespace iapath {

Instance complete_instance(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  std::vector<Edge> edges;
  std::vector<Vertex> all;
  for (Vertex u = 0; u < n; ++u) {
    all.push_back(u);
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return {Graph(n, edges), VertexSet(std::move(all))};
}

Instance subdivided_complete_instance(int k, int r) {
  if (k < 2 || r < 1) throw std::invalid_argument("need k >= 2 and r >= 1");
  const int branch = 2 * k - 1;
  const int inner = 3 * r - 1;
  std::vector<Edge> edges;
  Vertex next = branch;
  for (Vertex u = 0; u < branch; ++u) {
    for (Vertex v = u + 1; v < branch; ++v) {
      Vertex prev = u;
      for (int i = 0; i < inner; ++i) {
        edges.emplace_back(prev, next);
        prev = next++;
      }
      edges.emplace_back(prev, v);
    }
  }
  std::vector<Vertex> terminals;
  for (Vertex u = 0; u < branch; ++u) terminals.push_back(u);
  return {Graph(next, edges), VertexSet(std::move(terminals))};
}

Instance random_instance(int n, double edge_prob, double a_prob, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution has_edge(edge_prob);
  std::bernoulli_distribution is_terminal(a_prob);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (has_edge(rng)) edges.emplace_back(u, v);
    }
  }
  std::vector<Vertex> terminals;
  for (Vertex v = 0; v < n; ++v) {
    if (is_terminal(rng)) terminals.push_back(v);
  }
  return {Graph(n, edges), VertexSet(std::move(terminals))};
}

RandomTree random_subcubic_tree(int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("a tree with leaves needs n >= 2");
  std::mt19937_64 rng(seed);
  std::vector<int> degree(n, 0);
  std::vector<Vertex> open{0};  // vertices of degree <= 2
  RandomTree out;
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
    const std::size_t slot = pick(rng);
    const Vertex u = open[slot];
    out.edges.emplace_back(u, v);
    if (++degree[u] == 3) {
      open[slot] = open.back();
      open.pop_back();
    }
    ++degree[v];
    open.push_back(v);
  }
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push_back(v);
  }
  out.leaves = VertexSet(std::move(leaves));
  return out;
}

}  // namespace iapath
