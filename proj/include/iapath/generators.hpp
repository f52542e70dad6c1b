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

#ifndef IAPATH_GENERATORS_HPP_
#define IAPATH_GENERATORS_HPP_

#include <cstdint>
#include <vector>

#include "iapath/graph.hpp"

namespace iapath {

struct Instance {
  Graph graph;
  VertexSet terminals;
};

// K_n with every vertex a terminal.
Instance complete_instance(int n);

// K_{2k-1} with each edge replaced by a path of length 3r. Branch vertices
// are 0..2k-2 and form the terminal set; subdivision vertices follow in
// lexicographic edge order, each run listed from the smaller branch vertex.
Instance subdivided_complete_instance(int k, int r);

// G(n, edge_prob) with each vertex a terminal independently with a_prob.
Instance random_instance(int n, double edge_prob, double a_prob, std::uint64_t seed);

struct RandomTree {
  std::vector<Edge> edges;
  VertexSet leaves;
};

// Vertex i > 0 attaches to a uniformly chosen earlier vertex of degree <= 2.
RandomTree random_subcubic_tree(int n, std::uint64_t seed);

}  // namespace iapath

#endif  // IAPATH_GENERATORS_HPP_
