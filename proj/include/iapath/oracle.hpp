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

// Brute-force ground truth for small instances (roughly 14 vertices or fewer
// for the induced oracles, 9 or fewer for the classical ones). All oracles
// use 64-bit vertex masks and reject larger graphs.

#ifndef IAPATH_ORACLE_HPP_
#define IAPATH_ORACLE_HPP_

#include <cstdint>
#include <vector>

#include "iapath/graph.hpp"
#include "iapath/search.hpp"

namespace iapath {

struct PackingOracleResult {
  int value = 0;
  std::vector<Path> witness;
};

struct CoverOracleResult {
  int size = 0;
  VertexSet z;
};

// Largest m <= cap such that g holds m pairwise anti-complete induced
// A-paths of length >= ell.
PackingOracleResult oracle_max_anticomplete_packing(const Graph& g, const VertexSet& a, int ell,
                                                    int cap,
                                                    std::uint64_t node_budget = kDefaultNodeBudget);

// Minimum Z such that g - ball(g, Z, radius) has no induced A-path of
// length >= ell. Subsets are tried in increasing size, lexicographically.
CoverOracleResult oracle_min_ball_cover(const Graph& g, const VertexSet& a, int ell, int radius,
                                        std::uint64_t node_budget = kDefaultNodeBudget);

// Classical setting: maximum number of pairwise vertex-disjoint (not
// necessarily induced) A-paths.
PackingOracleResult oracle_max_disjoint_apaths(const Graph& g, const VertexSet& a,
                                               std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace iapath

#endif  // IAPATH_ORACLE_HPP_
