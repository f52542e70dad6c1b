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

// The packing/covering dichotomy for long induced A-paths.
//
// solve() returns either k pairwise anti-complete induced A-paths of length
// >= ell, or sets Z1, Z2 with
//
//   |Z1| <= (12 * ell_hat + 42) * (k - 1),   |Z2| <= 4 * (k - 1),
//
// such that G - (N[Z1] cap N[Z2, ell_hat + 1]) has no induced A-path of
// length >= ell, where ell_hat = max(ell, 3). At ell = 1 the constants become
// 78 and radius 4.

#ifndef IAPATH_SOLVER_HPP_
#define IAPATH_SOLVER_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <variant>
#include <vector>

#include "iapath/frame.hpp"
#include "iapath/graph.hpp"
#include "iapath/search.hpp"

namespace iapath {

struct SolveParams {
  int k = 1;
  int ell = 1;
  std::uint64_t node_budget = kDefaultNodeBudget;

  int ell_hat() const { return hat(ell); }
};

// Size bounds and the second ball radius of a cover.
inline long long z1_bound(int k, int ell) { return (12LL * hat(ell) + 42) * (k - 1); }
inline long long z2_bound(int k) { return 4LL * (k - 1); }
inline int z2_radius(int ell) { return hat(ell) + 1; }

struct Packing {
  std::vector<Path> paths;
};

struct Cover {
  VertexSet z1;
  VertexSet z2;
  int r1 = 1;
  int r2 = 4;
};

using Certificate = std::variant<Packing, Cover>;

// Called on every frame the solver builds: after initialisation and after
// each extension. The graph is the recursion's current subgraph; to_root maps
// its ids to the caller's ids.
using FrameObserver = std::function<void(const Graph& g, const VertexSet& a, const Frame& fr,
                                         const std::vector<Vertex>& to_root)>;

struct SolveOptions {
  FrameObserver on_frame;
};

// Throws BudgetExceeded when an exact search runs out of nodes and
// std::logic_error when an internal invariant (frame axioms, extension path
// properties, bound arithmetic, separation) fails.
Certificate solve(const Graph& g, const VertexSet& a, const SolveParams& params,
                  const SolveOptions& options = {});

struct TheoremForms {
  bool holds_78_form = false;     // |Z1| bound and G - N[Z1] clean
  bool holds_4balls_form = false;  // |Z2| bound and G - N[Z2, ell_hat+1] clean
};

// Single-set views of a cover. At ell = 1 these are the 78(k-1) radius-1 and
// 4(k-1) radius-4 forms.
TheoremForms check_theorem_forms(const Cover& cover, const Graph& g, const VertexSet& a,
                                 const SolveParams& params);

// G together with its d-th power H and, for every H-edge, a shortest G-path
// realising it.
struct PowerGraphMap {
  Graph base;
  int d = 1;
  Graph powered;
  std::map<Edge, Path> witness;  // keyed (u, v) with u < v, path runs u -> v

  // Witness oriented u -> v.
  Path witness_for(Vertex u, Vertex v) const;
};

PowerGraphMap reduce_to_d3(const Graph& g, int d);

// A G-path with the endpoints of p_h, inside the union of the witness paths
// of p_h's edges.
Path lift_path(const PowerGraphMap& map, const Path& p_h);

}  // namespace iapath

#endif  // IAPATH_SOLVER_HPP_
