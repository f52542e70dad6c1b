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

// A-frames and hub-trees.
//
// An A-frame in a host graph G with terminals A is an induced subgraph F of G
// carrying a spanning subcubic tree T whose leaves are exactly the terminals
// inside F (and exactly the degree-1 vertices of F), together with:
//
//   hubs     the degree-3 vertices of T,
//   y        the vertices of F within F-distance ell_hat of leaves or hubs,
//   y_tilde  N_G[y] minus V(F), the separator towards the rest of G,
//   a_bar    the terminals not yet in F,
//
// where ell_hat = max(ell, 3). The eleven axioms A1..A11 are checked one by
// one in validate_frame(). Frames are grown greedily: find_extension() returns
// a shortest path from a_bar to F avoiding y_tilde, and extend_frame() glues
// it on, turning its F-end into a new hub.
//
// A hub-tree (F, T, leaves, hubs) is the frame stripped to the part needed to
// extract floor(p/2) pairwise anti-complete induced A-paths of length >= ell.

#ifndef IAPATH_FRAME_HPP_
#define IAPATH_FRAME_HPP_

#include <optional>
#include <string>
#include <vector>

#include "iapath/graph.hpp"
#include "iapath/search.hpp"

namespace iapath {

// All ids are host-graph ids. tree_edges are stored with u < v, sorted.
struct Frame {
  VertexSet f_vertices;
  std::vector<Edge> tree_edges;
  VertexSet a_f;
  VertexSet hubs;
  VertexSet y;
  VertexSet y_tilde;
  VertexSet a_bar;
  int ell = 1;
  int ell_hat = 3;

  int leaf_count() const { return static_cast<int>(a_f.size()); }
};

struct Violation {
  std::string rule;     // "A5", "P3", "H7", ...
  std::string witness;  // the offending vertex, edge or pair
};

std::string describe(const std::vector<Violation>& violations);

inline int hat(int ell) { return ell < 3 ? 3 : ell; }

// Recomputes y, y_tilde and a_bar from the other fields.
void recompute_derived(const Graph& g, const VertexSet& a, Frame& fr);

// Empty iff A1..A11 all hold.
std::vector<Violation> validate_frame(const Graph& g, const VertexSet& a, const Frame& fr);

// Smallest F-distance between two distinct hubs, kInfinity with < 2 hubs.
int min_hub_distance(const Graph& g, const Frame& fr);

// Starts a frame on a shortest induced A-path of length >= ell. Requires that
// every such path has length >= 2 * ell; throws std::logic_error if the
// result fails validation.
std::optional<Frame> init_frame(const Graph& g, const VertexSet& a, int ell,
                                SearchBudget& budget);
std::optional<Frame> init_frame(const Graph& g, const VertexSet& a, int ell,
                                std::uint64_t node_budget = kDefaultNodeBudget);

// Checks P1..P7 for an extension path p = (v_0, ..., v_m), plus
// v_m not in hubs or leaves.
std::vector<Violation> check_extension_path(const Graph& g, const VertexSet& a, const Frame& fr,
                                            const Path& p);

// Shortest (a_bar, F)-path in G - y_tilde, smallest start first, then the
// lexicographically smallest walk. Throws std::logic_error if the path
// breaks P1..P7.
std::optional<Path> find_extension(const Graph& g, const VertexSet& a, const Frame& fr);

// Throws std::logic_error if the extended frame fails validation.
Frame extend_frame(const Graph& g, const VertexSet& a, const Frame& fr, const Path& p);

// floor(p/2) pairwise vertex-disjoint leaf-to-leaf paths of a subcubic tree,
// each oriented front < back, sorted. Throws std::invalid_argument if the
// edges do not form a subcubic tree or `leaves` is not its degree-1 set.
std::vector<Path> leaf_paths(const std::vector<Edge>& tree_edges, const VertexSet& leaves);

// Local ids 0..|F|-1; to_host translates back.
struct HubTree {
  Graph f;
  std::vector<Edge> tree_edges;
  VertexSet leaves;
  VertexSet hubs;
  int ell = 1;
  std::vector<Vertex> to_host;
};

std::vector<Violation> validate_hub_tree(const HubTree& ht);

HubTree frame_to_hub_tree(const Graph& g, const Frame& fr);

// floor(p/2) pairwise anti-complete induced leaf-to-leaf paths of F, each of
// length >= ell, in local ids. Throws std::invalid_argument on an H1..H7
// breach.
std::vector<Path> extract_hub_tree_paths(const HubTree& ht);

}  // namespace iapath

#endif  // IAPATH_FRAME_HPP_
