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

#include "iapath/frame.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace iapath {
namespace {

std::string pair_str(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

std::string set_str(const VertexSet& s) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (Vertex v : s) {
    out << (first ? "" : ",") << v;
    first = false;
  }
  out << "}";
  return out.str();
}

std::vector<std::vector<int>> all_pairs(const Graph& g) {
  std::vector<std::vector<int>> d;
  d.reserve(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) d.push_back(bfs_distances(g, v));
  return d;
}

VertexSet degree_set(const Graph& g, int degree) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == degree) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

std::vector<Edge> normalised(std::vector<Edge> edges) {
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

// Rule names of the tree-shaped axioms, shared between frames and hub-trees.
struct RuleNames {
  const char* tree;        // spanning subcubic tree
  const char* leaves;      // leaves = deg-1 of T = deg-1 of F
  const char* hubs;        // hubs = deg-3 of T
  const char* chords;      // non-tree edges near a hub
  const char* leaf_apart;  // leaves pairwise >= ell apart in F
  const char* hub_apart;   // hubs pairwise >= 3 apart in F
};

constexpr RuleNames kFrameRules{"A2", "A3", "A4", "A8", "A10", "A11"};
constexpr RuleNames kHubTreeRules{"H2", "H3", "H4", "H7", "H5", "H6"};

// Everything about (F, T, leaves, hubs) that frames and hub-trees share.
// f and tree_edges are in local ids. On success `tree` holds T.
// Witnesses name vertices through `names` (local -> display id) when given.
std::vector<Violation> check_hub_structure(const Graph& f, const std::vector<Edge>& tree_edges,
                                           const VertexSet& leaves, const VertexSet& hubs,
                                           int ell, const RuleNames& rules,
                                           const std::vector<Vertex>& names, Graph& tree,
                                           bool& tree_ok) {
  std::vector<Violation> out;
  tree_ok = false;
  const int n = f.vertex_count();
  auto id = [&](Vertex v) { return names.empty() ? v : names[v]; };
  auto pair_str = [&](Vertex u, Vertex v) {
    return "(" + std::to_string(id(u)) + "," + std::to_string(id(v)) + ")";
  };
  auto set_str = [&](const VertexSet& s) {
    std::vector<Vertex> shown;
    for (Vertex v : s) shown.push_back(id(v));
    return iapath::set_str(VertexSet(std::move(shown)));
  };
  for (auto [u, v] : tree_edges) {
    if (!f.has_vertex(u) || !f.has_vertex(v) || !f.has_edge(u, v)) {
      out.push_back({rules.tree, "tree edge " + pair_str(u, v) + " is not an edge of F"});
      return out;
    }
  }
  try {
    tree = Graph(n, tree_edges);
  } catch (const std::invalid_argument& e) {
    out.push_back({rules.tree, e.what()});
    return out;
  }
  if (n == 0 || static_cast<int>(tree.edge_count()) != n - 1 || components(tree).size() != 1) {
    out.push_back({rules.tree, "T is not a spanning tree: " + std::to_string(n) + " vertices, " +
                                   std::to_string(tree.edge_count()) + " edges"});
    return out;
  }
  tree_ok = true;
  for (Vertex v = 0; v < n; ++v) {
    if (tree.degree(v) > 3) {
      out.push_back({rules.tree, "vertex " + std::to_string(id(v)) + " has tree degree " +
                                     std::to_string(tree.degree(v))});
    }
  }
  if (degree_set(tree, 1) != leaves) {
    out.push_back({rules.leaves, "degree-1 vertices of T " + set_str(degree_set(tree, 1)) +
                                     " differ from leaves " + set_str(leaves)});
  }
  if (degree_set(f, 1) != leaves) {
    out.push_back({rules.leaves, "degree-1 vertices of F " + set_str(degree_set(f, 1)) +
                                     " differ from leaves " + set_str(leaves)});
  }
  if (degree_set(tree, 3) != hubs) {
    out.push_back({rules.hubs, "degree-3 vertices of T " + set_str(degree_set(tree, 3)) +
                                   " differ from hubs " + set_str(hubs)});
  }
  const auto dt = all_pairs(tree);
  for (auto [u, v] : f.edges()) {
    if (tree.has_edge(u, v)) continue;
    const bool near_hub = std::any_of(hubs.begin(), hubs.end(), [&](Vertex x) {
      return dt[u][x] <= 2 && dt[v][x] <= 2;
    });
    if (!near_hub) out.push_back({rules.chords, "non-tree edge " + pair_str(u, v)});
  }
  const auto df = all_pairs(f);
  for (Vertex x : leaves) {
    for (Vertex y : leaves) {
      if (x < y && df[x][y] < ell) {
        out.push_back({rules.leaf_apart, "leaves " + pair_str(x, y) + " at distance " +
                                             std::to_string(df[x][y])});
      }
    }
  }
  for (Vertex x : hubs) {
    for (Vertex y : hubs) {
      if (x < y && df[x][y] < 3) {
        out.push_back({rules.hub_apart, "hubs " + pair_str(x, y) + " at distance " +
                                            std::to_string(df[x][y])});
      }
    }
  }
  return out;
}

std::vector<Edge> to_local(const Subgraph& sub, const std::vector<Edge>& edges, bool& ok) {
  std::vector<Edge> out;
  ok = true;
  for (auto [u, v] : edges) {
    const bool inside = u >= 0 && v >= 0 && u < static_cast<int>(sub.from_parent.size()) &&
                        v < static_cast<int>(sub.from_parent.size()) &&
                        sub.from_parent[u] >= 0 && sub.from_parent[v] >= 0;
    if (!inside) {
      ok = false;
      continue;
    }
    out.emplace_back(sub.from_parent[u], sub.from_parent[v]);
  }
  return out;
}

void compare_sets(const char* rule, const char* name, const VertexSet& stored,
                  const VertexSet& expected, std::vector<Violation>& out) {
  for (Vertex v : set_difference(expected, stored)) {
    out.push_back({rule, std::string(name) + " is missing vertex " + std::to_string(v)});
  }
  for (Vertex v : set_difference(stored, expected)) {
    out.push_back({rule, std::string(name) + " has extra vertex " + std::to_string(v)});
  }
}

VertexSet compute_y(const Graph& g, const Frame& fr) {
  const auto sub = induced_subgraph(g, fr.f_vertices);
  const auto d = bfs_distances(sub.graph, sub.restrict(set_union(fr.a_f, fr.hubs)));
  std::vector<Vertex> out;
  for (Vertex v = 0; v < sub.graph.vertex_count(); ++v) {
    if (d[v] <= fr.ell_hat) out.push_back(sub.lift(v));
  }
  return VertexSet(std::move(out));
}

VertexSet compute_y_tilde(const Graph& g, const Frame& fr) {
  return set_difference(ball(g, fr.y, 1), fr.f_vertices);
}

std::vector<Edge> path_edges(const Path& p) {
  std::vector<Edge> out;
  for (std::size_t i = 1; i < p.vertices.size(); ++i) {
    out.emplace_back(p.vertices[i - 1], p.vertices[i]);
  }
  return normalised(std::move(out));
}

}  // namespace

std::string describe(const std::vector<Violation>& violations) {
  std::ostringstream out;
  for (const auto& v : violations) out << v.rule << ": " << v.witness << "\n";
  return out.str();
}

void recompute_derived(const Graph& g, const VertexSet& a, Frame& fr) {
  fr.ell_hat = hat(fr.ell);
  fr.y = compute_y(g, fr);
  fr.y_tilde = compute_y_tilde(g, fr);
  fr.a_bar = set_difference(a, fr.a_f);
}

std::vector<Violation> validate_frame(const Graph& g, const VertexSet& a, const Frame& fr) {
  std::vector<Violation> out;
  for (const VertexSet* s : {&fr.f_vertices, &fr.a_f, &fr.hubs, &fr.y, &fr.y_tilde, &fr.a_bar}) {
    if (!s->empty() && (s->members().front() < 0 || s->members().back() >= g.vertex_count())) {
      out.push_back({"A1", "vertex set " + set_str(*s) + " is not over the host graph"});
      return out;
    }
  }
  if (fr.f_vertices.empty()) {
    out.push_back({"A1", "F is empty"});
    return out;
  }
  if (fr.ell_hat != hat(fr.ell)) {
    out.push_back({"A5", "ell_hat " + std::to_string(fr.ell_hat) + " != max(ell, 3)"});
  }
  const auto sub = induced_subgraph(g, fr.f_vertices);
  bool inside = true;
  const auto local_tree = to_local(sub, fr.tree_edges, inside);
  if (!inside) {
    out.push_back({"A2", "tree edge leaves V(F)"});
    return out;
  }
  if (!is_subset(fr.a_f, fr.f_vertices) || !is_subset(fr.hubs, fr.f_vertices)) {
    out.push_back({"A3", "leaves or hubs outside V(F)"});
    return out;
  }
  Graph tree;
  bool tree_ok = false;
  auto structural = check_hub_structure(sub.graph, local_tree, sub.restrict(fr.a_f),
                                        sub.restrict(fr.hubs), fr.ell, kFrameRules,
                                        sub.to_parent, tree, tree_ok);
  out.insert(out.end(), structural.begin(), structural.end());
  if (!tree_ok) return out;

  compare_sets("A3", "A cap V(F) vs a_f", fr.a_f, set_intersection(a, fr.f_vertices), out);
  compare_sets("A5", "y", fr.y, compute_y(g, fr), out);
  compare_sets("A6", "y_tilde", fr.y_tilde, set_difference(ball(g, fr.y, 1), fr.f_vertices), out);
  compare_sets("A7", "a_bar", fr.a_bar, set_difference(a, fr.a_f), out);

  // A9: outside F and y_tilde, F-neighbours are pairwise within T-distance 2.
  const auto dt = all_pairs(tree);
  const auto in_f = fr.f_vertices.mask(g.vertex_count());
  const auto in_yt = fr.y_tilde.mask(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (in_f[v] || in_yt[v]) continue;
    std::vector<Vertex> touching;
    for (Vertex w : g.neighbors(v)) {
      if (in_f[w]) touching.push_back(sub.from_parent[w]);
    }
    for (std::size_t i = 0; i < touching.size(); ++i) {
      for (std::size_t j = i + 1; j < touching.size(); ++j) {
        if (dt[touching[i]][touching[j]] > 2) {
          out.push_back({"A9", "vertex " + std::to_string(v) + " sees " +
                                   pair_str(sub.lift(touching[i]), sub.lift(touching[j])) +
                                   " at tree distance " +
                                   std::to_string(dt[touching[i]][touching[j]])});
        }
      }
    }
  }
  return out;
}

int min_hub_distance(const Graph& g, const Frame& fr) {
  const auto sub = induced_subgraph(g, fr.f_vertices);
  const auto hubs = sub.restrict(fr.hubs);
  int best = kInfinity;
  for (Vertex x : hubs) {
    const auto d = bfs_distances(sub.graph, x);
    for (Vertex y : hubs) {
      if (y != x) best = std::min(best, d[y]);
    }
  }
  return best;
}

std::optional<Frame> init_frame(const Graph& g, const VertexSet& a, int ell,
                                SearchBudget& budget) {
  auto p = shortest_long_induced_apath(g, a, ell, budget);
  if (!p) return std::nullopt;
  Frame fr;
  fr.ell = ell;
  fr.f_vertices = p->vertex_set();
  fr.tree_edges = path_edges(*p);
  fr.a_f = VertexSet{p->front(), p->back()};
  recompute_derived(g, a, fr);
  if (auto bad = validate_frame(g, a, fr); !bad.empty()) {
    throw std::logic_error("initial frame is invalid (is every long induced A-path of length "
                           ">= 2*ell?):\n" + describe(bad));
  }
  return fr;
}

std::optional<Frame> init_frame(const Graph& g, const VertexSet& a, int ell,
                                std::uint64_t node_budget) {
  SearchBudget budget(node_budget);
  return init_frame(g, a, ell, budget);
}

std::vector<Violation> check_extension_path(const Graph& g, const VertexSet& /*a*/, const Frame& fr,
                                            const Path& p) {
  std::vector<Violation> out;
  if (!is_path(g, p) || p.length() < 1) {
    out.push_back({"P2", "not a path of positive length in G"});
    return out;
  }
  const int n = g.vertex_count();
  const int m = p.length();
  const auto& v = p.vertices;
  const auto in_f = fr.f_vertices.mask(n);
  const auto in_yt = fr.y_tilde.mask(n);
  const auto in_y = fr.y.mask(n);
  const auto in_abar = fr.a_bar.mask(n);
  std::vector<int> index(n, -1);
  for (int i = 0; i <= m; ++i) index[v[i]] = i;

  for (int i = 0; i <= m; ++i) {
    if (in_abar[v[i]] != (i == 0)) {
      out.push_back({"P1", "a_bar meets the path at position " + std::to_string(i)});
    }
    if (in_f[v[i]] != (i == m)) {
      out.push_back({"P5", "V(F) meets the path at position " + std::to_string(i)});
    }
    if (in_y[v[i]] || in_yt[v[i]]) {
      out.push_back({"P4", "path vertex " + std::to_string(v[i]) + " lies in y or y_tilde"});
    }
  }
  if (!is_induced_path(g, p)) out.push_back({"P2", "path has a chord"});
  for (int i = 0; i + 2 <= m; ++i) {
    for (Vertex w : g.neighbors(v[i])) {
      if (in_f[w]) {
        out.push_back({"P3", "path vertex " + std::to_string(v[i]) + " sees F at " +
                                 std::to_string(w)});
      }
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    if (in_f[u] || in_yt[u] || index[u] >= 0) continue;
    int lo = kInfinity;
    int hi = -1;
    bool sees_f = false;
    bool sees_far = false;
    for (Vertex w : g.neighbors(u)) {
      if (index[w] >= 0) {
        lo = std::min(lo, index[w]);
        hi = std::max(hi, index[w]);
        if (index[w] < m - 2) sees_far = true;
      }
      if (in_f[w]) sees_f = true;
    }
    if (hi >= 0 && hi - lo > 2) {
      out.push_back({"P6", "vertex " + std::to_string(u) + " sees path positions " +
                               pair_str(lo, hi)});
    }
    if (sees_f && sees_far) {
      out.push_back({"P7", "vertex " + std::to_string(u) + " sees F and the far part of the path"});
    }
  }
  if (fr.hubs.contains(p.back()) || fr.a_f.contains(p.back())) {
    out.push_back({"P4", "attachment vertex " + std::to_string(p.back()) + " is a hub or leaf"});
  }
  return out;
}

std::optional<Path> find_extension(const Graph& g, const VertexSet& a, const Frame& fr) {
  const int n = g.vertex_count();
  const auto in_f = fr.f_vertices.mask(n);
  const auto blocked = fr.y_tilde.mask(n);
  // Distance to F in G - y_tilde.
  std::vector<int> d(n, kInfinity);
  std::queue<Vertex> queue;
  for (Vertex v : fr.f_vertices) {
    d[v] = 0;
    queue.push(v);
  }
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop();
    for (Vertex w : g.neighbors(u)) {
      if (blocked[w] || in_f[w] || d[w] != kInfinity) continue;
      d[w] = d[u] + 1;
      queue.push(w);
    }
  }
  Vertex start = -1;
  for (Vertex v : fr.a_bar) {
    if (blocked[v] || d[v] == kInfinity) continue;
    if (start < 0 || d[v] < d[start]) start = v;
  }
  if (start < 0) return std::nullopt;
  Path p{{start}};
  Vertex cur = start;
  while (d[cur] > 0) {
    for (Vertex w : g.neighbors(cur)) {
      if (!blocked[w] && d[w] == d[cur] - 1) {
        cur = w;
        break;
      }
    }
    p.vertices.push_back(cur);
  }
  if (auto bad = check_extension_path(g, a, fr, p); !bad.empty()) {
    throw std::logic_error("extension path breaks P1..P7:\n" + describe(bad));
  }
  return p;
}

Frame extend_frame(const Graph& g, const VertexSet& a, const Frame& fr, const Path& p) {
  Frame next;
  next.ell = fr.ell;
  next.f_vertices = set_union(fr.f_vertices, p.vertex_set());
  next.tree_edges = fr.tree_edges;
  const auto added = path_edges(p);
  next.tree_edges.insert(next.tree_edges.end(), added.begin(), added.end());
  next.tree_edges = normalised(std::move(next.tree_edges));
  next.a_f = set_union(fr.a_f, VertexSet{p.front()});
  next.hubs = set_union(fr.hubs, VertexSet{p.back()});
  recompute_derived(g, a, next);
  if (auto bad = validate_frame(g, a, next); !bad.empty()) {
    throw std::logic_error("extended frame is invalid:\n" + describe(bad));
  }
  return next;
}

std::vector<Path> leaf_paths(const std::vector<Edge>& tree_edges, const VertexSet& leaves) {
  std::vector<Vertex> ids;
  for (auto [u, v] : tree_edges) {
    ids.push_back(u);
    ids.push_back(v);
  }
  const VertexSet vertices(std::move(ids));
  const auto& host = vertices.members();
  auto local = [&](Vertex v) {
    return static_cast<Vertex>(std::lower_bound(host.begin(), host.end(), v) - host.begin());
  };
  std::vector<Edge> edges;
  for (auto [u, v] : tree_edges) edges.emplace_back(local(u), local(v));
  const int n = static_cast<int>(host.size());
  const Graph tree(n, edges);  // rejects loops and duplicates
  if (n < 2 || static_cast<int>(tree.edge_count()) != n - 1 || components(tree).size() != 1) {
    throw std::invalid_argument("leaf_paths needs a tree with at least one edge");
  }
  std::vector<Vertex> degree_one;
  for (Vertex v = 0; v < n; ++v) {
    if (tree.degree(v) > 3) throw std::invalid_argument("tree is not subcubic");
    if (tree.degree(v) == 1) degree_one.push_back(host[v]);
  }
  if (VertexSet(degree_one) != leaves) {
    throw std::invalid_argument("leaves must be exactly the degree-1 vertices of the tree");
  }

  // Root at the smallest leaf and pair leaves bottom-up: the first vertex
  // reached by two unmatched leaf chains is the deepest common ancestor of
  // two leaves with no other leaf between them, so pairing there removes
  // exactly two leaves and strands at most one overall.
  const Vertex root = local(leaves.members().front());
  std::vector<Vertex> parent(n, -1);
  std::vector<Vertex> order{root};
  parent[root] = root;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : tree.neighbors(order[i])) {
      if (parent[w] < 0) {
        parent[w] = order[i];
        order.push_back(w);
      }
    }
  }
  std::vector<std::vector<Vertex>> chain(n);  // unmatched leaf ... v, host ids
  std::vector<Path> out;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    std::vector<const std::vector<Vertex>*> open;
    for (Vertex w : tree.neighbors(v)) {
      if (w != parent[v] && !chain[w].empty()) open.push_back(&chain[w]);
    }
    if (v == root) {
      if (!open.empty()) {
        Path p{*open.front()};
        p.vertices.push_back(host[v]);
        out.push_back(std::move(p));
      }
    } else if (open.size() == 2) {
      Path p{*open[0]};
      p.vertices.push_back(host[v]);
      p.vertices.insert(p.vertices.end(), open[1]->rbegin(), open[1]->rend());
      out.push_back(std::move(p));
    } else if (open.size() == 1) {
      chain[v] = *open.front();
      chain[v].push_back(host[v]);
    } else if (tree.degree(v) == 1) {
      chain[v] = {host[v]};
    }
  }
  for (Path& p : out) {
    if (p.front() > p.back()) std::reverse(p.vertices.begin(), p.vertices.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Violation> validate_hub_tree(const HubTree& ht) {
  Graph tree;
  bool tree_ok = false;
  return check_hub_structure(ht.f, normalised(ht.tree_edges), ht.leaves, ht.hubs, ht.ell,
                             kHubTreeRules, {}, tree, tree_ok);
}

HubTree frame_to_hub_tree(const Graph& g, const Frame& fr) {
  auto sub = induced_subgraph(g, fr.f_vertices);
  HubTree ht;
  bool inside = true;
  ht.tree_edges = normalised(to_local(sub, fr.tree_edges, inside));
  if (!inside) throw std::invalid_argument("frame tree edge leaves V(F)");
  ht.leaves = sub.restrict(fr.a_f);
  ht.hubs = sub.restrict(fr.hubs);
  ht.ell = fr.ell;
  ht.to_host = sub.to_parent;
  ht.f = std::move(sub.graph);
  return ht;
}

std::vector<Path> extract_hub_tree_paths(const HubTree& ht) {
  if (auto bad = validate_hub_tree(ht); !bad.empty()) {
    throw std::invalid_argument("not a hub-tree:\n" + describe(bad));
  }
  std::vector<Path> out;
  for (const Path& tree_path : leaf_paths(ht.tree_edges, ht.leaves)) {
    // Vertex-minimal re-routing inside F[V(tree_path)].
    const auto span = induced_subgraph(ht.f, tree_path.vertex_set());
    auto shortcut = shortest_path(span.graph, span.from_parent[tree_path.front()],
                                  span.from_parent[tree_path.back()]);
    out.push_back(span.lift(*shortcut));
  }
  std::sort(out.begin(), out.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!is_induced_path(ht.f, out[i]) || out[i].length() < ht.ell) {
      throw std::logic_error("hub-tree path is not induced or too short");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (!anti_complete(ht.f, out[i].vertex_set(), out[j].vertex_set())) {
        throw std::logic_error("hub-tree paths are not anti-complete");
      }
    }
  }
  return out;
}

}  // namespace iapath
