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

#include "iapath/solver.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace iapath {
namespace {

void require(bool condition, const std::string& what) {
  if (!condition) throw std::logic_error("solver invariant failed: " + what);
}

std::vector<Vertex> compose(const std::vector<Vertex>& to_root, const Subgraph& sub) {
  std::vector<Vertex> out;
  out.reserve(sub.to_parent.size());
  for (Vertex v : sub.to_parent) out.push_back(to_root[v]);
  return out;
}

class Solver {
 public:
  Solver(const SolveParams& params, const SolveOptions& options)
      : params_(params), options_(options) {}

  Certificate run(const Graph& g, const VertexSet& a, int k, const std::vector<Vertex>& to_root) {
    const int ell = params_.ell;
    const int ell_hat = params_.ell_hat();
    if (k <= 0) return Packing{};

    SearchBudget budget(params_.node_budget);
    if (!has_long_induced_apath(g, a, ell, budget)) return empty_cover();
    if (k == 1) return Packing{{*shortest_long_induced_apath(g, a, ell, budget)}};

    // Intermediate lengths first: one such path and its closed neighbourhood
    // either joins a (k-1)-packing of the rest or is charged to the cover.
    if (auto p = find_induced_apath_in_range(g, a, {ell, 2 * ell - 1}, budget)) {
      const auto rest = delete_vertices(g, ball(g, p->vertex_set(), 1));
      auto inner = run(rest.graph, rest.restrict(a), k - 1, compose(to_root, rest));
      if (auto* packing = std::get_if<Packing>(&inner)) {
        Packing out{{*p}};
        for (const Path& q : packing->paths) out.paths.push_back(rest.lift(q));
        require(static_cast<int>(out.paths.size()) == k, "packing size after path step");
        return out;
      }
      const auto& cover = std::get<Cover>(inner);
      Cover out = empty_cover();
      out.z1 = set_union(rest.lift(cover.z1), p->vertex_set());
      out.z2 = set_union(rest.lift(cover.z2), VertexSet{p->front(), p->back()});
      require(static_cast<long long>(out.z1.size()) <= z1_bound(k - 1, ell) + 2LL * ell &&
                  z1_bound(k - 1, ell) + 2LL * ell < z1_bound(k, ell),
              "|Z1| after path step");
      require(static_cast<long long>(out.z2.size()) <= z2_bound(k - 1) + 2 &&
                  z2_bound(k - 1) + 2 < z2_bound(k),
              "|Z2| after path step");
      return out;
    }

    // Every long induced A-path now has length >= 2 * ell: grow a frame.
    auto frame = init_frame(g, a, ell, budget);
    require(frame.has_value(), "a long induced A-path exists but no frame was built");
    observe(g, a, *frame, to_root);
    while (auto ext = find_extension(g, a, *frame)) {
      const int before = frame->leaf_count();
      frame = extend_frame(g, a, *frame, *ext);
      require(frame->leaf_count() == before + 1, "extension adds exactly one leaf");
      observe(g, a, *frame, to_root);
    }

    const int p = frame->leaf_count();
    const int half = p / 2;
    const auto ht = frame_to_hub_tree(g, *frame);
    std::vector<Path> frame_paths;
    for (const Path& q : extract_hub_tree_paths(ht)) {
      Path lifted;
      for (Vertex v : q.vertices) lifted.vertices.push_back(ht.to_host[v]);
      frame_paths.push_back(std::move(lifted));
    }
    std::sort(frame_paths.begin(), frame_paths.end());
    require(static_cast<int>(frame_paths.size()) == half, "hub-tree yields floor(p/2) paths");

    if (half >= k) {
      frame_paths.resize(k);
      return Packing{std::move(frame_paths)};
    }

    // The rest: components of G - y_tilde that hold unused terminals.
    const auto cut = delete_vertices(g, frame->y_tilde);
    const auto a_bar_cut = cut.restrict(frame->a_bar);
    std::vector<Vertex> kept;
    for (const auto& part : components(cut.graph)) {
      if (!set_intersection(part, a_bar_cut).empty()) {
        for (Vertex v : part) kept.push_back(cut.lift(v));
      }
    }
    const VertexSet remainder(std::move(kept));
    const auto rest = induced_subgraph(g, remainder);
    const int k_rest = k - half;
    auto inner = run(rest.graph, rest.restrict(frame->a_bar), k_rest, compose(to_root, rest));

    if (auto* packing = std::get_if<Packing>(&inner)) {
      require(anti_complete(g, remainder, frame->f_vertices), "remainder is anti-complete to F");
      Packing out;
      for (const Path& q : packing->paths) out.paths.push_back(rest.lift(q));
      out.paths.insert(out.paths.end(), frame_paths.begin(), frame_paths.end());
      require(static_cast<int>(out.paths.size()) == k, "packing size after frame step");
      return out;
    }
    const auto& cover = std::get<Cover>(inner);
    Cover out = empty_cover();
    out.z1 = set_union(rest.lift(cover.z1), frame->y);
    out.z2 = set_union(rest.lift(cover.z2), set_union(frame->a_f, frame->hubs));
    const long long y_cap = (4LL * ell_hat + 14) * p;
    require(static_cast<long long>(out.z1.size()) <= z1_bound(k_rest, ell) + y_cap &&
                z1_bound(k_rest, ell) + y_cap <= z1_bound(k, ell),
            "|Z1| after frame step");
    require(static_cast<long long>(out.z2.size()) <= z2_bound(k_rest) + 2LL * p - 2 &&
                z2_bound(k_rest) + 2LL * p - 2 <= z2_bound(k),
            "|Z2| after frame step");
    return out;
  }

 private:
  Cover empty_cover() const {
    Cover c;
    c.r1 = 1;
    c.r2 = z2_radius(params_.ell);
    return c;
  }

  void observe(const Graph& g, const VertexSet& a, const Frame& fr,
               const std::vector<Vertex>& to_root) const {
    const int p = fr.leaf_count();
    require(static_cast<int>(fr.hubs.size()) == p - 2, "|X| = p - 2");
    require(static_cast<long long>(fr.y.size()) <= (4LL * fr.ell_hat + 14) * p,
            "|Y| <= (4 ell_hat + 14) p");
    if (options_.on_frame) options_.on_frame(g, a, fr, to_root);
  }

  const SolveParams& params_;
  const SolveOptions& options_;
};

}  // namespace

Certificate solve(const Graph& g, const VertexSet& a, const SolveParams& params,
                  const SolveOptions& options) {
  require_over(g, a);
  if (params.ell < 1) throw std::invalid_argument("ell must be positive");
  if (params.k < 0) throw std::invalid_argument("k must be nonnegative");
  std::vector<Vertex> identity(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) identity[v] = v;
  return Solver(params, options).run(g, a, params.k, identity);
}

TheoremForms check_theorem_forms(const Cover& cover, const Graph& g, const VertexSet& a,
                                 const SolveParams& params) {
  auto clean_after = [&](const VertexSet& z, int radius) {
    const auto rest = delete_vertices(g, ball(g, z, radius));
    return !has_long_induced_apath(rest.graph, rest.restrict(a), params.ell, params.node_budget);
  };
  TheoremForms out;
  out.holds_78_form = static_cast<long long>(cover.z1.size()) <= z1_bound(params.k, params.ell) &&
                      clean_after(cover.z1, 1);
  out.holds_4balls_form = static_cast<long long>(cover.z2.size()) <= z2_bound(params.k) &&
                          clean_after(cover.z2, z2_radius(params.ell));
  return out;
}

Path PowerGraphMap::witness_for(Vertex u, Vertex v) const {
  if (u < v) return witness.at({u, v});
  Path p = witness.at({v, u});
  std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

PowerGraphMap reduce_to_d3(const Graph& g, int d) {
  PowerGraphMap map;
  map.base = g;
  map.d = d;
  map.powered = power_graph(g, d);
  for (auto [u, v] : map.powered.edges()) {
    map.witness.emplace(Edge{u, v}, *shortest_path(g, u, v));
  }
  return map;
}

Path lift_path(const PowerGraphMap& map, const Path& p_h) {
  if (!is_path(map.powered, p_h)) throw std::invalid_argument("not a path in the power graph");
  std::set<Edge> union_edges;
  for (std::size_t i = 1; i < p_h.vertices.size(); ++i) {
    const Path q = map.witness_for(p_h.vertices[i - 1], p_h.vertices[i]);
    for (std::size_t j = 1; j < q.vertices.size(); ++j) {
      union_edges.insert(std::minmax(q.vertices[j - 1], q.vertices[j]));
    }
  }
  const std::vector<Edge> edges(union_edges.begin(), union_edges.end());
  const Graph walked(map.base.vertex_count(), edges);
  return *shortest_path(walked, p_h.front(), p_h.back());
}

}  // namespace iapath
