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

#include "iapath/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <unordered_map>

namespace iapath {
namespace {

using Mask = std::uint64_t;

void require_mask_sized(const Graph& g) {
  if (g.vertex_count() > 64) {
    throw std::invalid_argument("brute-force oracles are limited to 64 vertices");
  }
}

Mask bit(Vertex v) { return Mask{1} << v; }

Mask mask_of(const std::vector<Vertex>& vs) {
  Mask m = 0;
  for (Vertex v : vs) m |= bit(v);
  return m;
}

Mask closed_neighbourhood(const Graph& g, Mask m) {
  Mask out = m;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (m & bit(v)) {
      for (Vertex w : g.neighbors(v)) out |= bit(w);
    }
  }
  return out;
}

struct Candidate {
  Mask vertices;
  Mask closed;
  Path path;
};

class PackingSearch {
 public:
  PackingSearch(std::vector<Candidate> candidates, int cap, SearchBudget& budget)
      : candidates_(std::move(candidates)), cap_(cap), budget_(budget) {}

  PackingOracleResult run() {
    descend(0, 0);
    PackingOracleResult out;
    out.value = static_cast<int>(best_.size());
    for (std::size_t i : best_) out.witness.push_back(candidates_[i].path);
    return out;
  }

 private:
  // Returns true once the cap is reached.
  bool descend(std::size_t next, Mask blocked) {
    budget_.charge();
    if (chosen_.size() > best_.size()) best_ = chosen_;
    if (static_cast<int>(best_.size()) >= cap_) return true;
    for (std::size_t i = next; i < candidates_.size(); ++i) {
      if (chosen_.size() + (candidates_.size() - i) <= best_.size()) return false;
      const Candidate& c = candidates_[i];
      if (c.vertices & blocked) continue;
      chosen_.push_back(i);
      const bool done = descend(i + 1, blocked | c.closed);
      chosen_.pop_back();
      if (done) return true;
    }
    return false;
  }

  std::vector<Candidate> candidates_;
  int cap_;
  SearchBudget& budget_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_;
};

bool cover_works(const Graph& g, const VertexSet& a, int ell, int radius, const VertexSet& z,
                 SearchBudget& budget) {
  const auto rest = delete_vertices(g, ball(g, z, radius));
  return !has_long_induced_apath(rest.graph, rest.restrict(a), ell, budget);
}

// Classical disjoint A-path packing by memoised search over used-vertex
// masks. Only A-paths whose interior avoids A are considered; any A-path
// contains one, so the optimum is unchanged.
class DisjointSearch {
 public:
  DisjointSearch(const Graph& g, Mask terminals, SearchBudget& budget)
      : g_(g), terminals_(terminals), budget_(budget) {}

  int value(Mask used) {
    const Mask open = terminals_ & ~used;
    if (std::popcount(open) < 2) return 0;
    if (auto it = memo_.find(used); it != memo_.end()) return it->second.value;
    budget_.charge();
    const Vertex s = std::countr_zero(open);
    Entry best{value(used | bit(s)), std::nullopt};
    std::vector<Vertex> walk{s};
    for_each_path(s, used | bit(s), walk, [&](const std::vector<Vertex>& p) {
      const int v = 1 + value(used | mask_of(p));
      if (v > best.value) best = Entry{v, Path{p}};
    });
    memo_[used] = best;
    return best.value;
  }

  std::vector<Path> witness(Mask used) {
    std::vector<Path> out;
    while (std::popcount(terminals_ & ~used) >= 2) {
      value(used);
      const Entry& e = memo_.at(used);
      if (e.first_path) {
        out.push_back(*e.first_path);
        used |= mask_of(e.first_path->vertices);
      } else {
        used |= bit(std::countr_zero(terminals_ & ~used));
      }
    }
    return out;
  }

 private:
  struct Entry {
    int value;
    std::optional<Path> first_path;
  };

  template <class Emit>
  void for_each_path(Vertex end, Mask used, std::vector<Vertex>& walk, Emit&& emit) {
    for (Vertex w : g_.neighbors(end)) {
      if (used & bit(w)) continue;
      budget_.charge();
      walk.push_back(w);
      if (terminals_ & bit(w)) {
        emit(walk);
      } else {
        for_each_path(w, used | bit(w), walk, emit);
      }
      walk.pop_back();
    }
  }

  const Graph& g_;
  Mask terminals_;
  SearchBudget& budget_;
  std::unordered_map<Mask, Entry> memo_;
};

}  // namespace

PackingOracleResult oracle_max_anticomplete_packing(const Graph& g, const VertexSet& a, int ell,
                                                    int cap, std::uint64_t node_budget) {
  require_mask_sized(g);
  if (cap < 1) throw std::invalid_argument("cap must be positive");
  SearchBudget budget(node_budget);
  // Anti-completeness depends only on the vertex set, so keep one path per set.
  std::map<Mask, Path> by_mask;
  for (Path& p : enumerate_induced_apaths(g, a, {ell, std::nullopt}, budget)) {
    by_mask.try_emplace(mask_of(p.vertices), std::move(p));
  }
  std::vector<Candidate> candidates;
  for (auto& [m, p] : by_mask) {
    candidates.push_back({m, closed_neighbourhood(g, m), std::move(p)});
  }
  std::stable_sort(candidates.begin(), candidates.end(), [](const auto& x, const auto& y) {
    return std::popcount(x.vertices) < std::popcount(y.vertices);
  });
  return PackingSearch(std::move(candidates), cap, budget).run();
}

CoverOracleResult oracle_min_ball_cover(const Graph& g, const VertexSet& a, int ell, int radius,
                                        std::uint64_t node_budget) {
  require_mask_sized(g);
  require_over(g, a);
  if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
  SearchBudget budget(node_budget);
  const int n = g.vertex_count();
  for (int size = 0; size <= n; ++size) {
    std::vector<Vertex> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      budget.charge();
      VertexSet z(pick);
      if (cover_works(g, a, ell, radius, z, budget)) return {size, z};
      // Advance to the next size-combination in lexicographic order.
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw std::logic_error("removing every vertex must leave no A-path");
}

PackingOracleResult oracle_max_disjoint_apaths(const Graph& g, const VertexSet& a,
                                               std::uint64_t node_budget) {
  require_mask_sized(g);
  require_over(g, a);
  SearchBudget budget(node_budget);
  DisjointSearch search(g, mask_of(a.members()), budget);
  PackingOracleResult out;
  out.value = search.value(0);
  out.witness = search.witness(0);
  return out;
}

}  // namespace iapath
