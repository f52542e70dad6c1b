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

#include "iapath/search.hpp"

#include <algorithm>
#include <stdexcept>

namespace iapath {
namespace {

enum class Step { kContinue, kPrune, kStop };

// Depth-first enumeration of induced paths from a fixed start vertex.
// touch_[v] counts the path vertices adjacent to v; v may extend a path ending
// at u exactly when v is off the path and u is its only path neighbour.
class ChordlessWalker {
 public:
  ChordlessWalker(const Graph& g, SearchBudget& budget)
      : g_(g), budget_(budget), touch_(g.vertex_count(), 0), on_path_(g.vertex_count(), false) {}

  // visit(path) is called for every induced path starting at `start` with
  // length <= max_length, the single-vertex path included. Returns true if
  // some visit returned kStop.
  template <class Visit>
  bool run(Vertex start, int max_length, Visit&& visit) {
    push(start);
    const bool stopped = descend(max_length, visit);
    pop();
    return stopped;
  }

  const std::vector<Vertex>& path() const { return path_; }

 private:
  void push(Vertex v) {
    budget_.charge();
    path_.push_back(v);
    on_path_[v] = true;
    for (Vertex w : g_.neighbors(v)) ++touch_[w];
  }

  void pop() {
    const Vertex v = path_.back();
    path_.pop_back();
    on_path_[v] = false;
    for (Vertex w : g_.neighbors(v)) --touch_[w];
  }

  template <class Visit>
  bool descend(int max_length, Visit& visit) {
    const Step step = visit(path_);
    if (step == Step::kStop) return true;
    if (step == Step::kPrune) return false;
    if (static_cast<int>(path_.size()) - 1 >= max_length) return false;
    const Vertex end = path_.back();
    for (Vertex w : g_.neighbors(end)) {
      if (on_path_[w] || touch_[w] != 1) continue;
      push(w);
      const bool stopped = descend(max_length, visit);
      pop();
      if (stopped) return true;
    }
    return false;
  }

  const Graph& g_;
  SearchBudget& budget_;
  std::vector<Vertex> path_;
  std::vector<int> touch_;
  std::vector<bool> on_path_;
};

int max_length_for(const Graph& g, const LengthRange& range) {
  const int longest = std::max(0, g.vertex_count() - 1);
  return range.hi ? std::min(*range.hi, longest) : longest;
}

}  // namespace

bool exists_apath(const Graph& g, const VertexSet& a) {
  require_over(g, a);
  if (a.size() < 2) return false;
  for (const auto& part : components(g)) {
    if (set_intersection(part, a).size() >= 2) return true;
  }
  return false;
}

std::optional<Path> shortest_apath(const Graph& g, const VertexSet& a) {
  require_over(g, a);
  if (a.size() < 2) return std::nullopt;
  int best = kInfinity;
  for (Vertex s : a) {
    const auto d = bfs_distances(g, s);
    for (Vertex t : a) {
      if (t != s) best = std::min(best, d[t]);
    }
  }
  if (best == kInfinity) return std::nullopt;
  // The smallest start with a partner at distance `best` begins the
  // lexicographically smallest minimum path.
  for (Vertex s : a) {
    const auto d = bfs_distances(g, s);
    std::vector<Vertex> targets;
    for (Vertex t : a) {
      if (t != s && d[t] == best) targets.push_back(t);
    }
    if (targets.empty()) continue;
    const auto to_target = bfs_distances(g, VertexSet(std::move(targets)));
    Path p{{s}};
    Vertex cur = s;
    while (to_target[cur] > 0) {
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
  return std::nullopt;
}

std::optional<Path> find_induced_apath_in_range(const Graph& g, const VertexSet& a,
                                                LengthRange range, SearchBudget& budget) {
  require_over(g, a);
  if (range.lo < 1) throw std::invalid_argument("length range must start at 1 or more");
  if (range.hi && *range.hi < range.lo) return std::nullopt;
  const auto terminal = a.mask(g.vertex_count());
  const int max_length = max_length_for(g, range);
  ChordlessWalker walker(g, budget);
  std::optional<Path> found;
  for (Vertex s : a) {
    const bool stopped = walker.run(s, max_length, [&](const std::vector<Vertex>& p) {
      const int length = static_cast<int>(p.size()) - 1;
      if (length >= 1 && terminal[p.back()] && range.contains(length)) {
        found = Path{p};
        return Step::kStop;
      }
      return Step::kContinue;
    });
    if (stopped) break;
  }
  return found;
}

std::optional<Path> find_induced_apath_in_range(const Graph& g, const VertexSet& a,
                                                LengthRange range,
                                                std::uint64_t node_budget) {
  SearchBudget budget(node_budget);
  return find_induced_apath_in_range(g, a, range, budget);
}

std::optional<Path> shortest_long_induced_apath(const Graph& g, const VertexSet& a, int ell,
                                                SearchBudget& budget) {
  if (ell < 1) throw std::invalid_argument("ell must be positive");
  for (int length = ell; length < g.vertex_count(); ++length) {
    if (auto p = find_induced_apath_in_range(g, a, {length, length}, budget)) return p;
  }
  return std::nullopt;
}

std::optional<Path> shortest_long_induced_apath(const Graph& g, const VertexSet& a, int ell,
                                                std::uint64_t node_budget) {
  SearchBudget budget(node_budget);
  return shortest_long_induced_apath(g, a, ell, budget);
}

bool has_long_induced_apath(const Graph& g, const VertexSet& a, int ell, SearchBudget& budget) {
  if (ell < 1) throw std::invalid_argument("ell must be positive");
  if (ell == 1) return exists_apath(g, a);
  return find_induced_apath_in_range(g, a, {ell, std::nullopt}, budget).has_value();
}

bool has_long_induced_apath(const Graph& g, const VertexSet& a, int ell,
                            std::uint64_t node_budget) {
  SearchBudget budget(node_budget);
  return has_long_induced_apath(g, a, ell, budget);
}

std::vector<Path> enumerate_induced_apaths(const Graph& g, const VertexSet& a,
                                           LengthRange range, SearchBudget& budget) {
  require_over(g, a);
  if (range.lo < 1) throw std::invalid_argument("length range must start at 1 or more");
  const auto terminal = a.mask(g.vertex_count());
  const int max_length = max_length_for(g, range);
  ChordlessWalker walker(g, budget);
  std::vector<Path> out;
  for (Vertex s : a) {
    walker.run(s, max_length, [&](const std::vector<Vertex>& p) {
      const int length = static_cast<int>(p.size()) - 1;
      if (length >= 1 && p.back() > s && terminal[p.back()] && range.contains(length)) {
        out.push_back(Path{p});
      }
      return Step::kContinue;
    });
  }
  return out;
}

}  // namespace iapath
