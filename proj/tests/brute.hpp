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

// Test-only ground truth. Deliberately naive: subset enumeration over
// adjacency matrices, nothing shared with the library's search code.

#ifndef IAPATH_TESTS_BRUTE_HPP_
#define IAPATH_TESTS_BRUTE_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "iapath/graph.hpp"

namespace brute {

using Mask = std::uint32_t;

struct Matrix {
  int n = 0;
  std::vector<Mask> adj;
};

inline Matrix matrix(const iapath::Graph& g) {
  Matrix m{g.vertex_count(), std::vector<Mask>(g.vertex_count(), 0)};
  for (auto [u, v] : g.edges()) {
    m.adj[u] |= Mask{1} << v;
    m.adj[v] |= Mask{1} << u;
  }
  return m;
}

inline Mask mask_of(const iapath::VertexSet& s) {
  Mask m = 0;
  for (int v : s) m |= Mask{1} << v;
  return m;
}

inline bool connected_within(const Matrix& m, Mask s) {
  if (!s) return true;
  Mask seen = s & (~s + 1);
  for (Mask frontier = seen; frontier;) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= m.adj[std::countr_zero(f)];
    next &= s & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == s;
}

// Induced A-paths as vertex masks: G[S] is a path whose ends lie in A.
struct InducedPath {
  Mask vertices;
  int length;
};

inline std::vector<InducedPath> induced_apaths(const iapath::Graph& g,
                                               const iapath::VertexSet& a) {
  const Matrix m = matrix(g);
  const Mask am = mask_of(a);
  std::vector<InducedPath> out;
  for (Mask s = 1; s < (Mask{1} << m.n); ++s) {
    const int size = std::popcount(s);
    if (size < 2) continue;
    Mask ends = 0;
    bool ok = true;
    for (Mask t = s; t && ok; t &= t - 1) {
      const int v = std::countr_zero(t);
      const int deg = std::popcount(m.adj[v] & s);
      if (deg == 1) {
        ends |= Mask{1} << v;
      } else if (deg != 2) {
        ok = false;
      }
    }
    if (!ok || std::popcount(ends) != 2 || (ends & am) != ends) continue;
    if (!connected_within(m, s)) continue;
    out.push_back({s, size - 1});
  }
  return out;
}

inline bool has_long(const iapath::Graph& g, const iapath::VertexSet& a, int ell, Mask removed) {
  for (const auto& p : induced_apaths(g, a)) {
    if (p.length >= ell && !(p.vertices & removed)) return true;
  }
  return false;
}

inline int min_length_at_least(const iapath::Graph& g, const iapath::VertexSet& a, int lo,
                               int hi) {
  int best = -1;
  for (const auto& p : induced_apaths(g, a)) {
    if (p.length >= lo && p.length <= hi && (best < 0 || p.length < best)) best = p.length;
  }
  return best;
}

// All-pairs distances, Floyd-Warshall; -1 for unreachable.
inline std::vector<std::vector<int>> distances(const iapath::Graph& g) {
  const int n = g.vertex_count();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int w = 0; w < n; ++w)
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) d[u][v] = std::min(d[u][v], d[u][w] + d[w][v]);
  for (auto& row : d)
    for (int& x : row)
      if (x >= inf) x = -1;
  return d;
}

// Some A-path survives deleting `removed` (plain A-paths, not nec. induced).
inline bool has_apath_avoiding(const Matrix& m, Mask am, Mask removed) {
  const Mask alive = ((Mask{1} << m.n) - 1) & ~removed;
  Mask done = 0;
  for (int v = 0; v < m.n; ++v) {
    const Mask bit = Mask{1} << v;
    if (!(alive & bit) || (done & bit)) continue;
    Mask comp = bit;
    for (Mask frontier = bit; frontier;) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= m.adj[std::countr_zero(f)];
      next &= alive & ~comp;
      comp |= next;
      frontier = next;
    }
    done |= comp;
    if (std::popcount(comp & am) >= 2) return true;
  }
  return false;
}

// Max number of vertex-disjoint A-paths: every simple A-path as a mask,
// then exhaustive disjoint selection.
inline int max_disjoint_apaths(const iapath::Graph& g, const iapath::VertexSet& a) {
  const Matrix m = matrix(g);
  const Mask am = mask_of(a);
  std::vector<Mask> paths;
  std::function<void(int, int, Mask)> walk = [&](int start, int v, Mask used) {
    for (Mask nb = m.adj[v] & ~used; nb; nb &= nb - 1) {
      const int w = std::countr_zero(nb);
      const Mask next = used | (Mask{1} << w);
      if ((am >> w) & 1) {
        if (w > start) paths.push_back(next);
      } else {
        walk(start, w, next);
      }
    }
  };
  for (int s = 0; s < m.n; ++s) {
    if ((am >> s) & 1) walk(s, s, Mask{1} << s);
  }
  std::sort(paths.begin(), paths.end());
  paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
  int best = 0;
  std::function<void(std::size_t, Mask, int)> pick = [&](std::size_t i, Mask used, int count) {
    best = std::max(best, count);
    for (std::size_t j = i; j < paths.size(); ++j) {
      if (!(paths[j] & used)) pick(j + 1, used | paths[j], count + 1);
    }
  };
  pick(0, 0, 0);
  return best;
}

// Smallest |Z| such that G - Z has no A-path.
inline int min_plain_cover(const iapath::Graph& g, const iapath::VertexSet& a) {
  const Matrix m = matrix(g);
  const Mask am = mask_of(a);
  int best = m.n;
  for (Mask z = 0; z < (Mask{1} << m.n); ++z) {
    const int size = std::popcount(z);
    if (size < best && !has_apath_avoiding(m, am, z)) best = size;
  }
  return best;
}

}  // namespace brute

#endif  // IAPATH_TESTS_BRUTE_HPP_
