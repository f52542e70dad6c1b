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

#ifndef IAPATH_TESTS_CORPUS_HPP_
#define IAPATH_TESTS_CORPUS_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "iapath/generators.hpp"

namespace corpus {

// Random subcubic tree with every edge stretched to a path of length 2..5,
// plus up to two random chords. Leaves are the terminals. Long, sparse
// A-paths make the solver take the frame branch and extend it.
inline iapath::Instance spider(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int m = 4 + static_cast<int>(rng() % 6);
  const int stretch = 2 + static_cast<int>(rng() % 4);
  const auto tree = iapath::random_subcubic_tree(m, seed);
  std::vector<iapath::Edge> e;
  int next = m;
  for (auto [u, v] : tree.edges) {
    int prev = u;
    for (int i = 0; i + 1 < stretch; ++i) {
      e.emplace_back(prev, next);
      prev = next++;
    }
    e.emplace_back(prev, v);
  }
  std::set<iapath::Edge> have;
  for (auto [u, v] : e) have.insert(std::minmax(u, v));
  const int chords = static_cast<int>(rng() % 3);
  for (int i = 0; i < chords; ++i) {
    const int u = static_cast<int>(rng() % next);
    const int v = static_cast<int>(rng() % next);
    if (u != v && have.insert(std::minmax(u, v)).second) e.emplace_back(u, v);
  }
  return {iapath::Graph(next, e), tree.leaves};
}

}  // namespace corpus

#endif  // IAPATH_TESTS_CORPUS_HPP_
