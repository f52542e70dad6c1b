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

// Exact search for A-paths and induced A-paths.
//
// An A-path is a path with at least one edge whose two endpoints lie in the
// terminal set A; interior vertices may also lie in A. The induced searches
// extend chordless partial paths depth-first from terminals in increasing id
// order, visiting neighbours in increasing id order, so every "find" returns
// the lexicographically smallest qualifying vertex sequence.
//
// The problem is NP-hard in general. Every exhaustive search charges one node
// per path extension against a SearchBudget and throws BudgetExceeded once the
// limit is passed.

#ifndef IAPATH_SEARCH_HPP_
#define IAPATH_SEARCH_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "iapath/graph.hpp"

namespace iapath {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

class SearchBudget {
 public:
  explicit SearchBudget(std::uint64_t limit = kDefaultNodeBudget) : limit_(limit) {}

  void charge(std::uint64_t nodes = 1) {
    used_ += nodes;
    if (used_ > limit_) {
      throw BudgetExceeded("search exceeded node budget of " + std::to_string(limit_));
    }
  }
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

// Closed interval of path lengths; hi == nullopt means unbounded.
struct LengthRange {
  int lo = 1;
  std::optional<int> hi;

  bool contains(int length) const { return length >= lo && (!hi || length <= *hi); }
};

bool exists_apath(const Graph& g, const VertexSet& a);

// Lexicographically smallest among the minimum-length A-paths.
std::optional<Path> shortest_apath(const Graph& g, const VertexSet& a);

std::optional<Path> find_induced_apath_in_range(const Graph& g, const VertexSet& a,
                                                LengthRange range, SearchBudget& budget);
std::optional<Path> find_induced_apath_in_range(const Graph& g, const VertexSet& a,
                                                LengthRange range,
                                                std::uint64_t node_budget = kDefaultNodeBudget);

// Minimum-length induced A-path of length >= ell.
std::optional<Path> shortest_long_induced_apath(const Graph& g, const VertexSet& a, int ell,
                                                SearchBudget& budget);
std::optional<Path> shortest_long_induced_apath(const Graph& g, const VertexSet& a, int ell,
                                                std::uint64_t node_budget = kDefaultNodeBudget);

bool has_long_induced_apath(const Graph& g, const VertexSet& a, int ell, SearchBudget& budget);
bool has_long_induced_apath(const Graph& g, const VertexSet& a, int ell,
                            std::uint64_t node_budget = kDefaultNodeBudget);

// Every induced A-path with length in range, one orientation each
// (front < back), in lexicographic order.
std::vector<Path> enumerate_induced_apaths(const Graph& g, const VertexSet& a,
                                           LengthRange range, SearchBudget& budget);

}  // namespace iapath

#endif  // IAPATH_SEARCH_HPP_
