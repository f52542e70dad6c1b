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

// Independent certificate checks. Nothing here calls into the solver; every
// claim is recomputed from the graph, the terminals and the raw certificate.

#ifndef IAPATH_VERIFY_HPP_
#define IAPATH_VERIFY_HPP_

#include <string>
#include <vector>

#include "iapath/graph.hpp"
#include "iapath/solver.hpp"

namespace iapath {

struct Check {
  std::string name;     // e.g. "path[2].induced", "pair[0,1].anti_complete"
  bool pass = false;
  std::string detail;   // witness or measured value
};

struct Report {
  std::vector<Check> checks;

  bool pass() const;
  void add(std::string name, bool pass, std::string detail = {});
  // First failing check, or nullptr.
  const Check* first_failure() const;
};

Report verify_packing(const Graph& g, const VertexSet& a, const SolveParams& params,
                      const std::vector<Path>& paths);

Report verify_cover(const Graph& g, const VertexSet& a, const SolveParams& params,
                    const VertexSet& z1, const VertexSet& z2);

Report verify_certificate(const Graph& g, const VertexSet& a, const SolveParams& params,
                          const Certificate& cert);

enum class TightnessKind { kComplete, kSubdivided };

// kComplete: K_n with A = V has packing number 1 and radius-0 cover number
// n - 1 (n_or_k = n, r ignored). kSubdivided: the (2k-1)-clique with every
// edge replaced by a path of length 3r has no k anti-complete A-paths and
// no radius-r cover of size <= 2k - 3 (n_or_k = k).
Report verify_tightness_claims(TightnessKind kind, int n_or_k, int r,
                               std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace iapath

#endif  // IAPATH_VERIFY_HPP_
