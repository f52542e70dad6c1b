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

#include "iapath/verify.hpp"

#include <algorithm>
#include <sstream>

#include "iapath/generators.hpp"
#include "iapath/oracle.hpp"
#include "iapath/search.hpp"

namespace iapath {
namespace {

std::string path_str(const Path& p) {
  std::ostringstream out;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) out << (i ? "-" : "") << p.vertices[i];
  return out.str();
}

std::string indexed(const char* prefix, std::size_t i, const char* suffix) {
  return std::string(prefix) + "[" + std::to_string(i) + "]." + suffix;
}

bool over(const Graph& g, const VertexSet& s) {
  return s.empty() || (s.members().front() >= 0 && s.members().back() < g.vertex_count());
}

// Empty string when g - removed is clean, else a witness path in g's ids.
std::string long_path_witness(const Graph& g, const VertexSet& a, int ell,
                              const VertexSet& removed, std::uint64_t node_budget) {
  const auto rest = delete_vertices(g, removed);
  auto p = find_induced_apath_in_range(rest.graph, rest.restrict(a), {ell, std::nullopt},
                                       node_budget);
  return p ? path_str(rest.lift(*p)) : std::string();
}

}  // namespace

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void Report::add(std::string name, bool pass, std::string detail) {
  checks.push_back({std::move(name), pass, std::move(detail)});
}

const Check* Report::first_failure() const {
  for (const auto& c : checks) {
    if (!c.pass) return &c;
  }
  return nullptr;
}

Report verify_packing(const Graph& g, const VertexSet& a, const SolveParams& params,
                      const std::vector<Path>& paths) {
  Report report;
  report.add("count", static_cast<int>(paths.size()) == params.k,
             std::to_string(paths.size()) + " paths for k = " + std::to_string(params.k));
  std::vector<bool> usable(paths.size(), false);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const Path& p = paths[i];
    const bool valid = is_path(g, p);
    usable[i] = valid;
    report.add(indexed("path", i, "valid"), valid, path_str(p));
    if (!valid) continue;
    report.add(indexed("path", i, "induced"), is_induced_path(g, p), path_str(p));
    report.add(indexed("path", i, "endpoints_in_a"),
               p.length() >= 1 && a.contains(p.front()) && a.contains(p.back()),
               std::to_string(p.front()) + "," + std::to_string(p.back()));
    report.add(indexed("path", i, "long_enough"), p.length() >= params.ell,
               "length " + std::to_string(p.length()));
  }
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      if (!usable[i] || !usable[j]) continue;
      report.add("pair[" + std::to_string(i) + "," + std::to_string(j) + "].anti_complete",
                 anti_complete(g, paths[i].vertex_set(), paths[j].vertex_set()));
    }
  }
  return report;
}

Report verify_cover(const Graph& g, const VertexSet& a, const SolveParams& params,
                    const VertexSet& z1, const VertexSet& z2) {
  Report report;
  const int ell = params.ell;
  const long long k1 = params.k - 1LL;
  const long long z1_cap = (12LL * std::max(ell, 3) + 42) * k1;
  const long long z2_cap = 4LL * k1;
  const int far_radius = std::max(ell + 1, 4);

  const bool in_range = over(g, z1) && over(g, z2);
  report.add("sets_in_graph", in_range);
  if (!in_range) return report;
  report.add("z1_size", static_cast<long long>(z1.size()) <= z1_cap,
             std::to_string(z1.size()) + " <= " + std::to_string(z1_cap));
  report.add("z2_size", static_cast<long long>(z2.size()) <= z2_cap,
             std::to_string(z2.size()) + " <= " + std::to_string(z2_cap));

  const auto near = ball(g, z1, 1);
  const auto far = ball(g, z2, far_radius);
  const auto both = set_intersection(near, far);
  auto witness = long_path_witness(g, a, ell, both, params.node_budget);
  report.add("intersection_removal_clean", witness.empty(), witness);
  witness = long_path_witness(g, a, ell, near, params.node_budget);
  report.add("z1_removal_clean", witness.empty(), witness);
  witness = long_path_witness(g, a, ell, far, params.node_budget);
  report.add("z2_removal_clean", witness.empty(), witness);
  return report;
}

Report verify_certificate(const Graph& g, const VertexSet& a, const SolveParams& params,
                          const Certificate& cert) {
  if (const auto* packing = std::get_if<Packing>(&cert)) {
    return verify_packing(g, a, params, packing->paths);
  }
  const auto& cover = std::get<Cover>(cert);
  Report report = verify_cover(g, a, params, cover.z1, cover.z2);
  report.add("radii", cover.r1 == 1 && cover.r2 == std::max(params.ell + 1, 4),
             std::to_string(cover.r1) + "," + std::to_string(cover.r2));
  return report;
}

Report verify_tightness_claims(TightnessKind kind, int n_or_k, int r,
                               std::uint64_t node_budget) {
  Report report;
  if (kind == TightnessKind::kComplete) {
    const int n = n_or_k;
    const auto inst = complete_instance(n);
    const auto packing = oracle_max_anticomplete_packing(inst.graph, inst.terminals, 1, 2,
                                                         node_budget);
    report.add("packing_is_1", packing.value == 1, std::to_string(packing.value));
    const auto cover = oracle_min_ball_cover(inst.graph, inst.terminals, 1, 0, node_budget);
    report.add("radius0_cover_is_n_minus_1", cover.size == n - 1, std::to_string(cover.size));
    return report;
  }
  const int k = n_or_k;
  const auto inst = subdivided_complete_instance(k, r);
  const auto packing = oracle_max_anticomplete_packing(inst.graph, inst.terminals, 1, k,
                                                       node_budget);
  report.add("packing_below_k", packing.value < k, std::to_string(packing.value));
  const auto cover = oracle_min_ball_cover(inst.graph, inst.terminals, 1, r, node_budget);
  report.add("radius_r_cover_above_2k_minus_3", cover.size > 2 * k - 3,
             std::to_string(cover.size));
  return report;
}

}  // namespace iapath
