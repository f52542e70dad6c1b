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

// iapath: solve, verify and inspect induced A-path instances.
//
// Exit status: 0 ok, 1 verification failed, 2 malformed input,
// 3 search budget exhausted.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "iapath/generators.hpp"
#include "iapath/io.hpp"
#include "iapath/oracle.hpp"
#include "iapath/solver.hpp"
#include "iapath/verify.hpp"

namespace {

using namespace iapath;
using nlohmann::json;

enum ExitCode { kOk = 0, kVerifyFailed = 1, kMalformed = 2, kBudget = 3 };

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Instance load_graph(const std::string& path) {
  try {
    return parse_graph(slurp(path));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

json path_list(const std::vector<Path>& paths) {
  json out = json::array();
  for (const auto& p : paths) out.push_back(p.vertices);
  return out;
}

std::string path_text(const Path& p) {
  std::string s;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    s += (i ? " " : "") + std::to_string(p.vertices[i]);
  }
  return s;
}

struct SolveArgs {
  std::string input;
  int k = 1;
  int ell = 1;
  std::uint64_t budget = kDefaultNodeBudget;
  bool dump_frames = false;
};

int run_solve(const SolveArgs& args) {
  const auto inst = load_graph(args.input);
  if (args.k < 0 || args.ell < 1) throw InputError("need k >= 0 and ell >= 1");
  SolveParams params{args.k, args.ell, args.budget};
  SolveOptions options;
  if (args.dump_frames) {
    options.on_frame = [](const Graph&, const VertexSet&, const Frame& fr,
                          const std::vector<Vertex>& to_root) {
      std::cerr << emit_frame(fr, to_root);
    };
  }
  const auto cert = solve(inst.graph, inst.terminals, params, options);
  std::cout << emit_document(make_document(inst, params, cert));
  return kOk;
}

struct VerifyArgs {
  std::string input;
  std::string cert;
  std::uint64_t budget = kDefaultNodeBudget;
};

int run_verify(const VerifyArgs& args) {
  const auto inst = load_graph(args.input);
  CertificateDocument doc;
  try {
    doc = parse_document(slurp(args.cert));
  } catch (const ParseError& e) {
    throw InputError(args.cert + ": " + e.what());
  }
  const SolveParams params{doc.instance.k, doc.instance.ell, args.budget};
  Report report;
  const auto expected = make_document(inst, params, doc.certificate).instance;
  report.add("instance_digest", expected == doc.instance);
  if (expected == doc.instance) {
    for (auto& c : verify_certificate(inst.graph, inst.terminals, params, doc.certificate).checks) {
      report.checks.push_back(std::move(c));
    }
  }
  std::cout << emit_report(report);
  return report.pass() ? kOk : kVerifyFailed;
}

struct OracleArgs {
  std::string input;
  int ell = 1;
  bool packing = false;
  bool cover = false;
  int cap = 1;
  int radius = 0;
  std::uint64_t budget = kDefaultNodeBudget;
};

int run_oracle(const OracleArgs& args) {
  const auto inst = load_graph(args.input);
  if (args.packing == args.cover) throw InputError("pass exactly one of --packing, --cover");
  if (args.ell < 1) throw InputError("need ell >= 1");
  json out;
  try {
    if (args.packing) {
      const auto r = oracle_max_anticomplete_packing(inst.graph, inst.terminals, args.ell,
                                                     args.cap, args.budget);
      out = {{"kind", "packing"}, {"value", r.value}, {"witness", path_list(r.witness)}};
    } else {
      const auto r = oracle_min_ball_cover(inst.graph, inst.terminals, args.ell, args.radius,
                                           args.budget);
      out = {{"kind", "cover"}, {"value", r.size}, {"witness", r.z.members()}};
    }
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  std::cout << out.dump(2) << "\n";
  return kOk;
}

struct GenArgs {
  int complete = -1;
  std::vector<int> subdivided;
  std::vector<std::string> random;
  std::vector<std::string> subcubic;
};

int run_gen(const GenArgs& args) {
  const int chosen = (args.complete >= 0) + !args.subdivided.empty() + !args.random.empty() +
                     !args.subcubic.empty();
  if (chosen != 1) throw InputError("pick exactly one generator");
  try {
    if (args.complete >= 0) {
      std::cout << format_graph(complete_instance(args.complete));
    } else if (!args.subdivided.empty()) {
      std::cout << format_graph(subdivided_complete_instance(args.subdivided[0],
                                                             args.subdivided[1]));
    } else if (!args.random.empty()) {
      const auto& r = args.random;
      std::cout << format_graph(random_instance(std::stoi(r[0]), std::stod(r[1]),
                                                std::stod(r[2]), std::stoull(r[3])));
    } else {
      const auto tree = random_subcubic_tree(std::stoi(args.subcubic[0]),
                                             std::stoull(args.subcubic[1]));
      int n = 0;
      for (auto [u, v] : tree.edges) n = std::max({n, u + 1, v + 1});
      std::cout << format_graph({Graph(n, tree.edges), tree.leaves});
    }
  } catch (const std::logic_error& e) {  // invalid_argument, out_of_range from stoi
    throw InputError(e.what());
  }
  return kOk;
}

struct ReduceArgs {
  std::string input;
  int d = 3;
};

int run_reduce(const ReduceArgs& args) {
  const auto inst = load_graph(args.input);
  if (args.d < 1) throw InputError("need d >= 1");
  const auto map = reduce_to_d3(inst.graph, args.d);
  std::cout << format_graph({map.powered, inst.terminals});
  for (const auto& [edge, path] : map.witness) {
    std::cout << "c w " << edge.first << " " << edge.second << " : " << path_text(path) << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Induced A-path packing and covering"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Packing or cover certificate as JSON");
  solve_cmd->add_option("--input", solve_args.input, "Graph file")->required();
  solve_cmd->add_option("--k", solve_args.k, "Number of paths")->required();
  solve_cmd->add_option("--ell", solve_args.ell, "Minimum path length")->required();
  solve_cmd->add_option("--budget", solve_args.budget, "Search node budget per call");
  solve_cmd->add_flag("--dump-frames", solve_args.dump_frames, "Frames as JSON lines on stderr");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate against a graph");
  verify_cmd->add_option("--input", verify_args.input, "Graph file")->required();
  verify_cmd->add_option("--cert", verify_args.cert, "Certificate file")->required();
  verify_cmd->add_option("--budget", verify_args.budget, "Search node budget per call");

  OracleArgs oracle_args;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force packing or cover number");
  oracle_cmd->add_option("--input", oracle_args.input, "Graph file")->required();
  oracle_cmd->add_option("--ell", oracle_args.ell, "Minimum path length")->required();
  oracle_cmd->add_flag("--packing", oracle_args.packing);
  oracle_cmd->add_flag("--cover", oracle_args.cover);
  oracle_cmd->add_option("--cap", oracle_args.cap, "Stop once this many paths are packed");
  oracle_cmd->add_option("--radius", oracle_args.radius, "Ball radius");
  oracle_cmd->add_option("--budget", oracle_args.budget, "Search node budget");

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated instance");
  gen_cmd->add_option("--complete", gen_args.complete, "K_N");
  gen_cmd->add_option("--subdivided", gen_args.subdivided, "K R")->expected(2);
  gen_cmd->add_option("--random", gen_args.random, "N P Q SEED")->expected(4);
  gen_cmd->add_option("--subcubic-tree", gen_args.subcubic, "N SEED")->expected(2);

  ReduceArgs reduce_args;
  auto* reduce_cmd = app.add_subcommand("reduce", "Power graph with witness paths");
  reduce_cmd->add_option("--input", reduce_args.input, "Graph file")->required();
  reduce_cmd->add_option("--d", reduce_args.d, "Distance")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kMalformed;
  }

  try {
    if (*solve_cmd) return run_solve(solve_args);
    if (*verify_cmd) return run_verify(verify_args);
    if (*oracle_cmd) return run_oracle(oracle_args);
    if (*gen_cmd) return run_gen(gen_args);
    if (*reduce_cmd) return run_reduce(reduce_args);
  } catch (const InputError& e) {
    std::cerr << "iapath: " << e.what() << "\n";
    return kMalformed;
  } catch (const BudgetExceeded& e) {
    std::cerr << "iapath: " << e.what() << "\n";
    return kBudget;
  }
  return kMalformed;
}
