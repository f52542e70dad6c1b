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

#include "iapath/io.hpp"

#include <charconv>
#include <optional>
#include <set>
#include <sstream>

#include "json.hpp"

namespace iapath {
namespace {

using nlohmann::json;

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

long long to_integer(std::string_view field, std::size_t line) {
  long long value = 0;
  const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || end != field.data() + field.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(field) + "'");
  }
  return value;
}

json to_json(const VertexSet& s) { return json(s.members()); }

json to_json(const Path& p) { return json(p.vertices); }

VertexSet set_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(0, std::string(what) + " must be an array");
  std::vector<Vertex> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError(0, std::string(what) + " holds a non-integer");
    out.push_back(x.get<Vertex>());
  }
  return VertexSet(std::move(out));
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(0, std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

int int_field(const json& j, const char* key) {
  const json& x = field(j, key);
  if (!x.is_number_integer()) throw ParseError(0, std::string("field '") + key + "' must be an integer");
  return x.get<int>();
}

json lifted(const VertexSet& s, const std::vector<Vertex>& to_root) {
  std::vector<Vertex> out;
  for (Vertex v : s) out.push_back(to_root[v]);
  return json(VertexSet(std::move(out)).members());
}

}  // namespace

Instance parse_graph(std::string_view text) {
  std::optional<int> n;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::vector<Vertex> terminals;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    const auto fields = split_fields(line);
    if (fields.empty() || fields[0] == "c") continue;
    const std::string_view tag = fields[0];
    auto expect_fields = [&](std::size_t count) {
      if (fields.size() != count) {
        throw ParseError(line_no, "'" + std::string(tag) + "' record needs " +
                                      std::to_string(count - 1) + " field(s)");
      }
    };
    auto vertex = [&](std::string_view f) {
      const long long v = to_integer(f, line_no);
      if (v < 0 || v >= *n) {
        throw ParseError(line_no, "vertex " + std::to_string(v) + " out of range [0, " +
                                      std::to_string(*n) + ")");
      }
      return static_cast<Vertex>(v);
    };
    if (tag == "p") {
      if (n) throw ParseError(line_no, "duplicate 'p' record");
      expect_fields(2);
      const long long count = to_integer(fields[1], line_no);
      if (count < 0 || count > 1'000'000) throw ParseError(line_no, "bad vertex count");
      n = static_cast<int>(count);
      continue;
    }
    if (!n) throw ParseError(line_no, "first record must be 'p <n>'");
    if (tag == "e") {
      expect_fields(3);
      const Vertex u = vertex(fields[1]);
      const Vertex v = vertex(fields[2]);
      if (u == v) throw ParseError(line_no, "self-loop at " + std::to_string(u));
      if (!seen.insert(std::minmax(u, v)).second) {
        throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
      }
      edges.emplace_back(u, v);
    } else if (tag == "a") {
      expect_fields(2);
      terminals.push_back(vertex(fields[1]));
    } else {
      throw ParseError(line_no, "unknown record '" + std::string(tag) + "'");
    }
  }
  if (!n) throw ParseError(0, "missing 'p <n>' record");
  return {Graph(*n, edges), VertexSet(std::move(terminals))};
}

std::string format_graph(const Instance& inst) {
  std::ostringstream out;
  out << "p " << inst.graph.vertex_count() << "\n";
  for (auto [u, v] : inst.graph.edges()) out << "e " << u << " " << v << "\n";
  for (Vertex v : inst.terminals) out << "a " << v << "\n";
  return out.str();
}

CertificateDocument make_document(const Instance& inst, const SolveParams& params,
                                  const Certificate& cert) {
  CertificateDocument doc;
  doc.instance.n = inst.graph.vertex_count();
  doc.instance.edges = static_cast<long long>(inst.graph.edge_count());
  doc.instance.terminals = static_cast<int>(inst.terminals.size());
  doc.instance.k = params.k;
  doc.instance.ell = params.ell;
  doc.certificate = cert;
  return doc;
}

std::string emit_document(const CertificateDocument& doc) {
  json j;
  j["instance"] = {{"n", doc.instance.n},
                   {"edges", doc.instance.edges},
                   {"terminals", doc.instance.terminals},
                   {"k", doc.instance.k},
                   {"ell", doc.instance.ell}};
  const int k = doc.instance.k;
  const int ell = doc.instance.ell;
  if (const auto* packing = std::get_if<Packing>(&doc.certificate)) {
    j["kind"] = "packing";
    j["paths"] = json::array();
    for (const Path& p : packing->paths) j["paths"].push_back(to_json(p));
    j["bounds"] = {{"count", packing->paths.size()}, {"required", k}};
  } else {
    const auto& cover = std::get<Cover>(doc.certificate);
    j["kind"] = "cover";
    j["z1"] = to_json(cover.z1);
    j["z2"] = to_json(cover.z2);
    j["radii"] = {cover.r1, cover.r2};
    j["bounds"] = {{"z1_size", cover.z1.size()},
                   {"z1_bound", z1_bound(k, ell)},
                   {"z2_size", cover.z2.size()},
                   {"z2_bound", z2_bound(k)}};
  }
  return j.dump(2) + "\n";
}

CertificateDocument parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(0, std::string("certificate is not valid JSON: ") + e.what());
  }
  CertificateDocument doc;
  const json& inst = field(j, "instance");
  doc.instance.n = int_field(inst, "n");
  doc.instance.edges = field(inst, "edges").get<long long>();
  doc.instance.terminals = int_field(inst, "terminals");
  doc.instance.k = int_field(inst, "k");
  doc.instance.ell = int_field(inst, "ell");
  const json& kind = field(j, "kind");
  if (kind == "packing") {
    Packing packing;
    const json& paths = field(j, "paths");
    if (!paths.is_array()) throw ParseError(0, "paths must be an array");
    for (const auto& p : paths) {
      if (!p.is_array()) throw ParseError(0, "each path must be an array");
      Path path;
      for (const auto& v : p) {
        if (!v.is_number_integer()) throw ParseError(0, "path holds a non-integer");
        path.vertices.push_back(v.get<Vertex>());
      }
      packing.paths.push_back(std::move(path));
    }
    doc.certificate = std::move(packing);
  } else if (kind == "cover") {
    Cover cover;
    cover.z1 = set_from_json(field(j, "z1"), "z1");
    cover.z2 = set_from_json(field(j, "z2"), "z2");
    const json& radii = field(j, "radii");
    if (!radii.is_array() || radii.size() != 2 || !radii[0].is_number_integer() ||
        !radii[1].is_number_integer()) {
      throw ParseError(0, "radii must be a pair of integers");
    }
    cover.r1 = radii[0].get<int>();
    cover.r2 = radii[1].get<int>();
    doc.certificate = std::move(cover);
  } else {
    throw ParseError(0, "kind must be 'packing' or 'cover'");
  }
  return doc;
}

std::string emit_report(const Report& report) {
  json j;
  j["pass"] = report.pass();
  j["checks"] = json::array();
  for (const auto& c : report.checks) {
    j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  return j.dump(2) + "\n";
}

std::string emit_frame(const Frame& fr, const std::vector<Vertex>& to_root) {
  json j;
  j["leaves"] = lifted(fr.a_f, to_root);
  j["hubs"] = lifted(fr.hubs, to_root);
  j["vertices"] = lifted(fr.f_vertices, to_root);
  j["y"] = lifted(fr.y, to_root);
  j["y_tilde"] = lifted(fr.y_tilde, to_root);
  j["a_bar"] = lifted(fr.a_bar, to_root);
  j["ell"] = fr.ell;
  j["tree_edges"] = json::array();
  for (auto [u, v] : fr.tree_edges) {
    j["tree_edges"].push_back({to_root[u], to_root[v]});
  }
  return j.dump() + "\n";
}

}  // namespace iapath
