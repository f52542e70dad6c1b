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

// Text formats.
//
// Graph format, one record per line:
//
//   c <anything>   comment, ignored (blank lines too)
//   p <n>          vertex count; first non-comment line
//   e <u> <v>      undirected edge, 0-based, u != v, no duplicates
//   a <v>          v is a terminal
//
// Certificates are JSON documents with sorted keys, emitted with two-space
// indentation and a trailing newline; emit(parse(text)) == text for every
// document emit() produced.

#ifndef IAPATH_IO_HPP_
#define IAPATH_IO_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "iapath/frame.hpp"
#include "iapath/generators.hpp"
#include "iapath/solver.hpp"
#include "iapath/verify.hpp"

namespace iapath {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  // 1-based; 0 when the error is not tied to a line.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

Instance parse_graph(std::string_view text);
std::string format_graph(const Instance& inst);

struct InstanceDigest {
  int n = 0;
  long long edges = 0;
  int terminals = 0;
  int k = 0;
  int ell = 1;

  friend bool operator==(const InstanceDigest&, const InstanceDigest&) = default;
};

struct CertificateDocument {
  InstanceDigest instance;
  Certificate certificate;
};

CertificateDocument make_document(const Instance& inst, const SolveParams& params,
                                  const Certificate& cert);
std::string emit_document(const CertificateDocument& doc);
CertificateDocument parse_document(std::string_view text);

std::string emit_report(const Report& report);

// One JSON line describing a frame, vertex ids translated through to_root.
std::string emit_frame(const Frame& fr, const std::vector<Vertex>& to_root);

}  // namespace iapath

#endif  // IAPATH_IO_HPP_
