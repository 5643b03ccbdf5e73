// Copyright 2026 The aegame Authors
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


// Text and JSON file formats for hypergraphs with named vertices.
//
// Text form: an optional `vertices:` header line naming every vertex, then
// one edge per line as whitespace-separated names. `{}` alone on a line is
// the empty edge; lines starting with `#` are comments. Names are opaque
// byte strings; ids follow their byte-wise order.
//
// JSON form: {"vertices": [...], "edges": [[...], ...]}. JSON syntax errors
// carry the line of the offending byte; structural errors in a well-formed
// JSON document report line 1.

#ifndef AEGAME_DOCUMENT_H_
#define AEGAME_DOCUMENT_H_

#include <string>
#include <string_view>
#include <vector>

#include "aegame/errors.h"
#include "aegame/hypergraph.h"

namespace aegame {

class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct HypergraphDocument {
  // names[i] is the name of vertex i; sorted byte-wise.
  std::vector<std::string> names;
  Hypergraph graph;

  friend bool operator==(const HypergraphDocument&,
                         const HypergraphDocument&) = default;
};

enum class DocumentFormat { Text, Json };

HypergraphDocument parse_text(std::string_view text);
HypergraphDocument parse_json(std::string_view text);
// JSON when the first non-blank character is '{', text otherwise.
HypergraphDocument parse_document(std::string_view text);

std::string serialize_text(const HypergraphDocument& doc);
std::string serialize_json(const HypergraphDocument& doc);
std::string serialize(const HypergraphDocument& doc, DocumentFormat format);

// Names v0, v1, ... zero-padded to equal width so byte order matches ids.
HypergraphDocument name_vertices(const Hypergraph& h);

// Carries names over to a hypergraph whose vertex i was vertex
// surviving[i] of `parent`.
HypergraphDocument rename_from(const HypergraphDocument& parent,
                               const Hypergraph& child,
                               const std::vector<VertexId>& surviving);

// Vertex id for a name, or -1.
VertexId find_vertex(const HypergraphDocument& doc, std::string_view name);

}  // namespace aegame

#endif  // AEGAME_DOCUMENT_H_
