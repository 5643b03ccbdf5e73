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

#include "aegame/document.h"

#include <gtest/gtest.h>

namespace aegame {
namespace {

TEST(DocumentTest, ParsesTerseText) {
  const HypergraphDocument doc = parse_text("a b\nb c\n");
  EXPECT_EQ(doc.names, (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(doc.graph, Hypergraph(3, {{0, 1}, {1, 2}}));
}

TEST(DocumentTest, ParsesJson) {
  const HypergraphDocument doc = parse_json(R"({"vertices":["a"],"edges":[]})");
  EXPECT_EQ(doc.names, (std::vector<std::string>{"a"}));
  EXPECT_EQ(doc.graph, Hypergraph(1));
  EXPECT_EQ(parse_document(R"(  {"edges":[["x","y"]]})").graph, Hypergraph(2, {{0, 1}}));
}

TEST(DocumentTest, SerializesCanonically) {
  EXPECT_EQ(serialize_text(parse_text("a b c\n")), "vertices: a b c\na b c\n");
  EXPECT_EQ(serialize_text(parse_text("c a\n# note\n\nb a\n")),
            "vertices: a b c\na b\na c\n");
}

TEST(DocumentTest, RoundTrips) {
  const std::string text = "vertices: p q r s\np q\nq r s\n";
  const HypergraphDocument doc = parse_text(text);
  EXPECT_EQ(serialize_text(doc), text);
  EXPECT_EQ(parse_json(serialize_json(doc)), doc);
  EXPECT_EQ(parse_document(serialize(doc, DocumentFormat::Json)), doc);
}

TEST(DocumentTest, HeaderDeclaresIsolatedVertices) {
  const HypergraphDocument doc = parse_text("vertices: a b z\na b\n");
  EXPECT_EQ(doc.graph, Hypergraph(3, {{0, 1}}));
}

TEST(DocumentTest, EmptyEdge) {
  const HypergraphDocument doc = parse_text("vertices: a\n{}\n");
  EXPECT_TRUE(doc.graph.has_empty_edge());
  EXPECT_EQ(serialize_text(doc), "vertices: a\n{}\n");
  EXPECT_EQ(parse_document(serialize_text(doc)), doc);
}

TEST(DocumentTest, ErrorsCarryLineNumbers) {
  try {
    parse_text("a b\nc c\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  try {
    parse_text("a b\nvertices: a b\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_THROW(parse_json("{\n\"edges\": [[\"a\", \"a\"]]\n}"), ParseError);
  try {
    parse_json("{\n\"edges\": [[\"a\",\n}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  EXPECT_THROW(parse_json(R"({"vertices":[""],"edges":[]})"), ParseError);
  EXPECT_THROW(parse_json(R"({"vertices":["a","a"],"edges":[]})"), ParseError);
  EXPECT_THROW(parse_json(R"({"edges":[[1]]})"), ParseError);
}

TEST(DocumentTest, NamesAreBytes) {
  const HypergraphDocument doc = parse_text("\xC3\xA9 b\nb Z\n");
  EXPECT_EQ(doc.names, (std::vector<std::string>{"Z", "b", "\xC3\xA9"}));
  EXPECT_EQ(find_vertex(doc, "\xC3\xA9"), 2);
  EXPECT_EQ(find_vertex(doc, "missing"), -1);
}

TEST(DocumentTest, NameVerticesKeepsIdOrder) {
  const HypergraphDocument doc = name_vertices(Hypergraph(11, {{0, 10}}));
  EXPECT_EQ(doc.names.front(), "v00");
  EXPECT_EQ(doc.names.back(), "v10");
  EXPECT_EQ(parse_text(serialize_text(doc)), doc);
}

TEST(DocumentTest, RenameFromCarriesNames) {
  const HypergraphDocument parent = parse_text("a b\nb c\n");
  const Hypergraph child = enforcer_update(parent.graph, 0);
  const HypergraphDocument renamed = rename_from(parent, child, {1, 2});
  EXPECT_EQ(serialize_text(renamed), "vertices: b c\nb c\n");
}

}  // namespace
}  // namespace aegame
