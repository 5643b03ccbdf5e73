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

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace aegame {
namespace {

constexpr std::string_view kHeader = "vertices:";
constexpr std::string_view kEmptyEdge = "{}";

std::vector<std::string> split_whitespace(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  auto space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
  };
  while (i < line.size()) {
    while (i < line.size() && space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !space(line[i])) ++i;
    if (i > start) out.emplace_back(line.substr(start, i - start));
  }
  return out;
}

struct RawEdge {
  int line;
  std::vector<std::string> names;
};

HypergraphDocument build(std::set<std::string> declared,
                         const std::vector<RawEdge>& raw) {
  for (const RawEdge& e : raw) declared.insert(e.names.begin(), e.names.end());
  HypergraphDocument doc;
  doc.names.assign(declared.begin(), declared.end());
  std::map<std::string_view, VertexId> id;
  for (std::size_t i = 0; i < doc.names.size(); ++i) {
    id[doc.names[i]] = static_cast<VertexId>(i);
  }
  std::vector<Edge> edges;
  for (const RawEdge& e : raw) {
    Edge edge;
    for (const std::string& name : e.names) edge.push_back(id.at(name));
    std::sort(edge.begin(), edge.end());
    if (std::adjacent_find(edge.begin(), edge.end()) != edge.end()) {
      throw ParseError(e.line, "vertex repeated inside an edge");
    }
    edges.push_back(std::move(edge));
  }
  doc.graph = Hypergraph(static_cast<int>(doc.names.size()), std::move(edges));
  return doc;
}

void check_name(int line, const std::string& name) {
  if (name.empty()) throw ParseError(line, "empty vertex name");
  if (name == kEmptyEdge || name == kHeader || name.front() == '#') {
    throw ParseError(line, "reserved vertex name '" + name + "'");
  }
}

int line_of_byte(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<int>(std::count(text.begin(),
                                         text.begin() + static_cast<std::ptrdiff_t>(byte),
                                         '\n'));
}

}  // namespace

HypergraphDocument parse_text(std::string_view text) {
  std::set<std::string> declared;
  std::vector<RawEdge> raw;
  int line_no = 0;
  bool seen_content = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    std::vector<std::string> tokens = split_whitespace(line);
    if (tokens.empty() || tokens.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (tokens.front() == kHeader) {
      if (seen_content) {
        throw ParseError(line_no, "'vertices:' must come before any edge");
      }
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        check_name(line_no, tokens[i]);
        if (!declared.insert(tokens[i]).second) {
          throw ParseError(line_no, "vertex '" + tokens[i] + "' declared twice");
        }
      }
    } else if (tokens.size() == 1 && tokens.front() == kEmptyEdge) {
      raw.push_back({line_no, {}});
    } else {
      for (const std::string& t : tokens) check_name(line_no, t);
      raw.push_back({line_no, std::move(tokens)});
    }
    seen_content = true;
    if (end == text.size()) break;
  }
  return build(std::move(declared), raw);
}

HypergraphDocument parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(line_of_byte(text, e.byte > 0 ? e.byte - 1 : 0),
                     "malformed JSON");
  }
  if (!j.is_object()) throw ParseError(1, "JSON document must be an object");
  for (const auto& [key, value] : j.items()) {
    if (key != "vertices" && key != "edges") {
      throw ParseError(1, "unknown JSON key '" + key + "'");
    }
  }
  auto name_of = [](const nlohmann::json& v) {
    if (!v.is_string()) throw ParseError(1, "vertex names must be strings");
    std::string name = v.get<std::string>();
    if (name.empty()) throw ParseError(1, "empty vertex name");
    return name;
  };
  std::set<std::string> declared;
  if (j.contains("vertices")) {
    if (!j["vertices"].is_array()) throw ParseError(1, "'vertices' must be an array");
    for (const auto& v : j["vertices"]) {
      std::string name = name_of(v);
      if (!declared.insert(name).second) {
        throw ParseError(1, "vertex '" + name + "' declared twice");
      }
    }
  }
  std::vector<RawEdge> raw;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw ParseError(1, "'edges' must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array()) throw ParseError(1, "each edge must be an array");
      RawEdge edge{1, {}};
      for (const auto& v : e) edge.names.push_back(name_of(v));
      raw.push_back(std::move(edge));
    }
  }
  return build(std::move(declared), raw);
}

HypergraphDocument parse_document(std::string_view text) {
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{' &&
      text.substr(first, 2) != kEmptyEdge) {
    return parse_json(text);
  }
  return parse_text(text);
}

std::string serialize_text(const HypergraphDocument& doc) {
  std::string out(kHeader);
  for (const std::string& name : doc.names) {
    out += ' ';
    out += name;
  }
  out += '\n';
  for (const Edge& e : doc.graph.edges()) {
    if (e.empty()) {
      out += kEmptyEdge;
    } else {
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (i > 0) out += ' ';
        out += doc.names[e[i]];
      }
    }
    out += '\n';
  }
  return out;
}

std::string serialize_json(const HypergraphDocument& doc) {
  nlohmann::json j;
  j["vertices"] = doc.names;
  j["edges"] = nlohmann::json::array();
  for (const Edge& e : doc.graph.edges()) {
    nlohmann::json edge = nlohmann::json::array();
    for (VertexId v : e) edge.push_back(doc.names[v]);
    j["edges"].push_back(std::move(edge));
  }
  return j.dump() + "\n";
}

std::string serialize(const HypergraphDocument& doc, DocumentFormat format) {
  return format == DocumentFormat::Json ? serialize_json(doc)
                                        : serialize_text(doc);
}

HypergraphDocument name_vertices(const Hypergraph& h) {
  const int n = h.num_vertices();
  const int width = static_cast<int>(std::to_string(std::max(n - 1, 0)).size());
  HypergraphDocument doc;
  doc.graph = h;
  for (int i = 0; i < n; ++i) {
    std::string digits = std::to_string(i);
    doc.names.push_back("v" + std::string(width - digits.size(), '0') + digits);
  }
  return doc;
}

HypergraphDocument rename_from(const HypergraphDocument& parent,
                               const Hypergraph& child,
                               const std::vector<VertexId>& surviving) {
  if (static_cast<int>(surviving.size()) != child.num_vertices()) {
    throw ContractViolation("rename_from: surviving ids do not match");
  }
  HypergraphDocument doc;
  doc.graph = child;
  for (VertexId v : surviving) doc.names.push_back(parent.names.at(v));
  return doc;
}

VertexId find_vertex(const HypergraphDocument& doc, std::string_view name) {
  auto it = std::lower_bound(doc.names.begin(), doc.names.end(), name);
  if (it == doc.names.end() || *it != name) return -1;
  return static_cast<VertexId>(it - doc.names.begin());
}

}  // namespace aegame
