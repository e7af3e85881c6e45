// Copyright 2026 The Seidel Toolkit Authors
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

#include "seidel/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "seidel/error.hpp"

namespace seidel {

namespace {

using json = nlohmann::json;

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorKind::ParseError, what);
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(byte), '\n'));
}

std::size_t as_index(const json& v, std::size_t order, const std::string& where) {
  if (!v.is_number_integer()) schema_error(where + ": vertex index must be an integer");
  const auto i = v.get<long long>();
  if (i < 0 || static_cast<std::size_t>(i) >= order) {
    schema_error(where + ": vertex " + std::to_string(i) + " outside [0, " +
                 std::to_string(order) + ")");
  }
  return static_cast<std::size_t>(i);
}

std::vector<Vertex> as_index_list(const json& v, std::size_t order, const std::string& where) {
  if (!v.is_array()) schema_error(where + " must be a list of vertex indices");
  std::vector<Vertex> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    out.push_back(as_index(v[k], order, where + "[" + std::to_string(k) + "]"));
  }
  return out;
}

void write_index_list(std::ostringstream& os, const std::vector<Vertex>& list) {
  os << '[';
  for (std::size_t k = 0; k < list.size(); ++k) os << (k ? ", " : "") << list[k];
  os << ']';
}

}  // namespace

WeightedDigraph GraphDocument::graph() const { return WeightedDigraph::from_edges(order, edges); }

GraphDocument GraphDocument::from_graph(const WeightedDigraph& g, const GraphDocument* like) {
  GraphDocument doc;
  if (like != nullptr) doc = *like;
  doc.order = g.order();
  doc.edges = g.edge_list();
  return doc;
}

GraphDocument parse_graph_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError,
                "line " + std::to_string(line_of(text, e.byte == 0 ? 0 : e.byte - 1)) + ": " +
                    e.what());
  }
  if (!root.is_object()) schema_error("top level must be an object");

  GraphDocument doc;
  if (!root.contains("order") || !root["order"].is_number_integer() ||
      root["order"].get<long long>() < 1) {
    schema_error("`order` must be a positive integer");
  }
  doc.order = root["order"].get<std::size_t>();

  if (!root.contains("edges") || !root["edges"].is_array()) {
    schema_error("`edges` must be a list of [u, v, weight] triples");
  }
  std::set<std::pair<Vertex, Vertex>> seen;
  const json& edges = root["edges"];
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::string where = "edges[" + std::to_string(k) + "]";
    const json& e = edges[k];
    if (!e.is_array() || e.size() != 3 || !e[2].is_number()) {
      schema_error(where + " must be [u, v, weight]");
    }
    const Vertex u = as_index(e[0], doc.order, where);
    const Vertex v = as_index(e[1], doc.order, where);
    const double w = e[2].get<double>();
    if (w == 0.0) schema_error(where + ": weight 0 means no edge; drop the entry");
    if (!seen.emplace(u, v).second) {
      schema_error(where + ": duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    doc.edges.push_back({u, v, w});
  }

  if (root.contains("partition") && !root["partition"].is_null()) {
    const json& p = root["partition"];
    if (!p.is_object() || !p.contains("cells") || !p["cells"].is_array()) {
      schema_error("`partition` must be {\"cells\": [[...], ...], \"d\": [...]}");
    }
    SeidelPartition part;
    for (std::size_t k = 0; k < p["cells"].size(); ++k) {
      part.cells.push_back(
          as_index_list(p["cells"][k], doc.order, "partition.cells[" + std::to_string(k) + "]"));
    }
    if (p.contains("d")) part.d_cell = as_index_list(p["d"], doc.order, "partition.d");
    doc.partition = std::move(part);
  }

  if (root.contains("metadata") && root["metadata"].is_object()) {
    const json& m = root["metadata"];
    if (m.contains("name") && m["name"].is_string()) doc.name = m["name"].get<std::string>();
    if (m.contains("notes") && m["notes"].is_string()) doc.notes = m["notes"].get<std::string>();
    if (m.contains("labels")) {
      if (!m["labels"].is_array() || m["labels"].size() != doc.order) {
        schema_error("metadata.labels must list one label per vertex");
      }
      for (const auto& l : m["labels"]) {
        if (!l.is_number_integer()) schema_error("metadata.labels entries must be integers");
        doc.labels.push_back(l.get<long long>());
      }
    }
  }
  return doc;
}

GraphDocument read_graph_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_graph_document(buffer.str());
  } catch (const Error& e) {
    std::string_view detail = e.what();
    detail.remove_prefix(std::min(detail.size(), to_string(ErrorKind::ParseError).size() + 2));
    throw Error(ErrorKind::ParseError, path.string() + ": " + std::string(detail));
  }
}

std::string format_real(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string write_graph_document(const GraphDocument& doc) {
  std::vector<Edge> edges = doc.edges;
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.from, a.to) < std::pair(b.from, b.to);
  });

  std::ostringstream os;
  os << "{\n  \"order\": " << doc.order << ",\n  \"edges\": [";
  for (std::size_t k = 0; k < edges.size(); ++k) {
    os << (k ? ",\n    " : "\n    ") << '[' << edges[k].from << ", " << edges[k].to << ", "
       << format_real(edges[k].weight) << ']';
  }
  os << (edges.empty() ? "]" : "\n  ]");

  if (doc.partition) {
    os << ",\n  \"partition\": {\n    \"cells\": [";
    for (std::size_t k = 0; k < doc.partition->cells.size(); ++k) {
      os << (k ? ", " : "");
      write_index_list(os, doc.partition->cells[k]);
    }
    os << "],\n    \"d\": ";
    write_index_list(os, doc.partition->d_cell);
    os << "\n  }";
  }

  if (!doc.name.empty() || !doc.notes.empty() || !doc.labels.empty()) {
    os << ",\n  \"metadata\": {";
    bool first = true;
    auto field = [&](const char* key) {
      os << (first ? "\n    \"" : ",\n    \"") << key << "\": ";
      first = false;
    };
    if (!doc.name.empty()) {
      field("name");
      os << json(doc.name).dump();
    }
    if (!doc.notes.empty()) {
      field("notes");
      os << json(doc.notes).dump();
    }
    if (!doc.labels.empty()) {
      field("labels");
      os << '[';
      for (std::size_t k = 0; k < doc.labels.size(); ++k) os << (k ? ", " : "") << doc.labels[k];
      os << ']';
    }
    os << "\n  }";
  }
  os << "\n}\n";
  return os.str();
}

void save_graph_document(const GraphDocument& doc, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path.string());
  out << write_graph_document(doc);
}

}  // namespace seidel
