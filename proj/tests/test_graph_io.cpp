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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "seidel/graph_io.hpp"
#include "support.hpp"

using namespace seidel;
using support::thrown;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string parse_message(std::string_view text) {
  try {
    parse_graph_document(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("every fixture round-trips byte for byte") {
  for (const auto& entry : std::filesystem::directory_iterator(SEIDEL_FIXTURE_DIR)) {
    if (entry.path().extension() != ".graph") continue;
    CAPTURE(entry.path().string());
    const std::string text = slurp(entry.path());
    CHECK(write_graph_document(parse_graph_document(text)) == text);
  }
}

TEST_CASE("documents keep partition and metadata") {
  const auto doc = support::load("fig4_left.graph");
  CHECK(doc.order == 10);
  REQUIRE(doc.partition);
  CHECK(doc.partition->cells.size() == 2);
  CHECK(doc.partition->d_cell == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(doc.labels.size() == 10);
  CHECK(doc.labels[0] == 1);
}

TEST_CASE("weights survive the round trip exactly") {
  GraphDocument doc;
  doc.order = 2;
  doc.edges = {{0, 1, 0.1}, {1, 0, -1.0 / 3.0}, {0, 0, 1e-7}};
  const GraphDocument back = parse_graph_document(write_graph_document(doc));
  CHECK(back.graph() == doc.graph());
  CHECK(format_real(2.0) == "2");
  CHECK(format_real(0.1) == "0.1");
}

TEST_CASE("syntax errors report the line") {
  const std::string msg = parse_message("{\n  \"order\": 2,\n  \"edges\": [[0, 1, 1],,]\n}\n");
  CHECK(msg.find("ParseError") == 0);
  CHECK(msg.find("line 3") != std::string::npos);
}

TEST_CASE("schema errors") {
  CHECK(thrown([] { parse_graph_document("[]"); }) == ErrorKind::ParseError);
  CHECK(thrown([] { parse_graph_document(R"({"edges": []})"); }) == ErrorKind::ParseError);
  CHECK(thrown([] { parse_graph_document(R"({"order": 2, "edges": [[0, 2, 1]]})"); }) == ErrorKind::ParseError);
  CHECK(thrown([] { parse_graph_document(R"({"order": 2, "edges": [[0, 1, 0]]})"); }) == ErrorKind::ParseError);
  CHECK(thrown([] { parse_graph_document(R"({"order": 2, "edges": [[0, 1, 1], [0, 1, 2]]})"); }) ==
        ErrorKind::ParseError);
  CHECK(thrown([] { parse_graph_document(R"({"order": 2, "edges": [], "partition": {"d": []}})"); }) ==
        ErrorKind::ParseError);
  CHECK(thrown([] { parse_graph_document(R"({"order": 2, "edges": [], "metadata": {"labels": [1]}})"); }) ==
        ErrorKind::ParseError);
  CHECK(thrown([] { read_graph_document("/nonexistent/x.graph"); }) == ErrorKind::ParseError);
}
