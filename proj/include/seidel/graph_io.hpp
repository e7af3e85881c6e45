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

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seidel/graph.hpp"
#include "seidel/switching.hpp"

namespace seidel {

/// On-disk graph description (JSON):
///
///   {
///     "order": 3,
///     "edges": [[0, 1, 1], [1, 0, 1]],
///     "partition": {"cells": [[0, 1]], "d": [2]},
///     "metadata": {"name": "...", "notes": "...", "labels": [1, 2, 3]}
///   }
///
/// Vertex indices are 0-based; `labels` optionally maps them to external
/// (e.g. 1-based) names. `partition` and `metadata` are optional.
struct GraphDocument {
  std::size_t order = 0;
  std::vector<Edge> edges;
  std::optional<SeidelPartition> partition;
  std::string name;
  std::string notes;
  std::vector<long long> labels;

  /// Throws the WeightedDigraph construction errors.
  WeightedDigraph graph() const;

  /// Edges taken from g in (from, to) order; partition and metadata copied
  /// from `like` when given.
  static GraphDocument from_graph(const WeightedDigraph& g,
                                  const GraphDocument* like = nullptr);
};

/// Throws ParseError. Syntax errors carry the line number; schema errors
/// name the offending field or edge.
GraphDocument parse_graph_document(std::string_view text);

GraphDocument read_graph_document(const std::filesystem::path& path);

/// Canonical text: edges sorted by (from, to), one per line, weights in
/// shortest round-trip decimal form.
std::string write_graph_document(const GraphDocument& doc);

void save_graph_document(const GraphDocument& doc, const std::filesystem::path& path);

/// Shortest decimal string that parses back to exactly x.
std::string format_real(double x);

}  // namespace seidel
