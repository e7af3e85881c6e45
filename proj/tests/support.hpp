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

#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include "seidel/error.hpp"
#include "seidel/graph.hpp"
#include "seidel/graph_io.hpp"

namespace support {

// Kind of the seidel::Error thrown by f, or nullopt if it returned.
inline std::optional<seidel::ErrorKind> thrown(const std::function<void()>& f) {
  try {
    f();
  } catch (const seidel::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(SEIDEL_FIXTURE_DIR) / name;
}

inline seidel::GraphDocument load(const std::string& name) {
  return seidel::read_graph_document(fixture(name));
}

inline seidel::WeightedDigraph k2() {
  seidel::WeightedDigraph g(2);
  g.add_undirected(0, 1, 1.0);
  return g;
}

}  // namespace support
