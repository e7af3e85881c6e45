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
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "seidel/matrix.hpp"

namespace seidel {

using Vertex = std::size_t;

struct Edge {
  Vertex from;
  Vertex to;
  double weight;

  bool operator==(const Edge&) const = default;
};

enum class SpectralKind { Laplacian, SignlessLaplacian };

/// Weighted multi-digraph with loops. At most one edge per ordered pair,
/// so two vertices carry at most two oppositely-oriented edges. A stored
/// weight is never zero; a loop weight is always positive.
class WeightedDigraph {
 public:
  using EdgeMap = std::map<std::pair<Vertex, Vertex>, double>;

  WeightedDigraph() = default;
  explicit WeightedDigraph(std::size_t order) : order_(order) {}

  /// Throws InvalidVertex, ZeroWeight, NonPositiveLoop or ParallelEdges.
  static WeightedDigraph from_edges(std::size_t order, std::span<const Edge> edges);

  /// Builds the graph whose adjacency matrix is `a`. Entries with
  /// |a_ij| <= zero_tol are treated as absent. Throws NotSquare and
  /// NonPositiveLoop.
  static WeightedDigraph from_adjacency(const DenseMatrix& a, double zero_tol = 0.0);

  std::size_t order() const noexcept { return order_; }
  const EdgeMap& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  void add_edge(Vertex from, Vertex to, double weight);
  /// Adds an edge in both directions with the same weight.
  void add_undirected(Vertex u, Vertex v, double weight);

  bool has_edge(Vertex from, Vertex to) const;
  /// 0 when absent.
  double weight(Vertex from, Vertex to) const;
  double loop(Vertex v) const { return weight(v, v); }

  /// w(i,j) == w(j,i) for every ordered pair, compared exactly.
  bool has_symmetric_weights() const;

  std::vector<Edge> edge_list() const;

  bool operator==(const WeightedDigraph&) const = default;

 private:
  void check_vertex(Vertex v) const;

  std::size_t order_ = 0;
  EdgeMap edges_;
};

DenseMatrix adjacency_matrix(const WeightedDigraph& g);

/// diag(d_i) with d_i = sum_j |a_ij|; a loop contributes its weight once.
DenseMatrix degree_matrix(const WeightedDigraph& g);

/// D - A. Throws AsymmetricWeights.
DenseMatrix laplacian(const WeightedDigraph& g);
/// D + A. Throws AsymmetricWeights.
DenseMatrix signless_laplacian(const WeightedDigraph& g);
DenseMatrix graph_matrix(const WeightedDigraph& g, SpectralKind kind);

/// D_out -/+ A without the symmetry requirement. Used only when comparing
/// directed inputs whose spectra are complex.
DenseMatrix directed_graph_matrix(const WeightedDigraph& g, SpectralKind kind);

/// Throws AsymmetricWeights unless w(i,j) == w(j,i) for every pair.
void require_symmetric_weights(const WeightedDigraph& g);

}  // namespace seidel
