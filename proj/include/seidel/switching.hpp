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
#include <vector>

#include "seidel/graph.hpp"
#include "seidel/matrix.hpp"

namespace seidel {

/// Cell decomposition {C_1..C_k, D} of the vertex set. Every cell has at
/// least two vertices; D may be empty.
struct SeidelPartition {
  std::vector<std::vector<Vertex>> cells;
  std::vector<Vertex> d_cell;

  /// Throws InvalidPartition unless the cells and D are disjoint, cover
  /// 0..order-1 and every cell has size >= 2.
  void check(std::size_t order) const;

  /// Cells in order, then D: the basis in which block_seidel() is
  /// block-diagonal.
  std::vector<Vertex> vertex_order() const;

  std::size_t order() const;
};

/// Category of a D vertex with respect to one cell: adjacent to all,
/// half or none of the cell's vertices.
enum class Category { Full = 1, Half = 2, None = 3 };

struct CellCategories {
  /// Parallel to SeidelPartition::d_cell.
  std::vector<Category> of_d_vertex;
  std::size_t p = 0;
  std::size_t q = 0;
  std::size_t r = 0;
};

struct CategoryReport {
  /// One entry per cell.
  std::vector<CellCategories> cells;
};

/// Either U_n = (2/n)J_n - I_n, or diag{U_{n_1}, ..., U_{n_k}, I_{|D|}}.
class SeidelOperator {
 public:
  enum class Kind { Single, Block };

  /// Throws InvalidOrder for n < 2.
  static SeidelOperator single(std::size_t n);
  /// Throws InvalidOrder if any block is smaller than 2.
  static SeidelOperator block(std::vector<std::size_t> block_sizes,
                              std::size_t identity_size);

  Kind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& block_sizes() const noexcept { return blocks_; }
  std::size_t identity_size() const noexcept { return identity_; }
  std::size_t order() const noexcept;

  DenseMatrix materialize() const;

 private:
  SeidelOperator(Kind kind, std::vector<std::size_t> blocks, std::size_t identity)
      : kind_(kind), blocks_(std::move(blocks)), identity_(identity) {}

  Kind kind_;
  std::vector<std::size_t> blocks_;
  std::size_t identity_;
};

/// U_n: diagonal 2/n - 1, off-diagonal 2/n. Throws InvalidOrder for n < 2.
DenseMatrix seidel_matrix(std::size_t n);

SeidelOperator block_seidel(const SeidelPartition& part);

/// The block operator expressed in the graph's own vertex indexing, so
/// that A(G^pi) = U A(G) U with U from this function.
DenseMatrix seidel_operator_for(const SeidelPartition& part, std::size_t order);

/// U_m a U_n for an m x n matrix with constant row sum r, evaluated in
/// closed form as a + (2r/n) J - (2/m) j c^T with c the column sums.
/// Throws NonConstantRowSum.
DenseMatrix lemma1_transform(const DenseMatrix& a);

/// U_{2m} x = c j - x for x with m zero entries and m entries equal to c.
/// Throws NotHalfAndHalf.
DenseVector lemma2_transform(const DenseVector& x);

/// Checks the four Seidel-graph conditions and classifies every D vertex
/// per cell. Throws InvalidPartition, NotRegularInduced, BadAdjacencyCount,
/// UnequalWeights.
CategoryReport validate_seidel(const WeightedDigraph& g, const SeidelPartition& part);

struct SwitchOptions {
  /// Run validate_seidel first. When false only the conditions the
  /// edge-wise construction itself relies on are checked.
  bool validate = true;
  /// Cross-check the result against U A U (1e-12, scaled by 1 + max|a|).
  bool verify = false;
};

/// Generalized Seidel switching G -> G^pi, built edge by edge: half-adjacent
/// D vertices move to the complementary half of the cell, fully adjacent
/// ones get weights (2s/n) j - x, cross-cell blocks become U_m B U_n.
/// Cell-internal edges, loops and everything inside D are untouched.
WeightedDigraph seidel_switch(const WeightedDigraph& g, const SeidelPartition& part,
                              SwitchOptions options = {});

/// A(G') = U A(G) U computed by dense multiplication, with no structural
/// requirement on g beyond a well-formed partition.
WeightedDigraph conjugate_switch(const WeightedDigraph& g, const SeidelPartition& part);

}  // namespace seidel
