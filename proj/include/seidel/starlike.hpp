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
#include <span>
#include <vector>

#include "seidel/graph.hpp"
#include "seidel/switching.hpp"

namespace seidel {

/// Uniform edge weights of one starlike cell. A weight is 0 when the
/// corresponding category (or direction) has no edges.
struct StarlikeCellProfile {
  double w_plus = 0.0;       // category-1 edges D -> C_i
  double w_minus = 0.0;      // category-1 edges C_i -> D
  double w_sup_plus = 0.0;   // category-2 edges D -> C_i
  double w_sup_minus = 0.0;  // category-2 edges C_i -> D
  std::size_t q = 0;         // number of category-2 vertices, always even
  /// The n_i/2-subset reached by the first half of the category-2
  /// vertices; the other half reach its complement. Empty when q == 0.
  std::vector<Vertex> half;
};

/// validate_seidel plus the starlike conditions: no cross-cell edges,
/// uniform category-1 weights per direction, an even number of category-2
/// vertices split evenly over complementary halves with uniform weights.
/// Throws the validate_seidel errors, CrossCellEdge,
/// NonuniformCategory1Weights, UnequalWeights, OddCategory2Count,
/// NonComplementaryHalves.
std::vector<StarlikeCellProfile> validate_starlike(const WeightedDigraph& g,
                                                   const SeidelPartition& part);

/// H with A(H) = L(G) or Q(G). Throws AsymmetricWeights.
WeightedDigraph lift_to_h(const WeightedDigraph& g, SpectralKind kind);

/// G' with L(G') (resp. Q(G')) equal to A(h_pi).
///
/// Signless case: off-diagonals copy over and the loop at i is
/// (a_ii - sum_{j != i} |a_ij|) / 2, which must be >= 0.
///
/// Laplacian case: off-diagonals flip sign and the diagonal must equal
/// sum_{j != i} |a_ij|. L cannot see a nonnegative loop, so the loops of
/// G' are taken from `loops` (one per vertex) when given and are 0
/// otherwise.
///
/// Throws AsymmetricWeights, NegativeLoopWeight.
WeightedDigraph project_from_h(const WeightedDigraph& h_pi, SpectralKind kind,
                               std::span<const double> loops = {});

/// As project_from_h, starting from the matrix A(H^pi) directly.
WeightedDigraph project_from_matrix(const DenseMatrix& a, SpectralKind kind,
                                    std::span<const double> loops = {});

/// G -> H -> H^pi -> G'. With force, starlike validation is skipped and
/// H^pi = U A(H) U is formed by dense multiplication; the result is still
/// cospectral by construction when it is realizable as a graph.
WeightedDigraph lq_switch(const WeightedDigraph& g, const SeidelPartition& part,
                          SpectralKind kind, bool force = false);

/// Diagonals of A(g) and A(g_prime) match exactly. Throws OrderMismatch.
bool loop_weights_preserved(const WeightedDigraph& g, const WeightedDigraph& g_prime);

inline constexpr std::size_t kMaxIsomorphismOrder = 12;

/// Exhaustive search for a weight-preserving vertex bijection, pruned by
/// per-vertex (loop, out-weights, in-weights) signatures. Weights match when
/// they differ by at most tol. Throws TooLarge above kMaxIsomorphismOrder.
bool brute_force_isomorphic(const WeightedDigraph& g, const WeightedDigraph& h,
                            double tol = 0.0);

}  // namespace seidel
