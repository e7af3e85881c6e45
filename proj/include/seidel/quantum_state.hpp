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

#include "seidel/graph.hpp"
#include "seidel/matrix.hpp"

namespace seidel {

/// Trace-one, symmetric, positive semidefinite real matrix. Construction
/// checks all three (trace and symmetry at 1e-12, eigenvalues >= -1e-9).
class DensityMatrix {
 public:
  /// Throws NotSquare, NotSymmetric, ZeroTrace (trace not 1) or NotPSD.
  explicit DensityMatrix(DenseMatrix m);

  const DenseMatrix& matrix() const noexcept { return matrix_; }
  std::size_t order() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
  /// Eigenvalues with values in [-1e-9, 0) clamped to 0.
  const Spectrum& eigenvalues() const noexcept { return eigenvalues_; }

  /// Numerical rank: eigenvalues above tol.
  std::size_t rank(double tol) const;
  /// tr(rho^2).
  double purity() const;

 private:
  DenseMatrix matrix_;
  Spectrum eigenvalues_;
};

inline constexpr double kPsdTolerance = 1e-9;

/// rho_l = L / tr(L) or rho_q = Q / tr(Q).
/// Throws AsymmetricWeights, ZeroTrace, NotPSD.
DensityMatrix density_from_graph(const WeightedDigraph& g, SpectralKind kind);

/// S = -sum lambda log2 lambda, with 0 log 0 = 0.
double von_neumann_entropy(const DensityMatrix& rho);

/// Rank one, i.e. exactly one eigenvalue above tol.
bool is_pure(const DensityMatrix& rho, double tol);

}  // namespace seidel
