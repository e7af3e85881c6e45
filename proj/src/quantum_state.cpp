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

#include "seidel/quantum_state.hpp"

#include <cmath>
#include <string>

#include "seidel/error.hpp"

namespace seidel {

DensityMatrix::DensityMatrix(DenseMatrix m) : matrix_(std::move(m)) {
  if (!is_square(matrix_)) throw Error(ErrorKind::NotSquare, "density matrix must be square");
  if (!is_symmetric(matrix_, 1e-12)) {
    throw Error(ErrorKind::NotSymmetric, "density matrix must be symmetric");
  }
  const double tr = matrix_.trace();
  if (std::abs(tr - 1.0) > 1e-12) {
    throw Error(ErrorKind::ZeroTrace, "trace is " + std::to_string(tr) + ", not 1");
  }
  eigenvalues_ = spectrum(matrix_);
  for (double& lambda : eigenvalues_.eigenvalues) {
    if (lambda < -kPsdTolerance) {
      throw Error(ErrorKind::NotPSD, "eigenvalue " + std::to_string(lambda));
    }
    if (lambda < 0.0) lambda = 0.0;
  }
}

std::size_t DensityMatrix::rank(double tol) const {
  std::size_t r = 0;
  for (double lambda : eigenvalues_.eigenvalues) r += lambda > tol;
  return r;
}

double DensityMatrix::purity() const { return matrix_.cwiseProduct(matrix_).sum(); }

DensityMatrix density_from_graph(const WeightedDigraph& g, SpectralKind kind) {
  const DenseMatrix m = graph_matrix(g, kind);
  const double tr = m.trace();
  if (!(tr > 0.0)) {
    throw Error(ErrorKind::ZeroTrace,
                "tr(" + std::string(kind == SpectralKind::Laplacian ? "L" : "Q") +
                    ") = " + std::to_string(tr));
  }
  // Check definiteness on the unnormalized matrix so the error reports the
  // graph's own eigenvalue.
  const Spectrum s = spectrum(m);
  if (!s.eigenvalues.empty() && s.min() < -kPsdTolerance * (1.0 + max_abs(m))) {
    throw Error(ErrorKind::NotPSD,
                "graph matrix has eigenvalue " + std::to_string(s.min()));
  }
  return DensityMatrix(m / tr);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  double s = 0.0;
  for (double lambda : rho.eigenvalues().eigenvalues) {
    if (lambda > 0.0) s -= lambda * std::log2(lambda);
  }
  return s;
}

bool is_pure(const DensityMatrix& rho, double tol) { return rho.rank(tol) == 1; }

}  // namespace seidel
