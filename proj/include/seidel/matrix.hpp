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

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace seidel {

/// Dense real matrix, row-major. All graph and operator matrices in the
/// toolkit are materialized as this type.
using DenseMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using DenseVector = Eigen::VectorXd;

/// Ascending real eigenvalues of a symmetric matrix.
struct Spectrum {
  std::vector<double> eigenvalues;

  std::size_t size() const noexcept { return eigenvalues.size(); }
  double min() const { return eigenvalues.front(); }
  double max() const { return eigenvalues.back(); }
};

/// Eigenvalues of a general real matrix, ordered by (real, imag).
struct ComplexSpectrum {
  std::vector<std::complex<double>> eigenvalues;
};

DenseMatrix identity(std::size_t n);
DenseMatrix ones(std::size_t rows, std::size_t cols);

double max_abs(const DenseMatrix& m);
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);
bool is_square(const DenseMatrix& m) noexcept;
bool is_symmetric(const DenseMatrix& m, double tol);

/// Eigenvalues of a square symmetric matrix (symmetry checked at 1e-12).
/// Throws NotSquare / NotSymmetric.
Spectrum spectrum(const DenseMatrix& m);

/// Eigenvalues of any square matrix. Throws NotSquare.
ComplexSpectrum general_spectrum(const DenseMatrix& m);

/// Largest elementwise gap between two sorted spectra. Throws OrderMismatch.
double spectral_gap(const Spectrum& a, const Spectrum& b);

/// Largest gap of an optimal-by-greedy pairing of two complex multisets.
/// Returns +inf when the sizes differ.
double spectral_gap(const ComplexSpectrum& a, const ComplexSpectrum& b);

/// True iff the sorted spectra agree elementwise within
/// tol * (1 + max|entry|). Throws OrderMismatch for different orders.
bool cospectral(const DenseMatrix& a, const DenseMatrix& b, double tol);

/// As cospectral(), for non-symmetric inputs (complex eigenvalues).
bool cospectral_general(const DenseMatrix& a, const DenseMatrix& b, double tol);

}  // namespace seidel
