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

#include "seidel/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "seidel/error.hpp"

namespace seidel {

namespace {

constexpr double kSymmetryTol = 1e-12;

std::string shape(const DenseMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_square(const DenseMatrix& m) {
  if (!is_square(m)) throw Error(ErrorKind::NotSquare, "matrix is " + shape(m));
}

}  // namespace

DenseMatrix identity(std::size_t n) {
  return DenseMatrix::Identity(static_cast<Eigen::Index>(n),
                               static_cast<Eigen::Index>(n));
}

DenseMatrix ones(std::size_t rows, std::size_t cols) {
  return DenseMatrix::Ones(static_cast<Eigen::Index>(rows),
                           static_cast<Eigen::Index>(cols));
}

double max_abs(const DenseMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::OrderMismatch, shape(a) + " vs " + shape(b));
  }
  return max_abs(a - b);
}

bool is_square(const DenseMatrix& m) noexcept { return m.rows() == m.cols(); }

bool is_symmetric(const DenseMatrix& m, double tol) {
  if (!is_square(m)) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
      if (std::abs(m(i, j) - m(j, i)) > tol) return false;
    }
  }
  return true;
}

Spectrum spectrum(const DenseMatrix& m) {
  require_square(m);
  if (!is_symmetric(m, kSymmetryTol)) {
    throw Error(ErrorKind::NotSymmetric, "spectrum needs a symmetric matrix");
  }
  Spectrum out;
  if (m.rows() == 0) return out;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      Eigen::MatrixXd(m), Eigen::EigenvaluesOnly);
  const auto& values = solver.eigenvalues();
  out.eigenvalues.assign(values.data(), values.data() + values.size());
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  return out;
}

ComplexSpectrum general_spectrum(const DenseMatrix& m) {
  require_square(m);
  ComplexSpectrum out;
  if (m.rows() == 0) return out;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(Eigen::MatrixXd(m), false);
  const auto& values = solver.eigenvalues();
  out.eigenvalues.assign(values.data(), values.data() + values.size());
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(),
            [](const auto& x, const auto& y) {
              return x.real() != y.real() ? x.real() < y.real()
                                          : x.imag() < y.imag();
            });
  return out;
}

double spectral_gap(const Spectrum& a, const Spectrum& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::OrderMismatch, std::to_string(a.size()) + " vs " +
                                              std::to_string(b.size()));
  }
  double gap = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    gap = std::max(gap, std::abs(a.eigenvalues[i] - b.eigenvalues[i]));
  }
  return gap;
}

double spectral_gap(const ComplexSpectrum& a, const ComplexSpectrum& b) {
  if (a.eigenvalues.size() != b.eigenvalues.size()) {
    return std::numeric_limits<double>::infinity();
  }
  // Nearest-unmatched pairing; exact for well-separated clusters, which is
  // all the comparison needs.
  std::vector<bool> used(b.eigenvalues.size(), false);
  double gap = 0.0;
  for (const auto& x : a.eigenvalues) {
    std::size_t best = 0;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < b.eigenvalues.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(x - b.eigenvalues[j]);
      if (d < best_dist) {
        best_dist = d;
        best = j;
      }
    }
    used[best] = true;
    gap = std::max(gap, best_dist);
  }
  return gap;
}

bool cospectral(const DenseMatrix& a, const DenseMatrix& b, double tol) {
  require_square(a);
  require_square(b);
  if (a.rows() != b.rows()) {
    throw Error(ErrorKind::OrderMismatch, shape(a) + " vs " + shape(b));
  }
  const double scale = 1.0 + std::max(max_abs(a), max_abs(b));
  return spectral_gap(spectrum(a), spectrum(b)) <= tol * scale;
}

bool cospectral_general(const DenseMatrix& a, const DenseMatrix& b, double tol) {
  require_square(a);
  require_square(b);
  if (a.rows() != b.rows()) {
    throw Error(ErrorKind::OrderMismatch, shape(a) + " vs " + shape(b));
  }
  const double scale = 1.0 + std::max(max_abs(a), max_abs(b));
  return spectral_gap(general_spectrum(a), general_spectrum(b)) <= tol * scale;
}

}  // namespace seidel
