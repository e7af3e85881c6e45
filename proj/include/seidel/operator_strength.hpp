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
#include <iosfwd>
#include <string>
#include <vector>

#include "seidel/matrix.hpp"
#include "seidel/switching.hpp"

namespace seidel {

/// H^m (x) H^n split of an operator of order m*n; both factors >= 2.
struct Bipartition {
  std::size_t m = 0;
  std::size_t n = 0;

  std::size_t order() const noexcept { return m * n; }
  bool operator==(const Bipartition&) const = default;
};

/// Operator Schmidt coefficients across a bipartition, descending, with
/// the two strengths derived from them.
struct SchmidtProfile {
  Bipartition bipartition;
  std::vector<double> coefficients;
  double k_sch = 0.0;
  double k_wz = 0.0;
};

/// Singular values below this fraction of the largest count as zero.
inline constexpr double kRankTolerance = 1e-8;
inline constexpr double kUnitaryTolerance = 1e-9;

/// Row-major flattening of a square matrix. Throws NotSquare.
DenseVector vec_row(const DenseMatrix& a);

/// Splits u into M x M blocks of size N x N; row i*M + j of the result is
/// vec_row(A_ij). Throws BadBipartition.
DenseMatrix realignment(const DenseMatrix& u, Bipartition bip);

/// Number of singular values above tol * s_max.
std::size_t numerical_rank(const std::vector<double>& singular_values, double tol);

/// u is a product u1 (x) u2 across bip iff its realignment has rank one.
/// Throws NotUnitary, BadBipartition.
bool is_local(const DenseMatrix& u, Bipartition bip, double tol = kRankTolerance);

/// Singular values of the realigned matrix (the coefficient matrix in the
/// product basis E_i (x) E_j). Fills coefficients, k_sch and k_wz.
/// Throws NotUnitary, BadBipartition.
SchmidtProfile schmidt_coefficients(const DenseMatrix& u, Bipartition bip);

/// Shannon entropy (bits) of {s_i^2 / mn}.
double k_sch(const SchmidtProfile& profile);
/// 1 - sum s_i^4 / (mn)^2.
double k_wz(const SchmidtProfile& profile);

/// Ordered factor pairs (m, n), m, n >= 2, of `order`, ascending in m.
std::vector<Bipartition> factorizations(std::size_t order);

struct ScanRow {
  std::size_t order = 0;
  std::size_t m = 0;
  std::size_t n = 0;
  SeidelOperator::Kind kind = SeidelOperator::Kind::Single;
  double k_sch = 0.0;
  double k_wz = 0.0;
};

struct ScanOptions {
  /// Also analyse U_2 (+) I_{o-2} for every composite order o.
  bool include_blocks = false;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;
};

/// One row per composite order 4..max_order and ordered factorization,
/// sorted by (order, m, kind). Throws InvalidOrder for max_order < 4.
std::vector<ScanRow> strength_scan(std::size_t max_order, ScanOptions options = {});

/// Header `order,m,n,kind,k_sch,k_wz`, reals with 12 decimals.
void write_scan_csv(std::ostream& os, const std::vector<ScanRow>& rows);

std::string to_string(SeidelOperator::Kind kind);

}  // namespace seidel
