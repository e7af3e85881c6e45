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

// Reference implementations used to check the library. Everything here is
// written out by hand on nested vectors so that no result depends on the
// Eigen code paths under test.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "seidel/matrix.hpp"

namespace oracle {

using Mat = std::vector<std::vector<double>>;
using Vec = std::vector<double>;

inline Mat zeros(std::size_t r, std::size_t c) { return Mat(r, Vec(c, 0.0)); }

inline Mat eye(std::size_t n) {
  Mat m = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1.0;
  return m;
}

inline Mat from_dense(const seidel::DenseMatrix& d) {
  Mat m = zeros(static_cast<std::size_t>(d.rows()), static_cast<std::size_t>(d.cols()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      m[i][j] = d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return m;
}

inline seidel::DenseMatrix to_dense(const Mat& m) {
  const auto r = static_cast<Eigen::Index>(m.size());
  const auto c = static_cast<Eigen::Index>(m.empty() ? 0 : m[0].size());
  seidel::DenseMatrix d(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = 0; j < c; ++j) {
      d(i, j) = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  return d;
}

inline Mat multiply(const Mat& a, const Mat& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Mat c = zeros(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      double s = 0.0;
      for (std::size_t t = 0; t < k; ++t) s += a[i][t] * b[t][j];
      c[i][j] = s;
    }
  }
  return c;
}

inline Vec multiply(const Mat& a, const Vec& x) {
  Vec y(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t t = 0; t < x.size(); ++t) y[i] += a[i][t] * x[t];
  }
  return y;
}

inline Mat transpose(const Mat& a) {
  Mat t = zeros(a.empty() ? 0 : a[0].size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  }
  return t;
}

inline Mat kron(const Mat& a, const Mat& b) {
  const std::size_t ar = a.size(), ac = a[0].size(), br = b.size(), bc = b[0].size();
  Mat k = zeros(ar * br, ac * bc);
  for (std::size_t i = 0; i < ar; ++i)
    for (std::size_t j = 0; j < ac; ++j)
      for (std::size_t p = 0; p < br; ++p)
        for (std::size_t q = 0; q < bc; ++q) k[i * br + p][j * bc + q] = a[i][j] * b[p][q];
  return k;
}

inline double max_abs_diff(const Mat& a, const Mat& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
  return d;
}

// U_n straight from its entries: 2/n off the diagonal, 2/n - 1 on it.
inline Mat seidel(std::size_t n) {
  Mat u = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) u[i][j] = 2.0 / static_cast<double>(n) - (i == j ? 1.0 : 0.0);
  return u;
}

// Cyclic Jacobi rotations; ascending eigenvalues of a symmetric matrix.
inline Vec jacobi_eigenvalues(Mat a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  Vec ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
  std::sort(ev.begin(), ev.end());
  return ev;
}

// Descending singular values from the eigenvalues of the smaller Gram
// matrix. Accurate to roughly sqrt(eps) * s_max for the tiny ones, which
// is plenty for rank decisions and for sums of squares.
inline Vec singular_values(const Mat& c) {
  const bool wide = c.size() < c[0].size();
  const Mat g = wide ? multiply(c, transpose(c)) : multiply(transpose(c), c);
  Vec ev = jacobi_eigenvalues(g);
  Vec s;
  for (double e : ev) s.push_back(std::sqrt(std::max(e, 0.0)));
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

inline std::size_t rank(const Vec& singular, double rel_tol = 1e-6) {
  return static_cast<std::size_t>(
      std::count_if(singular.begin(), singular.end(), [&](double s) { return s > rel_tol * singular[0]; }));
}

// Realignment written from the block picture: row i*m + j holds block
// (i, j) read row by row.
inline Mat realign(const Mat& u, std::size_t m, std::size_t n) {
  Mat r = zeros(m * m, n * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) r[i * m + j][p * n + q] = u[i * n + p][j * n + q];
  return r;
}

inline double entropy_bits(const Vec& probabilities) {
  double h = 0.0;
  for (double p : probabilities)
    if (p > 0.0) h -= p * std::log2(p);
  return h;
}

}  // namespace oracle
