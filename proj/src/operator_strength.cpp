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

#include "seidel/operator_strength.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>
#include <tuple>

#include "seidel/error.hpp"

namespace seidel {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

void require_bipartition(const DenseMatrix& u, Bipartition bip) {
  if (!is_square(u)) throw Error(ErrorKind::NotSquare, "operator must be square");
  if (bip.m < 2 || bip.n < 2 || bip.order() != static_cast<std::size_t>(u.rows())) {
    throw Error(ErrorKind::BadBipartition,
                std::to_string(bip.m) + "x" + std::to_string(bip.n) +
                    " does not split an operator of order " + std::to_string(u.rows()));
  }
}

void require_unitary(const DenseMatrix& u) {
  if (!is_square(u)) throw Error(ErrorKind::NotSquare, "operator must be square");
  const double gap = max_abs_diff(u.transpose() * u, identity(static_cast<std::size_t>(u.rows())));
  if (gap > kUnitaryTolerance) {
    throw Error(ErrorKind::NotUnitary, "|U^T U - I|_max = " + std::to_string(gap));
  }
}

std::vector<double> singular_values(const DenseMatrix& a) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd{Eigen::MatrixXd(a)};
  const auto& s = svd.singularValues();
  std::vector<double> out(s.data(), s.data() + s.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

ScanRow analyse(std::size_t order, Bipartition bip, SeidelOperator::Kind kind) {
  const SeidelOperator op = kind == SeidelOperator::Kind::Single
                                ? SeidelOperator::single(order)
                                : SeidelOperator::block({2}, order - 2);
  const SchmidtProfile p = schmidt_coefficients(op.materialize(), bip);
  return {order, bip.m, bip.n, kind, p.k_sch, p.k_wz};
}

}  // namespace

DenseVector vec_row(const DenseMatrix& a) {
  if (!is_square(a)) throw Error(ErrorKind::NotSquare, "vec_row needs a square matrix");
  DenseVector v(a.size());
  // DenseMatrix is row-major, so its storage is already the row flattening.
  std::copy(a.data(), a.data() + a.size(), v.data());
  return v;
}

DenseMatrix realignment(const DenseMatrix& u, Bipartition bip) {
  require_bipartition(u, bip);
  const std::size_t m = bip.m;
  const std::size_t n = bip.n;
  DenseMatrix r(idx(m * m), idx(n * n));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const DenseMatrix block = u.block(idx(i * n), idx(j * n), idx(n), idx(n));
      r.row(idx(i * m + j)) = vec_row(block).transpose();
    }
  }
  return r;
}

std::size_t numerical_rank(const std::vector<double>& singular_values, double tol) {
  if (singular_values.empty()) return 0;
  const double top = *std::max_element(singular_values.begin(), singular_values.end());
  if (top <= 0.0) return 0;
  return static_cast<std::size_t>(std::count_if(singular_values.begin(), singular_values.end(),
                                                [&](double s) { return s > tol * top; }));
}

bool is_local(const DenseMatrix& u, Bipartition bip, double tol) {
  require_unitary(u);
  return numerical_rank(singular_values(realignment(u, bip)), tol) == 1;
}

SchmidtProfile schmidt_coefficients(const DenseMatrix& u, Bipartition bip) {
  require_bipartition(u, bip);
  require_unitary(u);
  SchmidtProfile p;
  p.bipartition = bip;
  p.coefficients = singular_values(realignment(u, bip));
  p.k_sch = k_sch(p);
  p.k_wz = k_wz(p);
  return p;
}

double k_sch(const SchmidtProfile& profile) {
  const double mn = static_cast<double>(profile.bipartition.order());
  double h = 0.0;
  for (double s : profile.coefficients) {
    const double prob = s * s / mn;
    if (prob > 0.0) h -= prob * std::log2(prob);
  }
  return h;
}

double k_wz(const SchmidtProfile& profile) {
  const double mn = static_cast<double>(profile.bipartition.order());
  double sum = 0.0;
  for (double s : profile.coefficients) sum += (s * s) * (s * s);
  return 1.0 - sum / (mn * mn);
}

std::vector<Bipartition> factorizations(std::size_t order) {
  std::vector<Bipartition> out;
  for (std::size_t m = 2; m * 2 <= order; ++m) {
    if (order % m == 0) out.push_back({m, order / m});
  }
  return out;
}

std::vector<ScanRow> strength_scan(std::size_t max_order, ScanOptions options) {
  if (max_order < 4) {
    throw Error(ErrorKind::InvalidOrder,
                "scan needs max order >= 4, got " + std::to_string(max_order));
  }
  struct Job {
    std::size_t order;
    Bipartition bip;
    SeidelOperator::Kind kind;
  };
  std::vector<Job> jobs;
  for (std::size_t o = 4; o <= max_order; ++o) {
    for (const Bipartition& bip : factorizations(o)) {
      jobs.push_back({o, bip, SeidelOperator::Kind::Single});
      if (options.include_blocks) jobs.push_back({o, bip, SeidelOperator::Kind::Block});
    }
  }

  std::vector<ScanRow> rows(jobs.size());
  unsigned workers = options.workers != 0 ? options.workers : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1, 64);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      rows[k] = analyse(jobs[k].order, jobs[k].bip, jobs[k].kind);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  std::sort(rows.begin(), rows.end(), [](const ScanRow& a, const ScanRow& b) {
    return std::tie(a.order, a.m, a.kind) < std::tie(b.order, b.m, b.kind);
  });
  return rows;
}

std::string to_string(SeidelOperator::Kind kind) {
  return kind == SeidelOperator::Kind::Single ? "single" : "block";
}

void write_scan_csv(std::ostream& os, const std::vector<ScanRow>& rows) {
  os << "order,m,n,kind,k_sch,k_wz\n";
  char buf[128];
  // Keeps rounding residue from printing as -0.000000000000.
  auto clean = [](double x) { return std::abs(x) < 5e-13 ? 0.0 : x; };
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%zu,%zu,%zu,%s,%.12f,%.12f\n", r.order, r.m, r.n,
                  to_string(r.kind).c_str(), clean(r.k_sch), clean(r.k_wz));
    os << buf;
  }
}

}  // namespace seidel
