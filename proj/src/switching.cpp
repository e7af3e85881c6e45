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

#include "seidel/switching.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "seidel/error.hpp"

namespace seidel {

namespace {

constexpr double kExactTol = 1e-12;

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

std::string cell_name(std::size_t i) { return "C_" + std::to_string(i + 1); }

double zero_tolerance(const WeightedDigraph& g) {
  double scale = 0.0;
  for (const auto& [key, w] : g.edges()) scale = std::max(scale, std::abs(w));
  return kExactTol * (1.0 + scale);
}

// Support of a D vertex inside one cell, per direction.
struct Attachment {
  std::vector<bool> out;  // v -> cell[k]
  std::vector<bool> in;   // cell[k] -> v
  std::size_t out_count = 0;
  std::size_t in_count = 0;
  std::size_t union_count = 0;
};

Attachment attachment(const WeightedDigraph& g, Vertex v,
                      const std::vector<Vertex>& cell) {
  Attachment a;
  a.out.resize(cell.size());
  a.in.resize(cell.size());
  for (std::size_t k = 0; k < cell.size(); ++k) {
    a.out[k] = g.has_edge(v, cell[k]);
    a.in[k] = g.has_edge(cell[k], v);
    a.out_count += a.out[k];
    a.in_count += a.in[k];
    a.union_count += a.out[k] || a.in[k];
  }
  return a;
}

bool all_equal_weights(const WeightedDigraph& g, Vertex v,
                       const std::vector<Vertex>& cell,
                       const std::vector<bool>& support, bool outgoing) {
  bool seen = false;
  double first = 0.0;
  for (std::size_t k = 0; k < cell.size(); ++k) {
    if (!support[k]) continue;
    const double w = outgoing ? g.weight(v, cell[k]) : g.weight(cell[k], v);
    if (!seen) {
      first = w;
      seen = true;
    } else if (w != first) {
      return false;
    }
  }
  return true;
}

CategoryReport categorize(const WeightedDigraph& g, const SeidelPartition& part) {
  CategoryReport report;
  report.cells.resize(part.cells.size());
  for (std::size_t i = 0; i < part.cells.size(); ++i) {
    const auto& cell = part.cells[i];
    const std::size_t n = cell.size();
    auto& out = report.cells[i];
    for (Vertex v : part.d_cell) {
      const Attachment a = attachment(g, v, cell);
      const auto where = "vertex " + std::to_string(v) + ", " + cell_name(i);
      const bool full = a.union_count == n;
      const bool half = n % 2 == 0 && a.union_count == n / 2;
      if (a.union_count != 0 && !full && !half) {
        throw Error(ErrorKind::BadAdjacencyCount,
                    where + ": adjacent to " + std::to_string(a.union_count) +
                        " of " + std::to_string(n) + " vertices");
      }
      if ((a.out_count != 0 && a.out_count != a.union_count) ||
          (a.in_count != 0 && a.in_count != a.union_count)) {
        throw Error(ErrorKind::BadAdjacencyCount,
                    where + ": the two edge directions reach different vertex sets");
      }
      if (a.union_count == 0) {
        out.of_d_vertex.push_back(Category::None);
        ++out.r;
      } else if (full) {
        out.of_d_vertex.push_back(Category::Full);
        ++out.p;
      } else {
        if (!all_equal_weights(g, v, cell, a.out, true) ||
            !all_equal_weights(g, v, cell, a.in, false)) {
          throw Error(ErrorKind::UnequalWeights,
                      where + ": half-adjacent edges must share one weight per direction");
        }
        out.of_d_vertex.push_back(Category::Half);
        ++out.q;
      }
    }
  }
  return report;
}

// U_n B U_n = B requires every row sum and every column sum of the cell
// block to be the same number.
void require_commuting_cells(const WeightedDigraph& g, const SeidelPartition& part) {
  const double tol = zero_tolerance(g);
  for (std::size_t i = 0; i < part.cells.size(); ++i) {
    const auto& cell = part.cells[i];
    std::vector<double> rows(cell.size(), 0.0), cols(cell.size(), 0.0);
    for (std::size_t a = 0; a < cell.size(); ++a) {
      for (std::size_t b = 0; b < cell.size(); ++b) {
        const double w = g.weight(cell[a], cell[b]);
        rows[a] += w;
        cols[b] += w;
      }
    }
    const double r = rows.front();
    for (std::size_t k = 0; k < cell.size(); ++k) {
      if (std::abs(rows[k] - r) > tol || std::abs(cols[k] - r) > tol) {
        throw Error(ErrorKind::NotRegularInduced,
                    cell_name(i) + ": signed row and column sums of the induced "
                                   "block are not all equal");
      }
    }
  }
}

void require_regular(const WeightedDigraph& g, const std::vector<Vertex>& set,
                     const std::string& name) {
  if (set.empty()) return;
  const double tol = zero_tolerance(g);
  double first = 0.0;
  for (std::size_t a = 0; a < set.size(); ++a) {
    double degree = 0.0;
    for (Vertex u : set) degree += std::abs(g.weight(set[a], u));
    if (a == 0) {
      first = degree;
    } else if (std::abs(degree - first) > tol) {
      throw Error(ErrorKind::NotRegularInduced,
                  name + ": vertex " + std::to_string(set[a]) + " has induced degree " +
                      std::to_string(degree) + ", expected " + std::to_string(first));
    }
  }
}

void put(WeightedDigraph& g, Vertex from, Vertex to, double w, double tol) {
  if (std::abs(w) > tol) g.add_edge(from, to, w);
}

}  // namespace

void SeidelPartition::check(std::size_t order) const {
  std::vector<int> seen(order, 0);
  auto mark = [&](Vertex v, const std::string& where) {
    if (v >= order) {
      throw Error(ErrorKind::InvalidPartition,
                  where + " names vertex " + std::to_string(v) + " outside order " +
                      std::to_string(order));
    }
    if (seen[v]++ != 0) {
      throw Error(ErrorKind::InvalidPartition,
                  "vertex " + std::to_string(v) + " appears twice");
    }
  };
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].size() < 2) {
      throw Error(ErrorKind::InvalidPartition, cell_name(i) + " has fewer than 2 vertices");
    }
    for (Vertex v : cells[i]) mark(v, cell_name(i));
  }
  for (Vertex v : d_cell) mark(v, "D");
  for (std::size_t v = 0; v < order; ++v) {
    if (seen[v] == 0) {
      throw Error(ErrorKind::InvalidPartition,
                  "vertex " + std::to_string(v) + " is in no cell");
    }
  }
}

std::vector<Vertex> SeidelPartition::vertex_order() const {
  std::vector<Vertex> out;
  for (const auto& cell : cells) out.insert(out.end(), cell.begin(), cell.end());
  out.insert(out.end(), d_cell.begin(), d_cell.end());
  return out;
}

std::size_t SeidelPartition::order() const {
  std::size_t n = d_cell.size();
  for (const auto& cell : cells) n += cell.size();
  return n;
}

SeidelOperator SeidelOperator::single(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidOrder, "U_n needs n >= 2, got " + std::to_string(n));
  return SeidelOperator(Kind::Single, {n}, 0);
}

SeidelOperator SeidelOperator::block(std::vector<std::size_t> block_sizes,
                                     std::size_t identity_size) {
  for (std::size_t n : block_sizes) {
    if (n < 2) throw Error(ErrorKind::InvalidOrder, "block of size " + std::to_string(n));
  }
  return SeidelOperator(Kind::Block, std::move(block_sizes), identity_size);
}

std::size_t SeidelOperator::order() const noexcept {
  return std::accumulate(blocks_.begin(), blocks_.end(), identity_);
}

DenseMatrix SeidelOperator::materialize() const {
  const std::size_t n = order();
  DenseMatrix u = DenseMatrix::Zero(idx(n), idx(n));
  std::size_t offset = 0;
  for (std::size_t b : blocks_) {
    u.block(idx(offset), idx(offset), idx(b), idx(b)) = seidel_matrix(b);
    offset += b;
  }
  for (std::size_t k = offset; k < n; ++k) u(idx(k), idx(k)) = 1.0;
  return u;
}

DenseMatrix seidel_matrix(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidOrder, "U_n needs n >= 2, got " + std::to_string(n));
  const double off = 2.0 / static_cast<double>(n);
  DenseMatrix u = DenseMatrix::Constant(idx(n), idx(n), off);
  u.diagonal().array() -= 1.0;
  return u;
}

SeidelOperator block_seidel(const SeidelPartition& part) {
  std::vector<std::size_t> sizes;
  sizes.reserve(part.cells.size());
  for (const auto& cell : part.cells) sizes.push_back(cell.size());
  return SeidelOperator::block(std::move(sizes), part.d_cell.size());
}

DenseMatrix seidel_operator_for(const SeidelPartition& part, std::size_t order) {
  part.check(order);
  DenseMatrix u = DenseMatrix::Zero(idx(order), idx(order));
  for (const auto& cell : part.cells) {
    const double off = 2.0 / static_cast<double>(cell.size());
    for (Vertex a : cell) {
      for (Vertex b : cell) u(idx(a), idx(b)) = a == b ? off - 1.0 : off;
    }
  }
  for (Vertex v : part.d_cell) u(idx(v), idx(v)) = 1.0;
  return u;
}

DenseMatrix lemma1_transform(const DenseMatrix& a) {
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  if (m == 0 || n == 0) return a;
  const DenseVector row_sums = a.rowwise().sum();
  const double r = row_sums(0);
  const double tol = kExactTol * (1.0 + max_abs(a));
  for (Eigen::Index i = 1; i < m; ++i) {
    if (std::abs(row_sums(i) - r) > tol) {
      throw Error(ErrorKind::NonConstantRowSum,
                  "row " + std::to_string(i) + " sums to " + std::to_string(row_sums(i)) +
                      ", row 0 to " + std::to_string(r));
    }
  }
  const Eigen::RowVectorXd col_sums = a.colwise().sum();
  DenseMatrix out = a;
  const double shift = 2.0 * r / static_cast<double>(n);
  const double col_scale = 2.0 / static_cast<double>(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) += shift - col_scale * col_sums(j);
  }
  return out;
}

DenseVector lemma2_transform(const DenseVector& x) {
  const Eigen::Index len = x.size();
  if (len == 0 || len % 2 != 0) {
    throw Error(ErrorKind::NotHalfAndHalf, "length " + std::to_string(len) + " is not even");
  }
  Eigen::Index zeros = 0;
  double c = 0.0;
  for (Eigen::Index k = 0; k < len; ++k) {
    if (x(k) == 0.0) {
      ++zeros;
    } else if (c == 0.0) {
      c = x(k);
    } else if (x(k) != c) {
      throw Error(ErrorKind::NotHalfAndHalf, "nonzero entries are not all equal");
    }
  }
  if (zeros != len / 2) {
    throw Error(ErrorKind::NotHalfAndHalf,
                std::to_string(zeros) + " zero entries out of " + std::to_string(len));
  }
  return DenseVector::Constant(len, c) - x;
}

CategoryReport validate_seidel(const WeightedDigraph& g, const SeidelPartition& part) {
  part.check(g.order());
  for (std::size_t i = 0; i < part.cells.size(); ++i) {
    require_regular(g, part.cells[i], cell_name(i));
  }
  require_regular(g, part.d_cell, "D");
  require_commuting_cells(g, part);
  return categorize(g, part);
}

WeightedDigraph seidel_switch(const WeightedDigraph& g, const SeidelPartition& part,
                              SwitchOptions options) {
  CategoryReport report;
  if (options.validate) {
    report = validate_seidel(g, part);
  } else {
    part.check(g.order());
    require_commuting_cells(g, part);
    report = categorize(g, part);
  }
  const double tol = zero_tolerance(g);

  // Which cell (or D, as -1) each vertex lives in.
  std::vector<long> home(g.order(), -1);
  for (std::size_t i = 0; i < part.cells.size(); ++i) {
    for (Vertex v : part.cells[i]) home[v] = static_cast<long>(i);
  }

  WeightedDigraph out(g.order());
  // Untouched: loops, cell-internal edges, D-internal edges.
  for (const auto& [key, w] : g.edges()) {
    const auto [u, v] = key;
    if (home[u] == home[v]) out.add_edge(u, v, w);
  }

  for (std::size_t i = 0; i < part.cells.size(); ++i) {
    const auto& cell = part.cells[i];
    const double n = static_cast<double>(cell.size());
    for (std::size_t t = 0; t < part.d_cell.size(); ++t) {
      const Vertex v = part.d_cell[t];
      switch (report.cells[i].of_d_vertex[t]) {
        case Category::None:
          break;
        case Category::Half: {
          // Each direction flips onto the complementary half with its own weight.
          const Attachment a = attachment(g, v, cell);
          double c_out = 0.0, c_in = 0.0;
          for (std::size_t k = 0; k < cell.size(); ++k) {
            if (a.out[k]) c_out = g.weight(v, cell[k]);
            if (a.in[k]) c_in = g.weight(cell[k], v);
          }
          for (std::size_t k = 0; k < cell.size(); ++k) {
            if (c_out != 0.0 && !a.out[k]) out.add_edge(v, cell[k], c_out);
            if (c_in != 0.0 && !a.in[k]) out.add_edge(cell[k], v, c_in);
          }
          break;
        }
        case Category::Full: {
          double s_out = 0.0, s_in = 0.0;
          for (Vertex u : cell) {
            s_out += g.weight(v, u);
            s_in += g.weight(u, v);
          }
          const double base_out = 2.0 * s_out / n;
          const double base_in = 2.0 * s_in / n;
          for (Vertex u : cell) {
            put(out, v, u, base_out - g.weight(v, u), tol);
            put(out, u, v, base_in - g.weight(u, v), tol);
          }
          break;
        }
      }
    }
  }

  // Cross-cell blocks B (rows C_i, columns C_j) become U_{n_i} B U_{n_j}.
  for (std::size_t i = 0; i < part.cells.size(); ++i) {
    for (std::size_t j = 0; j < part.cells.size(); ++j) {
      if (i == j) continue;
      const auto& ci = part.cells[i];
      const auto& cj = part.cells[j];
      std::vector<double> rows(ci.size(), 0.0), cols(cj.size(), 0.0);
      double total = 0.0;
      bool any = false;
      for (std::size_t a = 0; a < ci.size(); ++a) {
        for (std::size_t b = 0; b < cj.size(); ++b) {
          const double w = g.weight(ci[a], cj[b]);
          any = any || w != 0.0;
          rows[a] += w;
          cols[b] += w;
        }
      }
      if (!any) continue;
      for (double r : rows) total += r;
      const double ni = static_cast<double>(ci.size());
      const double nj = static_cast<double>(cj.size());
      const double corner = 4.0 * total / (ni * nj);
      for (std::size_t a = 0; a < ci.size(); ++a) {
        for (std::size_t b = 0; b < cj.size(); ++b) {
          const double w = g.weight(ci[a], cj[b]) - (2.0 / nj) * rows[a] -
                           (2.0 / ni) * cols[b] + corner;
          put(out, ci[a], cj[b], w, tol);
        }
      }
    }
  }

  if (options.verify) {
    const DenseMatrix u = seidel_operator_for(part, g.order());
    const DenseMatrix expected = u * adjacency_matrix(g) * u;
    const double gap = max_abs_diff(adjacency_matrix(out), expected);
    if (gap > tol) {
      throw std::logic_error("edge-wise switch differs from U A U by " + std::to_string(gap));
    }
  }
  return out;
}

WeightedDigraph conjugate_switch(const WeightedDigraph& g, const SeidelPartition& part) {
  const DenseMatrix u = seidel_operator_for(part, g.order());
  return WeightedDigraph::from_adjacency(u * adjacency_matrix(g) * u, zero_tolerance(g));
}

}  // namespace seidel
