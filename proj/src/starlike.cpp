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

#include "seidel/starlike.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "seidel/error.hpp"

namespace seidel {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

std::string cell_name(std::size_t i) { return "C_" + std::to_string(i + 1); }

void require_no_cross_edges(const WeightedDigraph& g, const SeidelPartition& part) {
  std::vector<long> home(g.order(), -1);
  for (std::size_t i = 0; i < part.cells.size(); ++i) {
    for (Vertex v : part.cells[i]) home[v] = static_cast<long>(i);
  }
  for (const auto& [key, w] : g.edges()) {
    const long a = home[key.first];
    const long b = home[key.second];
    if (a >= 0 && b >= 0 && a != b) {
      throw Error(ErrorKind::CrossCellEdge,
                  "edge (" + std::to_string(key.first) + "," + std::to_string(key.second) +
                      ") joins " + cell_name(static_cast<std::size_t>(a)) + " and " +
                      cell_name(static_cast<std::size_t>(b)));
    }
  }
}

// Common weight of the edges between v and the cell in one direction, 0 if
// there are none. Category validation already guarantees a single value.
double direction_weight(const WeightedDigraph& g, Vertex v, const std::vector<Vertex>& cell,
                        bool outgoing) {
  for (Vertex u : cell) {
    const double w = outgoing ? g.weight(v, u) : g.weight(u, v);
    if (w != 0.0) return w;
  }
  return 0.0;
}

// Sum of |a_ij| over j != i, accumulated in sorted order so equal
// multisets give bit-identical sums.
double off_diagonal_abs_sum(const DenseMatrix& a, Eigen::Index i) {
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(a.cols()));
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    if (j != i && a(i, j) != 0.0) terms.push_back(std::abs(a(i, j)));
  }
  std::sort(terms.begin(), terms.end());
  double s = 0.0;
  for (double t : terms) s += t;
  return s;
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

struct Signature {
  double loop = 0.0;
  std::vector<double> out;
  std::vector<double> in;
};

std::vector<Signature> signatures(const WeightedDigraph& g) {
  std::vector<Signature> sig(g.order());
  for (const auto& [key, w] : g.edges()) {
    if (key.first == key.second) {
      sig[key.first].loop = w;
    } else {
      sig[key.first].out.push_back(w);
      sig[key.second].in.push_back(w);
    }
  }
  for (auto& s : sig) {
    std::sort(s.out.begin(), s.out.end());
    std::sort(s.in.begin(), s.in.end());
  }
  return sig;
}

bool same_signature(const Signature& a, const Signature& b, double tol) {
  if (a.out.size() != b.out.size() || a.in.size() != b.in.size()) return false;
  if (!near(a.loop, b.loop, tol)) return false;
  for (std::size_t k = 0; k < a.out.size(); ++k) {
    if (!near(a.out[k], b.out[k], tol)) return false;
  }
  for (std::size_t k = 0; k < a.in.size(); ++k) {
    if (!near(a.in[k], b.in[k], tol)) return false;
  }
  return true;
}

}  // namespace

std::vector<StarlikeCellProfile> validate_starlike(const WeightedDigraph& g,
                                                   const SeidelPartition& part) {
  const CategoryReport report = validate_seidel(g, part);
  require_no_cross_edges(g, part);

  std::vector<StarlikeCellProfile> profiles(part.cells.size());
  for (std::size_t i = 0; i < part.cells.size(); ++i) {
    const auto& cell = part.cells[i];
    const auto& cats = report.cells[i];
    auto& prof = profiles[i];
    bool seen_full = false;
    bool seen_half = false;
    std::vector<bool> first_half;
    std::size_t on_first = 0;
    for (std::size_t t = 0; t < part.d_cell.size(); ++t) {
      const Vertex v = part.d_cell[t];
      const double w_out = direction_weight(g, v, cell, true);
      const double w_in = direction_weight(g, v, cell, false);
      if (cats.of_d_vertex[t] == Category::Full) {
        // Category-1 edges need one weight per direction across the cell.
        for (Vertex u : cell) {
          if (g.weight(v, u) != w_out || g.weight(u, v) != w_in) {
            throw Error(ErrorKind::NonuniformCategory1Weights,
                        cell_name(i) + ": vertex " + std::to_string(v) +
                            " has unequal weights to the cell");
          }
        }
        if (!seen_full) {
          prof.w_plus = w_out;
          prof.w_minus = w_in;
          seen_full = true;
        } else if (w_out != prof.w_plus || w_in != prof.w_minus) {
          throw Error(ErrorKind::NonuniformCategory1Weights,
                      cell_name(i) + ": vertex " + std::to_string(v) +
                          " differs from the other category-1 vertices");
        }
      } else if (cats.of_d_vertex[t] == Category::Half) {
        std::vector<bool> support(cell.size());
        for (std::size_t k = 0; k < cell.size(); ++k) {
          support[k] = g.has_edge(v, cell[k]) || g.has_edge(cell[k], v);
        }
        if (!seen_half) {
          prof.w_sup_plus = w_out;
          prof.w_sup_minus = w_in;
          first_half = support;
          seen_half = true;
        } else if (w_out != prof.w_sup_plus || w_in != prof.w_sup_minus) {
          throw Error(ErrorKind::UnequalWeights,
                      cell_name(i) + ": category-2 vertex " + std::to_string(v) +
                          " differs in weight from the other category-2 vertices");
        }
        ++prof.q;
        if (support == first_half) {
          ++on_first;
        } else {
          for (std::size_t k = 0; k < cell.size(); ++k) {
            if (support[k] == first_half[k]) {
              throw Error(ErrorKind::NonComplementaryHalves,
                          cell_name(i) + ": category-2 vertex " + std::to_string(v) +
                              " reaches neither half of the split");
            }
          }
        }
      }
    }
    if (prof.q % 2 != 0) {
      throw Error(ErrorKind::OddCategory2Count,
                  cell_name(i) + " has " + std::to_string(prof.q) + " category-2 vertices");
    }
    if (prof.q != 0) {
      if (2 * on_first != prof.q) {
        throw Error(ErrorKind::NonComplementaryHalves,
                    cell_name(i) + ": " + std::to_string(on_first) + " of " +
                        std::to_string(prof.q) +
                        " category-2 vertices reach the same half");
      }
      for (std::size_t k = 0; k < cell.size(); ++k) {
        if (first_half[k]) prof.half.push_back(cell[k]);
      }
    }
  }
  return profiles;
}

WeightedDigraph lift_to_h(const WeightedDigraph& g, SpectralKind kind) {
  return WeightedDigraph::from_adjacency(graph_matrix(g, kind));
}

WeightedDigraph project_from_matrix(const DenseMatrix& a, SpectralKind kind,
                                    std::span<const double> loops) {
  if (!is_square(a)) throw Error(ErrorKind::NotSquare, "A(H^pi) must be square");
  const std::size_t n = static_cast<std::size_t>(a.rows());
  if (!loops.empty() && loops.size() != n) {
    throw Error(ErrorKind::OrderMismatch, "loop list does not match the order");
  }
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < a.cols(); ++j) {
      if (a(i, j) != a(j, i)) {
        throw Error(ErrorKind::AsymmetricWeights,
                    "A(H^pi) is not symmetric at (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
      }
    }
  }
  const double tol = 1e-12 * (1.0 + max_abs(a));
  const double sign = kind == SpectralKind::Laplacian ? -1.0 : 1.0;

  WeightedDigraph out(n);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    const double rest = off_diagonal_abs_sum(a, i);
    double loop = 0.0;
    if (kind == SpectralKind::SignlessLaplacian) {
      loop = (a(i, i) - rest) / 2.0;
      if (loop < -tol) {
        throw Error(ErrorKind::NegativeLoopWeight,
                    "vertex " + std::to_string(i) + " would need loop weight " +
                        std::to_string(loop));
      }
      if (loop <= tol) loop = 0.0;
    } else {
      if (std::abs(a(i, i) - rest) > tol) {
        throw Error(ErrorKind::NegativeLoopWeight,
                    "vertex " + std::to_string(i) + ": diagonal " + std::to_string(a(i, i)) +
                        " differs from off-diagonal weight " + std::to_string(rest) +
                        "; not a Laplacian with nonnegative loops");
      }
      loop = loops.empty() ? 0.0 : loops[static_cast<std::size_t>(i)];
      if (loop < 0.0) {
        throw Error(ErrorKind::NegativeLoopWeight,
                    "requested loop " + std::to_string(loop) + " at vertex " +
                        std::to_string(i));
      }
    }
    if (loop != 0.0) out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(i), loop);
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (j != i && a(i, j) != 0.0) {
        out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j), sign * a(i, j));
      }
    }
  }
  return out;
}

WeightedDigraph project_from_h(const WeightedDigraph& h_pi, SpectralKind kind,
                               std::span<const double> loops) {
  return project_from_matrix(adjacency_matrix(h_pi), kind, loops);
}

WeightedDigraph lq_switch(const WeightedDigraph& g, const SeidelPartition& part,
                          SpectralKind kind, bool force) {
  if (!force) validate_starlike(g, part);
  require_symmetric_weights(g);

  std::vector<double> loops;
  if (kind == SpectralKind::Laplacian) {
    loops.resize(g.order());
    for (Vertex v = 0; v < g.order(); ++v) loops[v] = g.loop(v);
  }

  if (force) {
    const DenseMatrix u = seidel_operator_for(part, g.order());
    DenseMatrix switched = u * graph_matrix(g, kind) * u;
    // Restore exact symmetry and clear rounding residue before projecting.
    switched = (0.5 * (switched + switched.transpose())).eval();
    const double tol = 1e-12 * (1.0 + max_abs(switched));
    switched = switched.unaryExpr([tol](double x) { return std::abs(x) <= tol ? 0.0 : x; });
    return project_from_matrix(switched, kind, loops);
  }

  const WeightedDigraph h = lift_to_h(g, kind);
  const WeightedDigraph h_pi = seidel_switch(h, part, {.validate = false});
  return project_from_h(h_pi, kind, loops);
}

bool loop_weights_preserved(const WeightedDigraph& g, const WeightedDigraph& g_prime) {
  if (g.order() != g_prime.order()) {
    throw Error(ErrorKind::OrderMismatch, std::to_string(g.order()) + " vs " +
                                              std::to_string(g_prime.order()));
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.loop(v) != g_prime.loop(v)) return false;
  }
  return true;
}

bool brute_force_isomorphic(const WeightedDigraph& g, const WeightedDigraph& h,
                            double tol) {
  const std::size_t n = g.order();
  if (n > kMaxIsomorphismOrder || h.order() > kMaxIsomorphismOrder) {
    throw Error(ErrorKind::TooLarge, "isomorphism search is limited to order " +
                                         std::to_string(kMaxIsomorphismOrder));
  }
  if (n != h.order() || g.edge_count() != h.edge_count()) return false;

  const auto sig_g = signatures(g);
  const auto sig_h = signatures(h);
  // candidates[v] lists the h-vertices whose signature matches g-vertex v.
  std::vector<std::vector<Vertex>> candidates(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u = 0; u < n; ++u) {
      if (same_signature(sig_g[v], sig_h[u], tol)) candidates[v].push_back(u);
    }
    if (candidates[v].empty()) return false;
  }

  // Most constrained vertices first.
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return candidates[a].size() < candidates[b].size();
  });

  const DenseMatrix ag = adjacency_matrix(g);
  const DenseMatrix ah = adjacency_matrix(h);
  std::vector<Vertex> image(n, 0);
  std::vector<bool> used(n, false);

  std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
    if (depth == n) return true;
    const Vertex v = order[depth];
    for (Vertex u : candidates[v]) {
      if (used[u]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const Vertex w = order[k];
        ok = near(ag(idx(v), idx(w)), ah(idx(u), idx(image[w])), tol) &&
             near(ag(idx(w), idx(v)), ah(idx(image[w]), idx(u)), tol);
      }
      if (!ok) continue;
      used[u] = true;
      image[v] = u;
      if (extend(depth + 1)) return true;
      used[u] = false;
    }
    return false;
  };
  return extend(0);
}

}  // namespace seidel
