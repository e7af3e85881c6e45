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

#include "seidel/graph.hpp"

#include <cmath>
#include <string>

#include "seidel/error.hpp"

namespace seidel {

namespace {

std::string pair_name(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

}  // namespace

WeightedDigraph WeightedDigraph::from_edges(std::size_t order,
                                            std::span<const Edge> edges) {
  WeightedDigraph g(order);
  for (const auto& e : edges) g.add_edge(e.from, e.to, e.weight);
  return g;
}

WeightedDigraph WeightedDigraph::from_adjacency(const DenseMatrix& a,
                                                double zero_tol) {
  if (!is_square(a)) throw Error(ErrorKind::NotSquare, "adjacency must be square");
  WeightedDigraph g(static_cast<std::size_t>(a.rows()));
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      const double w = a(i, j);
      if (std::abs(w) <= zero_tol) continue;
      g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j), w);
    }
  }
  return g;
}

void WeightedDigraph::check_vertex(Vertex v) const {
  if (v >= order_) {
    throw Error(ErrorKind::InvalidVertex,
                "vertex " + std::to_string(v) + " outside order " +
                    std::to_string(order_));
  }
}

void WeightedDigraph::add_edge(Vertex from, Vertex to, double weight) {
  check_vertex(from);
  check_vertex(to);
  if (weight == 0.0) {
    throw Error(ErrorKind::ZeroWeight, "edge " + pair_name(from, to));
  }
  if (from == to && !(weight > 0.0)) {
    throw Error(ErrorKind::NonPositiveLoop,
                "loop at " + std::to_string(from) + " has weight " +
                    std::to_string(weight));
  }
  if (!edges_.emplace(std::pair{from, to}, weight).second) {
    throw Error(ErrorKind::ParallelEdges, "second edge " + pair_name(from, to));
  }
}

void WeightedDigraph::add_undirected(Vertex u, Vertex v, double weight) {
  add_edge(u, v, weight);
  if (u != v) add_edge(v, u, weight);
}

bool WeightedDigraph::has_edge(Vertex from, Vertex to) const {
  return edges_.contains({from, to});
}

double WeightedDigraph::weight(Vertex from, Vertex to) const {
  auto it = edges_.find({from, to});
  return it == edges_.end() ? 0.0 : it->second;
}

bool WeightedDigraph::has_symmetric_weights() const {
  for (const auto& [key, w] : edges_) {
    if (weight(key.second, key.first) != w) return false;
  }
  return true;
}

std::vector<Edge> WeightedDigraph::edge_list() const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& [key, w] : edges_) out.push_back({key.first, key.second, w});
  return out;
}

DenseMatrix adjacency_matrix(const WeightedDigraph& g) {
  DenseMatrix a = DenseMatrix::Zero(idx(g.order()), idx(g.order()));
  for (const auto& [key, w] : g.edges()) a(idx(key.first), idx(key.second)) = w;
  return a;
}

DenseMatrix degree_matrix(const WeightedDigraph& g) {
  DenseMatrix d = DenseMatrix::Zero(idx(g.order()), idx(g.order()));
  for (const auto& [key, w] : g.edges()) {
    d(idx(key.first), idx(key.first)) += std::abs(w);
  }
  return d;
}

void require_symmetric_weights(const WeightedDigraph& g) {
  for (const auto& [key, w] : g.edges()) {
    if (g.weight(key.second, key.first) != w) {
      throw Error(ErrorKind::AsymmetricWeights,
                  "w" + pair_name(key.first, key.second) + " = " +
                      std::to_string(w) + " but w" +
                      pair_name(key.second, key.first) + " = " +
                      std::to_string(g.weight(key.second, key.first)));
    }
  }
}

DenseMatrix laplacian(const WeightedDigraph& g) {
  require_symmetric_weights(g);
  return degree_matrix(g) - adjacency_matrix(g);
}

DenseMatrix signless_laplacian(const WeightedDigraph& g) {
  require_symmetric_weights(g);
  return degree_matrix(g) + adjacency_matrix(g);
}

DenseMatrix graph_matrix(const WeightedDigraph& g, SpectralKind kind) {
  return kind == SpectralKind::Laplacian ? laplacian(g) : signless_laplacian(g);
}

DenseMatrix directed_graph_matrix(const WeightedDigraph& g, SpectralKind kind) {
  return kind == SpectralKind::Laplacian
             ? DenseMatrix(degree_matrix(g) - adjacency_matrix(g))
             : DenseMatrix(degree_matrix(g) + adjacency_matrix(g));
}

}  // namespace seidel
