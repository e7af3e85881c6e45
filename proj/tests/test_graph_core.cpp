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

#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "oracle.hpp"
#include "seidel/graph.hpp"
#include "seidel/matrix.hpp"
#include "seidel/switching.hpp"
#include "support.hpp"

using namespace seidel;
using support::thrown;

TEST_CASE("graph construction rejects malformed edges") {
  WeightedDigraph g(3);
  CHECK(thrown([&] { g.add_edge(0, 3, 1.0); }) == ErrorKind::InvalidVertex);
  CHECK(thrown([&] { g.add_edge(0, 1, 0.0); }) == ErrorKind::ZeroWeight);
  CHECK(thrown([&] { g.add_edge(1, 1, -1.0); }) == ErrorKind::NonPositiveLoop);
  g.add_edge(0, 1, 1.0);
  CHECK(thrown([&] { g.add_edge(0, 1, 2.0); }) == ErrorKind::ParallelEdges);
  // The opposite orientation is a different edge.
  CHECK_FALSE(thrown([&] { g.add_edge(1, 0, 2.0); }));
  CHECK(g.edge_count() == 2);
}

TEST_CASE("adjacency matrix") {
  CHECK(oracle::from_dense(adjacency_matrix(support::k2())) == oracle::Mat{{0, 1}, {1, 0}});
  CHECK(oracle::from_dense(adjacency_matrix(WeightedDigraph(3))) == oracle::zeros(3, 3));
  WeightedDigraph loop(1);
  loop.add_edge(0, 0, 2.0);
  CHECK(oracle::from_dense(adjacency_matrix(loop)) == oracle::Mat{{2}});
}

TEST_CASE("degree matrix uses absolute weights and counts a loop once") {
  CHECK(oracle::from_dense(degree_matrix(support::k2())) == oracle::Mat{{1, 0}, {0, 1}});
  WeightedDigraph neg(2);
  neg.add_undirected(0, 1, -2.0);
  CHECK(oracle::from_dense(degree_matrix(neg)) == oracle::Mat{{2, 0}, {0, 2}});
  WeightedDigraph loop(1);
  loop.add_edge(0, 0, 2.0);
  CHECK(oracle::from_dense(degree_matrix(loop)) == oracle::Mat{{2}});
}

TEST_CASE("Laplacian and signless Laplacian") {
  CHECK(oracle::from_dense(laplacian(support::k2())) == oracle::Mat{{1, -1}, {-1, 1}});
  CHECK(oracle::from_dense(signless_laplacian(support::k2())) == oracle::Mat{{1, 1}, {1, 1}});

  WeightedDigraph path(3);
  path.add_undirected(0, 1, 1.0);
  path.add_undirected(1, 2, 1.0);
  CHECK(oracle::from_dense(laplacian(path)) == oracle::Mat{{1, -1, 0}, {-1, 2, -1}, {0, -1, 1}});

  WeightedDigraph asym(2);
  asym.add_edge(0, 1, 1.0);
  asym.add_edge(1, 0, 2.0);
  CHECK(thrown([&] { laplacian(asym); }) == ErrorKind::AsymmetricWeights);
  CHECK(thrown([&] { signless_laplacian(asym); }) == ErrorKind::AsymmetricWeights);
}

TEST_CASE("spectrum") {
  DenseMatrix x(2, 2);
  x << 0, 1, 1, 0;
  const Spectrum s = spectrum(x);
  REQUIRE(s.size() == 2);
  CHECK(s.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(s.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));

  const Spectrum l = spectrum(laplacian(support::k2()));
  CHECK(std::abs(l.eigenvalues[0]) < 1e-14);
  CHECK(l.eigenvalues[1] == doctest::Approx(2.0));

  CHECK(thrown([] { spectrum(DenseMatrix(2, 3)); }) == ErrorKind::NotSquare);
  DenseMatrix a(2, 2);
  a << 0, 1, 2, 0;
  CHECK(thrown([&] { spectrum(a); }) == ErrorKind::NotSymmetric);
}

TEST_CASE("spectrum of U_n is -1 (n-1 times) and +1, checked against a Jacobi oracle") {
  for (std::size_t n = 2; n <= 12; ++n) {
    CAPTURE(n);
    const Spectrum s = spectrum(seidel_matrix(n));
    const oracle::Vec ref = oracle::jacobi_eigenvalues(oracle::seidel(n));
    REQUIRE(s.size() == n);
    for (std::size_t i = 0; i < n; ++i) {
      const double expected = i + 1 < n ? -1.0 : 1.0;
      CHECK(std::abs(ref[i] - expected) < 1e-12);
      CHECK(std::abs(s.eigenvalues[i] - ref[i]) < 1e-12);
    }
  }
}

TEST_CASE("spectrum sums to the trace and is permutation invariant") {
  gen::Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto inst = gen::random_starlike(rng);
    const DenseMatrix l = laplacian(inst.graph);
    const Spectrum s = spectrum(l);
    const double sum = std::accumulate(s.eigenvalues.begin(), s.eigenvalues.end(), 0.0);
    CHECK(std::abs(sum - l.trace()) <= 1e-9 * (1 + std::abs(l.trace())));

    const std::size_t n = inst.graph.order();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    oracle::Mat p = oracle::zeros(n, n);
    for (std::size_t i = 0; i < n; ++i) p[i][perm[i]] = 1.0;
    const oracle::Mat pmp =
        oracle::multiply(oracle::multiply(oracle::transpose(p), oracle::from_dense(l)), p);
    CHECK(spectral_gap(s, spectrum(oracle::to_dense(pmp))) < 1e-9);
    CHECK(cospectral(l, oracle::to_dense(pmp), 1e-9));
  }
}

TEST_CASE("L and Q are positive semidefinite and trace(L) = sum d_i - sum a_ii") {
  gen::Rng rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = gen::random_starlike(rng).graph;
    CHECK(spectrum(laplacian(g)).min() >= -1e-9);
    CHECK(spectrum(signless_laplacian(g)).min() >= -1e-9);

    double degrees = 0.0, loops = 0.0;
    for (const auto& [key, w] : g.edges()) {
      degrees += std::abs(w);
      if (key.first == key.second) loops += w;
    }
    CHECK(laplacian(g).trace() == doctest::Approx(degrees - loops).epsilon(1e-15));
  }
}

TEST_CASE("cospectral") {
  const DenseMatrix m = laplacian(support::k2());
  CHECK(cospectral(m, m, 1e-9));
  CHECK_FALSE(cospectral(m, signless_laplacian(support::k2()) * 2.0, 1e-9));
  CHECK(thrown([&] { cospectral(m, identity(3), 1e-9); }) == ErrorKind::OrderMismatch);
}

TEST_CASE("from_adjacency inverts adjacency_matrix") {
  gen::Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = gen::random_seidel(rng).graph;
    CHECK(WeightedDigraph::from_adjacency(adjacency_matrix(g)) == g);
  }
}
