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

// Command-line front end: validation, switching, spectra, density
// matrices, entropy, isomorphism and the operator-strength scan.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "seidel/error.hpp"
#include "seidel/graph.hpp"
#include "seidel/graph_io.hpp"
#include "seidel/operator_strength.hpp"
#include "seidel/quantum_state.hpp"
#include "seidel/starlike.hpp"
#include "seidel/switching.hpp"

namespace {

using namespace seidel;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class MatrixKind { Adjacency, Laplacian, Signless };

const std::map<std::string, MatrixKind> kMatrixKinds{
    {"adjacency", MatrixKind::Adjacency},
    {"laplacian", MatrixKind::Laplacian},
    {"signless", MatrixKind::Signless}};

const std::map<std::string, SpectralKind> kSpectralKinds{
    {"laplacian", SpectralKind::Laplacian},
    {"signless", SpectralKind::SignlessLaplacian}};

struct Globals {
  double tol = 1e-9;
  bool quiet = false;
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", std::abs(x) < 1e-13 ? 0.0 : x);
  return buf;
}

std::string vertex_name(const GraphDocument& doc, Vertex v) {
  std::string s = std::to_string(v);
  if (!doc.labels.empty()) s += " [label " + std::to_string(doc.labels[v]) + "]";
  return s;
}

std::string join(const std::vector<double>& xs) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? " " : "") + fmt(xs[k]);
  return out;
}

std::string join(const ComplexSpectrum& s) {
  std::string out;
  for (std::size_t k = 0; k < s.eigenvalues.size(); ++k) {
    const auto z = s.eigenvalues[k];
    out += k ? " " : "";
    out += std::abs(z.imag()) < 1e-12 ? fmt(z.real())
                                      : "(" + fmt(z.real()) + (z.imag() < 0 ? "" : "+") +
                                            fmt(z.imag()) + "i)";
  }
  return out;
}

const SeidelPartition& require_partition(const GraphDocument& doc, const std::string& path) {
  if (!doc.partition) throw UsageError(path + ": no `partition` in the graph file");
  return *doc.partition;
}

DenseMatrix matrix_of(const WeightedDigraph& g, MatrixKind kind) {
  switch (kind) {
    case MatrixKind::Adjacency: return adjacency_matrix(g);
    case MatrixKind::Laplacian: return laplacian(g);
    case MatrixKind::Signless: return signless_laplacian(g);
  }
  return {};
}

DenseMatrix directed_matrix_of(const WeightedDigraph& g, MatrixKind kind) {
  switch (kind) {
    case MatrixKind::Adjacency: return adjacency_matrix(g);
    case MatrixKind::Laplacian: return directed_graph_matrix(g, SpectralKind::Laplacian);
    case MatrixKind::Signless: return directed_graph_matrix(g, SpectralKind::SignlessLaplacian);
  }
  return {};
}

int cmd_validate(const Globals& globals, const std::string& path) {
  const GraphDocument doc = read_graph_document(path);
  const SeidelPartition& part = require_partition(doc, path);
  const WeightedDigraph g = doc.graph();

  const CategoryReport report = validate_seidel(g, part);
  std::cout << "seidel graph: valid\n";
  for (std::size_t i = 0; i < report.cells.size(); ++i) {
    const auto& c = report.cells[i];
    std::cout << "C_" << i + 1 << " (" << part.cells[i].size() << " vertices): p=" << c.p
              << " q=" << c.q << " r=" << c.r << "\n";
    if (globals.quiet) continue;
    for (std::size_t t = 0; t < part.d_cell.size(); ++t) {
      std::cout << "  vertex " << vertex_name(doc, part.d_cell[t]) << ": category "
                << static_cast<int>(c.of_d_vertex[t]) << "\n";
    }
  }
  try {
    const auto profiles = validate_starlike(g, part);
    std::cout << "starlike: valid\n";
    for (std::size_t i = 0; i < profiles.size(); ++i) {
      const auto& p = profiles[i];
      std::cout << "C_" << i + 1 << ": w_plus=" << fmt(p.w_plus) << " w_minus=" << fmt(p.w_minus)
                << " w_sup_plus=" << fmt(p.w_sup_plus) << " w_sup_minus=" << fmt(p.w_sup_minus)
                << " q=" << p.q << "\n";
    }
  } catch (const Error& e) {
    std::cout << "starlike: no (" << e.what() << ")\n";
  }
  return kExitOk;
}

int cmd_switch(const Globals& globals, const std::string& path, const std::string& kind_name,
               const std::string& out_path, bool verify, bool force) {
  const GraphDocument doc = read_graph_document(path);
  const SeidelPartition& part = require_partition(doc, path);
  const WeightedDigraph g = doc.graph();
  const MatrixKind kind = kMatrixKinds.at(kind_name);

  WeightedDigraph result;
  if (kind == MatrixKind::Adjacency) {
    result = force ? conjugate_switch(g, part) : seidel_switch(g, part, {.verify = verify});
  } else {
    result = lq_switch(g, part, kSpectralKinds.at(kind_name), force);
  }

  GraphDocument out = GraphDocument::from_graph(result, &doc);
  if (!out.name.empty()) out.name += " (switched, " + kind_name + ")";
  const std::string text = write_graph_document(out);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(out_path);
    if (!file) throw UsageError("cannot write " + out_path);
    file << text;
    if (!globals.quiet) std::cout << "wrote " << out_path << "\n";
  }

  if (verify || force) {
    const Spectrum before = spectrum(matrix_of(g, kind));
    const Spectrum after = spectrum(matrix_of(result, kind));
    const double gap = spectral_gap(before, after);
    std::cerr << "spectrum before: " << join(before.eigenvalues) << "\n"
              << "spectrum after:  " << join(after.eigenvalues) << "\n"
              << "max spectral gap: " << fmt(gap) << "\n";
    if (gap > globals.tol) {
      std::cerr << "spectra differ by more than " << fmt(globals.tol) << "\n";
      return kExitDomain;
    }
  }
  return kExitOk;
}

int cmd_spectra(const Globals& globals, const std::string& path, const std::string& kind_name,
                const std::string& against, bool force) {
  const MatrixKind kind = kMatrixKinds.at(kind_name);
  const WeightedDigraph g = read_graph_document(path).graph();
  std::optional<WeightedDigraph> h;
  if (!against.empty()) h = read_graph_document(against).graph();

  const bool directed = !g.has_symmetric_weights() || (h && !h->has_symmetric_weights());
  if (directed && force) {
    const ComplexSpectrum a = general_spectrum(directed_matrix_of(g, kind));
    std::cout << "spectrum: " << join(a) << "\n";
    if (h) {
      const ComplexSpectrum b = general_spectrum(directed_matrix_of(*h, kind));
      const double gap = spectral_gap(a, b);
      std::cout << "spectrum: " << join(b) << "\n"
                << "max spectral gap: " << fmt(gap) << "\n"
                << (gap <= globals.tol ? "cospectral" : "not cospectral") << "\n";
    }
    return kExitOk;
  }

  const Spectrum a = spectrum(matrix_of(g, kind));
  std::cout << "spectrum: " << join(a.eigenvalues) << "\n";
  if (h) {
    const Spectrum b = spectrum(matrix_of(*h, kind));
    const double gap = spectral_gap(a, b);
    std::cout << "spectrum: " << join(b.eigenvalues) << "\n"
              << "max spectral gap: " << fmt(gap) << "\n"
              << (gap <= globals.tol ? "cospectral" : "not cospectral") << "\n";
  }
  return kExitOk;
}

int cmd_density(const std::string& path, const std::string& kind_name) {
  const DensityMatrix rho =
      density_from_graph(read_graph_document(path).graph(), kSpectralKinds.at(kind_name));
  const DenseMatrix& m = rho.matrix();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) std::cout << (j ? " " : "") << fmt(m(i, j));
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_entropy(const Globals& globals, const std::string& path, const std::string& kind_name) {
  const DensityMatrix rho =
      density_from_graph(read_graph_document(path).graph(), kSpectralKinds.at(kind_name));
  std::cout << "spectrum: " << join(rho.eigenvalues().eigenvalues) << "\n"
            << "entropy (log2): " << fmt(von_neumann_entropy(rho)) << "\n"
            << "rank: " << rho.rank(globals.tol) << "\n"
            << "purity tr(rho^2): " << fmt(rho.purity()) << "\n"
            << (is_pure(rho, globals.tol) ? "pure" : "mixed") << "\n";
  return kExitOk;
}

int cmd_isomorphic(const Globals& globals, const std::string& a, const std::string& b) {
  const bool iso = brute_force_isomorphic(read_graph_document(a).graph(),
                                          read_graph_document(b).graph(), globals.tol);
  std::cout << (iso ? "isomorphic" : "not isomorphic") << "\n";
  return kExitOk;
}

int cmd_scan(const Globals& globals, long max_order, bool include_blocks, const std::string& out) {
  if (max_order < 4) throw UsageError("--max-order must be at least 4 (no composite order below 4)");
  const auto rows = strength_scan(static_cast<std::size_t>(max_order),
                                  {.include_blocks = include_blocks});
  if (out.empty()) {
    write_scan_csv(std::cout, rows);
  } else {
    std::ofstream file(out);
    if (!file) throw UsageError("cannot write " + out);
    write_scan_csv(file, rows);
    if (!globals.quiet) std::cout << "wrote " << rows.size() << " rows to " << out << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Seidel switching, cospectral graphs and Seidel operator strength"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--tol", globals.tol, "Tolerance for spectral comparisons and rank")
      ->capture_default_str();
  app.add_flag("--quiet", globals.quiet, "Less output");

  auto kind_check = CLI::IsMember({"adjacency", "laplacian", "signless"});
  auto state_check = CLI::IsMember({"laplacian", "signless"});

  std::string path, other, kind = "adjacency", out;
  bool verify = false, force = false, include_blocks = false;
  long max_order = 0;

  auto* validate = app.add_subcommand("validate", "Check Seidel and starlike conditions");
  validate->add_option("graph", path, "Graph file")->required();

  auto* sw = app.add_subcommand("switch", "Switch a graph (adjacency, laplacian or signless)");
  sw->add_option("graph", path, "Graph file")->required();
  sw->add_option("--kind", kind, "adjacency | laplacian | signless")->check(kind_check);
  sw->add_option("--out", out, "Output graph file (stdout if absent)");
  sw->add_flag("--verify", verify, "Print both spectra and the largest gap");
  sw->add_flag("--force", force, "Skip validation; verify cospectrality afterwards");

  auto* spectra = app.add_subcommand("spectra", "Ascending spectrum of A, L or Q");
  spectra->add_option("graph", path, "Graph file")->required();
  spectra->add_option("--kind", kind, "adjacency | laplacian | signless")->check(kind_check);
  spectra->add_option("--against", other, "Second graph to compare with");
  spectra->add_flag("--force", force, "Allow directed inputs (out-degree matrices, complex spectra)");

  std::string state_kind = "laplacian";
  auto* density = app.add_subcommand("density", "Density matrix L/tr(L) or Q/tr(Q)");
  density->add_option("graph", path, "Graph file")->required();
  density->add_option("--kind", state_kind, "laplacian | signless")->check(state_check);

  auto* entropy = app.add_subcommand("entropy", "von Neumann entropy, rank and purity");
  entropy->add_option("graph", path, "Graph file")->required();
  entropy->add_option("--kind", state_kind, "laplacian | signless")->check(state_check);

  auto* iso = app.add_subcommand("isomorphic", "Exhaustive weighted isomorphism test (order <= 12)");
  iso->add_option("first", path, "Graph file")->required();
  iso->add_option("second", other, "Graph file")->required();

  auto* scan = app.add_subcommand("strength-scan", "K_Sch and K_WZ of Seidel operators");
  scan->add_option("--max-order", max_order, "Largest operator order")->required();
  scan->add_flag("--include-blocks", include_blocks, "Also scan U_2 (+) I_{o-2}");
  scan->add_option("--out", out, "CSV output (stdout if absent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(globals, path);
    if (*sw) return cmd_switch(globals, path, kind, out, verify, force);
    if (*spectra) return cmd_spectra(globals, path, kind, other, force);
    if (*density) return cmd_density(path, state_kind);
    if (*entropy) return cmd_entropy(globals, path, state_kind);
    if (*iso) return cmd_isomorphic(globals, path, other);
    if (*scan) return cmd_scan(globals, max_order, include_blocks, out);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::ParseError ? kExitUsage : kExitDomain;
  }
  return kExitUsage;
}
