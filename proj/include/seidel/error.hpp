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

#include <stdexcept>
#include <string>
#include <string_view>

namespace seidel {

/// Every failure the library can report. Names follow the domain
/// conditions they signal; the CLI maps them to exit codes.
enum class ErrorKind {
  // graph-core
  InvalidVertex,
  ZeroWeight,
  NonPositiveLoop,
  ParallelEdges,
  AsymmetricWeights,
  NotSquare,
  NotSymmetric,
  OrderMismatch,
  // seidel-switch
  InvalidOrder,
  InvalidPartition,
  NonConstantRowSum,
  NotHalfAndHalf,
  NotRegularInduced,
  BadAdjacencyCount,
  UnequalWeights,
  // starlike-cospectral
  CrossCellEdge,
  NonuniformCategory1Weights,
  OddCategory2Count,
  NonComplementaryHalves,
  NegativeLoopWeight,
  TooLarge,
  // quantum-state
  ZeroTrace,
  NotPSD,
  // operator-strength
  BadBipartition,
  NotUnitary,
  // cli-io
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace seidel
