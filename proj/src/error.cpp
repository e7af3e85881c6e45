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

#include "seidel/error.hpp"

namespace seidel {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidVertex: return "InvalidVertex";
    case ErrorKind::ZeroWeight: return "ZeroWeight";
    case ErrorKind::NonPositiveLoop: return "NonPositiveLoop";
    case ErrorKind::ParallelEdges: return "ParallelEdges";
    case ErrorKind::AsymmetricWeights: return "AsymmetricWeights";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::InvalidOrder: return "InvalidOrder";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::NonConstantRowSum: return "NonConstantRowSum";
    case ErrorKind::NotHalfAndHalf: return "NotHalfAndHalf";
    case ErrorKind::NotRegularInduced: return "NotRegularInduced";
    case ErrorKind::BadAdjacencyCount: return "BadAdjacencyCount";
    case ErrorKind::UnequalWeights: return "UnequalWeights";
    case ErrorKind::CrossCellEdge: return "CrossCellEdge";
    case ErrorKind::NonuniformCategory1Weights: return "NonuniformCategory1Weights";
    case ErrorKind::OddCategory2Count: return "OddCategory2Count";
    case ErrorKind::NonComplementaryHalves: return "NonComplementaryHalves";
    case ErrorKind::NegativeLoopWeight: return "NegativeLoopWeight";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ZeroTrace: return "ZeroTrace";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::BadBipartition: return "BadBipartition";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind) {}

}  // namespace seidel
