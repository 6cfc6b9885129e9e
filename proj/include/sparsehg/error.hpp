#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sparsehg/types.hpp"

namespace sparsehg {

/// Stable machine-readable error codes. The CLI prints them as `ERROR <code>`.
enum class ErrorCode {
  Syntax,
  DuplicateVertexInEdge,
  UndeclaredVertex,
  DuplicateLabel,
  EmptyEdge,
  UnknownVertex,
  NotAGraph,
  CapExceeded,
  NotKSparse,
  RankTooSmall,
  NoHomomorphism,
  MalformedPartition,
  NoHyperpath,
  Disconnected,
  ClassOverflow,
  MalformedTree,
  NotATreeNode,
  NotSparseDistribution,
  InvalidFlow,
  DuplicateSet,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, VertexSet witness = {})
      : std::runtime_error(message), code_(code), witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const char* code_name() const noexcept { return error_code_name(code_); }
  /// Violating vertex set for NotKSparse / NotSparseDistribution, else empty.
  const VertexSet& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  VertexSet witness_;
};

}  // namespace sparsehg
