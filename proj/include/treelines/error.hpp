#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace treelines {

enum class Errc {
  InvalidArgument,
  ParallelLines,
  DegenerateContact,
  ParallelPair,
  ConcurrentTriple,
  DuplicateLine,
  TooFew,
  OnIntersection,
  EmptyRegion,
  ChainTooShort,
  SpanTooWide,
  NotDoubling,
  NotCapOrCup,
  DivisibilityError,
  SizeMismatch,
  NotAPath,
  NonUniform,
  TooLarge,
  Syntax,
  Validation,
  EmptyScene,
};

const char* errc_name(Errc code);

/// Thrown by every library operation on precondition or validation failure.
/// `witness` carries the offending ids (line ids, vertex ids, or a 1-based
/// index) when the failure names specific objects.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::vector<int> witness = {})
      : std::runtime_error(what), code_(code), witness_(std::move(witness)) {}

  Errc code() const noexcept { return code_; }
  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  Errc code_;
  std::vector<int> witness_;
};

}  // namespace treelines
