#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cyclemine {

enum class ErrorCode {
  EmptyDatabase,
  MalformedTransaction,
  IoFailure,
  PartitionCountOutOfRange,
  CycleMismatch,
  ZeroSizes,
  VersionMismatch,
  CorruptState,
  MissingSupport,
  InvalidArgument,
};

// Library-wide error type. `index` carries the 1-based input line for
// MalformedTransaction and the 1-based record number for CorruptState;
// it is 0 when not meaningful.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::size_t index = 0)
      : std::runtime_error(what), code_(code), index_(index) {}

  ErrorCode code() const { return code_; }
  std::size_t index() const { return index_; }

 private:
  ErrorCode code_;
  std::size_t index_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what,
                              std::size_t index = 0) {
  throw Error(code, what, index);
}

}  // namespace cyclemine
