#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vpart {

enum class Errc {
  InvalidInput,
  EmptyMatrix,
  ZeroColumn,
  OriginInHull,
  IndexOutOfRange,
  ParallelColumns,
  TooFewColumns,
  OrderTooHigh,
  DegenerateBase,
  NotCoprime,
  NotInvertible,
  NotOnePrime,
  NonIntegerResult,
  PreconditionFailed,
  NotPairwiseCoprime,
  DegenerateDirection,
  HorizonExceeded,
};

/// Stable name of an error code, used in machine-readable CLI errors.
std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace vpart
