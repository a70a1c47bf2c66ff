#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace conelab {

/// Typed failure modes. The enumerator names are part of the public report
/// format: the CLI prints them verbatim.
enum class ErrorKind {
  InvalidInput,
  DimensionMismatch,
  DimensionLimit,
  DegenerateLattice,
  NotAnIsometry,
  CapExceeded,
  NotARoot,
  NotHyperbolic,
  NonPositiveSquare,
  OrderMismatch,
  UnsupportedOrder,
  InfiniteOrder,
  FixedDirection,
  EvenOrder,
  RankObstruction,
  NotFree,
  NotPositiveDefinite,
  NotUnimodular,
  ParseError,
};

std::string_view error_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace conelab
