#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace padim {

enum class ErrorKind {
  InvalidArgument,
  PrimeMismatch,
  NotInvertible,
  NotAUnitSeries,
  InsufficientPrecision,
  NotABinomialPower,
  KindMismatch,
  NotACategoricalSequence,
  IndexOutOfRange,
  UnsupportedModel,
  IsGenerator,
  NotNilpotent,
  SizeCap,
  NotAUnit,
  Internal,
};

std::string_view to_string(ErrorKind kind);

/// Domain error raised by every module. `index()` carries the offending
/// position for errors that have one (NotABinomialPower,
/// NotACategoricalSequence).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail,
        std::optional<std::int64_t> index = std::nullopt)
      : std::runtime_error(detail), kind_(kind), index_(index) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::int64_t> index() const noexcept { return index_; }

 private:
  ErrorKind kind_;
  std::optional<std::int64_t> index_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail,
                              std::optional<std::int64_t> index = std::nullopt) {
  throw Error(kind, detail, index);
}

}  // namespace padim
