#pragma once

#include <stdexcept>
#include <string>

namespace steg {

// Failure categories shared across the library. The CLI maps these onto its
// documented exit codes; see tools/trailsteg.cpp.
enum class Errc {
  KeyOutOfRange,
  InvalidMarker,
  MarkerCollision,
  MalformedContainer,
  NoDataPresent,
  TruncatedRecord,
  UnsupportedRecordVersion,
  CapacityExceeded,
  NotABmp,
  LengthMismatch,
  EmptyInput,
  FormatMismatch,
  InvalidInput,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace steg
