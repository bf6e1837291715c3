#include "steg/error.hpp"

namespace steg {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::KeyOutOfRange: return "key out of range";
    case Errc::InvalidMarker: return "invalid marker";
    case Errc::MarkerCollision: return "marker collision";
    case Errc::MalformedContainer: return "malformed container";
    case Errc::NoDataPresent: return "no data present";
    case Errc::TruncatedRecord: return "truncated record";
    case Errc::UnsupportedRecordVersion: return "unsupported record version";
    case Errc::CapacityExceeded: return "capacity exceeded";
    case Errc::NotABmp: return "not a BMP file";
    case Errc::LengthMismatch: return "length mismatch";
    case Errc::EmptyInput: return "empty input";
    case Errc::FormatMismatch: return "format mismatch";
    case Errc::InvalidInput: return "invalid input";
  }
  return "unknown error";
}

}  // namespace steg
