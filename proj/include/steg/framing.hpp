#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <string_view>

#include "steg/bytes.hpp"
#include "steg/cipher.hpp"
#include "steg/container.hpp"

namespace steg {

// User-chosen byte string that delimits the start of a hidden record in the
// trailer. Non-empty, at most 64 bytes (bounds the streaming window).
class Marker {
 public:
  static constexpr std::size_t kMaxLength = 64;

  explicit Marker(ByteSpan bytes);
  explicit Marker(std::string_view text);

  ByteSpan bytes() const noexcept { return bytes_; }
  std::size_t size() const noexcept { return bytes_.size(); }

 private:
  Bytes bytes_;
};

// Decodes a marker given as text with \xNN escapes (and \\ for a literal
// backslash) — the form accepted on the command line for binary markers.
Marker parse_marker_text(std::string_view text);

// Record layouts appended after the image data:
//   Bare           marker || ciphertext, ciphertext runs to end of file
//   LengthPrefixed marker || version 0x01 || 8-byte big-endian ciphertext
//                  length || ciphertext
// Bare keeps compatibility with readers that take everything after the
// marker; the explicit length is what makes exact multi-payload recovery
// possible. Records concatenate back to back.
enum class FramingMode { Bare, LengthPrefixed };

// Where extraction starts looking for the marker. Trailer starts at the
// logical image end so marker bytes inside pixel data cannot match; FullFile
// scans from offset zero. A RAW container has no structural image end, so its
// trailer scan covers the whole file either way.
enum class ScanScope { Trailer, FullFile };

// Appends one encrypted record after the cover's existing bytes. The first
// |cover| bytes of the result equal the cover exactly. Throws KeyOutOfRange
// for keys below 26, MarkerCollision if the marker already occurs in the
// region extraction would scan, and MalformedContainer from the container
// walk.
Bytes embed(ByteSpan cover, ByteSpan payload, StegoKey key,
            const Marker& marker, FramingMode mode);

// Finds the first marker occurrence in scope and decrypts the record behind
// it. Throws NoDataPresent when the marker is absent, TruncatedRecord when a
// length-prefixed record overruns the file, and UnsupportedRecordVersion for
// unknown record versions.
Bytes extract(ByteSpan stego, StegoKey key, const Marker& marker,
              FramingMode mode, ScanScope scope = ScanScope::Trailer);

// Single forward pass over a byte stream, keeping a sliding window of
// |marker| bytes. finish() yields exactly what extract(..., FullFile) yields
// on the buffered bytes, including the errors. One instance per stream; not
// reusable.
class StreamExtractor {
 public:
  StreamExtractor(StegoKey key, const Marker& marker, FramingMode mode);

  void feed(ByteSpan chunk);
  Bytes finish();

 private:
  enum class State { Searching, Header, Body, Done };

  void consume(std::uint8_t byte);

  StegoKey key_;
  Bytes marker_;
  FramingMode mode_;
  State state_ = State::Searching;
  Bytes window_;               // last |marker| bytes seen while searching
  Bytes header_;               // version byte + 8-byte length (LengthPrefixed)
  Bytes captured_;             // ciphertext bytes
  std::uint64_t expected_ = 0; // declared ciphertext length
};

// Convenience wrapper: drains the stream through a StreamExtractor.
Bytes stream_extract(std::istream& in, StegoKey key, const Marker& marker,
                     FramingMode mode);

struct TrailerReport {
  ContainerInfo info;
  Bytes trailer;  // bytes after the logical image end, verbatim
};

TrailerReport list_trailer(ByteSpan stego);

}  // namespace steg
