#include "steg/framing.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "steg/error.hpp"

namespace steg {
namespace {

constexpr std::uint8_t kRecordVersion = 0x01;
constexpr std::size_t kLengthHeaderSize = 9;  // version byte + 8-byte length
constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

// A RAW container has no structural image end (its logical end is the file
// length), so the trailer scan has to cover the whole file.
std::size_t trailer_scan_start(const ContainerInfo& info) {
  return info.format == FormatKind::Raw ? 0 : info.image_end;
}

std::size_t find_marker(ByteSpan haystack, ByteSpan marker, std::size_t from) {
  if (from > haystack.size()) return npos;
  const auto it = std::search(haystack.begin() + from, haystack.end(),
                              marker.begin(), marker.end());
  return it == haystack.end() ? npos
                              : static_cast<std::size_t>(it - haystack.begin());
}

void append_be64(Bytes& out, std::uint64_t value) {
  for (int shift = 56; shift >= 0; shift -= 8) {
    out.push_back(static_cast<std::uint8_t>(value >> shift));
  }
}

std::uint64_t read_be64(ByteSpan s, std::size_t pos) {
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < 8; ++i) value = (value << 8) | s[pos + i];
  return value;
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

Marker::Marker(ByteSpan bytes) : bytes_(bytes.begin(), bytes.end()) {
  if (bytes_.empty()) {
    throw Error(Errc::InvalidMarker, "marker must not be empty");
  }
  if (bytes_.size() > kMaxLength) {
    throw Error(Errc::InvalidMarker,
                "marker longer than " + std::to_string(kMaxLength) + " bytes");
  }
}

Marker::Marker(std::string_view text) : Marker(as_bytes(text)) {}

Marker parse_marker_text(std::string_view text) {
  Bytes out;
  for (std::size_t i = 0; i < text.size();) {
    if (text[i] != '\\') {
      out.push_back(static_cast<std::uint8_t>(text[i]));
      ++i;
      continue;
    }
    if (i + 1 >= text.size()) {
      throw Error(Errc::InvalidMarker, "dangling backslash in marker");
    }
    const char escape = text[i + 1];
    if (escape == '\\') {
      out.push_back('\\');
      i += 2;
      continue;
    }
    if (escape == 'x' || escape == 'X') {
      if (i + 3 >= text.size()) {
        throw Error(Errc::InvalidMarker, "\\x escape needs two hex digits");
      }
      const int hi = hex_digit(text[i + 2]);
      const int lo = hex_digit(text[i + 3]);
      if (hi < 0 || lo < 0) {
        throw Error(Errc::InvalidMarker, "\\x escape needs two hex digits");
      }
      out.push_back(static_cast<std::uint8_t>((hi << 4) | lo));
      i += 4;
      continue;
    }
    throw Error(Errc::InvalidMarker,
                std::string("unknown marker escape \\") + escape);
  }
  return Marker(ByteSpan{out});
}

Bytes embed(ByteSpan cover, ByteSpan payload, StegoKey key,
            const Marker& marker, FramingMode mode) {
  if (!key.embedding_grade()) {
    throw Error(Errc::KeyOutOfRange,
                "embedding requires a key in [26, 255], got " +
                    std::to_string(key.value()));
  }
  const ContainerInfo info = analyze_container(cover);
  // The appended marker must be the first match the extraction scan can see.
  // Probe the scanned region with the marker appended, so occurrences inside
  // the existing trailer and matches straddling the append boundary both
  // surface; only the trivial match at the very end is the marker itself.
  Bytes probe(cover.begin() + trailer_scan_start(info), cover.end());
  probe.insert(probe.end(), marker.bytes().begin(), marker.bytes().end());
  if (find_marker(probe, marker.bytes(), 0) != probe.size() - marker.size()) {
    throw Error(Errc::MarkerCollision,
                "marker already occurs in the region extraction scans; "
                "pick a different marker");
  }

  const Bytes ciphertext = shift_encrypt(payload, key.value());
  Bytes out;
  out.reserve(cover.size() + marker.size() + kLengthHeaderSize + ciphertext.size());
  out.assign(cover.begin(), cover.end());
  out.insert(out.end(), marker.bytes().begin(), marker.bytes().end());
  if (mode == FramingMode::LengthPrefixed) {
    out.push_back(kRecordVersion);
    append_be64(out, ciphertext.size());
  }
  out.insert(out.end(), ciphertext.begin(), ciphertext.end());
  return out;
}

Bytes extract(ByteSpan stego, StegoKey key, const Marker& marker,
              FramingMode mode, ScanScope scope) {
  std::size_t from = 0;
  if (scope == ScanScope::Trailer) {
    from = trailer_scan_start(analyze_container(stego));
  }
  const std::size_t hit = find_marker(stego, marker.bytes(), from);
  if (hit == npos) {
    throw Error(Errc::NoDataPresent, "no data present in the image");
  }
  const std::size_t record = hit + marker.size();
  const std::size_t remaining = stego.size() - record;

  if (mode == FramingMode::Bare) {
    return shift_decrypt(stego.subspan(record), key.value());
  }

  if (remaining < kLengthHeaderSize) {
    throw Error(Errc::TruncatedRecord, "record header overruns end of file");
  }
  const std::uint8_t version = stego[record];
  if (version != kRecordVersion) {
    throw Error(Errc::UnsupportedRecordVersion,
                "record version " + std::to_string(version) +
                    " not supported (expected 1)");
  }
  const std::uint64_t length = read_be64(stego, record + 1);
  if (length > remaining - kLengthHeaderSize) {
    throw Error(Errc::TruncatedRecord,
                "declared ciphertext length " + std::to_string(length) +
                    " exceeds the " +
                    std::to_string(remaining - kLengthHeaderSize) +
                    " bytes that follow the record header");
  }
  return shift_decrypt(
      stego.subspan(record + kLengthHeaderSize, static_cast<std::size_t>(length)),
      key.value());
}

StreamExtractor::StreamExtractor(StegoKey key, const Marker& marker,
                                 FramingMode mode)
    : key_(key),
      marker_(marker.bytes().begin(), marker.bytes().end()),
      mode_(mode) {
  window_.reserve(marker_.size());
}

void StreamExtractor::consume(std::uint8_t byte) {
  switch (state_) {
    case State::Searching:
      if (window_.size() == marker_.size()) {
        window_.erase(window_.begin());
      }
      window_.push_back(byte);
      if (window_ == marker_) {
        if (mode_ == FramingMode::Bare) {
          state_ = State::Body;
        } else {
          state_ = State::Header;
        }
      }
      return;
    case State::Header:
      header_.push_back(byte);
      if (header_.size() == kLengthHeaderSize) {
        expected_ = read_be64(header_, 1);
        captured_.reserve(static_cast<std::size_t>(
            std::min<std::uint64_t>(expected_, 1 << 20)));
        state_ = expected_ == 0 ? State::Done : State::Body;
      }
      return;
    case State::Body:
      captured_.push_back(byte);
      if (mode_ == FramingMode::LengthPrefixed && captured_.size() == expected_) {
        state_ = State::Done;
      }
      return;
    case State::Done:
      return;  // record complete, the rest of the stream is not ours
  }
}

void StreamExtractor::feed(ByteSpan chunk) {
  for (const std::uint8_t byte : chunk) consume(byte);
}

Bytes StreamExtractor::finish() {
  if (state_ == State::Searching) {
    throw Error(Errc::NoDataPresent, "no data present in the image");
  }
  if (mode_ == FramingMode::Bare) {
    return shift_decrypt(captured_, key_.value());
  }
  if (state_ == State::Header) {
    throw Error(Errc::TruncatedRecord, "record header overruns end of stream");
  }
  const std::uint8_t version = header_[0];
  if (version != kRecordVersion) {
    throw Error(Errc::UnsupportedRecordVersion,
                "record version " + std::to_string(version) +
                    " not supported (expected 1)");
  }
  if (captured_.size() < expected_) {
    throw Error(Errc::TruncatedRecord,
                "declared ciphertext length " + std::to_string(expected_) +
                    " exceeds the " + std::to_string(captured_.size()) +
                    " bytes that follow the record header");
  }
  return shift_decrypt(captured_, key_.value());
}

Bytes stream_extract(std::istream& in, StegoKey key, const Marker& marker,
                     FramingMode mode) {
  StreamExtractor extractor(key, marker, mode);
  char buffer[4096];
  while (in) {
    in.read(buffer, sizeof buffer);
    const auto got = static_cast<std::size_t>(in.gcount());
    extractor.feed({reinterpret_cast<const std::uint8_t*>(buffer), got});
  }
  return extractor.finish();
}

TrailerReport list_trailer(ByteSpan stego) {
  const ContainerInfo info = analyze_container(stego);
  const ByteSpan trailer = stego.subspan(info.image_end);
  return {info, Bytes(trailer.begin(), trailer.end())};
}

}  // namespace steg
