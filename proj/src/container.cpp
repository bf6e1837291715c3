#include "steg/container.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "steg/error.hpp"

namespace steg {
namespace {

constexpr std::uint8_t kPngMagic[8] = {0x89, 'P', 'N', 'G', 0x0D, 0x0A, 0x1A, 0x0A};

bool starts_with(ByteSpan file, ByteSpan prefix) {
  return file.size() >= prefix.size() &&
         std::equal(prefix.begin(), prefix.end(), file.begin());
}

std::uint32_t be32(ByteSpan f, std::size_t pos) {
  return (std::uint32_t(f[pos]) << 24) | (std::uint32_t(f[pos + 1]) << 16) |
         (std::uint32_t(f[pos + 2]) << 8) | std::uint32_t(f[pos + 3]);
}

std::uint16_t be16(ByteSpan f, std::size_t pos) {
  return static_cast<std::uint16_t>((f[pos] << 8) | f[pos + 1]);
}

std::uint32_t le32(ByteSpan f, std::size_t pos) {
  return std::uint32_t(f[pos]) | (std::uint32_t(f[pos + 1]) << 8) |
         (std::uint32_t(f[pos + 2]) << 16) | (std::uint32_t(f[pos + 3]) << 24);
}

[[noreturn]] void malformed(const std::string& what) {
  throw Error(Errc::MalformedContainer, "malformed container: " + what);
}

// Chunk walk: 4-byte big-endian length, 4-byte type, data, 4-byte CRC. The
// image ends one past the IEND chunk's CRC. CRCs are not verified.
std::size_t png_end(ByteSpan f) {
  std::size_t pos = 8;
  while (true) {
    if (f.size() < 8 || pos > f.size() - 8) malformed("PNG chunk header truncated");
    const std::uint64_t data_len = be32(f, pos);
    const std::uint64_t chunk_end = std::uint64_t{pos} + 8 + data_len + 4;
    if (chunk_end > f.size()) malformed("PNG chunk overruns file");
    const bool is_iend = f[pos + 4] == 'I' && f[pos + 5] == 'E' &&
                         f[pos + 6] == 'N' && f[pos + 7] == 'D';
    if (is_iend) return static_cast<std::size_t>(chunk_end);
    pos = static_cast<std::size_t>(chunk_end);
  }
}

// Marker walk. Variable-length segments carry a 2-byte big-endian length that
// includes itself; SOI/EOI/TEM/RSTn stand alone. After an SOS header comes
// entropy-coded scan data, where FF 00 is a stuffed data byte and FF D0-D7 a
// restart marker — neither ends the scan. The image ends one past the first
// structurally reached EOI.
std::size_t jpeg_end(ByteSpan f) {
  std::size_t pos = 2;  // past SOI
  while (true) {
    if (pos + 2 > f.size()) malformed("JPEG marker truncated");
    if (f[pos] != 0xFF) malformed("JPEG segment does not start with a marker");
    const std::uint8_t marker = f[pos + 1];
    if (marker == 0xFF) {  // fill byte
      ++pos;
      continue;
    }
    if (marker == 0x00) malformed("JPEG stuffed byte outside scan data");
    pos += 2;
    if (marker == 0xD9) return pos;  // EOI
    if (marker == 0xD8 || marker == 0x01) continue;           // SOI, TEM
    if (marker >= 0xD0 && marker <= 0xD7) continue;           // RSTn
    if (pos + 2 > f.size()) malformed("JPEG segment length truncated");
    const std::size_t seg_len = be16(f, pos);
    if (seg_len < 2 || seg_len > f.size() - pos) malformed("JPEG segment overruns file");
    pos += seg_len;
    if (marker != 0xDA) continue;  // not SOS, next marker follows directly
    while (true) {
      if (pos >= f.size()) malformed("JPEG scan data missing terminating marker");
      if (f[pos] != 0xFF) {
        ++pos;
        continue;
      }
      if (pos + 1 >= f.size()) malformed("JPEG scan data ends inside a marker");
      const std::uint8_t next = f[pos + 1];
      if (next == 0x00 || (next >= 0xD0 && next <= 0xD7)) {
        pos += 2;
        continue;
      }
      if (next == 0xFF) {
        ++pos;
        continue;
      }
      break;  // a real marker; the outer loop classifies it
    }
  }
}

// Block walk: header, logical screen descriptor, optional global color
// table, then extensions (0x21) and image descriptors (0x2C) until the
// trailer byte 0x3B.
std::size_t gif_end(ByteSpan f) {
  std::size_t pos = 6;
  if (pos + 7 > f.size()) malformed("GIF screen descriptor truncated");
  const std::uint8_t packed = f[pos + 4];
  pos += 7;
  if (packed & 0x80) pos += std::size_t{3} << ((packed & 0x07) + 1);

  auto skip_subblocks = [&] {
    while (true) {
      if (pos >= f.size()) malformed("GIF data sub-blocks truncated");
      const std::uint8_t n = f[pos++];
      if (n == 0) return;
      pos += n;
    }
  };

  while (true) {
    if (pos >= f.size()) malformed("GIF trailer missing");
    const std::uint8_t block = f[pos++];
    if (block == 0x3B) return pos;
    if (block == 0x21) {  // extension: label byte, then sub-blocks
      if (pos >= f.size()) malformed("GIF extension truncated");
      ++pos;
      skip_subblocks();
    } else if (block == 0x2C) {  // image descriptor
      if (pos + 9 > f.size()) malformed("GIF image descriptor truncated");
      const std::uint8_t ipacked = f[pos + 8];
      pos += 9;
      if (ipacked & 0x80) pos += std::size_t{3} << ((ipacked & 0x07) + 1);
      if (pos >= f.size()) malformed("GIF image data truncated");
      ++pos;  // LZW minimum code size
      skip_subblocks();
    } else {
      malformed("GIF block type unknown");
    }
  }
}

// The little-endian file-size field at offset 2 is where appended data
// begins, whatever the actual file length says.
std::size_t bmp_end(ByteSpan f) {
  if (f.size() < 6) malformed("BMP header truncated");
  const std::size_t declared = le32(f, 2);
  if (declared < 14) malformed("BMP size field smaller than the file header");
  if (declared > f.size()) malformed("BMP size field past end of file");
  return declared;
}

}  // namespace

const char* to_string(FormatKind format) noexcept {
  switch (format) {
    case FormatKind::Png: return "PNG";
    case FormatKind::Jpeg: return "JPEG";
    case FormatKind::Gif: return "GIF";
    case FormatKind::Bmp: return "BMP";
    case FormatKind::Raw: return "RAW";
  }
  return "RAW";
}

FormatKind sniff_format(ByteSpan file) {
  if (starts_with(file, kPngMagic)) return FormatKind::Png;
  if (file.size() >= 3 && file[0] == 0xFF && file[1] == 0xD8 && file[2] == 0xFF)
    return FormatKind::Jpeg;
  if (starts_with(file, as_bytes("GIF87a")) || starts_with(file, as_bytes("GIF89a")))
    return FormatKind::Gif;
  if (file.size() >= 2 && file[0] == 'B' && file[1] == 'M') return FormatKind::Bmp;
  return FormatKind::Raw;
}

std::size_t logical_image_end(ByteSpan file, FormatKind format) {
  switch (format) {
    case FormatKind::Png: return png_end(file);
    case FormatKind::Jpeg: return jpeg_end(file);
    case FormatKind::Gif: return gif_end(file);
    case FormatKind::Bmp: return bmp_end(file);
    case FormatKind::Raw: return file.size();
  }
  return file.size();
}

ContainerInfo analyze_container(ByteSpan file) {
  const FormatKind format = sniff_format(file);
  const std::size_t image_end = logical_image_end(file, format);
  return {format, image_end, file.size() - image_end};
}

}  // namespace steg
