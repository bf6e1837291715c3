#pragma once

#include <cstddef>

#include "steg/bytes.hpp"

namespace steg {

// Image container format, decided by leading magic bytes only. RAW is the
// fallback for anything unrecognized.
enum class FormatKind { Png, Jpeg, Gif, Bmp, Raw };

const char* to_string(FormatKind format) noexcept;

struct ContainerInfo {
  FormatKind format;
  std::size_t image_end;       // offset one past the logical image data
  std::size_t trailer_length;  // bytes after image_end, == size - image_end
};

FormatKind sniff_format(ByteSpan file);

// Offset just past the format's own terminator: the IEND chunk (PNG), the EOI
// marker (JPEG), the trailer byte (GIF), the header file-size field (BMP), or
// the total file length (RAW). The walk is purely structural; appended bytes
// after the terminator do not move the result. Throws MalformedContainer when
// the walk runs past the buffer or the terminator is missing.
//
// `format` must be the result of sniff_format on the same bytes.
std::size_t logical_image_end(ByteSpan file, FormatKind format);

ContainerInfo analyze_container(ByteSpan file);

}  // namespace steg
