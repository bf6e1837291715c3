#pragma once

#include <cstddef>

#include "steg/bytes.hpp"

namespace steg {

// Pixel-array slice of a BMP file. Row padding bytes count as embeddable
// pixel bytes; bytes after the logical image end (appended trailers) never do.
struct BmpPixelRegion {
  std::size_t data_offset;       // from the header field at offset 10
  std::size_t pixel_byte_count;  // data_offset .. logical image end
};

// Throws NotABmp for non-BMP input and MalformedContainer when the header
// fields are inconsistent (offset below 54 or past the image end).
BmpPixelRegion bmp_pixel_region(ByteSpan file);

// Sequential LSB replacement over the pixel array: a 32-bit big-endian
// payload length, then the payload bits MSB-first, one bit per pixel byte in
// ascending order. Output length equals input length; only LSBs change.
// Throws CapacityExceeded when 32 + 8 * |payload| exceeds the pixel byte
// count.
Bytes lsb_embed(ByteSpan cover, ByteSpan payload);

// Inverse of lsb_embed. Throws TruncatedRecord when the declared length
// exceeds the remaining LSB capacity.
Bytes lsb_extract(ByteSpan stego);

// Embeds `first`, then `second` over the result, then extracts: the single
// LSB slot only ever holds the latest payload.
struct LsbOverwriteReport {
  Bytes extracted;        // what extraction yields after both embeds
  bool second_recovered;  // extracted == second
  bool first_destroyed;   // extracted != first
};

LsbOverwriteReport lsb_overwrite_demo(ByteSpan cover, ByteSpan first,
                                      ByteSpan second);

}  // namespace steg
