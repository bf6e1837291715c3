// Hand-assembled container fixtures. Each builder writes the format's own
// terminator itself, so the assembled length is an independent oracle for the
// logical image end of the pristine file.
#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "steg/bytes.hpp"

namespace fixtures {

struct Fixture {
  std::string name;
  steg::Bytes bytes;
  std::size_t image_end;  // known from assembly, not from the library
};

// 1x1 grayscale PNG: signature, IHDR, IDAT (stored-block zlib stream), IEND.
steg::Bytes make_png();

// Tiny baseline JPEG whose scan data contains a stuffed 0xFF 0x00 pair and a
// restart marker before the EOI.
steg::Bytes make_jpeg();

// 1x1 GIF89a with a global color table, one extension block, and one image
// block ahead of the trailer.
steg::Bytes make_gif();

// 24-bit bottom-up BMP; pixel values are an even-valued gray ramp, so every
// pixel byte has a zero LSB.
steg::Bytes make_bmp(int width, int height);

// BMP-shaped file with exactly `pixel_bytes` bytes after a 54-byte header.
steg::Bytes make_bmp_with_pixel_bytes(std::size_t pixel_bytes);

// Lowercase text; matches no magic, so it sniffs as RAW.
steg::Bytes make_raw();

std::vector<Fixture> all_formats();
std::vector<Fixture> structured_formats();  // everything except RAW

// Words of random lowercase letters separated by single spaces, at least
// min_len bytes. The space is the modal byte by a wide margin.
steg::Bytes english_like_text(std::size_t min_len, std::mt19937_64& rng);

steg::Bytes random_bytes(std::size_t count, std::mt19937_64& rng);

}  // namespace fixtures
