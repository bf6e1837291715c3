#include "fixtures.hpp"

#include <array>
#include <cstdint>

namespace fixtures {
namespace {

using steg::Bytes;

void push_be32(Bytes& out, std::uint32_t v) {
  out.push_back(std::uint8_t(v >> 24));
  out.push_back(std::uint8_t(v >> 16));
  out.push_back(std::uint8_t(v >> 8));
  out.push_back(std::uint8_t(v));
}

void push_le32(Bytes& out, std::uint32_t v) {
  out.push_back(std::uint8_t(v));
  out.push_back(std::uint8_t(v >> 8));
  out.push_back(std::uint8_t(v >> 16));
  out.push_back(std::uint8_t(v >> 24));
}

void push_le16(Bytes& out, std::uint16_t v) {
  out.push_back(std::uint8_t(v));
  out.push_back(std::uint8_t(v >> 8));
}

void push_text(Bytes& out, std::string_view text) {
  for (const char c : text) out.push_back(std::uint8_t(c));
}

std::uint32_t crc32(steg::ByteSpan data) {
  static const auto table = [] {
    std::array<std::uint32_t, 256> t{};
    for (std::uint32_t i = 0; i < 256; ++i) {
      std::uint32_t c = i;
      for (int j = 0; j < 8; ++j) {
        c = (c & 1) ? (0xEDB88320u ^ (c >> 1)) : (c >> 1);
      }
      t[i] = c;
    }
    return t;
  }();
  std::uint32_t c = 0xFFFFFFFFu;
  for (const std::uint8_t b : data) c = table[(c ^ b) & 0xFF] ^ (c >> 8);
  return c ^ 0xFFFFFFFFu;
}

void push_png_chunk(Bytes& out, std::string_view type, const Bytes& data) {
  push_be32(out, std::uint32_t(data.size()));
  Bytes type_and_data;
  push_text(type_and_data, type);
  type_and_data.insert(type_and_data.end(), data.begin(), data.end());
  out.insert(out.end(), type_and_data.begin(), type_and_data.end());
  push_be32(out, crc32(type_and_data));
}

}  // namespace

steg::Bytes make_png() {
  Bytes out = {0x89, 'P', 'N', 'G', 0x0D, 0x0A, 0x1A, 0x0A};

  Bytes ihdr;
  push_be32(ihdr, 1);   // width
  push_be32(ihdr, 1);   // height
  ihdr.push_back(8);    // bit depth
  ihdr.push_back(0);    // color type: grayscale
  ihdr.push_back(0);    // compression
  ihdr.push_back(0);    // filter
  ihdr.push_back(0);    // interlace
  push_png_chunk(out, "IHDR", ihdr);

  // zlib stream holding one stored deflate block: filter byte 0, pixel 0.
  const Bytes idat = {0x78, 0x01, 0x01, 0x02, 0x00, 0xFD, 0xFF,
                      0x00, 0x00, 0x00, 0x02, 0x00, 0x01};
  push_png_chunk(out, "IDAT", idat);

  push_png_chunk(out, "IEND", {});
  return out;
}

steg::Bytes make_jpeg() {
  Bytes out = {0xFF, 0xD8};  // SOI

  // APP0 / JFIF
  out.insert(out.end(), {0xFF, 0xE0, 0x00, 0x10});
  push_text(out, "JFIF");
  out.insert(out.end(), {0x00, 0x01, 0x01, 0x00, 0x00, 0x01, 0x00, 0x01, 0x00, 0x00});

  // SOF0, 1x1, one component
  out.insert(out.end(), {0xFF, 0xC0, 0x00, 0x0B, 0x08, 0x00, 0x01, 0x00, 0x01,
                         0x01, 0x01, 0x11, 0x00});

  // SOS, one component
  out.insert(out.end(), {0xFF, 0xDA, 0x00, 0x08, 0x01, 0x01, 0x00, 0x00, 0x3F, 0x00});

  // Entropy-coded bytes with a stuffed 0xFF and a restart marker in the
  // middle; neither may be taken for the end of the scan.
  out.insert(out.end(), {0x12, 0x34, 0xFF, 0x00, 0x56, 0xFF, 0xD0, 0x78, 0x9A});

  out.insert(out.end(), {0xFF, 0xD9});  // EOI
  return out;
}

steg::Bytes make_gif() {
  Bytes out;
  push_text(out, "GIF89a");
  push_le16(out, 1);     // width
  push_le16(out, 1);     // height
  out.push_back(0x80);   // global color table, 2 entries
  out.push_back(0);      // background color index
  out.push_back(0);      // aspect ratio
  out.insert(out.end(), {0x00, 0x00, 0x00, 0xFF, 0xFF, 0xFF});  // color table

  // Graphic control extension
  out.insert(out.end(), {0x21, 0xF9, 0x04, 0x00, 0x00, 0x00, 0x00, 0x00});

  // Image descriptor, no local color table
  out.push_back(0x2C);
  push_le16(out, 0);
  push_le16(out, 0);
  push_le16(out, 1);
  push_le16(out, 1);
  out.push_back(0x00);

  out.push_back(0x02);                      // LZW minimum code size
  out.insert(out.end(), {0x02, 0x4C, 0x01});  // one data sub-block
  out.push_back(0x00);                      // sub-block terminator

  out.push_back(0x3B);  // trailer
  return out;
}

steg::Bytes make_bmp(int width, int height) {
  const std::size_t row = (std::size_t(width) * 3 + 3) & ~std::size_t{3};
  const std::size_t pixel_bytes = row * std::size_t(height);
  const std::uint32_t file_size = std::uint32_t(54 + pixel_bytes);

  Bytes out;
  out.reserve(file_size);
  push_text(out, "BM");
  push_le32(out, file_size);
  push_le32(out, 0);   // reserved
  push_le32(out, 54);  // pixel array offset

  push_le32(out, 40);  // info header size
  push_le32(out, std::uint32_t(width));
  push_le32(out, std::uint32_t(height));
  push_le16(out, 1);   // planes
  push_le16(out, 24);  // bits per pixel
  push_le32(out, 0);   // compression
  push_le32(out, std::uint32_t(pixel_bytes));
  push_le32(out, 2835);  // x pixels per meter
  push_le32(out, 2835);  // y pixels per meter
  push_le32(out, 0);
  push_le32(out, 0);

  for (int y = 0; y < height; ++y) {
    std::size_t written = 0;
    for (int x = 0; x < width; ++x) {
      const auto gray = std::uint8_t(((x + y) * 2) & 0xFE);
      out.push_back(gray);
      out.push_back(gray);
      out.push_back(gray);
      written += 3;
    }
    while (written++ < row) out.push_back(0x00);
  }
  return out;
}

steg::Bytes make_bmp_with_pixel_bytes(std::size_t pixel_bytes) {
  const auto file_size = std::uint32_t(54 + pixel_bytes);
  Bytes out;
  out.reserve(file_size);
  push_text(out, "BM");
  push_le32(out, file_size);
  push_le32(out, 0);
  push_le32(out, 54);

  push_le32(out, 40);
  push_le32(out, 1);
  push_le32(out, 1);
  push_le16(out, 1);
  push_le16(out, 8);
  push_le32(out, 0);
  push_le32(out, std::uint32_t(pixel_bytes));
  push_le32(out, 2835);
  push_le32(out, 2835);
  push_le32(out, 0);
  push_le32(out, 0);

  for (std::size_t i = 0; i < pixel_bytes; ++i) {
    out.push_back(std::uint8_t((i * 7) & 0xFE));
  }
  return out;
}

steg::Bytes make_raw() {
  return steg::to_bytes(
      "plain lowercase text that matches no image magic and therefore "
      "sniffs as a raw byte container for embedding purposes\n");
}

std::vector<Fixture> all_formats() {
  std::vector<Fixture> fixtures;
  auto add = [&](const char* name, Bytes bytes) {
    const std::size_t end = bytes.size();
    fixtures.push_back({name, std::move(bytes), end});
  };
  add("png", make_png());
  add("jpeg", make_jpeg());
  add("gif", make_gif());
  add("bmp", make_bmp(8, 8));
  add("raw", make_raw());
  return fixtures;
}

std::vector<Fixture> structured_formats() {
  auto fixtures = all_formats();
  fixtures.pop_back();
  return fixtures;
}

steg::Bytes english_like_text(std::size_t min_len, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> word_len(2, 8);
  std::uniform_int_distribution<int> letter('a', 'z');
  Bytes text;
  text.reserve(min_len + 16);
  while (text.size() < min_len) {
    const int len = word_len(rng);
    for (int i = 0; i < len; ++i) text.push_back(std::uint8_t(letter(rng)));
    text.push_back(' ');
  }
  return text;
}

steg::Bytes random_bytes(std::size_t count, std::mt19937_64& rng) {
  Bytes out(count);
  std::size_t i = 0;
  while (i < count) {
    std::uint64_t word = rng();
    for (int b = 0; b < 8 && i < count; ++b, word >>= 8) {
      out[i++] = std::uint8_t(word & 0xFF);
    }
  }
  return out;
}

}  // namespace fixtures
