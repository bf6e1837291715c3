#include "steg/lsb.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>

#include "steg/container.hpp"
#include "steg/error.hpp"

namespace steg {
namespace {

constexpr std::size_t kLengthBits = 32;
constexpr std::size_t kMinHeaderSize = 54;  // file header + info header

std::uint32_t le32(ByteSpan f, std::size_t pos) {
  return std::uint32_t(f[pos]) | (std::uint32_t(f[pos + 1]) << 8) |
         (std::uint32_t(f[pos + 2]) << 16) | (std::uint32_t(f[pos + 3]) << 24);
}

}  // namespace

BmpPixelRegion bmp_pixel_region(ByteSpan file) {
  if (sniff_format(file) != FormatKind::Bmp) {
    throw Error(Errc::NotABmp, "input is not a BMP file");
  }
  const std::size_t image_end = logical_image_end(file, FormatKind::Bmp);
  if (file.size() < 14) {
    throw Error(Errc::MalformedContainer,
                "malformed container: BMP file header truncated");
  }
  const std::size_t data_offset = le32(file, 10);
  if (data_offset < kMinHeaderSize || data_offset > image_end) {
    throw Error(Errc::MalformedContainer,
                "malformed container: BMP pixel array offset " +
                    std::to_string(data_offset) + " out of range");
  }
  return {data_offset, image_end - data_offset};
}

Bytes lsb_embed(ByteSpan cover, ByteSpan payload) {
  const BmpPixelRegion region = bmp_pixel_region(cover);
  const std::uint64_t needed_bits = kLengthBits + 8 * std::uint64_t{payload.size()};
  if (payload.size() > std::numeric_limits<std::uint32_t>::max() ||
      needed_bits > region.pixel_byte_count) {
    throw Error(Errc::CapacityExceeded,
                "payload needs " + std::to_string(needed_bits) +
                    " pixel bytes but only " +
                    std::to_string(region.pixel_byte_count) + " are available");
  }

  Bytes out(cover.begin(), cover.end());
  std::size_t bit_index = 0;
  const auto put_bit = [&](std::uint8_t bit) {
    std::uint8_t& pixel = out[region.data_offset + bit_index++];
    pixel = static_cast<std::uint8_t>((pixel & 0xFE) | bit);
  };

  const auto length = static_cast<std::uint32_t>(payload.size());
  for (int shift = 31; shift >= 0; --shift) put_bit((length >> shift) & 1);
  for (const std::uint8_t byte : payload) {
    for (int shift = 7; shift >= 0; --shift) put_bit((byte >> shift) & 1);
  }
  return out;
}

Bytes lsb_extract(ByteSpan stego) {
  const BmpPixelRegion region = bmp_pixel_region(stego);
  if (region.pixel_byte_count < kLengthBits) {
    throw Error(Errc::TruncatedRecord,
                "pixel array smaller than the 32-bit length header");
  }

  std::size_t bit_index = 0;
  const auto get_bit = [&] {
    return static_cast<std::uint32_t>(stego[region.data_offset + bit_index++] & 1);
  };

  std::uint32_t length = 0;
  for (std::size_t i = 0; i < kLengthBits; ++i) length = (length << 1) | get_bit();
  if (kLengthBits + 8 * std::uint64_t{length} > region.pixel_byte_count) {
    throw Error(Errc::TruncatedRecord,
                "declared payload length " + std::to_string(length) +
                    " exceeds the pixel array's LSB capacity");
  }

  Bytes payload(length);
  for (auto& byte : payload) {
    std::uint32_t value = 0;
    for (int i = 0; i < 8; ++i) value = (value << 1) | get_bit();
    byte = static_cast<std::uint8_t>(value);
  }
  return payload;
}

LsbOverwriteReport lsb_overwrite_demo(ByteSpan cover, ByteSpan first,
                                      ByteSpan second) {
  const Bytes once = lsb_embed(cover, first);
  const Bytes twice = lsb_embed(once, second);
  LsbOverwriteReport report;
  report.extracted = lsb_extract(twice);
  report.second_recovered = std::ranges::equal(report.extracted, second);
  report.first_destroyed = !std::ranges::equal(report.extracted, first);
  return report;
}

}  // namespace steg
