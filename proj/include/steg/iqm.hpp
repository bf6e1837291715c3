#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "steg/bytes.hpp"
#include "steg/container.hpp"

namespace steg {

struct Histogram {
  std::array<std::uint64_t, 256> bins{};

  std::uint64_t total() const noexcept;
  bool operator==(const Histogram&) const = default;
};

Histogram histogram(ByteSpan data);

// bins[d] counts positions where |a[i] - b[i]| == d. Throws LengthMismatch.
Histogram error_histogram(ByteSpan a, ByteSpan b);

// Mean squared error over 8-bit samples. Throws LengthMismatch and EmptyInput.
double mse(ByteSpan a, ByteSpan b);

// 10 * log10(255^2 / mse), or +infinity when the inputs are identical.
double psnr(ByteSpan a, ByteSpan b);

struct IqmReport {
  FormatKind format;
  std::size_t region_begin;
  std::size_t region_end;
  Histogram cover_hist;
  Histogram stego_hist;
  Histogram error_hist;
  double mse_value;
  double psnr_db;  // +infinity at zero error
  bool byte_region_identical;
};

// Compares the cover's logical image region against the same byte range of
// the stego file: the pixel array for BMP, the whole file for RAW, and
// [0, image_end) for PNG/JPEG/GIF, whose compressed payloads are compared as
// bytes (byte identity implies pixel identity). Throws FormatMismatch when
// the two files sniff differently and LengthMismatch when the stego file is
// shorter than the compared region.
IqmReport compare_report(ByteSpan cover, ByteSpan stego);

// 256 comma-separated bin counts.
std::string histogram_csv(const Histogram& h);

// One metric per line: name, space, value. Histograms render as their CSV.
std::string to_text(const IqmReport& report);

}  // namespace steg
