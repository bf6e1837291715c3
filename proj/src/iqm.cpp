#include "steg/iqm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>

#include "steg/error.hpp"
#include "steg/lsb.hpp"

namespace steg {
namespace {

constexpr double kPeak = 255.0;

void require_same_length(ByteSpan a, ByteSpan b) {
  if (a.size() != b.size()) {
    throw Error(Errc::LengthMismatch,
                "inputs differ in length: " + std::to_string(a.size()) +
                    " vs " + std::to_string(b.size()));
  }
}

std::string format_double(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.10g", value);
  return buffer;
}

}  // namespace

std::uint64_t Histogram::total() const noexcept {
  return std::accumulate(bins.begin(), bins.end(), std::uint64_t{0});
}

Histogram histogram(ByteSpan data) {
  Histogram h;
  for (const std::uint8_t byte : data) ++h.bins[byte];
  return h;
}

Histogram error_histogram(ByteSpan a, ByteSpan b) {
  require_same_length(a, b);
  Histogram h;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ++h.bins[static_cast<std::size_t>(std::abs(int(a[i]) - int(b[i])))];
  }
  return h;
}

double mse(ByteSpan a, ByteSpan b) {
  require_same_length(a, b);
  if (a.empty()) {
    throw Error(Errc::EmptyInput, "mse needs at least one sample");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = double(a[i]) - double(b[i]);
    sum += d * d;
  }
  return sum / double(a.size());
}

double psnr(ByteSpan a, ByteSpan b) {
  const double err = mse(a, b);
  if (err == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(kPeak * kPeak / err);
}

IqmReport compare_report(ByteSpan cover, ByteSpan stego) {
  const ContainerInfo cover_info = analyze_container(cover);
  const ContainerInfo stego_info = analyze_container(stego);
  if (cover_info.format != stego_info.format) {
    throw Error(Errc::FormatMismatch,
                std::string("cover is ") + to_string(cover_info.format) +
                    " but stego is " + to_string(stego_info.format));
  }

  // The cover defines the compared region; the stego file must still carry
  // those bytes at the same offsets.
  std::size_t begin = 0;
  std::size_t end = cover_info.image_end;
  if (cover_info.format == FormatKind::Bmp) {
    const BmpPixelRegion region = bmp_pixel_region(cover);
    begin = region.data_offset;
    end = region.data_offset + region.pixel_byte_count;
  }
  if (stego.size() < end) {
    throw Error(Errc::LengthMismatch,
                "stego file shorter than the cover's image region");
  }

  const ByteSpan a = cover.subspan(begin, end - begin);
  const ByteSpan b = stego.subspan(begin, end - begin);

  IqmReport report;
  report.format = cover_info.format;
  report.region_begin = begin;
  report.region_end = end;
  report.cover_hist = histogram(a);
  report.stego_hist = histogram(b);
  report.error_hist = error_histogram(a, b);
  report.mse_value = mse(a, b);
  report.psnr_db = psnr(a, b);
  report.byte_region_identical = std::equal(a.begin(), a.end(), b.begin());
  return report;
}

std::string histogram_csv(const Histogram& h) {
  std::string out;
  out.reserve(1024);
  for (std::size_t i = 0; i < h.bins.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(h.bins[i]);
  }
  return out;
}

std::string to_text(const IqmReport& report) {
  std::string out;
  out += std::string("format ") + to_string(report.format) + "\n";
  out += "region_begin " + std::to_string(report.region_begin) + "\n";
  out += "region_end " + std::to_string(report.region_end) + "\n";
  out += "mse " + format_double(report.mse_value) + "\n";
  out += "psnr " + format_double(report.psnr_db) + "\n";
  out += std::string("byte_region_identical ") +
         (report.byte_region_identical ? "1" : "0") + "\n";
  out += "cover_hist " + histogram_csv(report.cover_hist) + "\n";
  out += "stego_hist " + histogram_csv(report.stego_hist) + "\n";
  out += "error_hist " + histogram_csv(report.error_hist) + "\n";
  return out;
}

}  // namespace steg
