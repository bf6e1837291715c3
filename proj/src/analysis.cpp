#include "steg/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "steg/error.hpp"
#include "steg/iqm.hpp"

namespace steg {

std::vector<KeyGuess> recover_key(ByteSpan ciphertext,
                                  std::uint8_t assumed_modal_plain) {
  if (ciphertext.empty()) {
    throw Error(Errc::EmptyInput, "cannot rank keys for empty ciphertext");
  }
  const Histogram freq = histogram(ciphertext);
  const double total = double(ciphertext.size());

  std::vector<KeyGuess> guesses;
  guesses.reserve(256);
  for (int key = 0; key < 256; ++key) {
    // If `key` were the shift, the assumed modal plaintext byte would have
    // landed on this ciphertext byte.
    const auto cipher_byte = static_cast<std::uint8_t>(assumed_modal_plain + key);
    guesses.push_back({static_cast<std::uint8_t>(key),
                       double(freq.bins[cipher_byte]) / total, 0});
  }
  std::sort(guesses.begin(), guesses.end(),
            [](const KeyGuess& a, const KeyGuess& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.key < b.key;
            });
  for (std::size_t i = 0; i < guesses.size(); ++i) {
    guesses[i].rank = static_cast<int>(i) + 1;
  }
  return guesses;
}

double byte_entropy(ByteSpan data) {
  if (data.empty()) return 0.0;
  const Histogram freq = histogram(data);
  const double total = double(data.size());
  double entropy = 0.0;
  for (const std::uint64_t count : freq.bins) {
    if (count == 0) continue;
    const double p = double(count) / total;
    entropy -= p * std::log2(p);
  }
  return entropy;
}

TrailerDetection detect_trailer_payload(ByteSpan file,
                                        std::uint8_t assumed_modal_plain) {
  TrailerDetection detection;
  detection.info = analyze_container(file);
  detection.trailer_present = detection.info.trailer_length > 0;
  detection.entropy = 0.0;
  if (detection.trailer_present) {
    const ByteSpan trailer = file.subspan(detection.info.image_end);
    detection.entropy = byte_entropy(trailer);
    detection.key_guesses = recover_key(trailer, assumed_modal_plain);
  }
  return detection;
}

std::string to_text(const TrailerDetection& report, std::size_t max_guesses) {
  char buffer[64];
  std::string out;
  out += std::string("format ") + to_string(report.info.format) + "\n";
  out += "image_end " + std::to_string(report.info.image_end) + "\n";
  out += "trailer_length " + std::to_string(report.info.trailer_length) + "\n";
  out += std::string("trailer_present ") + (report.trailer_present ? "1" : "0") + "\n";
  std::snprintf(buffer, sizeof buffer, "%.10g", report.entropy);
  out += std::string("trailer_entropy ") + buffer + "\n";
  const std::size_t shown = std::min(max_guesses, report.key_guesses.size());
  for (std::size_t i = 0; i < shown; ++i) {
    const KeyGuess& guess = report.key_guesses[i];
    const std::string tag = "key_guess_" + std::to_string(guess.rank);
    out += tag + "_key " + std::to_string(int(guess.key)) + "\n";
    std::snprintf(buffer, sizeof buffer, "%.10g", guess.score);
    out += tag + "_score " + buffer + "\n";
  }
  return out;
}

}  // namespace steg
