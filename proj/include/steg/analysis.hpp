#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "steg/bytes.hpp"
#include "steg/container.hpp"

namespace steg {

// One shift-key candidate from frequency matching.
struct KeyGuess {
  std::uint8_t key;
  double score;  // frequency of the matching ciphertext byte, in [0, 1]
  int rank;      // 1-based position in the candidate list
};

// Modal byte of typical English text.
inline constexpr std::uint8_t kDefaultModalByte = 0x20;

// Ranks every shift key by how often (assumed_modal_plain + key) mod 256
// occurs in the ciphertext: a shift cipher only rotates the byte histogram,
// so the true key lines the ciphertext's modal byte up with the assumed
// plaintext modal byte. Returns all 256 candidates sorted by descending
// score, ties broken by ascending key. Throws EmptyInput.
std::vector<KeyGuess> recover_key(
    ByteSpan ciphertext, std::uint8_t assumed_modal_plain = kDefaultModalByte);

// Shannon entropy of the byte distribution, in bits per byte. Zero for empty
// input.
double byte_entropy(ByteSpan data);

// What an observer without the original cover can still see: whether the
// container carries trailer bytes, how random they look, and which shift keys
// would explain them.
struct TrailerDetection {
  ContainerInfo info;
  bool trailer_present;
  double entropy;                     // of the trailer bytes; 0 when absent
  std::vector<KeyGuess> key_guesses;  // empty when no trailer
};

TrailerDetection detect_trailer_payload(
    ByteSpan file, std::uint8_t assumed_modal_plain = kDefaultModalByte);

// Same key-value line format as the IQM report.
std::string to_text(const TrailerDetection& report, std::size_t max_guesses = 5);

}  // namespace steg
