#pragma once

#include <cstdint>

#include "steg/bytes.hpp"

namespace steg {

// Shift key for the byte-wise substitution cipher. Any value in [0, 255] is a
// usable shift; embedding additionally requires an embedding-grade key
// (>= 26), large enough to push every plain letter outside the alphabet range
// so appended text is not readable in a plain text editor.
class StegoKey {
 public:
  static constexpr int kMinEmbedding = 26;

  explicit StegoKey(std::uint8_t value) noexcept : value_(value) {}

  std::uint8_t value() const noexcept { return value_; }
  bool embedding_grade() const noexcept { return value_ >= kMinEmbedding; }

 private:
  std::uint8_t value_;
};

// Returns an embedding-grade key. Throws KeyOutOfRange unless 26 <= raw <= 255.
StegoKey validate_key(int raw);

// Per-byte shift: out[i] = (in[i] + key) mod 256. Output length equals input
// length.
Bytes shift_encrypt(ByteSpan plain, std::uint8_t key);

// Inverse shift: out[i] = (in[i] - key) mod 256.
Bytes shift_decrypt(ByteSpan cipher, std::uint8_t key);

}  // namespace steg
