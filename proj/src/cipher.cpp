#include "steg/cipher.hpp"

#include <string>

#include "steg/error.hpp"

namespace steg {

StegoKey validate_key(int raw) {
  if (raw < StegoKey::kMinEmbedding || raw > 255) {
    throw Error(Errc::KeyOutOfRange,
                "key must be in [26, 255], got " + std::to_string(raw));
  }
  return StegoKey(static_cast<std::uint8_t>(raw));
}

Bytes shift_encrypt(ByteSpan plain, std::uint8_t key) {
  Bytes out(plain.size());
  for (std::size_t i = 0; i < plain.size(); ++i) {
    out[i] = static_cast<std::uint8_t>(plain[i] + key);
  }
  return out;
}

Bytes shift_decrypt(ByteSpan cipher, std::uint8_t key) {
  Bytes out(cipher.size());
  for (std::size_t i = 0; i < cipher.size(); ++i) {
    out[i] = static_cast<std::uint8_t>(cipher[i] - key);
  }
  return out;
}

}  // namespace steg
