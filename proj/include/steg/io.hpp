#pragma once

#include <filesystem>

#include "steg/bytes.hpp"

namespace steg {

// Whole-file binary IO. Both throw Error(InvalidInput) with the path in the
// message on failure.
Bytes read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, ByteSpan data);

}  // namespace steg
