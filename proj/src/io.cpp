#include "steg/io.hpp"

#include <fstream>

#include "steg/error.hpp"

namespace steg {

Bytes read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Errc::InvalidInput, "cannot read file: " + path.string());
  }
  Bytes data((std::istreambuf_iterator<char>(in)),
             std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw Error(Errc::InvalidInput, "read failed: " + path.string());
  }
  return data;
}

void write_file(const std::filesystem::path& path, ByteSpan data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(Errc::InvalidInput, "cannot write file: " + path.string());
  }
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  if (!out) {
    throw Error(Errc::InvalidInput, "write failed: " + path.string());
  }
}

}  // namespace steg
