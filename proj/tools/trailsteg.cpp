// trailsteg — hide, extract, and analyze payloads appended after the logical
// end of an image file.
//
// Exit codes: 0 success; 1 no data present / marker not found; 2 invalid
// input (missing file, bad key, bad marker, malformed container); 3 capacity
// or truncation errors. Diagnostics go to stderr, payload and report data to
// stdout or --out.

#include <cstdio>
#include <filesystem>
#include <string>

#include "CLI11.hpp"
#include "steg/analysis.hpp"
#include "steg/cipher.hpp"
#include "steg/error.hpp"
#include "steg/framing.hpp"
#include "steg/io.hpp"
#include "steg/iqm.hpp"
#include "steg/lsb.hpp"

namespace {

namespace fs = std::filesystem;

int exit_code_for(steg::Errc code) {
  switch (code) {
    case steg::Errc::NoDataPresent:
      return 1;
    case steg::Errc::CapacityExceeded:
    case steg::Errc::TruncatedRecord:
      return 3;
    default:
      return 2;
  }
}

steg::FramingMode mode_from(const std::string& name) {
  return name == "paper" ? steg::FramingMode::Bare
                         : steg::FramingMode::LengthPrefixed;
}

steg::ScanScope scan_from(const std::string& name) {
  return name == "full" ? steg::ScanScope::FullFile : steg::ScanScope::Trailer;
}

steg::StegoKey key_for_extract(int raw) {
  if (raw < 0 || raw > 255) {
    throw steg::Error(steg::Errc::KeyOutOfRange,
                      "key must be in [0, 255], got " + std::to_string(raw));
  }
  return steg::StegoKey(static_cast<std::uint8_t>(raw));
}

// Input files are never modified; refuse to write over one.
void require_distinct_output(const fs::path& out,
                             std::initializer_list<fs::path> inputs) {
  std::error_code ec;
  const fs::path canonical_out = fs::weakly_canonical(out, ec);
  for (const fs::path& input : inputs) {
    const fs::path canonical_in = fs::weakly_canonical(input, ec);
    if (canonical_out == canonical_in) {
      throw steg::Error(steg::Errc::InvalidInput,
                        "output path must differ from input path: " +
                            out.string());
    }
  }
}

void emit(const steg::Bytes& data, const std::string& out_path) {
  if (out_path.empty()) {
    std::fwrite(data.data(), 1, data.size(), stdout);
  } else {
    steg::write_file(out_path, data);
  }
}

void emit(const std::string& text, const std::string& out_path) {
  emit(steg::to_bytes(text), out_path);
}

std::string hex_of(steg::ByteSpan data) {
  static const char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(data.size() * 2);
  for (const std::uint8_t byte : data) {
    out.push_back(digits[byte >> 4]);
    out.push_back(digits[byte & 0x0F]);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Append-after-marker image steganography"};
  app.require_subcommand(1);

  std::string cover_path, stego_path, data_path, out_path, marker_text;
  std::string mode_name = "length";
  std::string scan_name = "trailer";
  int key = 0;
  int modal_byte = steg::kDefaultModalByte;

  auto* hide = app.add_subcommand("hide", "Hide a data file in a cover image");
  hide->add_option("--cover", cover_path, "Cover image path")->required();
  hide->add_option("--data", data_path, "Payload file path")->required();
  hide->add_option("--key", key, "Shift key, 26-255")->required();
  hide->add_option("--marker", marker_text, "Marker text; \\xNN escapes accepted")
      ->required();
  hide->add_option("--out", out_path, "Stego output path")->required();
  hide->add_option("--mode", mode_name, "Record framing (default length)")
      ->check(CLI::IsMember({"paper", "length"}));

  auto* extract = app.add_subcommand("extract", "Extract a hidden payload");
  extract->add_option("--stego", stego_path, "Stego image path")->required();
  extract->add_option("--key", key, "Shift key used at hide time")->required();
  extract->add_option("--marker", marker_text, "Marker text; \\xNN escapes accepted")
      ->required();
  extract->add_option("--out", out_path, "Payload output path (default stdout)");
  extract->add_option("--mode", mode_name, "Record framing (default length)")
      ->check(CLI::IsMember({"paper", "length"}));
  extract->add_option("--scan", scan_name, "Marker scan scope (default trailer)")
      ->check(CLI::IsMember({"trailer", "full"}));

  auto* inspect = app.add_subcommand("inspect", "Report container format and trailer");
  inspect->add_option("--stego", stego_path, "Image path")->required();
  inspect->add_option("--out", out_path, "Report output path (default stdout)");

  auto* compare = app.add_subcommand("compare", "Image-quality report for a cover/stego pair");
  compare->add_option("--cover", cover_path, "Cover image path")->required();
  compare->add_option("--stego", stego_path, "Stego image path")->required();
  compare->add_option("--out", out_path, "Report output path (default stdout)");

  auto* lsb_hide = app.add_subcommand("lsb-hide", "Hide a data file in BMP pixel LSBs");
  lsb_hide->add_option("--cover", cover_path, "Cover BMP path")->required();
  lsb_hide->add_option("--data", data_path, "Payload file path")->required();
  lsb_hide->add_option("--out", out_path, "Stego output path")->required();

  auto* lsb_extract_cmd =
      app.add_subcommand("lsb-extract", "Extract a payload from BMP pixel LSBs");
  lsb_extract_cmd->add_option("--stego", stego_path, "Stego BMP path")->required();
  lsb_extract_cmd->add_option("--out", out_path, "Payload output path (default stdout)");

  auto* crack = app.add_subcommand("crack", "Detect a trailer payload and rank shift keys");
  crack->add_option("--stego", stego_path, "Image path")->required();
  crack->add_option("--modal-byte", modal_byte,
                    "Assumed modal plaintext byte (default 32, ASCII space)")
      ->check(CLI::Range(0, 255));
  crack->add_option("--out", out_path, "Report output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (hide->parsed()) {
      require_distinct_output(out_path, {cover_path, data_path});
      const steg::Bytes cover = steg::read_file(cover_path);
      const steg::Bytes payload = steg::read_file(data_path);
      const steg::Bytes stego =
          steg::embed(cover, payload, steg::validate_key(key),
                      steg::parse_marker_text(marker_text), mode_from(mode_name));
      steg::write_file(out_path, stego);
    } else if (extract->parsed()) {
      if (!out_path.empty()) require_distinct_output(out_path, {stego_path});
      const steg::Bytes stego = steg::read_file(stego_path);
      const steg::Bytes payload = steg::extract(
          stego, key_for_extract(key), steg::parse_marker_text(marker_text),
          mode_from(mode_name), scan_from(scan_name));
      emit(payload, out_path);
    } else if (inspect->parsed()) {
      if (!out_path.empty()) require_distinct_output(out_path, {stego_path});
      const steg::TrailerReport report =
          steg::list_trailer(steg::read_file(stego_path));
      std::string text;
      text += std::string("format ") + steg::to_string(report.info.format) + "\n";
      text += "image_end " + std::to_string(report.info.image_end) + "\n";
      text += "trailer_length " + std::to_string(report.info.trailer_length) + "\n";
      text += "trailer_hex " + hex_of(report.trailer) + "\n";
      emit(text, out_path);
    } else if (compare->parsed()) {
      if (!out_path.empty())
        require_distinct_output(out_path, {cover_path, stego_path});
      const steg::IqmReport report = steg::compare_report(
          steg::read_file(cover_path), steg::read_file(stego_path));
      emit(steg::to_text(report), out_path);
    } else if (lsb_hide->parsed()) {
      require_distinct_output(out_path, {cover_path, data_path});
      const steg::Bytes stego = steg::lsb_embed(steg::read_file(cover_path),
                                                steg::read_file(data_path));
      steg::write_file(out_path, stego);
    } else if (lsb_extract_cmd->parsed()) {
      if (!out_path.empty()) require_distinct_output(out_path, {stego_path});
      emit(steg::lsb_extract(steg::read_file(stego_path)), out_path);
    } else if (crack->parsed()) {
      if (!out_path.empty()) require_distinct_output(out_path, {stego_path});
      const steg::TrailerDetection detection = steg::detect_trailer_payload(
          steg::read_file(stego_path), static_cast<std::uint8_t>(modal_byte));
      emit(steg::to_text(detection), out_path);
    }
  } catch (const steg::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_code_for(e.code());
  }
  return 0;
}
