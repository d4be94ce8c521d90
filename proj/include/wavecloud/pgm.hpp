// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavecloud Authors

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wavecloud/image.hpp"

namespace wavecloud {

enum class PgmVariant { ascii_p2, binary_p5 };

enum class PgmErrorKind { malformed_header, unsupported_maxval, truncated_payload, bad_pixel };

class PgmError : public std::runtime_error {
 public:
  PgmError(PgmErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  PgmErrorKind kind() const noexcept { return kind_; }

 private:
  PgmErrorKind kind_;
};

/// Parses P2 or P5 with maxval 255. Header comments ('#' to end of line) are
/// skipped. Trailing bytes after the payload are ignored.
Image2D read_pgm(std::string_view bytes);

/// Serializes with maxval 255; pixels are rounded half away from zero and
/// clamped to 0..255. P2 writes one image row per line.
std::string write_pgm(const Image2D& img, PgmVariant variant = PgmVariant::binary_p5);

Image2D load_pgm(const std::filesystem::path& path);
void save_pgm(const std::filesystem::path& path, const Image2D& img,
              PgmVariant variant = PgmVariant::binary_p5);

}  // namespace wavecloud
