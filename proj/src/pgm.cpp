// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavecloud Authors

#include "wavecloud/pgm.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "wavecloud/csv.hpp"

namespace wavecloud {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view bytes) : bytes_(bytes) {}

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      const char c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        return;
      }
    }
  }

  /// Unsigned decimal token; returns false at end of input.
  bool number(unsigned long long& out) {
    skip_space_and_comments();
    if (pos_ >= bytes_.size()) return false;
    if (!std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) return false;
    unsigned long long v = 0;
    while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
      v = v * 10 + static_cast<unsigned long long>(bytes_[pos_] - '0');
      if (v > 1'000'000'000ULL) return false;
      ++pos_;
    }
    out = v;
    return true;
  }

  bool at_end() const { return pos_ >= bytes_.size(); }
  char peek() const { return bytes_[pos_]; }
  std::size_t pos() const { return pos_; }
  void advance(std::size_t n) { pos_ += n; }
  std::size_t remaining() const { return bytes_.size() - pos_; }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

unsigned long long header_field(Cursor& cur, const char* name) {
  unsigned long long v = 0;
  if (!cur.number(v)) {
    throw PgmError(PgmErrorKind::malformed_header,
                   std::string("pgm: malformed header, expected ") + name);
  }
  return v;
}

}  // namespace

Image2D read_pgm(std::string_view bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
    throw PgmError(PgmErrorKind::malformed_header, "pgm: missing P2/P5 magic number");
  }
  const bool binary = bytes[1] == '5';
  Cursor cur(bytes);
  cur.advance(2);
  if (!cur.at_end() && !std::isspace(static_cast<unsigned char>(cur.peek())) && cur.peek() != '#')
    throw PgmError(PgmErrorKind::malformed_header, "pgm: malformed header after magic number");

  const auto width = header_field(cur, "width");
  const auto height = header_field(cur, "height");
  const auto maxval = header_field(cur, "maxval");
  if (width == 0 || height == 0)
    throw PgmError(PgmErrorKind::malformed_header, "pgm: zero image dimension");
  if (maxval != 255) {
    throw PgmError(PgmErrorKind::unsupported_maxval,
                   "pgm: maxval " + std::to_string(maxval) + " unsupported (only 255)");
  }
  const std::size_t rows = static_cast<std::size_t>(height);
  const std::size_t cols = static_cast<std::size_t>(width);
  const std::size_t count = rows * cols;
  std::vector<double> pixels(count);

  if (binary) {
    if (cur.at_end() || !std::isspace(static_cast<unsigned char>(cur.peek())))
      throw PgmError(PgmErrorKind::malformed_header, "pgm: missing whitespace before payload");
    cur.advance(1);
    if (cur.remaining() < count) {
      throw PgmError(PgmErrorKind::truncated_payload,
                     "pgm: payload truncated, expected " + std::to_string(count) + " bytes, found " +
                         std::to_string(cur.remaining()));
    }
    for (std::size_t i = 0; i < count; ++i)
      pixels[i] = static_cast<unsigned char>(bytes[cur.pos() + i]);
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      unsigned long long v = 0;
      cur.skip_space_and_comments();
      if (cur.at_end()) {
        throw PgmError(PgmErrorKind::truncated_payload,
                       "pgm: payload truncated, expected " + std::to_string(count) +
                           " values, found " + std::to_string(i));
      }
      if (!cur.number(v) || v > 255)
        throw PgmError(PgmErrorKind::bad_pixel, "pgm: invalid pixel value at index " + std::to_string(i));
      pixels[i] = static_cast<double>(v);
    }
  }
  return {rows, cols, std::move(pixels)};
}

std::string write_pgm(const Image2D& img, PgmVariant variant) {
  if (img.empty()) throw std::invalid_argument("write_pgm: empty image");
  require_finite(img.pixels(), "write_pgm");
  const auto quantize = [](double v) {
    return static_cast<int>(std::clamp(std::round(v), 0.0, 255.0));
  };
  std::string out = variant == PgmVariant::binary_p5 ? "P5\n" : "P2\n";
  out += std::to_string(img.cols()) + " " + std::to_string(img.rows()) + "\n255\n";
  if (variant == PgmVariant::binary_p5) {
    for (double v : img.pixels()) out.push_back(static_cast<char>(static_cast<unsigned char>(quantize(v))));
    return out;
  }
  for (std::size_t r = 0; r < img.rows(); ++r) {
    for (std::size_t c = 0; c < img.cols(); ++c) {
      if (c) out += ' ';
      out += std::to_string(quantize(img(r, c)));
    }
    out += '\n';
  }
  return out;
}

Image2D load_pgm(const std::filesystem::path& path) { return read_pgm(read_file(path)); }

void save_pgm(const std::filesystem::path& path, const Image2D& img, PgmVariant variant) {
  write_file(path, write_pgm(img, variant));
}

}  // namespace wavecloud
