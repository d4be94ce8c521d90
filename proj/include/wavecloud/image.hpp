// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavecloud Authors

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace wavecloud {

/// Single-channel row-major grid of finite reals.
class Image2D {
 public:
  Image2D() = default;
  Image2D(std::size_t rows, std::size_t cols, double fill = 0.0);
  Image2D(std::size_t rows, std::size_t cols, std::vector<double> pixels);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return pixels_.size(); }
  bool empty() const noexcept { return pixels_.empty(); }

  double& operator()(std::size_t r, std::size_t c) { return pixels_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return pixels_[r * cols_ + c]; }

  std::span<double> pixels() noexcept { return pixels_; }
  std::span<const double> pixels() const noexcept { return pixels_; }
  std::span<double> row(std::size_t r) { return {pixels_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const { return {pixels_.data() + r * cols_, cols_}; }

  std::vector<double> column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const double> values);

  Image2D transposed() const;
  /// Counter-clockwise quarter turn.
  Image2D rotated90() const;

  bool operator==(const Image2D&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> pixels_;
};

/// Throws std::invalid_argument naming `context` if any value is NaN/Inf.
void require_finite(std::span<const double> values, const char* context);

/// Zero-pads on the right so the length becomes a multiple of `multiple`.
std::vector<double> pad_to_multiple(std::span<const double> signal, std::size_t multiple);

/// Zero-pads bottom and right so both dimensions become multiples of `multiple`.
Image2D pad_to_multiple(const Image2D& img, std::size_t multiple);

}  // namespace wavecloud
