// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavecloud Authors

#include "wavecloud/image.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wavecloud {

Image2D::Image2D(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), pixels_(rows * cols, fill) {}

Image2D::Image2D(std::size_t rows, std::size_t cols, std::vector<double> pixels)
    : rows_(rows), cols_(cols), pixels_(std::move(pixels)) {
  if (pixels_.size() != rows_ * cols_) {
    throw std::invalid_argument("Image2D: " + std::to_string(pixels_.size()) +
                                " pixels supplied for a " + std::to_string(rows_) + "x" +
                                std::to_string(cols_) + " grid");
  }
}

std::vector<double> Image2D::column(std::size_t c) const {
  std::vector<double> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void Image2D::set_column(std::size_t c, std::span<const double> values) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

Image2D Image2D::transposed() const {
  Image2D out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

Image2D Image2D::rotated90() const {
  Image2D out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(cols_ - 1 - c, r) = (*this)(r, c);
  return out;
}

void require_finite(std::span<const double> values, const char* context) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw std::invalid_argument(std::string(context) + ": non-finite value at index " +
                                  std::to_string(i));
    }
  }
}

std::vector<double> pad_to_multiple(std::span<const double> signal, std::size_t multiple) {
  if (multiple == 0) throw std::invalid_argument("pad_to_multiple: multiple must be positive");
  const std::size_t padded = (signal.size() + multiple - 1) / multiple * multiple;
  std::vector<double> out(signal.begin(), signal.end());
  out.resize(padded, 0.0);
  return out;
}

Image2D pad_to_multiple(const Image2D& img, std::size_t multiple) {
  if (multiple == 0) throw std::invalid_argument("pad_to_multiple: multiple must be positive");
  const std::size_t rows = (img.rows() + multiple - 1) / multiple * multiple;
  const std::size_t cols = (img.cols() + multiple - 1) / multiple * multiple;
  Image2D out(rows, cols);
  for (std::size_t r = 0; r < img.rows(); ++r)
    for (std::size_t c = 0; c < img.cols(); ++c) out(r, c) = img(r, c);
  return out;
}

}  // namespace wavecloud
