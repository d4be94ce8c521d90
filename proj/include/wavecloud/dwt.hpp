// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavecloud Authors

#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "wavecloud/image.hpp"
#include "wavecloud/wavelet.hpp"

namespace wavecloud {

// All transforms use periodic (circular) extension. Level j coefficients
// correspond to dyadic scale 2^j and shift k * 2^j.

struct Subbands1D {
  std::vector<double> approx;
  std::vector<double> detail;
};

/// One analysis stage: approx[k] = sum_n h[n] x[(2k+n) mod N], detail likewise
/// with the high-pass. Throws std::invalid_argument for odd or short input.
Subbands1D dwt1d_single(std::span<const double> signal, const Wavelet& w);

/// Exact inverse of dwt1d_single (transpose of the orthogonal analysis matrix).
std::vector<double> idwt1d_single(std::span<const double> approx,
                                  std::span<const double> detail, const Wavelet& w);

/// Multi-level decomposition. `details[0]` is the finest level (j = 1).
struct SubbandDecomposition1D {
  std::size_t levels = 0;
  std::vector<double> approx;
  std::vector<std::vector<double>> details;
  std::size_t original_length = 0;

  std::size_t coefficient_count() const;
  /// Canonical flat order: details level 1..J, then the level-J approximation.
  std::vector<double> flatten() const;
  void assign_flat(std::span<const double> flat);
};

/// Largest J such that n is divisible by 2^J.
std::size_t max_dyadic_levels(std::size_t n);

SubbandDecomposition1D dwt1d_multi(std::span<const double> signal, const Wavelet& w,
                                   std::size_t levels);
std::vector<double> idwt1d_multi(const SubbandDecomposition1D& dec, const Wavelet& w);

enum class Band { lh, hl, hh };
inline constexpr std::array<Band, 3> kDetailBands = {Band::lh, Band::hl, Band::hh};
std::string_view band_name(Band b);

/// One 2D stage. The column pass splits each column into a low (top) and high
/// (bottom) half; the row pass then splits every row of both halves. The first
/// letter of a band name is the column (vertical) filter, the second the row
/// (horizontal) filter, so `lh` responds to vertical edges.
struct Subbands2D {
  Image2D ll, lh, hl, hh;
  const Image2D& band(Band b) const;
};

Subbands2D dwt2d_single(const Image2D& img, const Wavelet& w);
Image2D idwt2d_single(const Subbands2D& bands, const Wavelet& w);

struct DetailBands {
  Image2D lh, hl, hh;
  const Image2D& band(Band b) const;
  Image2D& band(Band b);
};

/// Multi-level 2D pyramid; `bands[0]` is level 1, recursion is on ll only.
struct SubbandPyramid2D {
  std::size_t levels = 0;
  Image2D ll;
  std::vector<DetailBands> bands;
  std::size_t original_rows = 0;
  std::size_t original_cols = 0;

  std::size_t coefficient_count() const;
  /// Canonical flat order: level 1 lh,hl,hh ... level J lh,hl,hh, then ll;
  /// each grid row-major.
  std::vector<double> flatten() const;
  void assign_flat(std::span<const double> flat);
};

SubbandPyramid2D dwt2d_multi(const Image2D& img, const Wavelet& w, std::size_t levels);
Image2D idwt2d_multi(const SubbandPyramid2D& pyr, const Wavelet& w);

}  // namespace wavecloud
