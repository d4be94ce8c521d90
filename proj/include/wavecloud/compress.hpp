// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavecloud Authors

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wavecloud/dwt.hpp"

namespace wavecloud {

/// Outcome of hard-thresholding a decomposition.
///
/// `psnr_db` is +infinity when the reconstruction is exact. The peak used is
/// max |original sample|, so the figure is meaningful for arbitrary real data
/// rather than only 8-bit images.
struct CompressionReport {
  std::size_t kept_count = 0;
  std::size_t total_count = 0;
  double keep_fraction = 0.0;
  double peak = 0.0;
  double psnr_db = 0.0;
};

/// Number of coefficients retained for a fraction: ceil(fraction * total).
std::size_t kept_coefficient_count(double keep_fraction, std::size_t total);

/// Indices of the `count` largest-magnitude entries; ties go to the lower index.
std::vector<std::size_t> largest_magnitude_indices(std::span<const double> values,
                                                   std::size_t count);

/// In-place hard threshold on a flat coefficient vector; returns kept count.
std::size_t threshold_keep_largest(std::span<double> values, double keep_fraction);

double psnr(std::span<const double> original, std::span<const double> reconstructed);

template <class Decomposition>
struct Compressed {
  Decomposition decomposition;
  CompressionReport report;
};

/// Keeps the ceil(keep_fraction * N) largest coefficients (canonical flat order
/// breaks ties), zeroes the rest, and reports PSNR of the reconstruction against
/// the reconstruction of the untouched input. keep_fraction outside [0, 1]
/// throws std::invalid_argument.
Compressed<SubbandDecomposition1D> compress_threshold(const SubbandDecomposition1D& dec,
                                                      const Wavelet& w, double keep_fraction);
Compressed<SubbandPyramid2D> compress_threshold(const SubbandPyramid2D& pyr, const Wavelet& w,
                                                double keep_fraction);

}  // namespace wavecloud
