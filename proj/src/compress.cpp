// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavecloud Authors

#include "wavecloud/compress.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace wavecloud {

std::size_t kept_coefficient_count(double keep_fraction, std::size_t total) {
  if (!(keep_fraction >= 0.0 && keep_fraction <= 1.0)) {
    throw std::invalid_argument("compress_threshold: keep fraction " +
                                std::to_string(keep_fraction) + " outside [0, 1]");
  }
  // Relative slack absorbs products such as 0.3 * 10 = 3.0000000000000004.
  const double scaled = keep_fraction * static_cast<double>(total);
  const double kept = std::ceil(scaled - 1e-9 * std::max(1.0, scaled));
  return std::min(total, static_cast<std::size_t>(std::max(0.0, kept)));
}

std::vector<std::size_t> largest_magnitude_indices(std::span<const double> values,
                                                   std::size_t count) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  count = std::min(count, values.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(count), order.end(),
                    [&](std::size_t a, std::size_t b) {
                      const double ma = std::abs(values[a]);
                      const double mb = std::abs(values[b]);
                      return ma != mb ? ma > mb : a < b;
                    });
  order.resize(count);
  return order;
}

std::size_t threshold_keep_largest(std::span<double> values, double keep_fraction) {
  const std::size_t keep = kept_coefficient_count(keep_fraction, values.size());
  std::vector<char> retained(values.size(), 0);
  for (std::size_t idx : largest_magnitude_indices(values, keep)) retained[idx] = 1;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (!retained[i]) values[i] = 0.0;
  return keep;
}

double psnr(std::span<const double> original, std::span<const double> reconstructed) {
  if (original.size() != reconstructed.size() || original.empty())
    throw std::invalid_argument("psnr: inputs must be non-empty and of equal length");
  double peak = 0.0;
  double sq = 0.0;
  for (std::size_t i = 0; i < original.size(); ++i) {
    peak = std::max(peak, std::abs(original[i]));
    const double e = original[i] - reconstructed[i];
    sq += e * e;
  }
  if (sq == 0.0) return std::numeric_limits<double>::infinity();
  const double mse = sq / static_cast<double>(original.size());
  if (peak == 0.0) return -std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(peak * peak / mse);
}

namespace {

double peak_of(std::span<const double> values) {
  double peak = 0.0;
  for (double v : values) peak = std::max(peak, std::abs(v));
  return peak;
}

template <class Decomposition, class Inverse>
Compressed<Decomposition> compress_impl(const Decomposition& dec, double keep_fraction,
                                        Inverse inverse) {
  Compressed<Decomposition> out{dec, {}};
  auto flat = dec.flatten();
  const std::size_t kept = threshold_keep_largest(flat, keep_fraction);
  out.decomposition.assign_flat(flat);

  const auto original = inverse(dec);
  const auto reconstructed = inverse(out.decomposition);
  out.report.kept_count = kept;
  out.report.total_count = flat.size();
  out.report.keep_fraction = keep_fraction;
  out.report.peak = peak_of(original);
  out.report.psnr_db = psnr(original, reconstructed);
  return out;
}

}  // namespace

Compressed<SubbandDecomposition1D> compress_threshold(const SubbandDecomposition1D& dec,
                                                      const Wavelet& w, double keep_fraction) {
  return compress_impl(dec, keep_fraction,
                       [&](const SubbandDecomposition1D& d) { return idwt1d_multi(d, w); });
}

Compressed<SubbandPyramid2D> compress_threshold(const SubbandPyramid2D& pyr, const Wavelet& w,
                                                double keep_fraction) {
  return compress_impl(pyr, keep_fraction, [&](const SubbandPyramid2D& p) {
    Image2D img = idwt2d_multi(p, w);
    return std::vector<double>(img.pixels().begin(), img.pixels().end());
  });
}

}  // namespace wavecloud
