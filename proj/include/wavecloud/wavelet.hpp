// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavecloud Authors

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wavecloud {

/// Orthogonal wavelet described by its four filter-bank taps.
///
/// Only the analysis low-pass is supplied; the other three filters are
/// derived with the repo-wide conventions
///
///   analysis_high[n]  = (-1)^n * analysis_low[L-1-n]
///   synthesis_low[n]  = analysis_low[L-1-n]
///   synthesis_high[n] = analysis_high[L-1-n]
///
/// so the Haar detail is (x_even - x_odd) / sqrt(2). Construction checks
/// every invariant (even length, sum, orthonormality, alternating-flip
/// relation) and throws std::invalid_argument if any fails, so a Wavelet
/// object is always a valid orthonormal filter bank.
class Wavelet {
 public:
  Wavelet(std::string name, std::vector<double> analysis_low, int vanishing_moments);

  const std::string& name() const noexcept { return name_; }
  std::size_t length() const noexcept { return analysis_low_.size(); }
  int vanishing_moments() const noexcept { return vanishing_moments_; }

  std::span<const double> analysis_low() const noexcept { return analysis_low_; }
  std::span<const double> analysis_high() const noexcept { return analysis_high_; }
  std::span<const double> synthesis_low() const noexcept { return synthesis_low_; }
  std::span<const double> synthesis_high() const noexcept { return synthesis_high_; }

  bool operator==(const Wavelet&) const = default;

 private:
  std::string name_;
  std::vector<double> analysis_low_;
  std::vector<double> analysis_high_;
  std::vector<double> synthesis_low_;
  std::vector<double> synthesis_high_;
  int vanishing_moments_;
};

/// Tolerance used when validating filter invariants.
inline constexpr double kFilterTolerance = 1e-12;

Wavelet haar();

/// Daubechies filter with the given number of vanishing moments (2..10),
/// 2*vanishing_moments taps, minimum-phase ordering. Throws std::out_of_range
/// outside the supported range; order 1 is haar().
Wavelet daubechies(int vanishing_moments);

/// Accepts "haar" and "db2".."db10" (case-sensitive). "db1" is an alias for haar.
Wavelet wavelet_by_name(std::string_view name);

}  // namespace wavecloud
