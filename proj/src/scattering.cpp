// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavecloud Authors

#include "wavecloud/scattering.hpp"

#include <cmath>
#include <stdexcept>

namespace wavecloud {

namespace {

void check_config(const char* op, const ScatteringConfig& cfg) {
  if (cfg.levels == 0 || cfg.levels > 30)
    throw std::invalid_argument(std::string(op) + ": levels must be in 1..30");
  if (cfg.max_order < 0 || cfg.max_order > 2)
    throw std::invalid_argument(std::string(op) + ": max_order must be 0, 1 or 2");
}

void check_divisible(const char* op, std::size_t n, std::size_t levels) {
  const std::size_t block = std::size_t{1} << levels;
  if (n == 0 || n % block != 0) {
    throw std::invalid_argument(std::string(op) + ": size " + std::to_string(n) +
                                " is not divisible by 2^" + std::to_string(levels) +
                                "; maximum feasible levels is " +
                                std::to_string(max_dyadic_levels(n)));
  }
}

double mean(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double mean_abs(std::span<const double> v, double scale) {
  double s = 0.0;
  for (double x : v) s += std::abs(x * scale);
  return s / static_cast<double>(v.size());
}

std::vector<double> scaled_modulus(std::span<const double> v, double scale) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::abs(v[i] * scale);
  return out;
}

double level_scale_1d(std::size_t level) { return std::pow(2.0, -0.5 * static_cast<double>(level)); }

double level_scale_2d(std::size_t level) { return std::pow(2.0, -static_cast<double>(level)); }

}  // namespace

std::string ScatteringPath::label() const {
  std::string out = "s" + std::to_string(order);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    out += "_j" + std::to_string(levels[i]);
    if (i < bands.size()) out += "_" + std::string(band_name(bands[i]));
  }
  for (std::size_t i = levels.size(); i < bands.size(); ++i) out += "_" + std::string(band_name(bands[i]));
  return out;
}

std::size_t scattering1d_size(std::size_t levels, int max_order) {
  std::size_t n = 1;
  if (max_order >= 1) n += levels;
  if (max_order >= 2) n += levels * (levels - 1) / 2;
  return n;
}

std::size_t scattering2d_size(std::size_t levels, int max_order) {
  std::size_t n = 1;
  if (max_order >= 1) n += 3 * levels;
  if (max_order >= 2) n += 9 * levels;
  return n;
}

ScatteringFeature scatter1d(std::span<const double> signal, const ScatteringConfig& cfg) {
  check_config("scatter1d", cfg);
  const std::size_t big_j = cfg.levels;
  check_divisible("scatter1d", signal.size(), big_j);
  ScatteringFeature out;
  out.paths.push_back({0, {}, {}});
  require_finite(signal, "scatter1d");
  out.values.push_back(mean(signal));
  if (cfg.max_order == 0) return out;

  const auto dec = dwt1d_multi(signal, cfg.wavelet, big_j);
  for (std::size_t j = 1; j <= big_j; ++j) {
    out.paths.push_back({1, {j}, {}});
    out.values.push_back(mean_abs(dec.details[j - 1], level_scale_1d(j)));
  }
  if (cfg.max_order == 1) return out;

  for (std::size_t j1 = 1; j1 < big_j; ++j1) {
    const auto modulus = scaled_modulus(dec.details[j1 - 1], level_scale_1d(j1));
    const auto inner = dwt1d_multi(modulus, cfg.wavelet, big_j - j1);
    for (std::size_t j2 = j1 + 1; j2 <= big_j; ++j2) {
      const std::size_t rel = j2 - j1;
      out.paths.push_back({2, {j1, j2}, {}});
      out.values.push_back(mean_abs(inner.details[rel - 1], level_scale_1d(rel)));
    }
  }
  return out;
}

ScatteringFeature scatter2d(const Image2D& img, const ScatteringConfig& cfg) {
  check_config("scatter2d", cfg);
  const std::size_t big_j = cfg.levels;
  check_divisible("scatter2d (rows)", img.rows(), big_j);
  check_divisible("scatter2d (cols)", img.cols(), big_j);
  if (cfg.max_order == 2) {
    const std::size_t need = std::size_t{1} << (big_j + 1);
    if (img.rows() % need != 0 || img.cols() % need != 0) {
      throw std::invalid_argument("scatter2d: order-2 paths need dimensions divisible by 2^" +
                                  std::to_string(big_j + 1) + ", got " +
                                  std::to_string(img.rows()) + "x" + std::to_string(img.cols()));
    }
  }
  ScatteringFeature out;
  require_finite(img.pixels(), "scatter2d");
  out.paths.push_back({0, {}, {}});
  out.values.push_back(mean(img.pixels()));
  if (cfg.max_order == 0) return out;

  const auto pyr = dwt2d_multi(img, cfg.wavelet, big_j);
  for (std::size_t j = 1; j <= big_j; ++j) {
    for (Band b : kDetailBands) {
      out.paths.push_back({1, {j}, {b}});
      out.values.push_back(mean_abs(pyr.bands[j - 1].band(b).pixels(), level_scale_2d(j)));
    }
  }
  if (cfg.max_order == 1) return out;

  const Wavelet inner_wavelet = haar();
  for (std::size_t j = 1; j <= big_j; ++j) {
    for (Band b : kDetailBands) {
      const Image2D& band = pyr.bands[j - 1].band(b);
      Image2D modulus(band.rows(), band.cols(), scaled_modulus(band.pixels(), level_scale_2d(j)));
      const auto inner = dwt2d_single(modulus, inner_wavelet);
      for (Band b2 : kDetailBands) {
        out.paths.push_back({2, {j}, {b, b2}});
        out.values.push_back(mean_abs(inner.band(b2).pixels(), 0.5));
      }
    }
  }
  return out;
}

}  // namespace wavecloud
